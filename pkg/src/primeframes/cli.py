"""Command-line interface.

Every subcommand is a thin adapter over one library call and writes a
machine-readable payload (JSON by default, CSV for matrices on request)
to stdout or --output.  Exit codes: 0 on success, 1 on a domain error
(infeasible construction, non-tight input, bad parameter combination),
2 on a usage error.  The FRAMES_TOL environment variable overrides the
default tightness tolerance of 1e-9 wherever --tol is not given.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .divisibility import (SEARCH_CAP, is_prime_bruteforce,
                           prime_factor_size_multisets, prime_factorization)
from .errors import FrameError, NotTightError, SearchCapError
from .frames import (DEFAULT_TOL, check_equiangular, check_tight, coherence,
                     prime_parseval_extension, random_tight_frame, welch_bound)
from .harmonic import HtfParams, divisor_sets, htf, htf_is_prime
from .tetris import (stf, stf_is_divisible, stf_low_redundancy,
                     stf_low_redundancy_feasible)
from .transform import analyze_fast, benchmark, plan, synthesize_fast


def _default_tol() -> float:
    raw = os.environ.get("FRAMES_TOL")
    if raw is None:
        return DEFAULT_TOL
    tol = float(raw)
    if tol <= 0:
        raise ValueError("FRAMES_TOL must be positive")
    return tol


def _write(text: str, path):
    if path:
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_frame(phi, args):
    if args.format == "csv":
        _write(io.frame_to_csv(phi), args.output)
    else:
        _write(io.dumps(io.frame_to_json_obj(phi)) + "\n", args.output)


def _emit_obj(obj, args):
    _write(io.dumps(obj) + "\n", getattr(args, "output", None))


def cmd_htf(args):
    _emit_frame(htf(HtfParams(args.n, args.m, args.s)), args)
    return 0


def cmd_stf(args):
    if args.low_redundancy:
        phi = stf_low_redundancy(args.n, args.m)
    else:
        phi = stf(args.n, args.m)
    _emit_frame(phi, args)
    return 0


def cmd_random(args):
    _emit_frame(random_tight_frame(args.n, args.m, args.seed), args)
    return 0


def cmd_extendprime(args):
    _emit_frame(prime_parseval_extension(args.n, args.m), args)
    return 0


def cmd_analyze(args):
    phi = io.read_frame(args.input)
    tol = args.tol if args.tol is not None else _default_tol()
    report = check_tight(phi, tol)
    if not report.is_tight:
        raise NotTightError(
            "input is not a tight frame (residual %.3e, bound %.6g)"
            % (report.residual, report.bound))
    payload = {
        "n": phi.n,
        "m": phi.m,
        "field": phi.field,
        "is_tight": True,
        "bound": report.bound,
        "residual": report.residual,
        "tol": tol,
    }
    if phi.m >= 2:
        angles = check_equiangular(phi, tol)
        payload["coherence"] = coherence(phi)
        payload["is_unit_norm"] = angles.is_unit_norm
        payload["is_equiangular"] = angles.is_equiangular
        payload["common_angle"] = angles.common_angle
        payload["max_abs_inner"] = angles.max_abs_inner
        payload["welch_bound"] = (
            welch_bound(phi.n, phi.m) if phi.m >= phi.n else None)
    if args.factor:
        fact = prime_factorization(phi, tol)
        payload["factors"] = [list(f) for f in fact.factors]
        payload["bounds"] = list(fact.bounds)
    _emit_obj(payload, args)
    return 0


def cmd_factor(args):
    phi = io.read_frame(args.input)
    tol = args.tol if args.tol is not None else _default_tol()
    payload = prime_factorization(phi, tol).to_json_obj()
    if args.all_minimal:
        payload["size_multisets"] = [
            list(t) for t in prime_factor_size_multisets(phi, tol)]
    _emit_obj(payload, args)
    return 0


def cmd_sets(args):
    _emit_obj(divisor_sets(args.n, args.m).to_json_obj(), args)
    return 0


def cmd_transform(args):
    tplan = plan(args.n, args.m, args.p)
    vec = io.read_vector(args.input)
    if args.analyze:
        out = analyze_fast(tplan, vec)
    else:
        out = synthesize_fast(tplan, vec)
    if args.format == "csv":
        _write(io.vector_to_csv(out), args.output)
    else:
        _write(io.dumps(io.vector_to_json_obj(out)) + "\n", args.output)
    return 0


def cmd_bench(args):
    _emit_obj(benchmark(args.n, args.m, args.p, args.trials, args.seed), args)
    return 0


_GRID_COLUMNS = ("n", "m", "htf_prime", "htf_prime_brute", "stf_divisible",
                 "stf_divisible_brute", "stf_lowred_feasible")


def cmd_grid(args):
    if args.nmax < 2 or args.mmax < 2:
        raise ValueError("need nmax >= 2 and mmax >= 2")
    if args.mmax > SEARCH_CAP and not args.force:
        raise SearchCapError(
            "mmax = %d exceeds the brute-force cap %d; pass --force to "
            "run anyway" % (args.mmax, SEARCH_CAP))
    rows = []
    for n in range(2, args.nmax + 1):
        for m in range(n, args.mmax + 1):
            closed = htf_is_prime(n, m)
            brute = is_prime_bruteforce(htf(HtfParams(n, m)), force=True)
            if closed != brute:
                raise FrameError(
                    "closed-form and brute-force primality disagree at "
                    "(n, m) = (%d, %d)" % (n, m))
            row = dict.fromkeys(_GRID_COLUMNS)
            row.update(n=n, m=m, htf_prime=closed, htf_prime_brute=brute)
            if m >= 2 * n:
                divisible = stf_is_divisible(n, m)
                divisible_brute = not is_prime_bruteforce(stf(n, m), force=True)
                if divisible != divisible_brute:
                    raise FrameError(
                        "tetris divisibility columns disagree at "
                        "(n, m) = (%d, %d)" % (n, m))
                row.update(stf_divisible=divisible,
                           stf_divisible_brute=divisible_brute)
            elif m > n:
                row["stf_lowred_feasible"] = stf_low_redundancy_feasible(n, m)
            rows.append(row)
    if args.format == "csv":
        lines = [",".join(_GRID_COLUMNS)]
        for row in rows:
            cells = []
            for key in _GRID_COLUMNS:
                val = row[key]
                if val is None:
                    cells.append("")
                elif isinstance(val, bool):
                    cells.append("true" if val else "false")
                else:
                    cells.append(str(val))
            lines.append(",".join(cells))
        _write("\n".join(lines) + "\n", args.output)
    else:
        _emit_obj(rows, args)
    return 0


def _add_frame_output(sub):
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeframes",
        description="Constructions and divisibility decisions for finite "
                    "tight frames.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("htf", help="harmonic tight frame matrix")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--s", type=float, default=1.0)
    _add_frame_output(sub)
    sub.set_defaults(handler=cmd_htf)

    sub = subs.add_parser("stf", help="sparse (spectral tetris) tight frame")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--low-redundancy", action="store_true",
                     help="use the n < m < 2n construction")
    _add_frame_output(sub)
    sub.set_defaults(handler=cmd_stf)

    sub = subs.add_parser("random", help="random real tight frame, bound 1")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--seed", type=int, required=True)
    _add_frame_output(sub)
    sub.set_defaults(handler=cmd_random)

    sub = subs.add_parser("extendprime",
                          help="prime Parseval frame of m vectors in R^n")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    _add_frame_output(sub)
    sub.set_defaults(handler=cmd_extendprime)

    sub = subs.add_parser("analyze", help="diagnostics for a tight frame file")
    sub.add_argument("--input", required=True)
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--factor", action="store_true",
                     help="include a prime factorization")
    sub.add_argument("--output", default=None)
    sub.set_defaults(handler=cmd_analyze)

    sub = subs.add_parser("factor", help="prime factorization of a tight frame")
    sub.add_argument("--input", required=True)
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--all-minimal", action="store_true",
                     help="also enumerate all factor-size multisets")
    sub.add_argument("--output", default=None)
    sub.set_defaults(handler=cmd_factor)

    sub = subs.add_parser("sets", help="divisor size sets of a harmonic frame")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--output", default=None)
    sub.set_defaults(handler=cmd_sets)

    sub = subs.add_parser("transform",
                          help="fast harmonic analysis or synthesis")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    direction = sub.add_mutually_exclusive_group(required=True)
    direction.add_argument("--analyze", action="store_true")
    direction.add_argument("--synthesize", action="store_true")
    sub.add_argument("--input", required=True)
    _add_frame_output(sub)
    sub.set_defaults(handler=cmd_transform)

    sub = subs.add_parser("bench", help="time the fast path against the "
                                        "size-m reference transform")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--trials", type=int, required=True)
    sub.add_argument("--seed", type=int, required=True)
    sub.add_argument("--output", default=None)
    sub.set_defaults(handler=cmd_bench)

    sub = subs.add_parser("grid", help="primality/divisibility table over a "
                                       "parameter grid")
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--mmax", type=int, required=True)
    sub.add_argument("--force", action="store_true",
                     help="allow grids beyond the brute-force cap")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None)
    sub.set_defaults(handler=cmd_grid)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (FrameError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
