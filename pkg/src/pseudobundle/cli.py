"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 Gröbner budget exhausted,
3 point not on the variety.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from .demo import format_demo, run_demo_smooth
from .groebner import DEFAULT_BUDGET, GroebnerBudgetExceeded, GroebnerStats
from .jacobi import NotSurjectiveError
from .nash import KernelDimensionError, RationalCurve, limit_kernel_along_curve, limit_plane_in_kernel_check
from .parse import PolynomialSyntaxError, parse_point
from .report import (
    InstanceError,
    dump,
    fiber_report,
    jacobi_report,
    load_instance,
    nash_report,
    stratify_report,
)
from .strata import (
    EmptyVarietyError,
    PointNotOnVarietyError,
    fiber_dim_at,
    semicontinuity_sample_check,
    stratify,
    stratum_of_point,
)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_OFF_VARIETY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(report: dict, json_path: str | None) -> None:
    if json_path:
        Path(json_path).write_text(dump(report))


def run_stratify(args: argparse.Namespace) -> int:
    inst = load_instance(args.file, args.order, args.gb_budget)
    stats = GroebnerStats()
    t0 = time.perf_counter()
    strat = stratify(
        inst, budget=args.gb_budget, assume_irreducible=args.assume_irreducible, stats=stats
    )
    elapsed = time.perf_counter() - t0
    samples = None
    if args.samples:
        samples = semicontinuity_sample_check(inst, args.samples, args.seed, strat=strat)
    timings = None if args.no_timings else {"stratify_seconds": elapsed}
    report = stratify_report(inst, strat, args.gb_budget, samples, timings)

    print(f"variables: {', '.join(inst.ctx.names)}   order: {strat.order}   "
          f"matrix: {inst.m}x{inst.n}")
    print(f"{'i':>3}  {'empty':>5}  {'X_i = X_i+1':>11}  generators of X_i")
    for s in strat.strata:
        gens = ", ".join(str(g) for g in s.ideal.nonzero_generators()) or "0"
        print(f"{s.kernel_dim:>3}  {str(s.is_empty):>5}  {str(s.empty_difference):>11}  {gens}")
    gr = strat.generic_rank
    print(f"minimal kernel dimension k = {strat.k_min}; maximal attained = {strat.k_max}")
    print(f"generic rank: {gr.value} ({'certified' if gr.certified else 'uncertified'})")
    label = " (vacuous)" if strat.quasifib_vacuous else ""
    print(f"projectivized kernel is a quasifibration up to dimension {strat.quasifib_dim}{label}")
    if samples is not None:
        print(f"samples: {samples.passed}/{samples.total} passed, fiber dims {dict(sorted(samples.fiber_dims.items()))}")
    _emit(report, args.json)
    return EXIT_OK if samples is None or samples.ok else EXIT_USAGE


def run_fiber(args: argparse.Namespace) -> int:
    inst = load_instance(args.file, budget=args.gb_budget)
    point = parse_point(args.point)
    fd = fiber_dim_at(inst, point)
    i = stratum_of_point(inst, point, budget=args.gb_budget)
    print(f"point ({args.point}): kernel dimension {fd}, stratum X_{i}")
    _emit(fiber_report(inst, point, fd, i), args.json)
    return EXIT_OK


def run_nash(args: argparse.Namespace) -> int:
    inst = load_instance(args.file, budget=args.gb_budget)
    results = []
    for text in args.curve:
        curve = RationalCurve.parse(text)
        limit = limit_kernel_along_curve(inst, curve)
        ok = limit_plane_in_kernel_check(inst, limit)
        fd = fiber_dim_at(inst, limit.base_point)
        results.append((curve, limit, ok, fd))
        basis = "; ".join("(" + ", ".join(str(v) for v in b) + ")" for b in limit.basis)
        pl = ", ".join(str(v) for v in limit.plucker.coords)
        base = ", ".join(str(v) for v in limit.base_point)
        print(f"curve ({curve}) -> base ({base}), fiber dim {fd}")
        print(f"  limit {limit.dim}-plane span {basis}; Plücker [{pl}]; inside kernel: {ok}")
    _emit(nash_report(inst, results), args.json)
    return EXIT_OK if all(r[2] for r in results) else EXIT_USAGE


def run_jacobi(args: argparse.Namespace) -> int:
    report = jacobi_report(args.genus, args.degree, args.map_degree)
    print(f"genus {args.genus}, degree {args.degree}")
    print(f"{'j':>3}  {'b_j(Sp^d)':>10}  {'b_j(J x CP)':>12}")
    for row in report["table"]:
        print(f"{row['degree']:>3}  {row['sp']:>10}  {row['product']:>12}")
    print(f"agree through degree {report['agree_through']}; "
          f"first divergence: {report['first_divergence']}")
    for name, value in report["bounds"].items():
        print(f"{name}: {'inapplicable' if value is None else value}")
    if report["mattuck_identity"] is not None:
        print(f"Sp^d = J x CP^(d-g) at the level of Betti numbers: {report['mattuck_identity']}")
    _emit(report, args.json)
    return EXIT_OK


def run_demo(args: argparse.Namespace) -> int:
    rows = run_demo_smooth(args.n_max)
    print(format_demo(rows))
    return EXIT_OK if all(r.ok for r in rows) else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pseudobundle", description="Kernel stratification of polynomial matrices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stratify", help="rank stratification of an instance file")
    s.add_argument("file")
    s.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    s.add_argument("--gb-budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--samples", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--assume-irreducible", action="store_true")
    s.add_argument("--json")
    s.add_argument("--no-timings", action="store_true")
    s.set_defaults(func=run_stratify)

    f = sub.add_parser("fiber", help="kernel dimension at a point")
    f.add_argument("file")
    f.add_argument("--point", required=True)
    f.add_argument("--gb-budget", type=int, default=DEFAULT_BUDGET)
    f.add_argument("--json")
    f.set_defaults(func=run_fiber)

    n = sub.add_parser("nash", help="limit kernel planes along curves")
    n.add_argument("file")
    n.add_argument("--curve", required=True, action="append")
    n.add_argument("--gb-budget", type=int, default=DEFAULT_BUDGET)
    n.add_argument("--json")
    n.set_defaults(func=run_nash)

    j = sub.add_parser("jacobi", help="Betti numbers and bounds for the Abel-Jacobi map")
    j.add_argument("--genus", type=int, required=True)
    j.add_argument("--degree", type=int, required=True)
    j.add_argument("--map-degree", type=int)
    j.add_argument("--json")
    j.set_defaults(func=run_jacobi)

    d = sub.add_parser("demo", help="illustrations")
    d.add_argument("which", choices=["smooth-counterexample"])
    d.add_argument("--n-max", type=int, default=20)
    d.set_defaults(func=run_demo)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except GroebnerBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PointNotOnVarietyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OFF_VARIETY
    except (
        InstanceError,
        EmptyVarietyError,
        PolynomialSyntaxError,
        KernelDimensionError,
        NotSurjectiveError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
