"""Tabulate Betti agreement between Sp^d(M) and J(M) x CP^(d-g) over a (g, d) grid."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from pseudobundle.jacobi import bounds_report, compare_with_product


@dataclass(frozen=True)
class GridConfig:
    g_max: int = 6
    extra_degrees: int = 4


def run(cfg: GridConfig) -> None:
    print(f"{'g':>2} {'d':>3}  {'regime':<14} {'agree':>5} {'diverge':>7}  {'2(d-g)+1':>8}  AJ qf  rank")
    for g in range(2, cfg.g_max + 1):
        for d in range(g, 2 * g + cfg.extra_degrees):
            rep = compare_with_product(g, d)
            b = bounds_report(g, d)
            regime = "quasifibration" if d <= 2 * g - 2 else "fibre bundle"
            bound = 2 * (d - g) + 1 if regime == "quasifibration" else "-"
            div = "-" if rep.first_divergence is None else rep.first_divergence
            aj = "-" if b.abel_jacobi_qf_dim is None else b.abel_jacobi_qf_dim
            rank = "-" if b.pseudo_bundle_generic_rank is None else b.pseudo_bundle_generic_rank
            print(f"{g:>2} {d:>3}  {regime:<14} {rep.agree_through:>5} {div!s:>7}  {bound!s:>8}  {aj!s:>5}  {rank!s:>4}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--g-max", type=int, default=GridConfig.g_max)
    p.add_argument("--extra-degrees", type=int, default=GridConfig.extra_degrees)
    run(GridConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    main()
