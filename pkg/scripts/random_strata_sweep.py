"""Stratify random polynomial matrices and cross-check each one by sampling.

    python scripts/random_strata_sweep.py --count 20 --rows 2 --cols 3
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from pseudobundle.groebner import GroebnerStats
from pseudobundle.sampling import random_instance
from pseudobundle.strata import semicontinuity_sample_check, stratifications_agree, stratify


@dataclass(frozen=True)
class SweepConfig:
    count: int = 20
    rows: int = 2
    cols: int = 3
    max_degree: int = 2
    coeff_range: int = 3
    samples: int = 500
    seed: int = 0
    check_lex: bool = True


def run(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    k_hist: Counter[int] = Counter()
    failures = 0
    t0 = time.perf_counter()
    for idx in range(cfg.count):
        inst = random_instance(
            rng, cfg.rows, cfg.cols, max_degree=cfg.max_degree, coeff_range=cfg.coeff_range
        )
        stats = GroebnerStats()
        strat = stratify(inst, stats=stats)
        rep = semicontinuity_sample_check(inst, cfg.samples, seed=idx, strat=strat)
        agree = stratifications_agree(strat, stratify(inst, order="lex")) if cfg.check_lex else True
        k_hist[strat.k_min] += 1
        failures += rep.failed + (not agree)
        levels = " ".join(
            f"X{s.kernel_dim}{'=0' if s.is_empty else ''}" for s in strat.strata
        )
        print(
            f"{idx:>3}  k={strat.k_min}  qf={strat.quasifib_dim:>2}  {levels:<24}"
            f"  samples {rep.passed}/{rep.total}  lex {'ok' if agree else 'DIFFERS'}"
            f"  s-pairs {stats.spair_reductions}"
        )
    print(f"k_min histogram: {dict(sorted(k_hist.items()))}")
    print(f"failures: {failures}   elapsed {time.perf_counter() - t0:.2f}s")
    return 1 if failures else 0


def main() -> int:
    defaults = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(defaults).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(value, bool):
            p.add_argument(flag, action=argparse.BooleanOptionalAction, default=value)
        else:
            p.add_argument(flag, type=type(value), default=value)
    return run(SweepConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
