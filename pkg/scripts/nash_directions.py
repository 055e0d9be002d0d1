"""Limit kernel lines of the row (x, y) along lines and parabolas through the origin.

Different approach directions give different limit planes, which is why the
kernel is not a subbundle near the origin without blowing up.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from pseudobundle.nash import RationalCurve, limit_kernel_along_curve, limit_plane_in_kernel_check
from pseudobundle.report import load_instance
from pseudobundle.strata import MorphismInstance


@dataclass(frozen=True)
class DirectionsConfig:
    instance: str | None = None
    slopes: tuple[int, ...] = (-3, -2, -1, 1, 2, 3)
    curves: list[str] = field(default_factory=lambda: ["t, t^2", "t^2, t", "t, t + t^2"])


def run(cfg: DirectionsConfig) -> None:
    inst = (
        load_instance(cfg.instance)
        if cfg.instance
        else MorphismInstance.from_texts(["x", "y"], [["x", "y"]])
    )
    texts = [f"t, {c}*t" for c in cfg.slopes] + list(cfg.curves)
    for text in texts:
        if len(text.split(",")) != inst.ctx.arity:
            continue
        L = limit_kernel_along_curve(inst, RationalCurve.parse(text))
        basis = "; ".join("(" + ", ".join(str(v) for v in b) + ")" for b in L.basis)
        ok = limit_plane_in_kernel_check(inst, L)
        pl = ", ".join(str(v) for v in L.plucker.coords)
        print(f"{text:<14} limit span {basis:<22} Plücker [{pl}]  in kernel: {ok}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instance", help="instance JSON file (default: the row (x, y))")
    p.add_argument("--slope", type=int, action="append", dest="slopes")
    p.add_argument("--curve", action="append", dest="curves")
    a = p.parse_args()
    cfg = DirectionsConfig(instance=a.instance)
    if a.slopes:
        cfg = DirectionsConfig(a.instance, tuple(a.slopes), a.curves or [])
    elif a.curves:
        cfg = DirectionsConfig(a.instance, curves=a.curves)
    run(cfg)


if __name__ == "__main__":
    main()
