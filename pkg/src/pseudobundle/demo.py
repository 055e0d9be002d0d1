"""The smooth function exp(-1/u^2) sin(1/u): rank drops on {0} and {1/(pi n)}.

This is the one place floating point is used.  Double precision is not
enough (exp(-1/u^2) underflows at the midpoints for n >= 9, and sin(pi n)
rounds to ~1e-16), so values are computed with mpmath at a working
precision sized to n_max.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

RATIO_BOUND = mpmath.mpf("1e-18")
GUARD = mpmath.mpf("1e-300")


@dataclass(frozen=True)
class DemoRow:
    n: int
    zero_point: mpmath.mpf
    value_at_zero: mpmath.mpf
    midpoint: mpmath.mpf
    value_at_midpoint: mpmath.mpf

    @property
    def ratio(self) -> mpmath.mpf:
        return self.value_at_zero / self.value_at_midpoint

    @property
    def ok(self) -> bool:
        return self.value_at_midpoint > 0 and self.value_at_zero < RATIO_BOUND * (
            self.value_at_midpoint + GUARD
        )


def smooth_function(u: mpmath.mpf) -> mpmath.mpf:
    if u == 0:
        return mpmath.mpf(0)
    return mpmath.exp(-1 / u**2) * mpmath.sin(1 / u)


def working_digits(n_max: int) -> int:
    # |d(u_n)| ~ exp(-pi^2 n^2) * pi n * 10^-dps must sit 18 decades below
    # exp(-pi^2 (n + 1/2)^2), a gap of pi^2 (n + 1/4) / ln 10 decades
    return 40 + math.ceil(math.pi**2 * (n_max + 1) / math.log(10))


def run_demo_smooth(n_max: int = 20) -> list[DemoRow]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    with mpmath.workdps(working_digits(n_max)):
        for n in range(1, n_max + 1):
            u = 1 / (mpmath.pi * n)
            mid = 2 / ((2 * n + 1) * mpmath.pi)
            rows.append(
                DemoRow(n, u, abs(smooth_function(u)), mid, abs(smooth_function(mid)))
            )
    return rows


def format_demo(rows: list[DemoRow]) -> str:
    lines = [f"{'n':>3}  {'u = 1/(pi n)':>14}  {'|d(u)|':>12}  {'midpoint':>14}  {'|d(mid)|':>12}  rank"]
    for r in rows:
        lines.append(
            f"{r.n:>3}  {mpmath.nstr(r.zero_point, 8):>14}  {mpmath.nstr(r.value_at_zero, 3):>12}"
            f"  {mpmath.nstr(r.midpoint, 8):>14}  {mpmath.nstr(r.value_at_midpoint, 3):>12}"
            f"  0 / 1"
        )
    lines.append(
        "rank is 0 on u = 0 and every 1/(pi n), 1 in between: the zero set accumulates at 0 "
        "and has no neighbourhood retracting onto it"
    )
    return "\n".join(lines)
