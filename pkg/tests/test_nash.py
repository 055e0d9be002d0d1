import random
from fractions import Fraction

import pytest

from pseudobundle.linalg import kernel_basis
from pseudobundle.nash import (
    CURVE_CONTEXT,
    KernelDimensionError,
    LimitPlane,
    PluckerVector,
    RationalCurve,
    kernel_plucker,
    limit_kernel_along_curve,
    limit_plane_in_kernel_check,
    plucker_from_basis,
)
from pseudobundle.poly import Polynomial
from pseudobundle.strata import MorphismInstance, PointNotOnVarietyError, fiber_dim_at, stratify

XY_INST = MorphismInstance.from_texts(["x", "y"], [["x", "y"]])
PLANES = MorphismInstance.from_texts(["x", "y"], [["x", "y", "0", "0"], ["0", "0", "x", "y"]])
SHIFT = MorphismInstance.from_texts(["x", "y"], [["x", "y", "0"], ["0", "x", "y"]])
SYM = MorphismInstance.from_texts(["x", "y"], [["x", "y"], ["y", "x"]])


def span_equal(basis, expected):
    return kernel_basis_rows(basis) == kernel_basis_rows(expected)


def kernel_basis_rows(vectors):
    from pseudobundle.linalg import rref

    R, piv = rref([[Fraction(v) for v in b] for b in vectors])
    return [tuple(r) for r in R[: len(piv)]]


class TestKernelPlucker:
    def test_line(self):
        assert kernel_plucker([[3, 4]], 1).coords == (1, Fraction(-3, 4))

    def test_full_plane(self):
        assert kernel_plucker([[0, 0]], 2).coords == (1,)

    def test_dimension_mismatch(self):
        with pytest.raises(KernelDimensionError):
            kernel_plucker([[1, 0], [0, 1]], 1)


class TestLimits:
    def test_line_direction(self):
        L = limit_kernel_along_curve(XY_INST, RationalCurve.parse("t, 2*t"))
        assert span_equal(L.basis, [(-2, 1)])
        assert L.plucker.coords == (1, Fraction(-1, 2))

    def test_tangent_parabola(self):
        L = limit_kernel_along_curve(XY_INST, RationalCurve.parse("t, t^2"))
        assert L.basis == ((0, 1),) and L.base_point == (0, 0)

    def test_antidiagonal(self):
        L = limit_kernel_along_curve(XY_INST, RationalCurve.parse("t, -t"))
        assert span_equal(L.basis, [(1, 1)])

    def test_direction_dependence(self):
        p1 = limit_kernel_along_curve(XY_INST, RationalCurve.parse("t, t")).plucker
        p2 = limit_kernel_along_curve(XY_INST, RationalCurve.parse("t, 2*t")).plucker
        assert p1 != p2

    def test_nothing_to_limit(self):
        ident = MorphismInstance.from_texts(["x"], [["1", "0"], ["0", "1"]])
        with pytest.raises(KernelDimensionError):
            limit_kernel_along_curve(ident, RationalCurve.parse("t"))

    def test_base_point_off_x(self):
        inst = MorphismInstance.from_texts(["x", "y"], [["x", "y"]], ["x*y"])
        with pytest.raises(PointNotOnVarietyError):
            limit_kernel_along_curve(inst, RationalCurve.parse("1 + t, 1 + t"))

    def test_constant_curve_rejected(self):
        with pytest.raises(ValueError):
            RationalCurve.parse("0, 1")

    def test_two_planes_satisfy_plucker_relation(self):
        L = limit_kernel_along_curve(PLANES, RationalCurve.parse("t, 3*t^2"))
        assert L.dim == 2
        p = L.plucker.as_dict()
        rel = p[(0, 1)] * p[(2, 3)] - p[(0, 2)] * p[(1, 3)] + p[(0, 3)] * p[(1, 2)]
        assert rel == 0
        assert limit_plane_in_kernel_check(PLANES, L)


class TestInclusionCheck:
    def test_origin_limits(self):
        for text in ("t, t^2", "t, 2*t"):
            L = limit_kernel_along_curve(XY_INST, RationalCurve.parse(text))
            assert limit_plane_in_kernel_check(XY_INST, L)

    def test_rejects_foreign_plane(self):
        inst = MorphismInstance.from_texts(["x", "y"], [["x", "y"]])
        plane = LimitPlane(PluckerVector(1, 2, (Fraction(1), Fraction(0))), ((1, 0),), (1, 0))
        assert not limit_plane_in_kernel_check(inst, plane)


def random_curve(rng: random.Random, base, arity: int) -> RationalCurve:
    comps = []
    for j in range(arity):
        coeffs = {(0,): base[j]}
        for d in range(1, 4):
            if rng.random() < 0.6:
                coeffs[(d,)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        comps.append(Polynomial(CURVE_CONTEXT, coeffs))
    if all(c.is_constant() for c in comps):
        comps[0] = comps[0] + CURVE_CONTEXT.parse("t")
    return RationalCurve(tuple(comps))


@pytest.mark.parametrize("inst", [XY_INST, SYM, PLANES, SHIFT], ids=["xy", "sym", "planes", "shift"])
def test_inclusion_and_dimension_on_random_curves(inst):
    rng = random.Random(42)
    s = stratify(inst)
    special = [(0, 0), (1, 1), (2, -2)]
    checked = 0
    for _ in range(40):
        base = special[rng.randrange(len(special))]
        curve = random_curve(rng, base, 2)
        try:
            L = limit_kernel_along_curve(inst, curve)
        except KernelDimensionError:
            continue
        checked += 1
        assert limit_plane_in_kernel_check(inst, L)
        assert L.dim <= fiber_dim_at(inst, L.base_point)
        assert L.dim >= s.k_min
        assert plucker_from_basis(L.basis, inst.n) == L.plucker
    assert checked > 0


@pytest.mark.parametrize("inst", [XY_INST, PLANES, SHIFT], ids=["xy", "planes", "shift"])
def test_limit_equals_kernel_on_open_stratum(inst):
    rng = random.Random(9)
    s = stratify(inst)
    for _ in range(20):
        base = (Fraction(rng.randint(1, 5)), Fraction(rng.randint(-5, -1)))
        if fiber_dim_at(inst, base) != s.k_min:
            continue
        L = limit_kernel_along_curve(inst, random_curve(rng, base, 2))
        assert list(L.basis) == kernel_basis(inst.matrix.evaluate(base))
