"""Exact analysis of kernels of polynomial matrices over affine varieties."""

from .groebner import (
    GroebnerBasis,
    GroebnerBudgetExceeded,
    Ideal,
    buchberger,
    ideal_membership,
    is_unit_ideal,
    normal_form,
    radical_membership,
    same_variety,
    variety_dimension,
)
from .linalg import PolyMatrix, bareiss_rank, kernel_basis, minors_of_size, univariate_kernel_basis
from .nash import LimitPlane, PluckerVector, RationalCurve, kernel_plucker, limit_kernel_along_curve
from .parse import parse_polynomial
from .poly import Polynomial, VariableContext
from .strata import MorphismInstance, Stratification, fiber_dim_at, minimal_kernel_dim, stratify

__all__ = [
    "GroebnerBasis",
    "GroebnerBudgetExceeded",
    "Ideal",
    "LimitPlane",
    "MorphismInstance",
    "PluckerVector",
    "PolyMatrix",
    "Polynomial",
    "RationalCurve",
    "Stratification",
    "VariableContext",
    "bareiss_rank",
    "buchberger",
    "fiber_dim_at",
    "ideal_membership",
    "is_unit_ideal",
    "kernel_basis",
    "kernel_plucker",
    "limit_kernel_along_curve",
    "minimal_kernel_dim",
    "minors_of_size",
    "normal_form",
    "parse_polynomial",
    "radical_membership",
    "same_variety",
    "stratify",
    "univariate_kernel_basis",
    "variety_dimension",
]
