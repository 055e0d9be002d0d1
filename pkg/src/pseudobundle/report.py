"""JSON instance files and machine-readable reports.

Polynomials travel as texts in the parser grammar, rationals as ``"p/q"``
strings, so reports diff cleanly and re-parse to the computed objects.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import jsonschema

from .groebner import DEFAULT_BUDGET, Ideal, is_unit_ideal
from .jacobi import RangeReport, bounds_report, compare_with_product, mattuck_product_check
from .linalg import PolyMatrix
from .nash import LimitPlane, RationalCurve
from .parse import PolynomialSyntaxError
from .poly import VariableContext
from .strata import MorphismInstance, SampleReport, Stratification

IDENT = r"^[A-Za-z_][A-Za-z_0-9]*$"

INSTANCE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["variables", "matrix"],
    "additionalProperties": False,
    "properties": {
        "variables": {
            "type": "array",
            "minItems": 1,
            "uniqueItems": True,
            "items": {"type": "string", "pattern": IDENT},
        },
        "ambient_ideal": {"type": "array", "items": {"type": "string"}},
        "matrix": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "string"}},
        },
    },
}

_STRATUM_SCHEMA = {
    "type": "object",
    "required": ["kernel_dim", "generators", "is_empty", "empty_difference"],
    "properties": {
        "kernel_dim": {"type": "integer", "minimum": 0},
        "generators": {"type": "array", "items": {"type": "string"}},
        "basis": {"type": "array", "items": {"type": "string"}},
        "is_empty": {"type": "boolean"},
        "empty_difference": {"type": "boolean"},
    },
}

STRATIFY_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": [
        "command",
        "instance",
        "order",
        "strata",
        "k_min",
        "k_max",
        "generic_rank",
        "quasifib_dim",
        "budget",
    ],
    "properties": {
        "command": {"const": "stratify"},
        "instance": INSTANCE_SCHEMA,
        "order": {"enum": ["grevlex", "lex"]},
        "strata": {"type": "array", "minItems": 1, "items": _STRATUM_SCHEMA},
        "k_min": {"type": "integer", "minimum": 0},
        "k_max": {"type": "integer", "minimum": 0},
        "generic_rank": {
            "type": "object",
            "required": ["value", "certified"],
            "properties": {"value": {"type": "integer"}, "certified": {"type": "boolean"}},
        },
        "quasifib_dim": {
            "type": "object",
            "required": ["value", "vacuous"],
            "properties": {"value": {"type": "integer", "minimum": -1}, "vacuous": {"type": "boolean"}},
        },
        "samples": {"type": "object"},
        "budget": {
            "type": "object",
            "required": ["limit", "groebner_bases", "spair_reductions"],
        },
        "timings": {"type": "object"},
    },
}


class InstanceError(ValueError):
    pass


def frac_text(q: Fraction) -> str:
    return str(Fraction(q))


def instance_from_dict(data: Any, order: str = "grevlex") -> MorphismInstance:
    try:
        jsonschema.validate(data, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InstanceError(f"schema violation at {where}: {exc.message}") from None
    rows = data["matrix"]
    if any(len(r) != len(rows[0]) for r in rows):
        raise InstanceError("schema violation: matrix rows have different lengths")
    ctx = VariableContext(tuple(data["variables"]), order)

    def parse(text: str, where: str):
        try:
            return ctx.parse(text)
        except PolynomialSyntaxError as exc:
            raise InstanceError(f"{where}: {exc}") from None

    ambient = Ideal(
        ctx, [parse(s, f"ambient_ideal[{i}]") for i, s in enumerate(data.get("ambient_ideal", []))]
    )
    matrix = PolyMatrix(
        ctx,
        tuple(
            tuple(parse(s, f"matrix[{i}][{j}]") for j, s in enumerate(row))
            for i, row in enumerate(rows)
        ),
    )
    return MorphismInstance(ctx, ambient, matrix)


def load_instance(path: str | Path, order: str = "grevlex", budget: int = DEFAULT_BUDGET) -> MorphismInstance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    inst = instance_from_dict(data, order)
    if is_unit_ideal(inst.ambient, budget):
        raise InstanceError("X is empty: the ambient ideal is the unit ideal")
    return inst


def instance_to_dict(inst: MorphismInstance) -> dict[str, Any]:
    return {
        "variables": list(inst.ctx.names),
        "ambient_ideal": [str(g) for g in inst.ambient.generators],
        "matrix": inst.matrix.texts(),
    }


def stratify_report(
    inst: MorphismInstance,
    strat: Stratification,
    budget: int,
    samples: SampleReport | None = None,
    timings: dict[str, float] | None = None,
) -> dict[str, Any]:
    strata = []
    for s in strat.strata:
        entry: dict[str, Any] = {
            "kernel_dim": s.kernel_dim,
            "generators": [str(g) for g in s.ideal.nonzero_generators()],
            "is_empty": s.is_empty,
            "empty_difference": s.empty_difference,
        }
        gb = s.ideal.cached_basis()
        if gb is not None:
            entry["basis"] = [str(g) for g in gb.elements]
        strata.append(entry)
    out: dict[str, Any] = {
        "command": "stratify",
        "instance": instance_to_dict(inst),
        "order": strat.order,
        "strata": strata,
        "k_min": strat.k_min,
        "k_max": strat.k_max,
        "generic_rank": {
            "value": strat.generic_rank.value,
            "certified": strat.generic_rank.certified,
        },
        "quasifib_dim": {"value": strat.quasifib_dim, "vacuous": strat.quasifib_vacuous},
        "budget": {
            "limit": budget,
            "groebner_bases": strat.stats.bases,
            "spair_reductions": strat.stats.spair_reductions,
        },
    }
    if samples is not None:
        out["samples"] = {
            "total": samples.total,
            "passed": samples.passed,
            "failed": samples.failed,
            "counterexample": None
            if samples.counterexample is None
            else [frac_text(v) for v in samples.counterexample],
            "fiber_dims": {str(k): v for k, v in sorted(samples.fiber_dims.items())},
        }
    if timings is not None:
        out["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return out


def strata_from_report(report: dict[str, Any]) -> list[Ideal]:
    """Re-parse the stratum generator texts of a stratify report."""
    inst = report["instance"]
    ctx = VariableContext(tuple(inst["variables"]), report.get("order", "grevlex"))
    ideals = []
    for s in report["strata"]:
        gens = s["generators"]
        ideals.append(Ideal(ctx, gens))
    return ideals


def fiber_report(inst: MorphismInstance, point: Sequence[Fraction], fiber_dim: int, stratum: int) -> dict[str, Any]:
    return {
        "command": "fiber",
        "instance": instance_to_dict(inst),
        "point": [frac_text(v) for v in point],
        "fiber_dim": fiber_dim,
        "stratum": stratum,
    }


def nash_report(
    inst: MorphismInstance,
    results: Sequence[tuple[RationalCurve, LimitPlane, bool, int]],
) -> dict[str, Any]:
    limits = []
    for curve, limit, ok, fd in results:
        limits.append(
            {
                "curve": [str(c) for c in curve.components],
                "base_point": [frac_text(v) for v in limit.base_point],
                "plane_dim": limit.dim,
                "fiber_dim_at_base": fd,
                "basis": [[frac_text(v) for v in b] for b in limit.basis],
                "plucker": {
                    "subsets": [list(S) for S in limit.plucker.subsets],
                    "coords": [frac_text(v) for v in limit.plucker.coords],
                },
                "in_kernel": ok,
            }
        )
    return {"command": "nash", "instance": instance_to_dict(inst), "limits": limits}


def jacobi_report(g: int, d: int, k: int | None) -> dict[str, Any]:
    b = bounds_report(g, d, k)
    rr: RangeReport = compare_with_product(g, d)
    return {
        "command": "jacobi",
        "genus": g,
        "degree": d,
        "map_degree": k,
        "table": [{"degree": j, "sp": s, "product": p} for j, s, p in rr.rows()],
        "agree_through": rr.agree_through,
        "first_divergence": rr.first_divergence,
        "mattuck_identity": mattuck_product_check(g, d) if d >= 2 * g - 1 else None,
        "bounds": {
            "abel_jacobi_qf_dim": b.abel_jacobi_qf_dim,
            "hol_qf_dim": b.hol_qf_dim,
            "inclusion_equiv_dim": b.inclusion_equiv_dim,
            "pseudo_bundle_generic_rank": b.pseudo_bundle_generic_rank,
            "fibre_bundle_fibre_dim": b.fibre_bundle_fibre_dim,
        },
    }


def dump(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"

