"""
Homological dimensions in (parabolic) category O for type I superalgebras.

Answers are DimStatus values: a finite number, infinite, a reduction to a fully
specified question about the even part, or an explicit out-of-scope verdict.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Literal, Optional

from .algebra import AlgebraDescriptor, is_dominant, is_typical, require_integral
from .errors import ContradictionError, InvalidParameterError, OutOfScopeError, PreconditionError, UnsupportedError
from .weights import Weight, require_basis
from .weyl import (
    ParabolicSubgroup,
    dual_parabolic,
    in_parabolic_cone,
    integral_weyl_group,
    length,
    levi_roots,
    longest_in,
    negate_longest,
    stabilizer,
    weyl_group,
)

logger = logging.getLogger(__name__)

StructuralKind = Literal[
    "simple", "verma", "parabolic-verma", "costandard", "kac",
    "projective-cover", "injective-envelope", "tilting",
]
Measure = Literal["pd", "id"]
StatusKind = Literal["finite", "infinite", "equals-even-part", "out-of-scope"]

STRUCTURAL_KINDS = (
    "simple", "verma", "parabolic-verma", "costandard", "kac",
    "projective-cover", "injective-envelope", "tilting",
)


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class StructuralLabel:
    """
    A structural module of O^p over `algebra`: kind, highest weight and parabolic.
    The weight must lie in Σ⁺_p; a parabolic Verma module over the Borel is a Verma module.
    """

    algebra: AlgebraDescriptor
    kind: StructuralKind
    weight: Weight
    parabolic: ParabolicSubgroup

    def __post_init__(self) -> None:
        if self.kind not in STRUCTURAL_KINDS:
            raise InvalidParameterError(f"Unsupported structural kind: {self.kind}")
        require_basis(self.algebra.basis, self.weight)
        if not self.parabolic.generators <= weyl_group(self.algebra).generators:
            raise InvalidParameterError(f"Levi {self.parabolic.render()} is not inside {self.algebra.name}")
        if self.kind == "parabolic-verma" and not self.parabolic.generators:
            object.__setattr__(self, "kind", "verma")
        if self.kind == "verma" and self.parabolic.generators:
            raise InvalidParameterError("a Verma module lives over the Borel; use parabolic-verma")
        if not in_parabolic_cone(self.algebra, self.weight, self.parabolic):
            raise InvalidParameterError(
                f"{self.weight.render()} is not p-dominant for the Levi {self.parabolic.render() or 'b'}"
            )

    def render(self) -> Dict[str, object]:
        return {
            "algebra": self.algebra.name,
            "kind": self.kind,
            "weight": self.weight.render(),
            "levi": self.parabolic.render(),
        }


@dataclass(frozen=True)
class EvenPartQuery:
    """The same measure of the even counterpart of a label, taken in O^p_0."""

    measure: Measure
    label: StructuralLabel

    def render(self) -> Dict[str, object]:
        return {"measure": self.measure, "category": "even-part", **self.label.render()}


@dataclass(frozen=True)
class DimStatus:
    kind: StatusKind
    anchor: str
    value: Optional[int] = None
    query: Optional[EvenPartQuery] = None
    reason: str = ""

    def __post_init__(self) -> None:
        if self.kind == "finite":
            assert self.value is not None and self.value >= 0, "finite status needs a value >= 0"
        if self.kind == "equals-even-part":
            assert self.query is not None, "even-part status needs a query"

    @classmethod
    def finite(cls, value: int, anchor: str) -> "DimStatus":
        return cls("finite", anchor, value=value)

    @classmethod
    def infinite(cls, anchor: str) -> "DimStatus":
        return cls("infinite", anchor)

    @classmethod
    def equals_even(cls, query: EvenPartQuery, anchor: str) -> "DimStatus":
        return cls("equals-even-part", anchor, query=query)

    @classmethod
    def out_of_scope(cls, reason: str, anchor: str) -> "DimStatus":
        return cls("out-of-scope", anchor, reason=reason)

    def render(self) -> Dict[str, object]:
        out: Dict[str, object] = {"status": self.kind, "anchor": self.anchor}
        if self.value is not None:
            out["value"] = self.value
        if self.query is not None:
            out["query"] = self.query.render()
        if self.reason:
            out["reason"] = self.reason
        return out


# ============================================================
# FINITISTIC DIMENSIONS
# ============================================================

def longest_length(group: ParabolicSubgroup) -> int:
    return length(longest_in(group))


def findim_gmod(a: AlgebraDescriptor) -> int:
    return a.dim_g0


def findim_weight_cat(a: AlgebraDescriptor) -> int:
    return a.dim_g0 - a.dim_h


def findim_parabolic(a: AlgebraDescriptor, p: ParabolicSubgroup) -> int:
    """2ℓ(w0) − 2ℓ(w0^p)."""
    return 2 * longest_length(weyl_group(a)) - 2 * longest_length(p)


def findim_block_pe(a: AlgebraDescriptor, lam: Weight, p: ParabolicSubgroup) -> int:
    """2ℓ(w0^λ) − 2ℓ(w0^p) with w0^λ longest in the integral Weyl group W_[λ]."""
    if a.kind != "pe":
        raise InvalidParameterError(f"the block formula is stated for pe(n), not {a.name}")
    integral = integral_weyl_group(a, lam)
    if not integral.contains_roots(levi_roots(a, p)):
        raise OutOfScopeError(f"the Levi {p.render()} is not contained in W_[{lam.render()}]")
    return 2 * integral.longest_length - 2 * longest_length(p)


# ============================================================
# PARABOLIC SHIFTS
# ============================================================

def _shift(value: int, p: ParabolicSubgroup, measure: Measure) -> int:
    offset = 2 * longest_length(p)
    if value < offset:
        raise ContradictionError(f"{measure} in O equal to {value} is below 2ℓ(w0^p) = {offset}")
    return value - offset


def pd_shift(pd_in_O: int, p: ParabolicSubgroup) -> int:
    """pd_{O^p} M = pd_O M − 2ℓ(w0^p)."""
    return _shift(pd_in_O, p, "pd")


def id_shift(id_in_O: int, p: ParabolicSubgroup) -> int:
    return _shift(id_in_O, p, "id")


def pd_projective_criterion(pd_in_O: int, p: ParabolicSubgroup) -> bool:
    """M is projective in O^p iff pd_O M = 2ℓ(w0^p)."""
    return pd_in_O == 2 * longest_length(p)


def pd_finite_dimensional(a: AlgebraDescriptor) -> int:
    """pd_O of a finite-dimensional module with finite pd: the shift for p = g."""
    return 2 * longest_length(weyl_group(a))


def pd_even_injective_dominant_regular(a: AlgebraDescriptor, lam: Weight, p: ParabolicSubgroup) -> int:
    """pd I0^p(λ) = 2ℓ(w0^λ) − 2ℓ(w0^p) for dominant regular λ."""
    require_integral(a, lam)
    if not is_dominant(a, lam) or stabilizer(a, lam).generators:
        raise PreconditionError(f"{lam.render()} is not dominant regular")
    return 2 * integral_weyl_group(a, lam).longest_length - 2 * longest_length(p)


# ============================================================
# DUALITY
# ============================================================

_DUAL_KIND: Dict[str, str] = {
    "simple": "simple",
    "tilting": "tilting",
    "projective-cover": "injective-envelope",
    "injective-envelope": "projective-cover",
    "verma": "costandard",
    "parabolic-verma": "costandard",
}


def duality_label(label: StructuralLabel) -> StructuralLabel:
    """D Δ^p(λ) = ∇^p̂(−w0λ), D L^p(λ) = L^p̂(−w0λ), D T^p(λ) = T^p̂(−w0λ)."""
    a = label.algebra
    if label.kind == "kac":
        raise UnsupportedError("the dual of a Kac module is not a structural label")
    if label.kind == "costandard":
        kind = "parabolic-verma" if label.parabolic.generators else "verma"
    else:
        kind = _DUAL_KIND[label.kind]
    return StructuralLabel(a, kind, negate_longest(a, label.weight), dual_parabolic(a, label.parabolic))  # type: ignore[arg-type]


# ============================================================
# DECISION TABLES
# ============================================================

def _even_query(label: StructuralLabel, measure: Measure) -> EvenPartQuery:
    return EvenPartQuery(measure, label)


def reduce_structural(label: StructuralLabel, measure: Measure) -> DimStatus:
    """
    Injective envelopes and tiltings have the pd of their even counterparts,
    projective covers and tiltings the id; the remaining kinds go to the tables.
    """
    if measure not in ("pd", "id"):
        raise InvalidParameterError(f"Unsupported measure: {measure}")
    if measure == "pd":
        if label.kind in ("injective-envelope", "tilting"):
            return DimStatus.equals_even(_even_query(label, "pd"), "structural-even-reduction")
        if label.kind == "projective-cover":
            return DimStatus.finite(0, "projective")
        return _pd_table(label)
    if label.kind in ("projective-cover", "tilting"):
        return DimStatus.equals_even(_even_query(label, "id"), "structural-even-reduction")
    if label.kind == "injective-envelope":
        return DimStatus.finite(0, "injective")
    return id_status(label)


def _pd_table(label: StructuralLabel) -> DimStatus:
    kind = label.algebra.kind
    if kind == "pe":
        return pd_status_pe(label)
    if kind == "osp":
        return pd_status_osp(label)
    if kind == "glmn":
        return pd_status_glmn(label)
    raise UnsupportedError(f"no pd table for {label.algebra.name}")


def pd_status_pe(label: StructuralLabel) -> DimStatus:
    if label.algebra.kind != "pe":
        raise InvalidParameterError(f"pe table applied to {label.algebra.name}")
    if label.kind in ("injective-envelope", "tilting", "projective-cover"):
        return reduce_structural(label, "pd")
    if label.kind in ("simple", "kac", "verma", "parabolic-verma"):
        return DimStatus.infinite("pe-highest-weight-infinite-pd")
    if is_typical(label.algebra, label.weight):
        return DimStatus.equals_even(_even_query(label, "pd"), "pe-costandard-typical")
    return DimStatus.infinite("pe-costandard-atypical")


def pd_status_osp(label: StructuralLabel) -> DimStatus:
    """
    Parabolic Verma, costandard and Kac modules (the parabolic Verma module for the
    Levi g0) have finite pd iff λ is typical; atypical simples have infinite pd.
    """
    if label.algebra.kind != "osp":
        raise InvalidParameterError(f"osp table applied to {label.algebra.name}")
    if label.kind in ("injective-envelope", "tilting", "projective-cover"):
        return reduce_structural(label, "pd")
    typical = is_typical(label.algebra, label.weight)
    if label.kind == "simple":
        if typical:
            return DimStatus.out_of_scope("pd of typical simple modules is not decided", "osp-simple-typical")
        return DimStatus.infinite("osp-simple-associated-variety")
    if typical:
        return DimStatus.equals_even(_even_query(label, "pd"), "osp-standard-typical")
    return DimStatus.infinite("osp-standard-atypical")


def pd_status_glmn(label: StructuralLabel) -> DimStatus:
    if label.algebra.kind != "glmn":
        raise InvalidParameterError(f"gl(m|n) table applied to {label.algebra.name}")
    if label.kind in ("injective-envelope", "tilting", "projective-cover"):
        return reduce_structural(label, "pd")
    if label.kind == "simple" and not is_typical(label.algebra, label.weight):
        return DimStatus.infinite("glmn-simple-associated-variety")
    return DimStatus.out_of_scope(f"no pd table for {label.kind} modules over gl(m|n)", "glmn-table")


def id_status(label: StructuralLabel) -> DimStatus:
    """id_{O^p} M = pd_{O^p̂} D M."""
    if label.kind in ("projective-cover", "tilting", "injective-envelope"):
        return reduce_structural(label, "id")
    status = _pd_table(duality_label(label))
    logger.debug("id of %s read from the pd of its dual: %s", label.render(), status.kind)
    return status


def pd_status(label: StructuralLabel) -> DimStatus:
    return reduce_structural(label, "pd")


__all__ = [
    "DimStatus",
    "EvenPartQuery",
    "STRUCTURAL_KINDS",
    "StructuralLabel",
    "duality_label",
    "findim_block_pe",
    "findim_gmod",
    "findim_parabolic",
    "findim_weight_cat",
    "id_shift",
    "id_status",
    "longest_length",
    "pd_even_injective_dominant_regular",
    "pd_finite_dimensional",
    "pd_projective_criterion",
    "pd_shift",
    "pd_status",
    "pd_status_glmn",
    "pd_status_osp",
    "pd_status_pe",
    "reduce_structural",
]
