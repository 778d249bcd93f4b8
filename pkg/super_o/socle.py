"""
Socles of cokernels of Verma embeddings.

The even socles soc(Δ0(x·μ)/Δ0(y·μ)) are computed by the oracle in the regular
block and moved to the μ-wall by translation; the pe(n) socle replaces each
label z·μ by (z·μ)^+ + η.
"""
from __future__ import annotations

import logging
from functools import lru_cache

from .algebra import (
    AlgebraDescriptor,
    build_algebra,
    is_antidominant,
    is_dominant,
    omega,
    require_integral,
)
from .config import Config
from .errors import (
    InvalidParameterError,
    OracleError,
    OutOfScopeError,
    PreconditionError,
    UnsupportedRankError,
)
from .labels import SimpleMultiset
from .linkage import antidominant_point, hom_dim_verma_pe
from .oracle.highest_weight import candidate_band, lambda_plus_by_inversion, singular_vectors, socle_constituents
from .oracle.module import DEFAULT_CONFIG, as_wt, build_verma, quotient, submodule_generated
from .weights import Weight, require_basis
from .weyl import (
    WeylElement,
    bruhat_leq,
    coset_rep,
    dot,
    elements,
    is_bigrassmannian,
    orbit,
    orbit_extreme,
    stabilizer,
    weyl_group,
)

logger = logging.getLogger(__name__)

EVEN_RANK_LIMIT = 4


# ============================================================
# ODD REFLECTIONS
# ============================================================

def lambda_plus_pe(n: int, lam: Weight, config: Config = DEFAULT_CONFIG) -> Weight:
    """
    λ⁺: the highest weight of the simple pe(n)-module whose highest weight for the
    Borel b0 ⊕ g₋₁ is λ.
    """
    a = build_algebra("pe", n)
    require_basis(a.basis, lam)
    require_integral(a, lam)
    if n == 1:
        return lam
    if n == 2:
        return lam if lam[0] == lam[1] else lam + omega(2, 2)
    if n == 3:
        return lambda_plus_by_inversion(n, lam, config)
    raise UnsupportedRankError(f"λ⁺ is certified for n <= 3, got pe({n})")


# ============================================================
# ORACLE SOCLES
# ============================================================

def oracle_cokernel_socle(a: AlgebraDescriptor, top: Weight, sub: Weight,
                          config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    """soc(Δ(top)/Δ(sub)) computed directly on a truncated module."""
    require_basis(a.basis, top, sub)
    if top == sub:
        return SimpleMultiset.empty()
    depth = candidate_band(a, as_wt(top))
    verma = build_verma(a, top, depth, config)
    nu = as_wt(sub)
    sing = singular_vectors(verma, nu)
    if len(sing) != 1:
        raise PreconditionError(
            f"Hom(Δ({sub.render()}), Δ({top.render()})) has dimension {len(sing)}, expected 1"
        )
    cokernel = quotient(verma, submodule_generated(verma, [(nu, sing[0])]))
    return socle_constituents(cokernel, config)


def _require_even_rank(a: AlgebraDescriptor) -> None:
    if a.kind != "gl":
        raise InvalidParameterError(f"even socles are taken over gl(n), not {a.name}")
    if a.n > EVEN_RANK_LIMIT:
        raise UnsupportedRankError(f"even socles are computed for n <= {EVEN_RANK_LIMIT}, got gl({a.n})")


def translate_to_wall(a: AlgebraDescriptor, socle: SimpleMultiset, mu: Weight) -> SimpleMultiset:
    """
    Translation from the regular block of 0 to the μ-wall: L0(z·0) goes to L0(z·μ)
    when z is longest in z W_μ and to zero otherwise.
    """
    require_basis(a.basis, mu)
    if not is_dominant(a, mu):
        raise PreconditionError(f"{mu.render()} is not dominant")
    zero = a.zero()
    labels = {dot(a, w, zero): w for w in elements(weyl_group(a))}
    wall = stabilizer(a, mu)
    out = []
    for label, mult in socle:
        z = labels.get(label)
        if z is None:
            raise InvalidParameterError(f"L({label.render()}) is not in the regular block of 0")
        if coset_rep(z, wall, "longest") == z:
            out.append((dot(a, z, mu), mult))
    return SimpleMultiset.of(out)


def socle_cokernel_even(a: AlgebraDescriptor, x: WeylElement, y: WeylElement, mu: Weight,
                        verify: bool = False, config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    """
    soc(Δ0(x·μ)/Δ0(y·μ)) = ⊕ L0(z·μ)^{n_{x,y,z}} for x < y and μ dominant, from the
    regular-block socle of the shortest coset representatives. With `verify` the
    result is compared against the direct computation in the block of μ.
    """
    _require_even_rank(a)
    require_basis(a.basis, mu)
    if x == y or not bruhat_leq(x, y):
        raise PreconditionError(f"{x} < {y} fails in the Bruhat order")
    if not is_dominant(a, mu):
        raise PreconditionError(f"{mu.render()} is not dominant")
    wall = stabilizer(a, mu)
    x_short, y_short = coset_rep(x, wall), coset_rep(y, wall)
    if x_short == y_short:
        return SimpleMultiset.empty()
    zero = a.zero()
    regular = oracle_cokernel_socle(a, dot(a, x_short, zero), dot(a, y_short, zero), config)
    socle = translate_to_wall(a, regular, mu)
    if verify and wall.generators:
        if a.n > 3:
            raise UnsupportedRankError("singular-block verification runs for n <= 3")
        direct = oracle_cokernel_socle(a, dot(a, x, mu), dot(a, y, mu), config)
        if direct != socle:
            raise OracleError(f"translation gives {socle}, direct computation gives {direct}")
    logger.debug("soc(Δ0(%s·μ)/Δ0(%s·μ)) at μ=%s: %s", x, y, mu.render(), socle)
    return socle


# ============================================================
# pe(n) SOCLES AND Ext¹
# ============================================================

@lru_cache(maxsize=None)
def socle_cokernel_pe(n: int, top: Weight, sub: Weight, config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    """soc(Δ(top)/Δ(sub)) over pe(n) as ⊕_z L((z·μ)^+ + η)^{n_{x,y,z}}."""
    a = build_algebra("pe", n)
    require_basis(a.basis, top, sub)
    require_integral(a, top, sub)
    if top == sub:
        return SimpleMultiset.empty()
    if not hom_dim_verma_pe(n, sub, top):
        raise PreconditionError(f"there is no non-zero map Δ({sub.render()}) → Δ({top.render()})")
    even = build_algebra("gl", n)
    mu, x = orbit_extreme(even, top, "dominant")
    _, y = orbit_extreme(even, sub, "dominant")
    shape = socle_cokernel_even(even, x, y, mu, config=config)
    assert a.eta is not None
    return shape.relabel(lambda label: lambda_plus_pe(n, label, config) + a.eta)


def socle_cokernel_pe_oracle(n: int, top: Weight, sub: Weight, config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    if n > 2:
        raise UnsupportedRankError(f"direct pe socles are computed for n <= 2, got pe({n})")
    return oracle_cokernel_socle(build_algebra("pe", n), top, sub, config)


def ext1_simple_verma_pe(n: int, mu: Weight, lam: Weight, config: Config = DEFAULT_CONFIG) -> int:
    """dim Ext¹(L(μ), Δ(λ)) = [soc(Δ(λ̄)/Δ(λ)) : L(μ)] for μ not antidominant."""
    a = build_algebra("pe", n)
    require_basis(a.basis, mu, lam)
    require_integral(a, mu, lam)
    if is_antidominant(a, mu):
        raise OutOfScopeError(f"Ext¹(L({mu.render()}), Δ) is not covered for antidominant μ")
    top, _ = orbit_extreme(a, lam, "dominant")
    if top == lam:
        return 0
    return socle_cokernel_pe(n, top, lam, config).multiplicity(mu)


def pe2_socle_closed_form(top: Weight, sub: Weight) -> SimpleMultiset:
    """
    For dominant λ̄ = (a, b) and λ in its orbit: L(λ̄ − ω2) when a = b, L(λ̄) when
    a > b, and zero when λ = λ̄.
    """
    a = build_algebra("pe", 2)
    require_basis(a.basis, top, sub)
    if not is_dominant(a, top):
        raise PreconditionError(f"{top.render()} is not dominant")
    if sub not in orbit(a, top):
        raise PreconditionError(f"{sub.render()} is not in the dot-orbit of {top.render()}")
    if sub == top:
        return SimpleMultiset.empty()
    if top[0] == top[1]:
        return SimpleMultiset.single(top - omega(2, 2))
    return SimpleMultiset.single(top)


def socle_verma(a: AlgebraDescriptor, lam: Weight) -> SimpleMultiset:
    """soc Δ(λ) = L(λ̌) over pe(n)."""
    if a.kind != "pe":
        raise InvalidParameterError(f"the Verma socle formula is stated for pe(n), not {a.name}")
    require_basis(a.basis, lam)
    require_integral(a, lam)
    return SimpleMultiset.single(antidominant_point(a, lam))


def has_simple_socle_quotient(y: WeylElement) -> bool:
    """soc(Δ0(λ)/Δ0(y·λ)) is simple (λ dominant regular) iff y is bigrassmannian."""
    if y.family != "A":
        raise InvalidParameterError("the bigrassmannian criterion is stated in type A")
    return is_bigrassmannian(y)


def dominant_point(a: AlgebraDescriptor, lam: Weight) -> Weight:
    return orbit_extreme(a, lam, "dominant")[0]


__all__ = [
    "EVEN_RANK_LIMIT",
    "dominant_point",
    "ext1_simple_verma_pe",
    "has_simple_socle_quotient",
    "lambda_plus_pe",
    "oracle_cokernel_socle",
    "pe2_socle_closed_form",
    "socle_cokernel_even",
    "socle_cokernel_pe",
    "socle_cokernel_pe_oracle",
    "socle_verma",
    "translate_to_wall",
]
