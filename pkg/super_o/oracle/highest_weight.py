"""
Highest-weight computations on truncated modules.

Every question is answered inside a finite band of weights below a highest
weight. The band is derived from the candidate weights of composition factors:
for a Verma module Δ(λ) over a type I algebra these are the dot-orbit weights
w·(λ + ζ) (ζ a sum of distinct odd lowering weights) lying below λ. A query
whose band is not retained by the module refuses with BandViolationError.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Rational

from ..algebra import AlgebraDescriptor, build_algebra, coroot_pairing, require_integral
from ..config import Config
from ..errors import (
    BandViolationError,
    OracleError,
    PreconditionError,
    UnsupportedError,
    UnsupportedRankError,
)
from ..labels import SimpleMultiset
from ..weights import Weight, require_basis
from ..weyl import orbit
from . import linalg
from .linalg import SparseVec
from .module import (
    DEFAULT_CONFIG,
    TruncatedModule,
    Wt,
    as_wt,
    build_kac,
    build_verma,
    finite_dimensional_top,
    odd_layer,
    radical,
    shift,
    simple_quotient,
)
from .realization import Realization, realize

logger = logging.getLogger(__name__)

IntWt = Tuple[int, ...]


# ============================================================
# PARTITIONS AND THE DOMINANCE CONE
# ============================================================

def _height(heights: Sequence[int], beta: Sequence[int]) -> int:
    return sum(c * f for c, f in zip(beta, heights))


@lru_cache(maxsize=None)
def _count(beta: IntWt, even: Tuple[IntWt, ...], odd: Tuple[IntWt, ...], heights: IntWt) -> int:
    h = _height(heights, beta)
    if h < 0:
        return 0
    if h == 0:
        return 1 if not any(beta) else 0
    if odd:
        first, rest = odd[0], odd[1:]
        taken = tuple(b - c for b, c in zip(beta, first))
        return _count(beta, even, rest, heights) + _count(taken, even, rest, heights)
    if not even:
        return 0
    root, rest = even[0], even[1:]
    total = 0
    current = beta
    while _height(heights, current) >= 0:
        total += _count(current, rest, (), heights)
        current = tuple(b - c for b, c in zip(current, root))
    return total


def kostant_partition(beta: Sequence[int], roots: Sequence[Sequence[int]], heights: Sequence[int],
                      odd: Sequence[Sequence[int]] = ()) -> int:
    """
    Number of ways to write beta as a non-negative integer combination of `roots`
    plus a sum of distinct elements of `odd`. Every root needs positive height.
    """
    hs = tuple(int(f) for f in heights)
    even_t = tuple(tuple(int(c) for c in r) for r in roots)
    odd_t = tuple(tuple(int(c) for c in r) for r in odd)
    for r in (*even_t, *odd_t):
        assert _height(hs, r) > 0, f"root {r} is not positive for the height functional"
    return _count(tuple(int(c) for c in beta), even_t, odd_t, hs)


def integral_difference(lam: Wt, nu: Wt) -> Optional[IntWt]:
    diff = [Rational(a) - Rational(b) for a, b in zip(lam, nu)]
    if not all(d.is_integer for d in diff):
        return None
    return tuple(int(d) for d in diff)


def _steps(rz: Realization, parity: Optional[int] = None) -> Tuple[IntWt, ...]:
    """Negated weights of the lowering basis vectors."""
    return tuple(sorted({
        tuple(-c for c in rz.basis[y].weight) for y in rz.indices("lowering", parity)
    }))


@lru_cache(maxsize=None)
def _reachable(beta: IntWt, steps: Tuple[IntWt, ...], heights: IntWt) -> bool:
    if not any(beta):
        return True
    if _height(heights, beta) <= 0:
        return False
    return any(
        _reachable(tuple(b - s for b, s in zip(beta, step)), steps, heights) for step in steps
    )


def below(rz: Realization, nu: Wt, lam: Wt) -> bool:
    """ν ≤ λ: λ − ν lies in the monoid spanned by the negated lowering weights."""
    diff = integral_difference(lam, nu)
    if diff is None:
        return False
    return _reachable(diff, _steps(rz), rz.heights)


def band_depth(rz: Realization, lam: Wt, nu: Wt) -> int:
    return int(_height(rz.heights, [a - b for a, b in zip(lam, nu)]))


def verma_weight_dim(a: AlgebraDescriptor, lam: Wt, nu: Wt) -> int:
    """dim Δ(λ)_ν from partition counts: even steps with repetition, odd steps at most once."""
    rz = realize(a)
    diff = integral_difference(lam, nu)
    if diff is None:
        return 0
    return kostant_partition(diff, _steps(rz, 0), rz.heights, _steps(rz, 1))


# ============================================================
# CANDIDATE WEIGHTS
# ============================================================

def _odd_shifts(rz: Realization) -> List[IntWt]:
    odd = [rz.basis[y].weight for y in rz.indices("lowering", parity=1)]
    rank = len(rz.heights)
    found = {tuple(0 for _ in range(rank))}
    for k in range(1, len(odd) + 1):
        for combo in combinations(odd, k):
            found.add(tuple(sum(c[i] for c in combo) for i in range(rank)))
    return sorted(found)


def candidate_weights(a: AlgebraDescriptor, lam: Wt) -> List[Wt]:
    """
    Weights that can carry the highest weight of a composition factor of Δ(λ),
    ordered by depth below λ.
    """
    rz = realize(a)
    out = set()
    for zeta in _odd_shifts(rz):
        start = Weight.of(a.basis, shift(lam, zeta))
        for w in orbit(a, start):
            xi = as_wt(w)
            if below(rz, xi, lam):
                out.add(xi)
    return sorted(out, key=lambda xi: (band_depth(rz, lam, xi), [-Rational(c) for c in xi]))


def candidate_band(a: AlgebraDescriptor, lam: Wt) -> int:
    """Depth needed to certify socles of quotients of Δ(λ)."""
    rz = realize(a)
    need = 0
    for xi in candidate_weights(a, lam):
        for eta in candidate_weights(a, xi):
            need = max(need, band_depth(rz, lam, eta))
    return need


# ============================================================
# SINGULAR VECTORS
# ============================================================

def stacked_rows(module: TruncatedModule, nu: Wt, xs: Sequence[int]) -> List[SparseVec]:
    rows: List[SparseVec] = []
    for x in xs:
        m = module.action(x, nu)
        if m is not None:
            rows.extend(linalg.stack([m], module.dim(nu)))
    return rows


def singular_vectors(module: TruncatedModule, nu: Wt) -> List[SparseVec]:
    """Basis of {v ∈ M_ν : n⁺·v = 0}."""
    module.require_retained(nu)
    dim = module.dim(nu)
    if not dim:
        return []
    rows = stacked_rows(module, nu, module.realization.simple_raising())
    return linalg.kernel(rows, dim)


def singular_layers(module: TruncatedModule, nu: Wt) -> List[int]:
    """Odd layers of the PBW monomials supporting the singular vectors at ν."""
    labels = module.spaces.get(nu, ())
    layers = set()
    for v in singular_vectors(module, nu):
        layers.update(odd_layer(module, labels[i]) for i in v)
    return sorted(layers)


# ============================================================
# HOM DIMENSIONS AND EMBEDDINGS
# ============================================================

def hom_dim_oracle(a: AlgebraDescriptor, mu: Weight, lam: Weight, depth: Optional[int] = None,
                   config: Config = DEFAULT_CONFIG) -> int:
    """dim Hom(Δ(μ), Δ(λ)) as the dimension of the singular space of Δ(λ) at μ."""
    require_basis(a.basis, mu, lam)
    rz = realize(a)
    m, top = as_wt(mu), as_wt(lam)
    if m not in candidate_weights(a, top):
        return 0
    need = band_depth(rz, top, m)
    if depth is None:
        depth = need
    elif depth < need:
        raise BandViolationError(f"weight {mu.render()} needs depth {need}, got {depth}")
    verma = build_verma(a, lam, depth, config)
    count = len(singular_vectors(verma, m))
    logger.debug("Hom(Δ(%s), Δ(%s)) over %s has dimension %d", mu.render(), lam.render(), a.name, count)
    return count


def _push(target: TruncatedModule, source: TruncatedModule, nu: Wt, v: SparseVec,
          start: Wt, s: SparseVec) -> SparseVec:
    """Image of v ∈ source_ν under the map source → target sending the top vector to s."""
    labels = source.spaces[nu]
    out: SparseVec = {}
    for i, c in v.items():
        _, image = target.apply_monomial(labels[i], start, s)
        linalg.add_into(out, image, c)
    return out


def verma_embedding_ranks(a: AlgebraDescriptor, mu: Weight, lam: Weight, extra: int,
                          config: Config = DEFAULT_CONFIG) -> List[Tuple[Wt, int, int]]:
    """
    For the map Δ(μ) → Δ(λ) given by a singular vector, (weight, rank, dim) on every
    weight of Δ(μ) down to depth `extra`; the map is injective there iff rank == dim.
    """
    require_basis(a.basis, mu, lam)
    rz = realize(a)
    m = as_wt(mu)
    if not below(rz, m, as_wt(lam)):
        raise PreconditionError(f"{mu.render()} is not below {lam.render()}")
    target = build_verma(a, lam, band_depth(rz, as_wt(lam), m) + extra, config)
    sing = singular_vectors(target, m)
    if len(sing) != 1:
        raise PreconditionError(f"expected a one-dimensional Hom space, found dimension {len(sing)}")
    source = build_verma(a, mu, extra, config)
    out = []
    for xi in source.weights():
        cols = [target.apply_monomial(mono, m, sing[0])[1] for mono in source.spaces[xi]]
        out.append((xi, linalg.rank(cols, target.dim(xi)), len(cols)))
    return out


# ============================================================
# SOCLES
# ============================================================

def socle_constituents(module: TruncatedModule, config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    """
    Socle of a quotient of a Verma module. At each candidate weight ξ the singular
    vectors s with rad Δ(ξ)·s = 0 span the top of the L(ξ)-isotypic part of the socle.
    """
    assert not module.lowest, "socles are computed for highest-weight quotients"
    a = module.algebra
    rz = module.realization
    found: Dict[Weight, int] = {}
    for xi in candidate_weights(a, module.highest_weight):
        if not module.retained(xi):
            raise BandViolationError(f"candidate weight {xi} lies outside the retained band {module.depth}")
        sing = singular_vectors(module, xi)
        if not sing:
            continue
        lower = candidate_weights(a, xi)
        for eta in lower:
            if not module.retained(eta):
                raise BandViolationError(
                    f"certifying L{xi} needs weight {eta} at depth {module.depth_of(eta)} > {module.depth}"
                )
        need = max(band_depth(rz, xi, eta) for eta in lower)
        verma = build_verma(a, Weight.of(a.basis, xi), need, config)
        rad = radical(verma)
        equations: List[SparseVec] = []
        for eta in lower:
            ech = rad.get(eta)
            if ech is None:
                continue
            for r in ech.rows:
                images = [_push(module, verma, eta, r, xi, s) for s in sing]
                coords = sorted(set().union(*images))
                for i in coords:
                    equations.append({k: img[i] for k, img in enumerate(images) if i in img})
        mult = len(linalg.kernel(equations, len(sing)))
        if mult:
            found[Weight.of(a.basis, xi)] = mult
    socle = SimpleMultiset.of(found)
    logger.debug("socle of %s over %s: %s", module.tag, a.name, socle)
    return socle


# ============================================================
# KAC MODULES
# ============================================================

def even_verma_simple(a: AlgebraDescriptor, lam: Weight) -> bool:
    """Δ0(λ) is simple: no even positive coroot pairs positively integrally with λ + ρ0."""
    shifted = lam + a.rho0
    for beta in a.even_positive:
        value = coroot_pairing(a, shifted, beta)
        if value.is_integer and value > 0:
            return False
    return True


def _require_kac_algebra(a: AlgebraDescriptor) -> None:
    if a.ranks not in ((1, 1), (1,)) or a.kind not in ("glmn", "osp"):
        raise UnsupportedRankError(f"Kac modules are examined for gl(1|1) and osp(2|2), not {a.name}")


def kac_is_simple(a: AlgebraDescriptor, lam: Weight, config: Config = DEFAULT_CONFIG) -> bool:
    """
    K(λ) is simple iff it has no singular vector below its top. Finite-dimensional
    K(λ) is built directly; when Δ0(λ) is simple K(λ) = Δ(λ) and the search runs over
    the candidate weights.
    """
    _require_kac_algebra(a)
    require_basis(a.basis, lam)
    top = as_wt(lam)
    if finite_dimensional_top(a, lam):
        module = build_kac(a, lam, config)
        weights = [nu for nu in module.weights() if nu != top]
    elif even_verma_simple(a, lam):
        rz = realize(a)
        weights = [xi for xi in candidate_weights(a, top) if xi != top]
        depth = max((band_depth(rz, top, xi) for xi in weights), default=0)
        module = build_verma(a, lam, depth, config)
    else:
        raise UnsupportedError(f"K({lam.render()}) is neither finite dimensional nor a Verma module")
    return not any(singular_vectors(module, nu) for nu in weights)


def composition_factors(module: TruncatedModule, config: Config = DEFAULT_CONFIG) -> SimpleMultiset:
    """Composition factors of a finite-dimensional Kac module by peeling simple characters."""
    a = module.algebra
    _require_kac_algebra(a)
    remaining = dict(module.character())
    found: Dict[Weight, int] = {}
    while remaining:
        xi = min(remaining, key=lambda nu: (module.depth_of(nu), [-Rational(c) for c in nu]))
        mult = remaining[xi]
        label = Weight.of(a.basis, xi)
        simple = simple_quotient(build_kac(a, label, config))
        for nu, d in simple.character().items():
            left = remaining.get(nu, 0) - mult * d
            if left < 0:
                raise OracleError(f"character of L{xi} does not fit inside {module.tag}")
            if left:
                remaining[nu] = left
            else:
                remaining.pop(nu, None)
        found[label] = found.get(label, 0) + mult
    return SimpleMultiset.of(found)


# ============================================================
# b^r-HIGHEST WEIGHTS FOR pe(n)
# ============================================================

def _br_band(rz: Realization) -> Tuple[int, int]:
    odd_low = rz.indices("lowering", parity=1)
    top = sum(-rz.height(rz.basis[y].weight) for y in odd_low)
    even = max((rz.height(rz.basis[x].weight) for x in rz.indices("raising", parity=0)), default=0)
    step = max((-rz.height(rz.basis[y].weight) for y in odd_low), default=0)
    return top + even, step


def br_highest_weight_of_simple_pe(n: int, mu: Weight, config: Config = DEFAULT_CONFIG) -> Weight:
    """
    Weight of the vector of L(μ) annihilated by n0⁺ and by all of g₋₁, i.e. the
    highest weight of L(μ) for the Borel b0 ⊕ g₋₁.
    """
    if n > 3:
        raise UnsupportedRankError(f"b^r-highest weights are extracted for n <= 3, got {n}")
    a = build_algebra("pe", n)
    require_integral(a, mu)
    rz = realize(a)
    band, step = _br_band(rz)
    killers = [x for x in rz.simple_raising() if rz.basis[x].parity == 0]
    killers += rz.indices("lowering", parity=1)
    simple = simple_quotient(build_verma(a, mu, band + step, config))
    found = []
    for nu in simple.weights():
        if simple.depth_of(nu) > band:
            break
        kernel = linalg.kernel(stacked_rows(simple, nu, killers), simple.dim(nu))
        if kernel:
            found.append((nu, len(kernel)))
    if not found:
        raise BandViolationError(f"no b^r-highest vector of L({mu.render()}) within depth {band}")
    if len(found) > 1 or found[0][1] != 1:
        raise OracleError(f"L({mu.render()}) has {sum(d for _, d in found)} b^r-singular vectors")
    return Weight.of(a.basis, found[0][0])


def _cone_up_to(rz: Realization, bound: int) -> List[IntWt]:
    zero = tuple(0 for _ in rz.heights)
    seen = {zero}
    frontier = [zero]
    steps = _steps(rz)
    while frontier:
        nxt = []
        for beta in frontier:
            for s in steps:
                gamma = tuple(b + c for b, c in zip(beta, s))
                if gamma not in seen and _height(rz.heights, gamma) <= bound:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda g: (-_height(rz.heights, g), g))


def lambda_plus_by_inversion(n: int, lam: Weight, config: Config = DEFAULT_CONFIG) -> Weight:
    """
    μ with br_highest_weight_of_simple_pe(μ) = λ. The shift by the full odd sum is
    tried first, then every shift in the positive cone by decreasing depth.
    """
    a = build_algebra("pe", n)
    require_integral(a, lam)
    rz = realize(a)
    band, _ = _br_band(rz)
    full = tuple(sum(s[i] for s in _steps(rz, 1)) for i in range(n))
    order = [full] + [g for g in _cone_up_to(rz, band) if g != full]
    for gamma in order:
        mu = Weight.of(a.basis, shift(as_wt(lam), gamma))
        try:
            bottom = br_highest_weight_of_simple_pe(n, mu, config)
        except BandViolationError:
            continue
        if bottom == lam:
            logger.debug("pe(%d): (%s)^+ = %s", n, lam.render(), mu.render())
            return mu
    raise OracleError(f"no simple module of pe({n}) has b^r-highest weight {lam.render()} within depth {band}")


__all__ = [
    "band_depth",
    "below",
    "br_highest_weight_of_simple_pe",
    "candidate_band",
    "candidate_weights",
    "composition_factors",
    "even_verma_simple",
    "hom_dim_oracle",
    "integral_difference",
    "kac_is_simple",
    "kostant_partition",
    "lambda_plus_by_inversion",
    "singular_layers",
    "singular_vectors",
    "socle_constituents",
    "stacked_rows",
    "verma_embedding_ranks",
    "verma_weight_dim",
]
