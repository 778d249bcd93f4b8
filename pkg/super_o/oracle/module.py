"""
Weight-truncated modules with exact generator actions.

A TruncatedModule keeps every weight space whose depth below the highest weight
is at most `depth`, an ordered basis of labels for each, and a rule producing
the matrix of any basis element of g between two retained weight spaces.
Verma-type modules get their rule from PBW straightening; quotients, duals and
simple quotients are derived from a parent module.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Literal, Optional, Sequence, Tuple

from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix

from ..algebra import AlgebraDescriptor, build_algebra, coroot_pairing
from ..config import Config
from ..errors import BandViolationError, OracleError, ResourceCapError, UnsupportedError, UnsupportedRankError
from ..weights import Weight, require_basis
from ..weyl import act, longest_in, weyl_group
from . import linalg
from .linalg import ONE, Echelon, SparseVec
from .realization import Realization, realize

logger = logging.getLogger(__name__)

Wt = Tuple[Rational, ...]
Mono = Tuple[int, ...]
Label = Hashable
ModuleTag = Literal["verma", "super-verma", "opposite-verma", "costandard", "kac", "quotient", "simple"]
Rule = Callable[[int, Wt], Optional[DomainMatrix]]
Subspace = Dict[Wt, Echelon]

DEFAULT_CONFIG = Config()


# ============================================================
# WEIGHT HELPERS
# ============================================================

def as_wt(lam: Weight) -> Wt:
    return tuple(lam.coeffs)


def shift(nu: Wt, delta: Sequence[int], scale: int = 1) -> Wt:
    return tuple(c + scale * d for c, d in zip(nu, delta))


def _qq(value: object) -> object:
    if isinstance(value, int):
        return QQ(value)
    return QQ.from_sympy(value)


# ============================================================
# TYPES
# ============================================================

@dataclass
class TruncatedModule:
    """
    Graded model of a highest-weight (super)module, retained down to `depth`.

    spaces: weight -> ordered basis labels (PBW monomials for induced modules)
    parities: weight -> parity of each basis vector
    """

    algebra: AlgebraDescriptor
    realization: Realization
    highest_weight: Wt
    depth: int
    tag: ModuleTag
    spaces: Dict[Wt, Tuple[Label, ...]]
    parities: Dict[Wt, Tuple[int, ...]]
    rule: Rule = field(repr=False, compare=False)
    lowest: bool = False  # depth measured upward from a lowest weight
    _cache: Dict[Tuple[int, Wt], Optional[DomainMatrix]] = field(default_factory=dict, repr=False, compare=False)

    # ---- weights -------------------------------------------------

    def depth_of(self, nu: Wt) -> int:
        diff = tuple(a - b for a, b in zip(self.highest_weight, nu))
        value = sum(c * f for c, f in zip(diff, self.realization.heights))
        return int(-value if self.lowest else value)

    def retained(self, nu: Wt) -> bool:
        return self.depth_of(nu) <= self.depth

    def weights(self) -> List[Wt]:
        return sorted(self.spaces, key=lambda nu: (self.depth_of(nu), [-c for c in nu]))

    def dim(self, nu: Optional[Wt] = None) -> int:
        if nu is None:
            return sum(len(b) for b in self.spaces.values())
        return len(self.spaces.get(nu, ()))

    def index(self, nu: Wt, label: Label) -> int:
        return self.spaces[nu].index(label)

    def character(self) -> Dict[Wt, int]:
        return {nu: len(b) for nu, b in self.spaces.items() if b}

    # ---- actions -------------------------------------------------

    def target(self, x: int, nu: Wt) -> Wt:
        return shift(nu, self.realization.basis[x].weight)

    def require_retained(self, nu: Wt) -> None:
        if not self.retained(nu):
            raise BandViolationError(
                f"weight {nu} lies at depth {self.depth_of(nu)} outside the retained band {self.depth}"
            )

    def action(self, x: int, nu: Wt) -> Optional[DomainMatrix]:
        """Matrix of basis element x from M_nu to M_{nu + wt x}; None when either side is zero."""
        tgt = self.target(x, nu)
        self.require_retained(nu)
        self.require_retained(tgt)
        if not self.dim(nu) or not self.dim(tgt):
            return None
        key = (x, nu)
        if key not in self._cache:
            self._cache[key] = self.rule(x, nu)
        return self._cache[key]

    def apply(self, x: int, nu: Wt, v: SparseVec) -> SparseVec:
        if not v:
            return {}
        m = self.action(x, nu)
        return {} if m is None else linalg.apply(m, v)

    def image_columns(self, x: int, nu: Wt) -> List[SparseVec]:
        m = self.action(x, nu)
        if m is None:
            return [{} for _ in range(self.dim(nu))]
        return linalg.columns(m)

    def apply_monomial(self, mono: Mono, nu: Wt, v: SparseVec) -> Tuple[Wt, SparseVec]:
        """y_1 ... y_k applied to v in M_nu (y_k first)."""
        for y in reversed(mono):
            v = self.apply(y, nu, v)
            nu = self.target(y, nu)
        return nu, v

    def parity(self, nu: Wt) -> int:
        ps = set(self.parities.get(nu, ()))
        assert len(ps) <= 1, "weight spaces are parity-homogeneous"
        return ps.pop() if ps else 0


# ============================================================
# PBW STRAIGHTENING
# ============================================================

class _Straightener:
    """
    Action of g on U(c) ⊗ C_top where c is spanned by the `creators` (a nilpotent
    subalgebra complementary to the Borel that fixes the generating vector).
    """

    def __init__(self, rz: Realization, top: Wt, creators: FrozenSet[int]) -> None:
        self.rz = rz
        self.top = top
        self.creators = creators
        self.memo: Dict[Tuple[int, Mono], Dict[Mono, object]] = {}

    def key(self, y: int) -> Tuple[int, int, Tuple[int, ...]]:
        b = self.rz.basis[y]
        return (1 - b.parity, abs(self.rz.height(b.weight)), b.weight)

    def weight_of(self, mono: Mono) -> Wt:
        nu = self.top
        for y in mono:
            nu = shift(nu, self.rz.basis[y].weight)
        return nu

    def _sign(self, x: int, y: int) -> int:
        return -1 if self.rz.basis[x].parity and self.rz.basis[y].parity else 1

    def _bracket_on(self, x: int, y: int, rest: Mono, scale: object) -> Dict[Mono, object]:
        out: Dict[Mono, object] = {}
        for k, c in self.rz.bracket(x, y).items():
            linalg.add_into(out, self.act(k, rest), scale * QQ(c))
        return out

    def act(self, x: int, mono: Mono) -> Dict[Mono, object]:
        key = (x, mono)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        b = self.rz.basis[x]
        if b.role == "cartan":
            value = _qq(self.weight_of(mono)[b.coordinate])
            out: Dict[Mono, object] = {mono: value} if value else {}
        elif not mono:
            out = {(x,): ONE} if x in self.creators else {}
        else:
            y, rest = mono[0], mono[1:]
            if x in self.creators and x == y and b.parity == 1:
                out = self._bracket_on(x, x, rest, QQ(1, 2))
            elif x in self.creators and self.key(x) <= self.key(y):
                out = {(x,) + mono: ONE}
            else:
                moved = self.act(x, rest)
                out = {}
                sign = QQ(self._sign(x, y))
                for m, c in moved.items():
                    linalg.add_into(out, self.act(y, m), sign * c)
                linalg.add_into(out, self._bracket_on(x, y, rest, ONE))
        self.memo[key] = out
        return out


def _monomials(rz: Realization, creators: Sequence[int], straight: _Straightener,
               depth: int, cap: int) -> List[Mono]:
    ordered = sorted(creators, key=straight.key)
    heights = [abs(rz.height(rz.basis[y].weight)) for y in ordered]
    out: List[Mono] = []

    def grow(pos: int, budget: int, prefix: Mono) -> None:
        if pos == len(ordered):
            out.append(prefix)
            if len(out) > cap:
                raise ResourceCapError(f"truncated module exceeds {cap} basis vectors")
            return
        y, h = ordered[pos], heights[pos]
        limit = 1 if rz.basis[y].parity else budget // h
        for e in range(min(limit, budget // h) + 1):
            grow(pos + 1, budget - e * h, prefix + (y,) * e)

    grow(0, depth, ())
    return out


def _induced(a: AlgebraDescriptor, top: Wt, depth: int, tag: ModuleTag, creator_role: str,
             config: Config) -> TruncatedModule:
    if depth < 0:
        raise BandViolationError(f"depth must be non-negative, got {depth}")
    if depth > config.max_depth:
        raise ResourceCapError(f"depth {depth} exceeds the configured maximum {config.max_depth}")
    rz = realize(a)
    creators = frozenset(rz.indices(creator_role))  # type: ignore[arg-type]
    straight = _Straightener(rz, top, creators)
    spaces: Dict[Wt, List[Mono]] = {}
    for mono in _monomials(rz, sorted(creators), straight, depth, config.max_basis_size):
        spaces.setdefault(straight.weight_of(mono), []).append(mono)
    ordered = {nu: tuple(sorted(ms, key=lambda m: [straight.key(y) for y in m])) for nu, ms in spaces.items()}
    parities = {
        nu: tuple(sum(rz.basis[y].parity for y in m) % 2 for m in ms) for nu, ms in ordered.items()
    }

    positions = {nu: {m: i for i, m in enumerate(ms)} for nu, ms in ordered.items()}

    def rule(x: int, nu: Wt) -> Optional[DomainMatrix]:
        tgt = shift(nu, rz.basis[x].weight)
        cols: List[SparseVec] = []
        for mono in ordered[nu]:
            col: SparseVec = {}
            for m, c in straight.act(x, mono).items():
                col[positions[tgt][m]] = c
            cols.append(col)
        return linalg.matrix_from_columns(cols, len(ordered[tgt]))

    module = TruncatedModule(
        algebra=a, realization=rz, highest_weight=top, depth=depth, tag=tag,
        spaces=ordered, parities=parities, rule=rule, lowest=(creator_role == "raising"),
    )
    logger.debug("built %s over %s at %s: %d weights, dim %d, depth %d",
                 tag, a.name, top, len(ordered), module.dim(), depth)
    if config.check_relations:
        check_relations(module)
    return module


# ============================================================
# BUILDERS
# ============================================================

def build_verma(a: AlgebraDescriptor, lam: Weight, depth: int,
                config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    """Δ(λ) (Δ0(λ) when `a` is gl(n)) retained to the given depth."""
    require_basis(a.basis, lam)
    tag: ModuleTag = "super-verma" if a.is_super else "verma"
    return _induced(a, as_wt(lam), depth, tag, "lowering", config)


def build_verma_even(n: int, lam: Weight, depth: int, config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    if n > 4:
        raise UnsupportedRankError(f"even Verma modules are built for n <= 4, got {n}")
    return build_verma(build_algebra("gl", n), lam, depth, config)


def build_verma_pe(n: int, lam: Weight, depth: int, config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    if n > 3:
        raise UnsupportedRankError(f"pe Verma supermodules are built for n <= 3, got {n}")
    return build_verma(build_algebra("pe", n), lam, depth, config)


def build_opposite_verma(a: AlgebraDescriptor, lam: Weight, depth: int,
                         config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    """U(g) ⊗ C_{-λ} induced from the opposite Borel; generated by a lowest weight vector."""
    require_basis(a.basis, lam)
    return _induced(a, as_wt(-lam), depth, "opposite-verma", "raising", config)


def build_costandard(a: AlgebraDescriptor, lam: Weight, depth: int,
                     config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    """
    ∇(λ) as the dual of the opposite Verma module with the super antipode action
    (x·f)(m) = -(-1)^{|x||f|} f(x·m).
    """
    opposite = build_opposite_verma(a, lam, depth, replace_checks(config, False))
    rz = opposite.realization
    spaces = {tuple(-c for c in nu): labels for nu, labels in opposite.spaces.items()}
    parities = {tuple(-c for c in nu): ps for nu, ps in opposite.parities.items()}

    def rule(x: int, nu: Wt) -> Optional[DomainMatrix]:
        b = rz.basis[x]
        src = tuple(-c for c in shift(nu, b.weight))
        dst = tuple(-c for c in nu)
        cols = opposite.image_columns(x, src)
        rows = len(opposite.spaces[src])
        data: Dict[int, Dict[int, object]] = {}
        par = opposite.parities[dst]
        for i, col in enumerate(cols):
            for j, v in col.items():
                sign = -1 if b.parity and par[j] else 1
                data.setdefault(i, {})[j] = -sign * v
        return DomainMatrix(data, (rows, len(par)), QQ)

    module = TruncatedModule(
        algebra=a, realization=rz, highest_weight=as_wt(lam), depth=depth, tag="costandard",
        spaces=spaces, parities=parities, rule=rule,
    )
    if config.check_relations:
        check_relations(module)
    return module


def build_costandard_pe(n: int, lam: Weight, depth: int, config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    if n > 2:
        raise UnsupportedRankError(f"pe costandard supermodules are built for n <= 2, got {n}")
    return build_costandard(build_algebra("pe", n), lam, depth, config)


def replace_checks(config: Config, enabled: bool) -> Config:
    return config.with_overrides(check_relations=enabled)


def kac_depth(a: AlgebraDescriptor, lam: Weight) -> int:
    """Depth of the lowest weight of K(λ) for g0-dominant integral λ."""
    rz = realize(a)
    lowest = act(a, longest_in(weyl_group(a)), lam)
    even = rz.height(tuple(int(c) for c in (lam - lowest).coeffs))
    odd = sum(-rz.height(rz.basis[y].weight) for y in rz.indices("lowering", parity=1))
    return int(even + odd)


def finite_dimensional_top(a: AlgebraDescriptor, lam: Weight) -> bool:
    """L0(λ) is finite dimensional: λ pairs to a non-negative integer with every simple even coroot."""
    for alpha in a.simple_even:
        value = coroot_pairing(a, lam, alpha)
        if not value.is_integer or value < 0:
            return False
    return True


def build_kac(a: AlgebraDescriptor, lam: Weight, config: Config = DEFAULT_CONFIG) -> TruncatedModule:
    """
    K(λ) = Ind L0(λ) for λ with L0(λ) finite dimensional, as the quotient of Δ(λ) by
    the submodule generated by the vectors f_α^{⟨λ,α∨⟩+1} v (α simple even).
    """
    if a.kind not in ("glmn", "osp") or a.ranks not in ((1, 1), (1,)):
        raise UnsupportedRankError(f"Kac modules are built for gl(1|1) and osp(2|2), not {a.name}")
    if not finite_dimensional_top(a, lam):
        raise UnsupportedError(f"L0({lam.render()}) is infinite dimensional over {a.name}")
    depth = kac_depth(a, lam)
    verma = build_verma(a, lam, depth, config)
    rz = verma.realization
    top = as_wt(lam)
    gens: List[Tuple[Wt, SparseVec]] = []
    for alpha in a.simple_even:
        f = rz.root_vector(tuple(-int(c) for c in alpha.coeffs))
        k = int(coroot_pairing(a, lam, alpha)) + 1
        nu = top
        for _ in range(k):
            nu = verma.target(f, nu)
        if verma.retained(nu) and verma.dim(nu):
            gens.append((nu, linalg.unit(verma.index(nu, (f,) * k))))
    kac = quotient(verma, submodule_generated(verma, gens), tag="kac")
    logger.debug("Kac module K(%s) over %s has dimension %d", lam.render(), a.name, kac.dim())
    return kac


# ============================================================
# RELATION GATE
# ============================================================

def relation_generators(rz: Realization) -> List[int]:
    return sorted(set(rz.indices("cartan")) | set(rz.simple_raising()) | set(rz.simple_lowering()))


def check_relations(module: TruncatedModule) -> int:
    """
    Verify [u,v]·b = u·(v·b) - (-1)^{|u||v|} v·(u·b) on every retained weight space
    for all pairs of generators. Returns the number of checks; raises OracleError.
    """
    rz = module.realization
    gens = relation_generators(rz)
    checked = 0
    for nu in module.weights():
        for u in gens:
            for v in gens:
                wu, wv = rz.basis[u].weight, rz.basis[v].weight
                mids = (shift(nu, wu), shift(nu, wv), shift(shift(nu, wu), wv))
                if not all(module.retained(m) for m in mids):
                    continue
                sign = QQ(-1 if rz.basis[u].parity and rz.basis[v].parity else 1)
                bracket = rz.bracket(u, v)
                for j in range(module.dim(nu)):
                    e = linalg.unit(j)
                    lhs: SparseVec = {}
                    for k, c in bracket.items():
                        linalg.add_into(lhs, module.apply(k, nu, e), QQ(c))
                    rhs = module.apply(u, mids[1], module.apply(v, nu, e))
                    linalg.add_into(rhs, module.apply(v, mids[0], module.apply(u, nu, e)), -sign)
                    linalg.add_into(lhs, rhs, -ONE)
                    if lhs:
                        raise OracleError(
                            f"relation [{rz.basis[u].name},{rz.basis[v].name}] fails on {module.tag} "
                            f"at weight {nu}"
                        )
                    checked += 1
    logger.debug("relation gate on %s: %d checks passed", module.tag, checked)
    return checked


# ============================================================
# SUBMODULES AND QUOTIENTS
# ============================================================

def submodule_generated(module: TruncatedModule, vectors: Iterable[Tuple[Wt, SparseVec]]) -> Subspace:
    """
    U(g)·vectors intersected with the retained band: closure under the raising
    generators first, then under the lowering generators.
    """
    rz = module.realization
    pending: Dict[Wt, List[SparseVec]] = {}
    for nu, v in vectors:
        module.require_retained(nu)
        if v:
            pending.setdefault(nu, []).append(v)

    # U(n+) part: deepest first so every contribution arrives before it is processed
    raised: Dict[Wt, List[SparseVec]] = {}
    while pending:
        nu = max(pending, key=module.depth_of)
        ech = Echelon(pending.pop(nu), module.dim(nu))
        if not ech.rank:
            continue
        raised.setdefault(nu, []).extend(ech.rows)
        for x in rz.simple_raising():
            tgt = module.target(x, nu)
            if module.depth_of(tgt) < 0 or not module.dim(tgt):
                continue
            images = [module.apply(x, nu, r) for r in ech.rows]
            pending.setdefault(tgt, []).extend(i for i in images if i)

    # U(n-) part, shallowest first
    out: Subspace = {}
    queue = dict(raised)
    while queue:
        nu = min(queue, key=module.depth_of)
        ech = Echelon(queue.pop(nu), module.dim(nu))
        if not ech.rank:
            continue
        out[nu] = ech
        for y in rz.simple_lowering():
            tgt = module.target(y, nu)
            if not module.retained(tgt) or not module.dim(tgt):
                continue
            images = [module.apply(y, nu, r) for r in ech.rows]
            queue.setdefault(tgt, []).extend(i for i in images if i)
    return out


def quotient(module: TruncatedModule, sub: Subspace, tag: ModuleTag = "quotient") -> TruncatedModule:
    """M/S with induced actions; basis labels are the parent labels on non-pivot coordinates."""
    def free(nu: Wt) -> Tuple[int, ...]:
        ech = sub.get(nu)
        return ech.free if ech is not None else tuple(range(module.dim(nu)))

    spaces: Dict[Wt, Tuple[Label, ...]] = {}
    parities: Dict[Wt, Tuple[int, ...]] = {}
    for nu, labels in module.spaces.items():
        keep = free(nu)
        if keep:
            spaces[nu] = tuple(labels[j] for j in keep)
            parities[nu] = tuple(module.parities[nu][j] for j in keep)

    def rule(x: int, nu: Wt) -> Optional[DomainMatrix]:
        tgt = module.target(x, nu)
        ech = sub.get(tgt)
        cols = []
        for j in free(nu):
            image = module.apply(x, nu, linalg.unit(j))
            if ech is not None:
                cols.append(ech.project(image))
            else:
                cols.append(image)
        return linalg.matrix_from_columns(cols, len(spaces[tgt]))

    return TruncatedModule(
        algebra=module.algebra, realization=module.realization, highest_weight=module.highest_weight,
        depth=module.depth, tag=tag, spaces=spaces, parities=parities, rule=rule,
        lowest=module.lowest,
    )


# ============================================================
# RADICAL AND SIMPLE QUOTIENT
# ============================================================

def radical(module: TruncatedModule) -> Subspace:
    """
    Maximal proper submodule of a highest-weight module, weight by weight from the top:
    rad_ν = {v : x·v ∈ rad_{ν+wt x} for every raising generator x}.
    """
    rz = module.realization
    top = module.highest_weight
    assert module.dim(top) == 1, "radical needs a one-dimensional top weight space"
    rad: Subspace = {}
    for nu in module.weights():
        if nu == top:
            continue
        dim = module.dim(nu)
        rows: List[SparseVec] = []
        for x in rz.simple_raising():
            tgt = module.target(x, nu)
            if module.depth_of(tgt) < 0 or not module.dim(tgt):
                continue
            ech = rad.get(tgt)
            cols = module.image_columns(x, nu)
            projected = [ech.project(c) if ech is not None else c for c in cols]
            width = len(ech.free) if ech is not None else module.dim(tgt)
            by_row: List[SparseVec] = [{} for _ in range(width)]
            for j, col in enumerate(projected):
                for i, c in col.items():
                    by_row[i][j] = c
            rows.extend(r for r in by_row if r)
        basis = linalg.kernel(rows, dim)
        if basis:
            rad[nu] = Echelon(basis, dim)
    return rad


def simple_quotient(module: TruncatedModule) -> TruncatedModule:
    """L(λ) retained to the module's depth."""
    return quotient(module, radical(module), tag="simple")


def weight_of_label(module: TruncatedModule, mono: Mono) -> Wt:
    nu = module.highest_weight
    for y in mono:
        nu = module.target(y, nu)
    return nu


def odd_layer(module: TruncatedModule, mono: Mono) -> int:
    """Number of odd factors of a PBW monomial (its Λ-layer)."""
    return sum(module.realization.basis[y].parity for y in mono)


__all__ = [
    "TruncatedModule",
    "Wt",
    "as_wt",
    "build_costandard",
    "build_costandard_pe",
    "build_kac",
    "build_opposite_verma",
    "build_verma",
    "build_verma_even",
    "build_verma_pe",
    "check_relations",
    "finite_dimensional_top",
    "kac_depth",
    "odd_layer",
    "quotient",
    "radical",
    "shift",
    "simple_quotient",
    "submodule_generated",
]
