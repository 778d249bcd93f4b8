"""
x-homology probes on truncated modules.

For an odd basis vector x with [x, x] = 0 the probe at weight ν is
dim ker(x on M_ν) − rank(x: M_{ν − wt x} → M_ν). A positive value shows
M_x = ker x / xM is non-zero, so x lies in the associated variety of M.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra import AlgebraDescriptor, atypical_roots, is_typical, require_integral
from ..errors import InvalidParameterError, PreconditionError
from ..weights import Weight
from . import linalg
from .highest_weight import band_depth
from .module import TruncatedModule, Wt, as_wt, shift
from .realization import realize

logger = logging.getLogger(__name__)


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class Witness:
    """An odd element and the weight at which its homology is probed."""

    x: int
    weight: Wt
    root: Tuple[int, ...]
    expect_positive: bool
    label: str = ""

    def depths(self, top: Wt, root_weight: Sequence[int], heights: Sequence[int]) -> Tuple[int, int]:
        """Depths below `top` of ν − wt x and ν + wt x, ordered (shallow, deep)."""
        up = shift(self.weight, root_weight, -1)
        down = shift(self.weight, root_weight)
        values = sorted(
            int(sum((a - b) * f for a, b, f in zip(top, w, heights))) for w in (up, down)
        )
        return values[0], values[1]


# ============================================================
# PROBE
# ============================================================

def x_homology_probe(module: TruncatedModule, x: int, nu: Wt) -> int:
    rz = module.realization
    b = rz.basis[x]
    if b.parity != 1:
        raise InvalidParameterError(f"{b.name} is even; probes need an odd element")
    if rz.bracket(x, x):
        raise PreconditionError(f"[{b.name}, {b.name}] is non-zero")
    source = shift(nu, b.weight, -1)
    target = module.target(x, nu)
    for w in (nu, source, target):
        module.require_retained(w)
    dim = module.dim(nu)
    if not dim:
        return 0
    outgoing = module.action(x, nu)
    kernel = dim
    if outgoing is not None:
        kernel -= linalg.rank(linalg.stack([outgoing], dim), dim)
    incoming = module.action(x, source)
    image = 0
    if incoming is not None:
        width = module.dim(source)
        image = linalg.rank(linalg.stack([incoming], width), width)
    value = kernel - image
    logger.debug("probe of %s on %s at %s: ker %d, im %d", b.name, module.tag, nu, kernel, image)
    return value


def witness_depth(a: AlgebraDescriptor, top: Weight, witnesses: Sequence[Witness]) -> int:
    """Smallest truncation depth retaining every weight the witnesses touch."""
    rz = realize(a)
    need = 0
    for w in witnesses:
        _, deep = w.depths(as_wt(top), rz.basis[w.x].weight, rz.heights)
        need = max(need, deep, band_depth(rz, as_wt(top), w.weight))
    return need


# ============================================================
# DESIGNATED WITNESSES
# ============================================================

def _int(w: Weight) -> Tuple[int, ...]:
    return tuple(int(c) for c in w.coeffs)


def osp_odd_order(a: AlgebraDescriptor) -> List[Weight]:
    """Odd negative roots −ε−δ_1, …, −ε−δ_n, −ε+δ_n, …, −ε+δ_1."""
    eps = Weight.unit(a.basis, 0)
    deltas = [Weight.unit(a.basis, 1 + i) for i in range(a.n)]
    return [-(eps + d) for d in deltas] + [-(eps - d) for d in reversed(deltas)]


def verma_osp_witnesses(a: AlgebraDescriptor, lam: Weight) -> List[Witness]:
    """
    For an atypical root β the witness is the raising vector of −α_k = β probed at
    λ + α_{k+1} + … + α_{2n}. A typical λ gets the same construction at every k,
    expected to vanish.
    """
    if a.kind != "osp":
        raise InvalidParameterError(f"osp witnesses need osp(2|2n), not {a.name}")
    require_integral(a, lam)
    rz = realize(a)
    order = osp_odd_order(a)
    atypical = atypical_roots(a, lam)
    if atypical:
        picks = [(order.index(-beta), True) for beta in atypical]
    else:
        picks = [(k, False) for k in range(len(order))]
    out = []
    for k, positive in sorted(picks):
        nu = lam
        for alpha in order[k + 1:]:
            nu = nu + alpha
        root = _int(-order[k])
        out.append(Witness(rz.root_vector(root), as_wt(nu), root, positive, f"k={k + 1}"))
    return out


def costandard_pe_witnesses(a: AlgebraDescriptor, lam: Weight) -> List[Witness]:
    """
    Y_{ε_i+ε_j} probed at the weight of X^{i,j,I} v, where v spans the bottom
    g0-layer of ∇(λ) at λ − Σ_{α ∈ Φ⁺₁} α. For an atypical pair the subset I is Î or
    Î \\ {2ε_i} according to the sign in λ_i − λ_j + j − i = ∓1; a typical λ gets
    both subsets for every pair, expected to vanish.
    """
    if a.kind != "pe":
        raise InvalidParameterError(f"costandard witnesses need pe(n), not {a.name}")
    require_integral(a, lam)
    n = a.n
    rz = realize(a)
    e = [Weight.unit(a.basis, i) for i in range(n)]
    bottom = lam
    for alpha in a.odd_positive:
        bottom = bottom - alpha
    typical = is_typical(a, lam)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            base = [e[s] + e[t] for s in range(i) for t in range(j + 1) if s < t]
            hat = [e[i] + e[t] for t in range(i, j)]
            value = lam[i] - lam[j] + j - i
            cases: List[Tuple[str, List[Weight], bool]] = []
            if value == -1 or typical:
                cases.append(("hat", hat, not typical))
            if value == 1 or typical:
                cases.append(("hat-minus", [r for r in hat if r != e[i] * 2], not typical))
            root = _int(-(e[i] + e[j]))
            for name, subset, positive in cases:
                nu = bottom
                for alpha in base + subset:
                    nu = nu + alpha
                out.append(Witness(rz.root_vector(root), as_wt(nu), root, positive,
                                   f"pair=({i + 1},{j + 1}) I={name}"))
    return out


def verma_pe_witness(a: AlgebraDescriptor, lam: Weight) -> Witness:
    """X_{2ε_n} at the top weight: v spans its kernel and nothing maps onto it."""
    if a.kind != "pe":
        raise InvalidParameterError(f"pe witnesses need pe(n), not {a.name}")
    rz = realize(a)
    root = tuple(2 if k == a.n - 1 else 0 for k in range(a.n))
    return Witness(rz.root_vector(root), as_wt(lam), root, True, "top")


def simple_osp_witness(module: TruncatedModule) -> Optional[Witness]:
    """
    On L(λ) over osp(2|2n) apply Y_1, Y_2, … (roots −(ε−δ_1), …, −(ε−δ_n), −(ε+δ_n), …,
    −(ε+δ_1)) to the top vector while the result is non-zero; the first Y that kills
    the chain is probed at the weight reached. None when the chain never stops.
    """
    a = module.algebra
    if a.kind != "osp":
        raise InvalidParameterError(f"osp witnesses need osp(2|2n), not {a.name}")
    rz = module.realization
    chain = list(reversed(osp_odd_order(a)))
    nu = module.highest_weight
    v = linalg.unit(0)
    for k, lowering in enumerate(chain):
        root = _int(lowering)
        y = rz.root_vector(root)
        tgt = module.target(y, nu)
        image = module.apply(y, nu, v)
        if not image:
            return Witness(y, nu, root, True, f"step={k + 1}")
        nu, v = tgt, image
    return None


__all__ = [
    "Witness",
    "costandard_pe_witnesses",
    "osp_odd_order",
    "simple_osp_witness",
    "verma_osp_witnesses",
    "verma_pe_witness",
    "witness_depth",
    "x_homology_probe",
]
