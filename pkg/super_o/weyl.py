from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Literal, Sequence, Tuple

import networkx as nx
import numpy as np
from sympy import Rational

from .algebra import AlgebraDescriptor, coroot_pairing, require_integral
from .errors import InvalidParameterError, UnsupportedError
from .graphs import to_dot
from .weights import Weight, require_basis

logger = logging.getLogger(__name__)

Family = Literal["A", "C"]
Side = Literal["left", "right"]
Which = Literal["shortest", "longest"]
Extreme = Literal["dominant", "antidominant"]
_Root = Tuple[Tuple[int, int], ...]


# ============================================================
# ELEMENTS
# ============================================================

@dataclass(frozen=True)
class WeylElement:
    """
    Signed permutation of 1..n in one-line notation: w(i) = window[i-1].
    Type A windows carry no signs. Products compose right to left.
    """

    family: Family
    window: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.window)
        if sorted(abs(x) for x in self.window) != list(range(1, n + 1)):
            raise InvalidParameterError(f"not a signed permutation: {self.window}")
        if self.family == "A" and any(x < 0 for x in self.window):
            raise InvalidParameterError(f"type A window cannot carry signs: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        image = self.window[abs(i) - 1]
        return image if i > 0 else -image

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.family != self.family or other.n != self.n:
            raise InvalidParameterError("cannot compose elements of different groups")
        return WeylElement(self.family, tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "WeylElement":
        out = [0] * self.n
        for i, image in enumerate(self.window, start=1):
            out[abs(image) - 1] = i if image > 0 else -i
        return WeylElement(self.family, tuple(out))

    def one_line(self) -> str:
        if self.family == "A" and self.n < 10:
            return "".join(str(x) for x in self.window)
        return ",".join(str(x) for x in self.window)

    def __str__(self) -> str:
        return self.one_line()


def identity(family: Family, n: int) -> WeylElement:
    return WeylElement(family, tuple(range(1, n + 1)))


def simple_indices(family: Family, n: int) -> Tuple[int, ...]:
    return tuple(range(1, n if family == "A" else n + 1))


def simple_reflection(family: Family, n: int, i: int) -> WeylElement:
    if i not in simple_indices(family, n):
        raise InvalidParameterError(f"no simple reflection s{i} in {family}({n})")
    window = list(range(1, n + 1))
    if family == "C" and i == n:
        window[n - 1] = -n
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return WeylElement(family, tuple(window))


def from_word(family: Family, n: int, word: Iterable[int]) -> WeylElement:
    w = identity(family, n)
    for i in word:
        w = w * simple_reflection(family, n, i)
    return w


def parse_element(family: Family, text: str) -> WeylElement:
    """`231` (type A, single digits) or comma-separated signed windows like `2,-1`."""
    text = text.strip()
    try:
        if "," in text:
            window = tuple(int(p) for p in text.split(","))
        else:
            window = tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidParameterError(f"malformed permutation {text!r}") from None
    return WeylElement(family, window)


# ============================================================
# LENGTH, DESCENTS, REDUCED WORDS
# ============================================================

@lru_cache(maxsize=None)
def _positive_roots(family: Family, n: int) -> Tuple[_Root, ...]:
    """Positive roots as (index, coefficient) pairs; positive = first nonzero > 0."""
    roots: List[_Root] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(((i, 1), (j, -1)))
            if family == "C":
                roots.append(((i, 1), (j, 1)))
        if family == "C":
            roots.append(((i, 2),))
    return tuple(roots)


def _image_is_positive(w: WeylElement, root: _Root) -> bool:
    image = sorted((abs(w(i)), c if w(i) > 0 else -c) for i, c in root)
    return image[0][1] > 0


@lru_cache(maxsize=None)
def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(not _image_is_positive(w, r) for r in _positive_roots(w.family, w.n))


def longest_element(family: Family, n: int) -> WeylElement:
    if family == "A":
        return WeylElement("A", tuple(range(n, 0, -1)))
    return WeylElement("C", tuple(-i for i in range(1, n + 1)))


def descents(w: WeylElement, side: Side = "right") -> FrozenSet[int]:
    ell = length(w)
    out = set()
    for i in simple_indices(w.family, w.n):
        s = simple_reflection(w.family, w.n, i)
        other = w * s if side == "right" else s * w
        if length(other) < ell:
            out.add(i)
    return frozenset(out)


def reduced_word(w: WeylElement) -> Tuple[int, ...]:
    """Indices i_1..i_k with w = s_{i_1} ... s_{i_k}, k = length(w)."""
    word: List[int] = []
    while length(w) > 0:
        i = min(descents(w, "right"))
        word.append(i)
        w = w * simple_reflection(w.family, w.n, i)
    return tuple(reversed(word))


def is_bigrassmannian(w: WeylElement) -> bool:
    if w.family != "A":
        raise UnsupportedError("bigrassmannian elements are only defined here for type A")
    return len(descents(w, "left")) == 1 and len(descents(w, "right")) == 1


# ============================================================
# PARABOLIC SUBGROUPS AND COSETS
# ============================================================

@dataclass(frozen=True)
class ParabolicSubgroup:
    """Standard parabolic subgroup generated by the simple reflections in `generators`."""

    family: Family
    n: int
    generators: FrozenSet[int]

    def __post_init__(self) -> None:
        allowed = set(simple_indices(self.family, self.n))
        if not set(self.generators) <= allowed:
            raise InvalidParameterError(
                f"generators {sorted(self.generators)} not simple in {self.family}({self.n})"
            )
        object.__setattr__(self, "generators", frozenset(self.generators))

    def render(self) -> str:
        return ",".join(f"s{i}" for i in sorted(self.generators))


def full_group(family: Family, n: int) -> ParabolicSubgroup:
    return ParabolicSubgroup(family, n, frozenset(simple_indices(family, n)))


def borel(family: Family, n: int) -> ParabolicSubgroup:
    return ParabolicSubgroup(family, n, frozenset())


def weyl_group(a: AlgebraDescriptor) -> ParabolicSubgroup:
    """W of the even part; for gl(m|n) the block subgroup S_m x S_n of S_{m+n}."""
    gens = set(simple_indices(a.weyl_family, a.weyl_rank))
    if a.kind == "glmn":
        gens.discard(a.ranks[0])
    return ParabolicSubgroup(a.weyl_family, a.weyl_rank, frozenset(gens))


def parse_levi(a: AlgebraDescriptor, text: str) -> ParabolicSubgroup:
    """`""` is the Borel; `s1,s2` (or `1 2`) names the simple reflections of the Levi."""
    tokens = [t for t in text.replace(",", " ").split() if t]
    try:
        gens = frozenset(int(t[1:] if t.lower().startswith("s") else t) for t in tokens)
    except ValueError:
        raise InvalidParameterError(f"malformed Levi {text!r}") from None
    parabolic = ParabolicSubgroup(a.weyl_family, a.weyl_rank, gens)
    if not gens <= weyl_group(a).generators:
        raise InvalidParameterError(f"Levi {text!r} is not inside the Weyl group of {a.name}")
    return parabolic


@lru_cache(maxsize=None)
def elements(group: ParabolicSubgroup) -> Tuple[WeylElement, ...]:
    start = identity(group.family, group.n)
    gens = [simple_reflection(group.family, group.n, i) for i in sorted(group.generators)]
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            nxt = w * s
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    logger.debug("enumerated %d elements of %s", len(seen), group)
    return tuple(sorted(seen, key=lambda w: (length(w), w.window)))


def longest_in(group: ParabolicSubgroup) -> WeylElement:
    w = identity(group.family, group.n)
    climbing = True
    while climbing:
        climbing = False
        for i in sorted(group.generators):
            nxt = w * simple_reflection(group.family, group.n, i)
            if length(nxt) > length(w):
                w, climbing = nxt, True
    return w


def coset_rep(w: WeylElement, group: ParabolicSubgroup, which: Which = "shortest",
              side: Side = "left") -> WeylElement:
    """Extreme element of w W_P (side="left") or W_P w (side="right")."""
    moving = True
    while moving:
        moving = False
        for i in sorted(group.generators):
            s = simple_reflection(w.family, w.n, i)
            nxt = w * s if side == "left" else s * w
            if (length(nxt) < length(w)) == (which == "shortest"):
                w, moving = nxt, True
    return w


def coset_reps(ambient: ParabolicSubgroup, group: ParabolicSubgroup,
               which: Which = "shortest", side: Side = "left") -> List[WeylElement]:
    reps = {coset_rep(w, group, which, side) for w in elements(ambient)}
    return sorted(reps, key=lambda w: (length(w), w.window))


# ============================================================
# BRUHAT ORDER
# ============================================================

@lru_cache(maxsize=None)
def bruhat_lower_set(y: WeylElement) -> FrozenSet[WeylElement]:
    """All subword products of a reduced word of y, i.e. the interval [e, y]."""
    current = {identity(y.family, y.n)}
    for i in reduced_word(y):
        s = simple_reflection(y.family, y.n, i)
        current |= {w * s for w in current}
    return frozenset(current)


def _rank_matrix(w: WeylElement) -> np.ndarray:
    n = w.n
    perm = np.zeros((n, n), dtype=np.int64)
    for a, image in enumerate(w.window):
        perm[a, image - 1] = 1
    tails = np.cumsum(perm[:, ::-1], axis=1)[:, ::-1]
    return np.cumsum(tails, axis=0)


def bruhat_leq(x: WeylElement, y: WeylElement, method: str = "subword") -> bool:
    if x.family != y.family or x.n != y.n:
        raise InvalidParameterError("Bruhat comparison needs elements of one group")
    if method == "subword":
        return x in bruhat_lower_set(y)
    if method == "rank":
        if x.family != "A":
            raise UnsupportedError("the rank-matrix criterion is implemented for type A only")
        return bool(np.all(_rank_matrix(x) <= _rank_matrix(y)))
    if method == "cover":
        return nx.has_path(bruhat_graph(x.family, x.n), x, y)
    raise InvalidParameterError(f"Unsupported Bruhat method: {method}")


def bruhat_interval(x: WeylElement, y: WeylElement) -> List[WeylElement]:
    """[x, y] in the Bruhat order, sorted by length."""
    if not bruhat_leq(x, y):
        return []
    found = [z for z in bruhat_lower_set(y) if bruhat_leq(x, z)]
    return sorted(found, key=lambda z: (length(z), z.window))


def _root_reflection(family: Family, n: int, root: _Root) -> WeylElement:
    window = list(range(1, n + 1))
    if len(root) == 1:
        (i, _), = root
        window[i - 1] = -i
    else:
        (i, _), (j, cj) = root
        if cj < 0:
            window[i - 1], window[j - 1] = j, i
        else:
            window[i - 1], window[j - 1] = -j, -i
    return WeylElement(family, tuple(window))


@lru_cache(maxsize=None)
def reflections(family: Family, n: int) -> Tuple[WeylElement, ...]:
    return tuple(_root_reflection(family, n, r) for r in _positive_roots(family, n))


@lru_cache(maxsize=None)
def bruhat_graph(family: Family, n: int) -> nx.DiGraph:
    """Covering relations x -> x t of the Bruhat order."""
    graph = nx.DiGraph()
    group = full_group(family, n)
    graph.add_nodes_from(elements(group))
    for x in elements(group):
        for t in reflections(family, n):
            xt = x * t
            if length(xt) == length(x) + 1:
                graph.add_edge(x, xt)
    return graph


def bruhat_dot(family: Family, n: int) -> str:
    return to_dot(bruhat_graph(family, n), f"bruhat_{family}{n}", label=lambda w: w.one_line())


# ============================================================
# DOT ACTION AND ORBITS
# ============================================================

def _check_member(a: AlgebraDescriptor, w: WeylElement) -> None:
    if w.family != a.weyl_family or w.n != a.weyl_rank:
        raise InvalidParameterError(f"{w} is not in the Weyl group of {a.name}")
    if a.kind == "glmn":
        m = a.ranks[0]
        if any((i <= m) != (abs(w(i)) <= m) for i in range(1, w.n + 1)):
            raise InvalidParameterError(f"{w} does not preserve the blocks of {a.name}")


def act(a: AlgebraDescriptor, w: WeylElement, lam: Weight) -> Weight:
    """Linear action on the coordinates the Weyl group moves."""
    _check_member(a, w)
    require_basis(a.basis, lam)
    off = a.weyl_offset
    coords = list(lam.coeffs)
    moved = list(coords)
    for i in range(1, w.n + 1):
        image = w(i)
        moved[off + abs(image) - 1] = coords[off + i - 1] if image > 0 else -coords[off + i - 1]
    return Weight(lam.basis, tuple(moved))


def dot(a: AlgebraDescriptor, w: WeylElement, lam: Weight) -> Weight:
    return act(a, w, lam + a.rho0) - a.rho0


def orbit(a: AlgebraDescriptor, lam: Weight) -> List[Weight]:
    found = {dot(a, w, lam) for w in elements(weyl_group(a))}
    return sorted(found, key=lambda x: x.sort_key())


def _extreme_coords(a: AlgebraDescriptor, shifted: Weight, which: Extreme) -> Weight:
    off = a.weyl_offset
    coords = list(shifted.coeffs)
    blocks: List[Sequence[int]]
    if a.kind == "glmn":
        m = a.ranks[0]
        blocks = [range(0, m), range(m, a.basis.rank)]
    else:
        blocks = [range(off, a.basis.rank)]
    for block in blocks:
        values = [coords[k] for k in block]
        if a.weyl_family == "C":
            mags = sorted((abs(v) for v in values), reverse=True)
            values = mags if which == "dominant" else [-v for v in mags]
        else:
            values = sorted(values, reverse=(which == "dominant"))
        for k, v in zip(block, values):
            coords[k] = v
    return Weight(shifted.basis, tuple(coords))


def orbit_extreme(a: AlgebraDescriptor, lam: Weight,
                  which: Extreme = "dominant") -> Tuple[Weight, WeylElement]:
    """The dominant or antidominant element of W·λ with the minimal-length w, w·extreme = λ."""
    require_integral(a, lam)
    extreme = _extreme_coords(a, lam + a.rho0, which) - a.rho0
    for w in elements(weyl_group(a)):
        if dot(a, w, extreme) == lam:
            return extreme, w
    raise AssertionError(f"no witness for {lam} in the orbit of {extreme}")


def stabilizer(a: AlgebraDescriptor, mu: Weight) -> ParabolicSubgroup:
    """Standard parabolic fixing the dominant representative of W·μ under the dot action."""
    dominant, _ = orbit_extreme(a, mu, "dominant")
    group = weyl_group(a)
    fixed = frozenset(
        i for i in group.generators
        if dot(a, simple_reflection(group.family, group.n, i), dominant) == dominant
    )
    return ParabolicSubgroup(group.family, group.n, fixed)


def reflection(a: AlgebraDescriptor, beta: Weight) -> WeylElement:
    """s_β for an even root β of a, as a signed permutation."""
    off = a.weyl_offset
    window = []
    for k in range(a.weyl_rank):
        unit = Weight.unit(a.basis, off + k)
        image = unit - beta * coroot_pairing(a, unit, beta)
        (pos, coeff), = [(p, c) for p, c in enumerate(image.coeffs) if c != 0]
        window.append(int(coeff) * (pos - off + 1))
    return WeylElement(a.weyl_family, tuple(window))


def levi_roots(a: AlgebraDescriptor, group: ParabolicSubgroup) -> List[Weight]:
    members = set(elements(group))
    return [b for b in a.even_positive if reflection(a, b) in members]


def in_parabolic_cone(a: AlgebraDescriptor, lam: Weight, group: ParabolicSubgroup) -> bool:
    """λ ∈ Σ⁺_p: non-negative integer pairing with every positive root of the Levi."""
    for beta in levi_roots(a, group):
        value = coroot_pairing(a, lam, beta)
        if not value.is_integer or value < 0:
            return False
    return True


def negate_longest(a: AlgebraDescriptor, lam: Weight) -> Weight:
    """-w0 λ with w0 longest in the Weyl group of a (S_m x S_n for gl(m|n))."""
    return -act(a, longest_in(weyl_group(a)), lam)


def dual_parabolic(a: AlgebraDescriptor, group: ParabolicSubgroup) -> ParabolicSubgroup:
    """Image of the Levi's simple roots under -w0."""
    if group.family == "C":
        return group
    if a.kind == "glmn":
        m, total = a.ranks[0], group.n
        images = frozenset(m - i if i < m else m + total - i for i in group.generators)
    else:
        images = frozenset(group.n - i for i in group.generators)
    return ParabolicSubgroup("A", group.n, images)


# ============================================================
# INTEGRAL WEYL GROUPS AND THE pe BLOCK RELATION
# ============================================================

@dataclass(frozen=True)
class IntegralWeylGroup:
    """Reflection subgroup W_[λ] given by its positive roots."""

    roots: Tuple[Weight, ...]

    @property
    def longest_length(self) -> int:
        return len(self.roots)

    def contains_roots(self, roots: Iterable[Weight]) -> bool:
        return set(roots) <= set(self.roots)


def integral_weyl_group(a: AlgebraDescriptor, lam: Weight) -> IntegralWeylGroup:
    if a.kind not in ("gl", "pe"):
        raise UnsupportedError("integral Weyl groups are only computed for gl(n) and pe(n)")
    require_basis(a.basis, lam)
    return IntegralWeylGroup(
        tuple(b for b in a.even_positive if coroot_pairing(a, lam, b).is_integer)
    )


def _require_pe(a: AlgebraDescriptor, *weights: Weight) -> None:
    if a.kind != "pe":
        raise InvalidParameterError(f"the block relation is defined for pe(n), not {a.name}")
    require_integral(a, *weights)


def pe_block_normal_form(a: AlgebraDescriptor, lam: Weight) -> Tuple[Tuple[Rational, ...], Tuple[Rational, ...]]:
    """
    Invariant of λ ~ λ ± 2ε_k and λ ~ w·λ (w ∈ W_[λ]): the class mod 1 of each entry of
    λ + ρ0 by position, together with the sorted residues of the entries mod 2.
    """
    _require_pe(a, lam)
    shifted = (lam + a.rho0).coeffs
    return tuple(c % 1 for c in shifted), tuple(sorted(c % 2 for c in shifted))


def pe_block_equivalent(a: AlgebraDescriptor, lam: Weight, nu: Weight) -> bool:
    _require_pe(a, lam, nu)
    return pe_block_normal_form(a, lam) == pe_block_normal_form(a, nu)


def pe_block_closure(a: AlgebraDescriptor, box: int) -> Dict[Tuple[int, ...], int]:
    """
    Connected components of the generating moves on integral weights with |coords| <= box.
    Returns node -> component index.
    """
    if a.kind != "pe":
        raise InvalidParameterError(f"the block relation is defined for pe(n), not {a.name}")
    n = a.n
    rho0 = [int(c) for c in a.rho0.coeffs]
    graph = nx.Graph()
    nodes = list(product(range(-box, box + 1), repeat=n))
    graph.add_nodes_from(nodes)
    inside = set(nodes)
    for node in nodes:
        for k in range(n):
            for step in (2, -2):
                shifted = node[:k] + (node[k] + step,) + node[k + 1:]
                if shifted in inside:
                    graph.add_edge(node, shifted)
        shifted_rho = [x + r for x, r in zip(node, rho0)]
        for i in range(n - 1):
            swapped = list(shifted_rho)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            image = tuple(x - r for x, r in zip(swapped, rho0))
            if image in inside:
                graph.add_edge(node, image)
    components: Dict[Tuple[int, ...], int] = {}
    for index, comp in enumerate(nx.connected_components(graph)):
        for node in comp:
            components[node] = index
    logger.debug("pe(%d) block closure in box %d: %d components", n, box, index + 1)
    return components
