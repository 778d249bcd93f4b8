from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Literal, Optional, Tuple

from sympy import Rational

from .errors import InvalidParameterError, NotIntegralError, UnsupportedError
from .weights import BasisTag, Weight, parse_coeffs, require_basis

logger = logging.getLogger(__name__)

AlgebraKind = Literal["gl", "glmn", "pe", "osp"]


# ============================================================
# DESCRIPTOR
# ============================================================

@dataclass(frozen=True)
class AlgebraDescriptor:
    """
    Root data of gl(n), gl(m|n), pe(n) or osp(2|2n) in the fixed distinguished Borel.

    ranks is (n,) except for gl(m|n) where it is (m, n).
    rho0 is the integrally shifted half sum of even positive roots.
    """

    kind: AlgebraKind
    ranks: Tuple[int, ...]
    basis: BasisTag
    even_positive: Tuple[Weight, ...]
    odd_positive: Tuple[Weight, ...]
    odd_negative: Tuple[Weight, ...]
    simple_even: Tuple[Weight, ...]
    rho0: Weight
    rho: Optional[Weight]
    eta: Optional[Weight]
    dim_g0: int
    dim_h: int

    @property
    def n(self) -> int:
        return self.ranks[-1]

    @property
    def name(self) -> str:
        if self.kind == "gl":
            return f"gl({self.n})"
        if self.kind == "pe":
            return f"pe({self.n})"
        if self.kind == "osp":
            return f"osp(2|{2 * self.n})"
        return f"gl({self.ranks[0]}|{self.ranks[1]})"

    @property
    def is_super(self) -> bool:
        return self.kind != "gl"

    @property
    def weyl_offset(self) -> int:
        """First coordinate the Weyl group acts on (osp fixes the ε coordinate)."""
        return 1 if self.kind == "osp" else 0

    @property
    def weyl_family(self) -> Literal["A", "C"]:
        return "C" if self.kind == "osp" else "A"

    @property
    def weyl_rank(self) -> int:
        return self.basis.rank - self.weyl_offset

    @property
    def depth_functional(self) -> Tuple[int, ...]:
        """Height functional, strictly positive on every positive root."""
        if self.kind in ("gl", "pe"):
            return tuple(self.n - i for i in range(self.n))
        if self.kind == "osp":
            return (self.n + 1, *(self.n - i for i in range(self.n)))
        m, n = self.ranks
        return (*(m + n - i for i in range(m)), *(n - j for j in range(n)))

    def zero(self) -> Weight:
        return Weight.zero(self.basis)

    def weight(self, *coeffs: object) -> Weight:
        return Weight.of(self.basis, coeffs)  # type: ignore[arg-type]


def _eps(basis: BasisTag, i: int) -> Weight:
    return Weight.unit(basis, i)


def _shifted_rho(basis: BasisTag, block: range, top: int) -> List[int]:
    out = [0] * basis.rank
    for pos, k in enumerate(block):
        out[k] = top - pos
    return out


def _half_sum(basis: BasisTag, roots: Tuple[Weight, ...]) -> Weight:
    total = Weight.zero(basis)
    for r in roots:
        total = total + r
    return total * Rational(1, 2)


@lru_cache(maxsize=None)
def build_algebra(
    kind: str, m: int, n: Optional[int] = None, allow_equal_ranks: bool = False
) -> AlgebraDescriptor:
    """
    kind is one of "gl", "glmn", "pe", "osp"; `m` is the rank (n of gl(n), pe(n),
    osp(2|2n)); for "glmn" the ranks are (m, n) with m > n >= 1, or m = n when
    allow_equal_ranks is set.
    """
    if kind == "glmn":
        if n is None or m < 1 or n < 1:
            raise InvalidParameterError(f"gl(m|n) needs ranks >= 1, got ({m}, {n})")
        if m < n or (m == n and not allow_equal_ranks):
            raise InvalidParameterError(
                f"gl({m}|{n}) requires m > n (pass allow_equal_ranks for m = n)"
            )
        return _build_glmn(m, n)
    if n is not None:
        raise InvalidParameterError(f"{kind} takes a single rank")
    if m < 1:
        raise InvalidParameterError(f"rank must be >= 1, got {m}")
    if kind == "gl":
        return _build_gl(m, "gl")
    if kind == "pe":
        return _build_gl(m, "pe")
    if kind == "osp":
        return _build_osp(m)
    raise InvalidParameterError(f"Unsupported algebra kind: {kind}")


def _build_gl(n: int, kind: AlgebraKind) -> AlgebraDescriptor:
    basis = BasisTag.epsilon(n)
    e = [_eps(basis, i) for i in range(n)]
    even = tuple(e[i] - e[j] for i in range(n) for j in range(i + 1, n))
    simple = tuple(e[i] - e[i + 1] for i in range(n - 1))
    odd_pos: Tuple[Weight, ...] = ()
    odd_neg: Tuple[Weight, ...] = ()
    eta = None
    if kind == "pe":
        odd_pos = tuple(e[i] + e[j] for i in range(n) for j in range(i, n))
        odd_neg = tuple(-(e[i] + e[j]) for i in range(n) for j in range(i + 1, n))
        eta = Weight.of(basis, [1 - n] * n)
    rho0 = Weight.of(basis, _shifted_rho(basis, range(n), n - 1))
    return AlgebraDescriptor(
        kind=kind, ranks=(n,), basis=basis, even_positive=even, odd_positive=odd_pos,
        odd_negative=odd_neg, simple_even=simple, rho0=rho0, rho=None, eta=eta,
        dim_g0=n * n, dim_h=n,
    )


def _build_osp(n: int) -> AlgebraDescriptor:
    basis = BasisTag.epsilon_delta(1, n)
    eps = _eps(basis, 0)
    d = [_eps(basis, 1 + i) for i in range(n)]
    even = tuple(
        [d[i] - d[j] for i in range(n) for j in range(i + 1, n)]
        + [d[i] + d[j] for i in range(n) for j in range(i + 1, n)]
        + [d[i] * 2 for i in range(n)]
    )
    simple = tuple([d[i] - d[i + 1] for i in range(n - 1)] + [d[n - 1] * 2])
    odd_pos = tuple([eps - d[p] for p in range(n)] + [eps + d[p] for p in range(n)])
    odd_neg = tuple(-r for r in odd_pos)
    rho0 = Weight.of(basis, [0, *(n - i for i in range(n))])
    rho = rho0 - eps * n
    return AlgebraDescriptor(
        kind="osp", ranks=(n,), basis=basis, even_positive=even, odd_positive=odd_pos,
        odd_negative=odd_neg, simple_even=simple, rho0=rho0, rho=rho, eta=None,
        dim_g0=1 + n * (2 * n + 1), dim_h=n + 1,
    )


def _build_glmn(m: int, n: int) -> AlgebraDescriptor:
    basis = BasisTag.epsilon_delta(m, n)
    e = [_eps(basis, i) for i in range(m)]
    d = [_eps(basis, m + j) for j in range(n)]
    even = tuple(
        [e[i] - e[j] for i in range(m) for j in range(i + 1, m)]
        + [d[i] - d[j] for i in range(n) for j in range(i + 1, n)]
    )
    simple = tuple([e[i] - e[i + 1] for i in range(m - 1)] + [d[j] - d[j + 1] for j in range(n - 1)])
    odd_pos = tuple(e[i] - d[j] for i in range(m) for j in range(n))
    odd_neg = tuple(-r for r in odd_pos)
    shifted = _shifted_rho(basis, range(m), m - 1)
    for pos, k in enumerate(range(m, m + n)):
        shifted[k] = n - 1 - pos
    rho0 = Weight.of(basis, shifted)
    rho = _half_sum(basis, even) - _half_sum(basis, odd_pos)
    return AlgebraDescriptor(
        kind="glmn", ranks=(m, n), basis=basis, even_positive=even, odd_positive=odd_pos,
        odd_negative=odd_neg, simple_even=simple, rho0=rho0, rho=rho, eta=None,
        dim_g0=m * m + n * n, dim_h=m + n,
    )


# ============================================================
# NAMES AND LITERALS
# ============================================================

_ALGEBRA_RE = re.compile(r"^\s*(pe|gl|osp)\s*\(\s*(\d+)\s*(?:\|\s*(\d+)\s*)?\)\s*$")


def parse_algebra(text: str) -> AlgebraDescriptor:
    match = _ALGEBRA_RE.match(text)
    if not match:
        raise InvalidParameterError(f"unrecognised algebra {text!r}")
    family, first, second = match.group(1), int(match.group(2)), match.group(3)
    if family == "pe" and second is None:
        return build_algebra("pe", first)
    if family == "gl" and second is None:
        return build_algebra("gl", first)
    if family == "gl" and second is not None:
        return build_algebra("glmn", first, int(second), allow_equal_ranks=True)
    if family == "osp" and second is not None and first == 2:
        size = int(second)
        if size < 2 or size % 2:
            raise InvalidParameterError(f"osp(2|2n) needs an even positive 2n, got {size}")
        return build_algebra("osp", size // 2)
    raise InvalidParameterError(f"unrecognised algebra {text!r}")


def render_algebra(a: AlgebraDescriptor) -> str:
    return a.name


def parse_weight(text: str, a: Optional[AlgebraDescriptor] = None) -> Weight:
    """
    Accepts `pe(3): 2,0,-1` or, when `a` is given, the bare `2,0,-1`.
    """
    if ":" in text:
        prefix, body = text.split(":", 1)
        declared = parse_algebra(prefix)
        if a is not None and declared.basis != a.basis:
            raise InvalidParameterError(f"weight declared for {declared.name}, expected {a.name}")
        return parse_coeffs(body, declared.basis)
    if a is None:
        raise InvalidParameterError(f"weight {text!r} needs an algebra prefix")
    return parse_coeffs(text, a.basis)


def render_weight(a: AlgebraDescriptor, lam: Weight) -> str:
    return f"{render_algebra(a)}: {lam.render()}"


# ============================================================
# FORMS AND DISTINGUISHED WEIGHTS
# ============================================================

def bilinear(a: AlgebraDescriptor, lam: Weight, mu: Weight) -> Rational:
    require_basis(a.basis, lam, mu)
    total = Rational(0)
    for k, (x, y) in enumerate(zip(lam.coeffs, mu.coeffs)):
        sign = -1 if a.basis.parity_of(k) else 1
        total += sign * x * y
    return total


def coroot_pairing(a: AlgebraDescriptor, lam: Weight, beta: Weight) -> Rational:
    return 2 * bilinear(a, lam, beta) / bilinear(a, beta, beta)


def depth(a: AlgebraDescriptor, beta: Weight) -> Rational:
    require_basis(a.basis, beta)
    return sum((c * f for c, f in zip(beta.coeffs, a.depth_functional)), Rational(0))


def omega(k: int, n: int) -> Weight:
    if not 1 <= k <= n:
        raise InvalidParameterError(f"omega needs 1 <= k <= n, got k={k}, n={n}")
    return Weight.of(BasisTag.epsilon(n), [1 if i < k else 0 for i in range(n)])


def eta(n: int) -> Weight:
    eta_ = build_algebra("pe", n).eta
    assert eta_ is not None
    return eta_


def rho0(a: AlgebraDescriptor) -> Weight:
    return a.rho0


def rho(a: AlgebraDescriptor) -> Weight:
    if a.rho is None:
        raise UnsupportedError(f"no super Weyl vector is used for {a.name}")
    return a.rho


# ============================================================
# INTEGRALITY, DOMINANCE, TYPICALITY
# ============================================================

def is_integral(a: AlgebraDescriptor, lam: Weight) -> bool:
    """Integral as a g0-weight: integer pairing with every even coroot."""
    require_basis(a.basis, lam)
    return all(coroot_pairing(a, lam, b).is_integer for b in a.even_positive)


def require_integral(a: AlgebraDescriptor, *weights: Weight) -> None:
    for lam in weights:
        if not is_integral(a, lam):
            raise NotIntegralError(f"{lam.render()} is not integral for {a.name}")


def is_dominant(a: AlgebraDescriptor, lam: Weight) -> bool:
    require_integral(a, lam)
    shifted = lam + a.rho0
    return all(coroot_pairing(a, shifted, b) >= 0 for b in a.even_positive)


def is_antidominant(a: AlgebraDescriptor, lam: Weight) -> bool:
    require_integral(a, lam)
    shifted = lam + a.rho0
    return all(coroot_pairing(a, shifted, b) <= 0 for b in a.even_positive)


def pe_atypical_pairs(lam: Weight) -> List[Tuple[int, int]]:
    """Ordered pairs (i, j), 1-based, with λ_i - λ_j + j - i - 1 = 0."""
    n = len(lam)
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(n)
        if i != j and lam[i] - lam[j] + j - i - 1 == 0
    ]


def atypical_roots(a: AlgebraDescriptor, lam: Weight) -> List[Weight]:
    shifted = lam + rho(a)
    return [alpha for alpha in a.odd_positive if bilinear(a, shifted, alpha) == 0]


def is_typical(a: AlgebraDescriptor, lam: Weight) -> bool:
    require_basis(a.basis, lam)
    if a.kind == "gl":
        raise UnsupportedError("typicality is undefined for the purely even gl(n)")
    if a.kind == "pe":
        return not pe_atypical_pairs(lam)
    return not atypical_roots(a, lam)
