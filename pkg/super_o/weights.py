from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Tuple, Union

from sympy import Rational, SympifyError

from .errors import BasisMismatchError, InvalidParameterError, NotIntegralError

Scalar = Union[int, str, Rational]
BasisKind = Literal["eps", "epsdelta"]


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class BasisTag:
    """
    Coordinate system of h*: `eps` is the ε_1..ε_n basis used for gl(n) and pe(n),
    `epsdelta` is ε_1..ε_m followed by δ_1..δ_n (gl(m|n); osp(2|2n) has m = 1).
    """

    kind: BasisKind
    m: int
    n: int = 0

    @staticmethod
    def epsilon(n: int) -> "BasisTag":
        return BasisTag("eps", n, 0)

    @staticmethod
    def epsilon_delta(m: int, n: int) -> "BasisTag":
        return BasisTag("epsdelta", m, n)

    @property
    def rank(self) -> int:
        return self.m + self.n

    def parity_of(self, index: int) -> int:
        """Which block coordinate `index` belongs to: 0 for ε, 1 for δ."""
        return 0 if self.kind == "eps" or index < self.m else 1


def _rational(value: Scalar) -> Rational:
    try:
        out = Rational(value)
    except (TypeError, ValueError, SympifyError):
        raise InvalidParameterError(f"not an exact rational: {value!r}") from None
    if not out.is_Rational:
        raise InvalidParameterError(f"not an exact rational: {value!r}")
    return out


@dataclass(frozen=True)
class Weight:
    basis: BasisTag
    coeffs: Tuple[Rational, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_rational(c) for c in self.coeffs)
        if len(coeffs) != self.basis.rank:
            raise InvalidParameterError(
                f"expected {self.basis.rank} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, basis: BasisTag, coeffs: Iterable[Scalar]) -> "Weight":
        return cls(basis, tuple(coeffs))  # type: ignore[arg-type]

    @classmethod
    def zero(cls, basis: BasisTag) -> "Weight":
        return cls.of(basis, [0] * basis.rank)

    @classmethod
    def unit(cls, basis: BasisTag, index: int) -> "Weight":
        return cls.of(basis, [1 if k == index else 0 for k in range(basis.rank)])

    # arithmetic
    def _check(self, other: "Weight") -> None:
        if not isinstance(other, Weight):
            raise TypeError(f"expected Weight, got {type(other).__name__}")
        if other.basis != self.basis:
            raise BasisMismatchError(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(self.basis, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: Scalar) -> "Weight":
        s = _rational(scalar)
        return Weight(self.basis, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, index: int) -> Rational:
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    # views
    @property
    def eps_part(self) -> Tuple[Rational, ...]:
        return self.coeffs[: self.basis.m]

    @property
    def delta_part(self) -> Tuple[Rational, ...]:
        return self.coeffs[self.basis.m:]

    def is_lattice(self) -> bool:
        return all(c.is_integer for c in self.coeffs)

    def as_ints(self) -> Tuple[int, ...]:
        if not self.is_lattice():
            raise NotIntegralError(f"weight {self.render()} has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    def sort_key(self) -> Tuple[Rational, ...]:
        return self.coeffs

    def render(self) -> str:
        if self.basis.kind == "eps":
            return ",".join(str(c) for c in self.coeffs)
        eps = ",".join(str(c) for c in self.eps_part)
        delta = ",".join(str(c) for c in self.delta_part)
        return f"{eps} | {delta}"

    def __str__(self) -> str:
        return self.render()


# ============================================================
# LITERALS
# ============================================================

def _split_coeffs(text: str) -> Sequence[str]:
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise InvalidParameterError(f"empty coefficient in {text!r}")
    return parts


def parse_coeffs(text: str, basis: BasisTag) -> Weight:
    """
    Parse `2,0,-1` (ε basis) or `1 | 2,0` (ε part before the bar, δ part after).
    """
    text = text.strip()
    if basis.kind == "eps":
        if "|" in text:
            raise InvalidParameterError(f"unexpected '|' in ε-basis weight {text!r}")
        return Weight.of(basis, _split_coeffs(text))
    if text.count("|") != 1:
        raise InvalidParameterError(f"expected exactly one '|' in {text!r}")
    eps, delta = text.split("|")
    eps_c, delta_c = _split_coeffs(eps), _split_coeffs(delta)
    if len(eps_c) != basis.m or len(delta_c) != basis.n:
        raise InvalidParameterError(
            f"expected {basis.m} | {basis.n} coefficients in {text!r}"
        )
    return Weight.of(basis, [*eps_c, *delta_c])


def require_basis(basis: BasisTag, *weights: Weight) -> None:
    for w in weights:
        if w.basis != basis:
            raise BasisMismatchError(f"weight {w.render()} is not in basis {basis}")
