from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .errors import InvalidParameterError
from .weights import Weight

Entries = Union[Mapping[Weight, int], Iterable[Tuple[Weight, int]]]


def _order(w: Weight) -> Tuple[object, ...]:
    return tuple(-c for c in w.coeffs)


@dataclass(frozen=True)
class SimpleMultiset:
    """
    Finite direct sum of simple modules, written as highest weight -> multiplicity.
    Keys are stored in a canonical order (lexicographically decreasing coordinates).
    """

    entries: Tuple[Tuple[Weight, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for w, mult in self.entries:
            if mult < 1:
                raise InvalidParameterError(f"multiplicity of L({w.render()}) must be positive, got {mult}")
            if w in seen:
                raise InvalidParameterError(f"L({w.render()}) listed twice")
            seen.add(w)
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: _order(e[0]))))

    @classmethod
    def of(cls, items: Entries) -> "SimpleMultiset":
        pairs = items.items() if isinstance(items, Mapping) else items
        merged: Dict[Weight, int] = {}
        for w, mult in pairs:
            merged[w] = merged.get(w, 0) + int(mult)
        return cls(tuple((w, m) for w, m in merged.items() if m))

    @classmethod
    def single(cls, w: Weight, mult: int = 1) -> "SimpleMultiset":
        return cls(((w, mult),))

    @classmethod
    def empty(cls) -> "SimpleMultiset":
        return cls(())

    def multiplicity(self, w: Weight) -> int:
        for key, mult in self.entries:
            if key == w:
                return mult
        return 0

    def weights(self) -> Tuple[Weight, ...]:
        return tuple(w for w, _ in self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def is_simple(self) -> bool:
        return self.total == 1

    def relabel(self, fn: Callable[[Weight], Weight]) -> "SimpleMultiset":
        return SimpleMultiset.of((fn(w), m) for w, m in self.entries)

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def render(self) -> List[Dict[str, object]]:
        return [{"weight": w.render(), "mult": m} for w, m in self.entries]

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return " ⊕ ".join(f"L({w.render()})" + (f"^{m}" if m > 1 else "") for w, m in self.entries)
