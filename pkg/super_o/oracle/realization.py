"""
Matrix realizations and structure constants.

Each supported algebra is realized inside gl(N) or gl(N|N'); brackets are
super-commutators of integer numpy matrices, decomposed back onto the chosen
basis by reading one pivot entry per basis element (supports are disjoint)
and then checked for exact reconstruction.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np

from ..algebra import AlgebraDescriptor
from ..errors import OracleError, UnsupportedError

logger = logging.getLogger(__name__)

Wt = Tuple[int, ...]
Role = Literal["cartan", "raising", "lowering"]


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class BasisVector:
    name: str
    weight: Wt
    parity: int
    role: Role
    coordinate: Optional[int] = None  # weight coordinate measured by a Cartan element


@dataclass(frozen=True)
class Realization:
    algebra: AlgebraDescriptor
    basis: Tuple[BasisVector, ...]
    brackets: Dict[Tuple[int, int], Dict[int, int]]
    heights: Tuple[int, ...]

    def bracket(self, i: int, j: int) -> Dict[int, int]:
        return self.brackets.get((i, j), {})

    def index(self, name: str) -> int:
        for k, b in enumerate(self.basis):
            if b.name == name:
                return k
        raise KeyError(name)

    def root_vector(self, weight: Wt) -> int:
        for k, b in enumerate(self.basis):
            if b.role != "cartan" and b.weight == weight:
                return k
        raise KeyError(weight)

    def height(self, weight: Wt) -> int:
        return sum(c * f for c, f in zip(weight, self.heights))

    def indices(self, role: Role, parity: Optional[int] = None) -> List[int]:
        return [
            k for k, b in enumerate(self.basis)
            if b.role == role and (parity is None or b.parity == parity)
        ]

    def simple_raising(self) -> List[int]:
        """Raising generators: even simple root vectors and every odd raising vector."""
        simple = {tuple(int(c) for c in r.coeffs) for r in self.algebra.simple_even}
        return [
            k for k, b in enumerate(self.basis)
            if b.role == "raising" and (b.parity == 1 or b.weight in simple)
        ]

    def simple_lowering(self) -> List[int]:
        simple = {tuple(-int(c) for c in r.coeffs) for r in self.algebra.simple_even}
        return [
            k for k, b in enumerate(self.basis)
            if b.role == "lowering" and (b.parity == 1 or b.weight in simple)
        ]


# ============================================================
# MATRIX CONSTRUCTIONS
# ============================================================

_Entry = Tuple[int, int, int]


def _mat(size: int, entries: List[_Entry]) -> np.ndarray:
    out = np.zeros((size, size), dtype=np.int64)
    for r, c, v in entries:
        out[r, c] += v
    return out


def _gl_matrices(m: int, n: int) -> List[Tuple[str, np.ndarray, int, Optional[int]]]:
    size = m + n
    out = []
    for a in range(size):
        for b in range(size):
            parity = int((a < m) != (b < m))
            coord = a if a == b else None
            out.append((f"E{a + 1}.{b + 1}", _mat(size, [(a, b, 1)]), parity, coord))
    return out


def _pe_matrices(n: int) -> List[Tuple[str, np.ndarray, int, Optional[int]]]:
    size = 2 * n
    out = []
    for i in range(n):
        out.append((f"H{i + 1}", _mat(size, [(i, i, 1), (n + i, n + i, -1)]), 0, i))
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append((f"E{i + 1}.{j + 1}", _mat(size, [(i, j, 1), (n + j, n + i, -1)]), 0, None))
    for i in range(n):
        out.append((f"X{i + 1}.{i + 1}", _mat(size, [(i, n + i, 1)]), 1, None))
        for j in range(i + 1, n):
            out.append((f"X{i + 1}.{j + 1}", _mat(size, [(i, n + j, 1), (j, n + i, 1)]), 1, None))
            out.append((f"Y{i + 1}.{j + 1}", _mat(size, [(n + i, j, 1), (n + j, i, -1)]), 1, None))
    return out


def _osp_matrices(n: int) -> List[Tuple[str, np.ndarray, int, Optional[int]]]:
    """
    Rows/columns ordered (1, 2 | first symplectic half, second half). Odd elements
    are B (2 x 2n, free) with C = J_sp^{-1} B^t J_2 attached.
    """
    size = 2 + 2 * n
    out = [("Heps", _mat(size, [(0, 0, 1), (1, 1, -1)]), 0, 0)]
    for i in range(n):
        out.append((f"H{i + 1}", _mat(size, [(2 + i, 2 + i, 1), (2 + n + i, 2 + n + i, -1)]), 0, 1 + i))
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append((f"A{i + 1}.{j + 1}",
                            _mat(size, [(2 + i, 2 + j, 1), (2 + n + j, 2 + n + i, -1)]), 0, None))
        out.append((f"B{i + 1}.{i + 1}", _mat(size, [(2 + i, 2 + n + i, 1)]), 0, None))
        out.append((f"C{i + 1}.{i + 1}", _mat(size, [(2 + n + i, 2 + i, 1)]), 0, None))
        for j in range(i + 1, n):
            out.append((f"B{i + 1}.{j + 1}",
                        _mat(size, [(2 + i, 2 + n + j, 1), (2 + j, 2 + n + i, 1)]), 0, None))
            out.append((f"C{i + 1}.{j + 1}",
                        _mat(size, [(2 + n + i, 2 + j, 1), (2 + n + j, 2 + i, 1)]), 0, None))
    for r in range(2):
        for k in range(2 * n):
            if k < n:
                row, sign = n + k, 1
            else:
                row, sign = k - n, -1
            out.append((f"P{r + 1}.{k + 1}",
                        _mat(size, [(r, 2 + k, 1), (2 + row, 1 - r, sign)]), 1, None))
    return out


def _supercommutator(x: np.ndarray, px: int, y: np.ndarray, py: int) -> np.ndarray:
    sign = -1 if px and py else 1
    return x @ y - sign * (y @ x)


def _decompose(target: np.ndarray, mats: List[np.ndarray], pivots: List[Tuple[int, int]]) -> Dict[int, int]:
    coeffs: Dict[int, int] = {}
    rebuilt = np.zeros_like(target)
    for k, (mat, piv) in enumerate(zip(mats, pivots)):
        value = int(target[piv])
        if value:
            c, rem = divmod(value, int(mat[piv]))
            if rem:
                raise OracleError("non-integral structure constant")
            coeffs[k] = c
            rebuilt += c * mat
    if not np.array_equal(rebuilt, target):
        raise OracleError("matrix realization is not closed under the bracket")
    return coeffs


@lru_cache(maxsize=None)
def realize(a: AlgebraDescriptor) -> Realization:
    if a.kind == "gl":
        raw = _gl_matrices(a.n, 0)
    elif a.kind == "glmn":
        raw = _gl_matrices(*a.ranks)
    elif a.kind == "pe":
        raw = _pe_matrices(a.n)
    elif a.kind == "osp":
        raw = _osp_matrices(a.n)
    else:
        raise UnsupportedError(f"no realization for {a.name}")

    mats = [m for _, m, _, _ in raw]
    pivots = [tuple(int(x) for x in np.argwhere(m != 0)[0]) for m in mats]
    rank = a.basis.rank
    cartan = {coord: k for k, (_, _, _, coord) in enumerate(raw) if coord is not None}
    if sorted(cartan) != list(range(rank)):
        raise OracleError(f"Cartan subalgebra of {a.name} is incomplete")

    heights = tuple(int(f) for f in a.depth_functional)
    basis: List[BasisVector] = []
    for k, (name, mat, parity, coord) in enumerate(raw):
        weight = []
        for c in range(rank):
            h = mats[cartan[c]]
            image = _supercommutator(h, 0, mat, parity)
            ratio = _decompose(image, [mat], [pivots[k]]) if image.any() else {}
            weight.append(ratio.get(0, 0))
        wt = tuple(weight)
        if coord is not None:
            role: Role = "cartan"
        else:
            height = sum(c * f for c, f in zip(wt, heights))
            if height == 0:
                raise OracleError(f"{name} has zero height in {a.name}")
            role = "raising" if height > 0 else "lowering"
        basis.append(BasisVector(name, wt, parity, role, coord))

    brackets: Dict[Tuple[int, int], Dict[int, int]] = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            image = _supercommutator(mats[i], bi.parity, mats[j], bj.parity)
            if image.any():
                brackets[(i, j)] = _decompose(image, mats, pivots)
    logger.debug("realized %s: %d basis vectors, %d nonzero brackets", a.name, len(basis), len(brackets))
    return Realization(a, tuple(basis), brackets, heights)
