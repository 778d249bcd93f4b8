"""
Exact sparse linear algebra over QQ on top of sympy's DomainMatrix.

Vectors are sparse dicts index -> QQ element; matrices are DomainMatrix in
sparse (SDM) format. Zero-dimensional cases are handled here so callers never
build empty matrices.
"""
from __future__ import annotations

from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseVec = Dict[int, Any]

ONE = QQ(1)
ZERO = QQ(0)


def vec(entries: Mapping[int, Any]) -> SparseVec:
    return {i: QQ.convert(v) for i, v in entries.items() if v}


def unit(i: int) -> SparseVec:
    return {i: ONE}


def add_into(target: SparseVec, source: Mapping[int, Any], scale: Any = ONE) -> None:
    for i, v in source.items():
        total = target.get(i, ZERO) + scale * v
        if total:
            target[i] = total
        else:
            target.pop(i, None)


def matrix_from_rows(rows: Sequence[Mapping[int, Any]], ncols: int) -> DomainMatrix:
    data: Dict[int, Dict[int, Any]] = {}
    for i, row in enumerate(rows):
        entries = {j: v for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def matrix_from_columns(columns: Sequence[Mapping[int, Any]], nrows: int) -> DomainMatrix:
    data: Dict[int, Dict[int, Any]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                data.setdefault(i, {})[j] = v
    return DomainMatrix(data, (nrows, len(columns)), QQ)


def columns(m: DomainMatrix) -> List[SparseVec]:
    nrows, ncols = m.shape
    out: List[SparseVec] = [{} for _ in range(ncols)]
    for i, row in m.to_sdm().items():
        for j, v in row.items():
            out[j][i] = v
    return out


def apply(m: DomainMatrix, v: Mapping[int, Any]) -> SparseVec:
    out: SparseVec = {}
    for i, row in m.to_sdm().items():
        total = ZERO
        for j, a in row.items():
            x = v.get(j)
            if x:
                total += a * x
        if total:
            out[i] = total
    return out


def stack(mats: Iterable[DomainMatrix], ncols: int) -> List[SparseVec]:
    """Rows of the vertical concatenation."""
    rows: List[SparseVec] = []
    for m in mats:
        assert m.shape[1] == ncols, "stacked matrices must share the column count"
        sdm = m.to_sdm()
        rows.extend(dict(sdm.get(i, {})) for i in range(m.shape[0]))
    return rows


def kernel(rows: Sequence[Mapping[int, Any]], ncols: int) -> List[SparseVec]:
    """Basis of {v : row·v = 0 for every row}."""
    if ncols == 0:
        return []
    nonzero = [r for r in rows if r]
    if not nonzero:
        return [unit(i) for i in range(ncols)]
    m = matrix_from_rows(nonzero, ncols)
    if m.rank() == ncols:
        return []
    null = m.nullspace()
    return [{j: v for j, v in enumerate(row) if v} for row in null.to_list()]


def rank(rows: Sequence[Mapping[int, Any]], ncols: int) -> int:
    nonzero = [r for r in rows if r]
    if ncols == 0 or not nonzero:
        return 0
    return matrix_from_rows(nonzero, ncols).rank()


class Echelon:
    """
    Reduced row echelon basis of a subspace of QQ^dim; supports reduction modulo the
    subspace and the induced projection onto the non-pivot coordinates.
    """

    def __init__(self, vectors: Sequence[Mapping[int, Any]], dim: int) -> None:
        self.dim = dim
        nonzero = [v for v in vectors if v]
        if not nonzero:
            self.rows: List[SparseVec] = []
            self.pivots: Tuple[int, ...] = ()
        else:
            reduced, pivots = matrix_from_rows(nonzero, dim).rref()
            sdm = reduced.to_sdm()
            self.rows = [dict(sdm.get(i, {})) for i in range(len(pivots))]
            self.pivots = tuple(pivots)
        pivot_set = set(self.pivots)
        self.free: Tuple[int, ...] = tuple(j for j in range(dim) if j not in pivot_set)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Mapping[int, Any]) -> SparseVec:
        out = dict(v)
        for row, p in zip(self.rows, self.pivots):
            c = out.get(p)
            if c:
                add_into(out, row, -c)
        return out

    def contains(self, v: Mapping[int, Any]) -> bool:
        return not self.reduce(v)

    def project(self, v: Mapping[int, Any]) -> SparseVec:
        """Coordinates of v + S in the basis of free coordinates."""
        reduced = self.reduce(v)
        return {k: reduced[j] for k, j in enumerate(self.free) if j in reduced}

    def extend(self, vectors: Sequence[Mapping[int, Any]]) -> "Echelon":
        return Echelon([*self.rows, *vectors], self.dim)
