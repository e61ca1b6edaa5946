"""
Exact linear algebra over Q on sparse rows.

Rows are dicts column -> Fraction with no zero values. RowEchelon is fed
one row at a time, which is how the graded relation spaces are built.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]
SparseRow = Dict[int, Fraction]


def to_sparse(values: Sequence[Number]) -> SparseRow:
    return {j: Fraction(x) for j, x in enumerate(values) if x}


def to_dense(row: SparseRow, ncols: int) -> Tuple[Fraction, ...]:
    return tuple(row.get(j, Fraction(0)) for j in range(ncols))


def _axpy(target: SparseRow, q: Fraction, source: SparseRow):
    # target -= q * source, in place
    for j, x in source.items():
        value = target.get(j, 0) - q * x
        if value:
            target[j] = value
        else:
            target.pop(j, None)


class RowEchelon:
    """Incrementally maintained echelon basis of a row space over Q."""

    def __init__(self):
        self._rows: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Remainder of row after eliminating every pivot column."""
        out = dict(row)
        for p in sorted(self._rows):
            q = out.get(p)
            if q:
                _axpy(out, q, self._rows[p])
        return out

    def add(self, row: SparseRow) -> bool:
        """Insert a row; True if it raised the rank."""
        rem = self.reduce(row)
        if not rem:
            return False
        p = min(rem)
        lead = rem[p]
        self._rows[p] = {j: x / lead for j, x in rem.items()}
        return True

    def extend(self, rows: Iterable[SparseRow]) -> int:
        return sum(1 for row in rows if self.add(row))

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def copy(self) -> "RowEchelon":
        other = RowEchelon()
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    def reduced_rows(self) -> Dict[int, SparseRow]:
        """Fully reduced echelon form: each pivot column is a unit vector."""
        rows = {p: dict(r) for p, r in self._rows.items()}
        for p in sorted(rows, reverse=True):
            for other in rows:
                if other < p:
                    q = rows[other].get(p)
                    if q:
                        _axpy(rows[other], q, rows[p])
        return rows

    def nonpivot_columns(self, ncols: int) -> List[int]:
        return [j for j in range(ncols) if j not in self._rows]


def qrank(matrix: Sequence[Sequence[Number]]) -> int:
    ech = RowEchelon()
    return ech.extend(to_sparse(row) for row in matrix)


def qkernel(matrix: Sequence[Sequence[Number]], ncols: Optional[int] = None) -> List[Tuple[Fraction, ...]]:
    """
    Basis of {x : M x = 0}, one vector per free column.

    Args:
        matrix: rows of M
        ncols: column count, required when M has no rows
    """
    if ncols is None:
        if not matrix:
            raise ValueError("qkernel of an empty matrix needs ncols")
        ncols = len(matrix[0])
    ech = RowEchelon()
    ech.extend(to_sparse(row) for row in matrix)
    rows = ech.reduced_rows()
    basis = []
    for free in ech.nonpivot_columns(ncols):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for p, row in rows.items():
            x[p] = -row.get(free, Fraction(0))
        basis.append(tuple(x))
    return basis


def rref(rows: Sequence[Sequence[Number]], ncols: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Canonical reduced row echelon form, zero rows dropped."""
    ech = RowEchelon()
    ech.extend(to_sparse(r) for r in rows)
    reduced = ech.reduced_rows()
    return tuple(to_dense(reduced[p], ncols) for p in sorted(reduced))
