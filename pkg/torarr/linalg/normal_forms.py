"""
Integer matrices and their Hermite and Smith normal forms.

Everything is Python int, so entries never overflow; normal-form pivoting
swells intermediate entries even on 3x4 inputs.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from torarr.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix. Zero columns (and zero rows) are legal."""
    rows: Tuple[Tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise PreconditionError(
                    f"row of length {len(row)} in a matrix with {self.ncols} columns"
                )
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise PreconditionError(f"matrix entry {x!r} is not an integer")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise PreconditionError("cannot infer the column count of an empty row list")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], nrows: int) -> "IntMatrix":
        columns = [tuple(int(x) for x in c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise PreconditionError(f"column of length {len(c)} in a matrix with {nrows} rows")
        rows = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls(rows, len(columns))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def select_columns(self, indices: Sequence[int]) -> "IntMatrix":
        """The submatrix N[S] made of the given columns, in the given order."""
        return IntMatrix(tuple(tuple(row[j] for j in indices) for row in self.rows), len(indices))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(self.columns()), self.nrows)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.ncols:
            raise PreconditionError(f"vector of length {len(vector)} for {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise PreconditionError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, c)) for c in cols) for row in self.rows),
            other.ncols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def determinant(self) -> int:
        """Bareiss fraction-free determinant of a square matrix."""
        n = self.nrows
        if n != self.ncols:
            raise PreconditionError(f"determinant of a non-square {self.shape} matrix")
        if n == 0:
            return 1
        a = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def _identity_lists(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form.

    Args:
        A: integer matrix

    Returns:
        (H, U) with U unimodular, U @ A == H, H in row echelon form with
        positive pivots, entries above each pivot reduced into [0, pivot),
        zero rows last. H depends only on the row lattice of A.
    """
    m, n = A.shape
    H = [list(row) for row in A.rows]
    U = _identity_lists(m)

    def swap(i, j):
        H[i], H[j] = H[j], H[i]
        U[i], U[j] = U[j], U[i]

    def addmul(i, j, q):
        # row_i += q * row_j
        H[i] = [a + q * b for a, b in zip(H[i], H[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        while True:
            nonzero = [i for i in range(pivot_row, m) if H[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(H[i][col]))
            swap(pivot_row, best)
            clean = True
            for i in range(pivot_row + 1, m):
                if H[i][col]:
                    addmul(i, pivot_row, -(H[i][col] // H[pivot_row][col]))
                    if H[i][col]:
                        clean = False
            if clean:
                break
        if H[pivot_row][col] == 0:
            continue
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            U[pivot_row] = [-x for x in U[pivot_row]]
        p = H[pivot_row][col]
        for i in range(pivot_row):
            q = H[i][col] // p
            if q:
                addmul(i, pivot_row, -q)
        pivot_row += 1

    return IntMatrix.from_rows(H, n), IntMatrix.from_rows(U, m)


def hnf_basis(vectors: Sequence[Sequence[int]], ambient_dim: int) -> Tuple[Tuple[int, ...], ...]:
    """Nonzero HNF rows of the lattice spanned by the given vectors."""
    if not vectors:
        return ()
    H, _ = hnf(IntMatrix.from_rows(vectors, ambient_dim))
    return tuple(row for row in H.rows if any(row))


@dataclass(frozen=True)
class SnfDecomposition:
    """U @ A @ V == D with D = diag(diag) padded by zeros."""
    left: IntMatrix
    diag: Tuple[int, ...]
    right: IntMatrix
    left_inverse: IntMatrix
    right_inverse: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.diag)

    def diagonal_matrix(self) -> IntMatrix:
        m, n = self.left.nrows, self.right.nrows
        return IntMatrix(
            tuple(
                tuple(self.diag[i] if i == j and i < len(self.diag) else 0 for j in range(n))
                for i in range(m)
            ),
            n,
        )


class _Diagonalizer:
    """Smith reduction by smallest-absolute-value pivoting."""

    def __init__(self, rows: Sequence[Sequence[int]], ncols: int, track: bool):
        self.m = len(rows)
        self.n = ncols
        self.A = [list(r) for r in rows]
        self.track = track
        if track:
            self.L = _identity_lists(self.m)
            self.Linv = _identity_lists(self.m)
            self.R = _identity_lists(self.n)
            self.Rinv = _identity_lists(self.n)

    def row_swap(self, i, j):
        if i == j:
            return
        A = self.A
        A[i], A[j] = A[j], A[i]
        if self.track:
            self.L[i], self.L[j] = self.L[j], self.L[i]
            for row in self.Linv:
                row[i], row[j] = row[j], row[i]

    def row_addmul(self, i, j, q):
        # row_i += q * row_j
        self.A[i] = [a + q * b for a, b in zip(self.A[i], self.A[j])]
        if self.track:
            self.L[i] = [a + q * b for a, b in zip(self.L[i], self.L[j])]
            for row in self.Linv:
                row[j] -= q * row[i]

    def row_neg(self, i):
        self.A[i] = [-x for x in self.A[i]]
        if self.track:
            self.L[i] = [-x for x in self.L[i]]
            for row in self.Linv:
                row[i] = -row[i]

    def col_swap(self, i, j):
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        if self.track:
            for row in self.R:
                row[i], row[j] = row[j], row[i]
            self.Rinv[i], self.Rinv[j] = self.Rinv[j], self.Rinv[i]

    def col_addmul(self, i, j, q):
        # col_i += q * col_j
        for row in self.A:
            row[i] += q * row[j]
        if self.track:
            for row in self.R:
                row[i] += q * row[j]
            self.Rinv[j] = [a - q * b for a, b in zip(self.Rinv[j], self.Rinv[i])]

    def _smallest(self, t):
        best = None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def run(self) -> List[int]:
        A = self.A
        t = 0
        while t < min(self.m, self.n):
            best = self._smallest(t)
            if best is None:
                break
            self.row_swap(t, best[1])
            self.col_swap(t, best[2])
            while True:
                p = A[t][t]
                dirty = False
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        self.row_addmul(i, t, -(A[i][t] // p))
                        dirty = dirty or A[i][t] != 0
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        self.col_addmul(j, t, -(A[t][j] // p))
                        dirty = dirty or A[t][j] != 0
                if dirty:
                    cand = [(abs(A[i][t]), i, t) for i in range(t + 1, self.m) if A[i][t]]
                    cand += [(abs(A[t][j]), t, j) for j in range(t + 1, self.n) if A[t][j]]
                    _, i, j = min(cand)
                    self.row_swap(t, i)
                    self.col_swap(t, j)
                    continue
                bad = next(
                    (i for i in range(t + 1, self.m)
                     if any(A[i][j] % p for j in range(t + 1, self.n))),
                    None,
                )
                if bad is None:
                    break
                self.row_addmul(t, bad, 1)
            if A[t][t] < 0:
                self.row_neg(t)
            t += 1
        return [A[i][i] for i in range(t)]


def snf(A: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transforms and their inverses."""
    d = _Diagonalizer(A.rows, A.ncols, track=True)
    diag = d.run()
    m, n = A.shape
    return SnfDecomposition(
        left=IntMatrix.from_rows(d.L, m),
        diag=tuple(diag),
        right=IntMatrix.from_rows(d.R, n),
        left_inverse=IntMatrix.from_rows(d.Linv, m),
        right_inverse=IntMatrix.from_rows(d.Rinv, n),
    )


def invariant_factors(A: IntMatrix) -> Tuple[int, ...]:
    """Nonzero Smith diagonal of A, without building the transforms."""
    rows = [r for r in dict.fromkeys(A.rows) if any(r)]
    if not rows:
        return ()
    return tuple(_Diagonalizer(rows, A.ncols, track=False).run())
