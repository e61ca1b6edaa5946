"""
Sublattices of Z^m and finite abelian quotient groups.

A Lattice stores its canonical HNF basis, so two lattices are equal exactly
when their dataclasses compare equal.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Sequence, Tuple

from torarr.errors import AmbientMismatchError, PreconditionError
from torarr.linalg.normal_forms import IntMatrix, hnf, hnf_basis, snf

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    Z/d_1 x ... x Z/d_k with d_1 | ... | d_k, every d_i > 1.

    generator_lifts[i] is an ambient vector whose class generates the
    i-th cyclic factor.
    """
    invariant_factors: Tuple[int, ...]
    generator_lifts: Tuple[Vector, ...] = ()

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self):
        if self.is_trivial:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient_dim, basis in canonical row HNF."""
    ambient_dim: int
    basis: Tuple[Vector, ...]

    @classmethod
    def from_generators(cls, vectors: Sequence[Sequence[int]], ambient_dim: int) -> "Lattice":
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatchError(
                    f"generator of length {len(v)} in Z^{ambient_dim}"
                )
        return cls(ambient_dim, hnf_basis([tuple(v) for v in vectors], ambient_dim))

    @classmethod
    def from_columns(cls, matrix: IntMatrix) -> "Lattice":
        """The column span of a matrix, e.g. Gamma_S = <N[S]>."""
        return cls.from_generators(matrix.columns(), matrix.nrows)

    @classmethod
    def ambient(cls, m: int) -> "Lattice":
        return cls(m, IntMatrix.identity(m).rows)

    @classmethod
    def zero(cls, m: int) -> "Lattice":
        return cls(m, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix(self.basis, self.ambient_dim)

    def coordinates(self, v: Sequence[int]) -> Optional[Vector]:
        """
        Integer coordinates of v in the HNF basis.

        Returns:
            The coefficient tuple, or None when v is not in the lattice.
        """
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(f"vector of length {len(v)} in Z^{self.ambient_dim}")
        residual = list(v)
        coords = []
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            if any(residual[:col]):
                return None
            q, r = divmod(residual[col], row[col])
            if r:
                return None
            coords.append(q)
            if q:
                residual = [a - q * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        return tuple(coords)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_lattice(self, other: "Lattice") -> bool:
        _check_ambient(self, other)
        return all(b in self for b in other.basis)

    def is_saturated(self) -> bool:
        return saturation(self) == self

    def __str__(self):
        inner = ", ".join("(" + ",".join(str(x) for x in b) + ")" for b in self.basis)
        return f"<{inner}>"


def _check_ambient(L1: Lattice, L2: Lattice):
    if L1.ambient_dim != L2.ambient_dim:
        raise AmbientMismatchError(
            f"lattices in Z^{L1.ambient_dim} and Z^{L2.ambient_dim}"
        )


def cokernel(A: IntMatrix) -> Tuple[int, FiniteAbelianGroup]:
    """
    Z^r modulo the column span of A.

    Args:
        A: r x k integer matrix, k = 0 allowed

    Returns:
        (free_rank, torsion subgroup)
    """
    r = A.nrows
    if A.ncols == 0 or A.is_zero():
        return r, FiniteAbelianGroup(())
    dec = snf(A)
    factors = []
    lifts = []
    for i, d in enumerate(dec.diag):
        if d > 1:
            factors.append(d)
            lifts.append(dec.left_inverse.column(i))
    return r - dec.rank, FiniteAbelianGroup(tuple(factors), tuple(lifts))


def torsion_order(A: IntMatrix) -> int:
    """|tor(Z^r / <columns of A>)|, the multiplicity of the column set."""
    return cokernel(A)[1].order


def saturation(L: Lattice) -> Lattice:
    """(L tensor Q) intersected with Z^m."""
    if L.rank == 0:
        return L
    dec = snf(L.basis_matrix())
    return Lattice.from_generators(dec.right_inverse.rows[: dec.rank], L.ambient_dim)


def quotient_group(Lsup: Lattice, Lsub: Lattice) -> FiniteAbelianGroup:
    """
    Lsup / Lsub for a full-rank sublattice.

    Raises:
        PreconditionError: ranks differ or Lsub is not contained in Lsup
    """
    _check_ambient(Lsup, Lsub)
    if Lsup.rank != Lsub.rank:
        raise PreconditionError(f"quotient of rank {Lsup.rank} by rank {Lsub.rank}")
    coords = []
    for b in Lsub.basis:
        c = Lsup.coordinates(b)
        if c is None:
            raise PreconditionError(f"{b} is not in the larger lattice {Lsup}")
        coords.append(c)
    if not coords:
        return FiniteAbelianGroup(())
    # cokernel of the column span of the coordinate matrix, lifted back through Lsup
    _, group = cokernel(IntMatrix.from_rows(coords, Lsup.rank).transpose())
    lifts = tuple(
        tuple(sum(g * b[j] for g, b in zip(lift, Lsup.basis)) for j in range(Lsup.ambient_dim))
        for lift in group.generator_lifts
    )
    return FiniteAbelianGroup(group.invariant_factors, lifts)


def member(v: Sequence[int], L: Lattice) -> bool:
    return v in L


def intersect(L1: Lattice, L2: Lattice) -> Lattice:
    _check_ambient(L1, L2)
    if L1.rank == 0 or L2.rank == 0:
        return Lattice.zero(L1.ambient_dim)
    stacked = IntMatrix(L1.basis + tuple(tuple(-x for x in b) for b in L2.basis), L1.ambient_dim)
    H, U = hnf(stacked)
    k = L1.rank
    common = []
    for h_row, u_row in zip(H.rows, U.rows):
        if any(h_row):
            continue
        common.append(
            tuple(sum(a * b[j] for a, b in zip(u_row[:k], L1.basis)) for j in range(L1.ambient_dim))
        )
    return Lattice.from_generators(common, L1.ambient_dim)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    _check_ambient(L1, L2)
    return Lattice.from_generators(L1.basis + L2.basis, L1.ambient_dim)


def in_scaled(v: Sequence[int], n: int, L: Lattice) -> bool:
    """True iff v lies in nL."""
    if n < 1:
        raise PreconditionError(f"scale factor must be positive, got {n}")
    if any(x % n for x in v):
        return False
    return tuple(x // n for x in v) in L


def index_in(Lsup: Lattice, Lsub: Lattice) -> int:
    """[Lsup : Lsub] for equal-rank lattices."""
    return quotient_group(Lsup, Lsub).order


def content(v: Sequence[int]) -> int:
    """gcd of the entries, 0 for the zero vector."""
    return reduce(gcd, (abs(x) for x in v), 0)
