"""
Arithmetic matroids and matroids over Z represented by integer matrices.

Tables are indexed by subset bitmask in the column order of N; comparisons
are identities on that order.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Tuple

from torarr.errors import PreconditionError
from torarr.linalg import IntMatrix, invariant_factors
from torarr.matroid.subsets import check_ground_guard, label, members, size
from torarr.poly import BivariatePolyZ, UniPolyZ, tutte_to_poincare

logger = logging.getLogger(__name__)

Module = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class ZMatroid:
    """M(S) = Z^r / <N[S]> recorded as (free rank, torsion invariant factors)."""
    ground_size: int
    module_table: Tuple[Module, ...]

    def module(self, mask: int) -> Module:
        return self.module_table[mask]


@dataclass(frozen=True)
class ArithmeticMatroid:
    """Rank and multiplicity functions on subsets of the columns."""
    ground_size: int
    rank_table: Tuple[int, ...]
    mult_table: Tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @property
    def rank(self) -> int:
        """rk(E)."""
        return self.rank_table[self.full_mask]

    def rk(self, mask: int) -> int:
        return self.rank_table[mask]

    def m(self, mask: int) -> int:
        return self.mult_table[mask]

    def table_rows(self) -> List[Dict]:
        return [
            {"subset": [i + 1 for i in members(mask)], "rank": self.rank_table[mask],
             "multiplicity": self.mult_table[mask]}
            for mask in range(1 << self.ground_size)
        ]


def _module_table(N: IntMatrix, max_subsets: int = None, force: bool = False) -> Tuple[Module, ...]:
    n = N.ncols
    check_ground_guard(n, max_subsets, force)
    table = []
    for mask in range(1 << n):
        factors = invariant_factors(N.select_columns(members(mask)))
        table.append((N.nrows - len(factors), tuple(d for d in factors if d > 1)))
    logger.debug(f"module table for {N.nrows}x{n} matrix: {len(table)} subsets")
    return tuple(table)


def zmatroid_from_matrix(N: IntMatrix, max_subsets: int = None, force: bool = False) -> ZMatroid:
    return ZMatroid(N.ncols, _module_table(N, max_subsets, force))


def from_matrix(N: IntMatrix, max_subsets: int = None, force: bool = False) -> ArithmeticMatroid:
    """
    Arithmetic matroid of the columns of N.

    Args:
        N: r x n integer matrix
        max_subsets: ground size guard, defaults to the configured value
        force: ignore the guard

    Raises:
        GuardExceededError: n exceeds the guard
    """
    return matroid_of_zmatroid(N.nrows, zmatroid_from_matrix(N, max_subsets, force))


def matroid_of_zmatroid(r: int, Z: ZMatroid) -> ArithmeticMatroid:
    ranks = tuple(r - free for free, _ in Z.module_table)
    mults = tuple(reduce(lambda a, b: a * b, factors, 1) for _, factors in Z.module_table)
    return ArithmeticMatroid(Z.ground_size, ranks, mults)


def rank_axioms_check(M: ArithmeticMatroid) -> bool:
    """
    Matroid rank axioms plus positivity of the multiplicities.

    Checked in local form: 0 <= rk(S) <= |S|, rk(S) <= rk(S+e) <= rk(S)+1 and
    rk(S+e) + rk(S+f) >= rk(S+e+f) + rk(S).
    """
    n = M.ground_size
    rk = M.rank_table
    for mask in range(1 << n):
        if not 0 <= rk[mask] <= size(mask):
            logger.debug(f"rk{label(mask)} = {rk[mask]} outside [0, |S|]")
            return False
        if M.mult_table[mask] < 1:
            return False
        outside = [e for e in range(n) if not mask >> e & 1]
        for e in outside:
            step = rk[mask | 1 << e] - rk[mask]
            if step not in (0, 1):
                logger.debug(f"rank jumps by {step} adding {e + 1} to {label(mask)}")
                return False
        for a_idx, e in enumerate(outside):
            for f in outside[a_idx + 1:]:
                if rk[mask | 1 << e] + rk[mask | 1 << f] < rk[mask | 1 << e | 1 << f] + rk[mask]:
                    logger.debug(f"submodularity fails at {label(mask)} with {e + 1}, {f + 1}")
                    return False
    return True


def _check_sizes(a, b):
    if a.ground_size != b.ground_size:
        raise PreconditionError(f"ground sizes {a.ground_size} and {b.ground_size} differ")


def equals(M1: ArithmeticMatroid, M2: ArithmeticMatroid) -> bool:
    _check_sizes(M1, M2)
    return M1.rank_table == M2.rank_table and M1.mult_table == M2.mult_table


def zmatroid_equals(Z1: ZMatroid, Z2: ZMatroid) -> bool:
    _check_sizes(Z1, Z2)
    return Z1.module_table == Z2.module_table


def arithmetic_tutte(M: ArithmeticMatroid) -> BivariatePolyZ:
    """Sum over S of m(S) (x-1)^(rk E - rk S) (y-1)^(|S| - rk S)."""
    x1 = BivariatePolyZ.x() - 1
    y1 = BivariatePolyZ.y() - 1
    top = M.rank
    x_pows = [x1 ** k for k in range(top + 1)]
    y_pows = [y1 ** k for k in range(M.ground_size + 1)]
    total = BivariatePolyZ()
    for mask in range(1 << M.ground_size):
        r_s = M.rank_table[mask]
        total = total + x_pows[top - r_s] * y_pows[size(mask) - r_s] * M.mult_table[mask]
    return total


def poincare_polynomial(M: ArithmeticMatroid, r: int) -> UniPolyZ:
    """
    Poincaré polynomial of the complement in a rank-r torus.

    A non-essential arrangement (rk E < r) picks up a factor (1+t)^(r - rk E).
    """
    if r < M.rank:
        raise PreconditionError(f"torus rank {r} below matroid rank {M.rank}")
    essential = tutte_to_poincare(arithmetic_tutte(M), M.rank)
    return essential * UniPolyZ([1, 1]) ** (r - M.rank)


def is_totally_unimodular(N: IntMatrix, max_subsets: int = None, force: bool = False) -> bool:
    """All intersections of hypertori connected, i.e. m(S) = 1 for every S."""
    return all(m == 1 for m in from_matrix(N, max_subsets, force).mult_table)
