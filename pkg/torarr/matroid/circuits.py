"""
Circuits of the column matroid of N with their primitive integer dependencies.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Tuple

from torarr.linalg import IntMatrix, qkernel, qrank
from torarr.matroid.subsets import check_ground_guard, members

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circuit:
    """Minimal dependent column set and its primitive dependency, first entry positive."""
    columns: Tuple[int, ...]
    dependency: Tuple[int, ...]

    def coefficient(self, column: int) -> int:
        return self.dependency[self.columns.index(column)]

    def is_signed(self) -> bool:
        """All coefficients are +1 or -1."""
        return all(abs(c) == 1 for c in self.dependency)


def primitive_dependency(N: IntMatrix, columns: Tuple[int, ...]) -> Tuple[int, ...]:
    (kernel,) = qkernel(N.select_columns(columns).rows, len(columns))
    denom = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in kernel), 1)
    ints = [int(x * denom) for x in kernel]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def circuits(N: IntMatrix, max_subsets: int = None, force: bool = False) -> List[Circuit]:
    """All circuits in order of (size, columns)."""
    n = N.ncols
    check_ground_guard(n, max_subsets, force)
    rank = {}
    for mask in range(1 << n):
        rank[mask] = qrank(N.select_columns(members(mask)).rows) if mask else 0
    found = []
    for mask in range(1, 1 << n):
        cols = members(mask)
        if rank[mask] != len(cols) - 1:
            continue
        if all(rank[mask & ~(1 << c)] == len(cols) - 1 for c in cols):
            found.append(Circuit(cols, primitive_dependency(N, cols)))
    found.sort(key=lambda c: (len(c.columns), c.columns))
    logger.debug(f"{len(found)} circuits")
    return found
