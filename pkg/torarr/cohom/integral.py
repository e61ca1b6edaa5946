"""
Integral graded pieces for totally unimodular arrangements, where the
degree-one presentation holds over Z.
"""

import logging
from typing import Tuple

from torarr.cohom.unimodular import build_unimodular_presentation
from torarr.errors import PreconditionError
from torarr.linalg import IntMatrix, invariant_factors

logger = logging.getLogger(__name__)


def integral_graded_unimodular(N: IntMatrix, k: int, **guards) -> Tuple[int, Tuple[int, ...]]:
    """
    H^k(M(A); Z) as (free rank, torsion invariant factors).

    Raises:
        NotUnimodularError: N is not totally unimodular
    """
    algebra = build_unimodular_presentation(N, **guards).algebra
    if k < 0 or k > algebra.top_degree:
        raise PreconditionError(f"degree {k} outside 0..{algebra.top_degree}")
    col = algebra.column(k)
    rows = []
    for row in algebra.relation_rows(k):
        dense = [0] * len(col)
        for m, c in row.items():
            if c.denominator != 1:
                raise PreconditionError(f"non-integral relation coefficient {c}")
            dense[col[m]] = int(c)
        rows.append(dense)
    if not rows:
        return len(col), ()
    factors = invariant_factors(IntMatrix.from_rows(rows, len(col)))
    torsion = tuple(d for d in factors if d > 1)
    logger.debug(f"H^{k}: rank {len(col) - len(factors)}, torsion {torsion}")
    return len(col) - len(factors), torsion
