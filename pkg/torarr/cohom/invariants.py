"""
Numeric invariants of cohomology algebras: graded dimensions, the torus
quotient S, and ranks of multiplication maps.
"""

import logging
from typing import Dict, List, Tuple

from torarr.cohom.algebra import CohomElement, GradedAlgebraQ
from torarr.cohom.rational import build_rational_presentation
from torarr.linalg import IntMatrix

logger = logging.getLogger(__name__)


def graded_dimension(A: GradedAlgebraQ, k: int) -> int:
    return A.graded_dimension(k)


def multiply(x: CohomElement, y: CohomElement) -> CohomElement:
    return x.algebra.multiply(x, y)


def quotient_by_torus_ideal(A: GradedAlgebraQ) -> GradedAlgebraQ:
    """S = H / (ideal generated by the psi classes)."""
    return A.with_relations(A.psi_images, name=f"S({A.name})", provenance="torus class")


def multiplication_rank(A: GradedAlgebraQ, p: int, q: int) -> int:
    return A.multiplication_rank(p, q)


def multiplication_rank_table(A: GradedAlgebraQ) -> Dict[Tuple[int, int], int]:
    """Ranks of H^p (x) H^q -> H^(p+q) for 1 <= p <= q, p + q <= top degree."""
    table = {}
    for p in range(1, A.top_degree + 1):
        for q in range(p, A.top_degree - p + 1):
            table[(p, q)] = A.multiplication_rank(p, q)
    return table


def rational_invariants(N: IntMatrix, **guards) -> Tuple[List[int], Dict[Tuple[int, int], int]]:
    """Graded dimensions and multiplication ranks of H(M(A); Q)."""
    algebra = build_rational_presentation(N, **guards).algebra
    dims = algebra.graded_dimensions()
    table = multiplication_rank_table(algebra)
    logger.debug(f"rational invariants: dims {dims}, ranks {table}")
    return dims, table
