"""
First resonance variety of a graded algebra: membership of degree-one
classes, the kernel of the product map on the exterior square of H^1, and
its linear equations in Plücker coordinates.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from torarr.cohom.algebra import CohomElement, GradedAlgebraQ, free_mul
from torarr.errors import PreconditionError
from torarr.linalg import RowEchelon, qkernel
from torarr.poly import IdealQ, MultiPolyQ
from torarr.resonance.plucker import Vector, pairs, plucker_variables

logger = logging.getLogger(__name__)


def h1_basis(A: GradedAlgebraQ) -> List[CohomElement]:
    """Standard degree-one classes, in generator order."""
    return [A.element({m: Fraction(1)}, 1) for m in A.quotient_basis(1)]


def h1_coordinates(A: GradedAlgebraQ, x: CohomElement) -> Vector:
    if x.degree != 1:
        raise PreconditionError(f"expected a degree-one class, got degree {x.degree}")
    return A.quotient_coordinates(x)


def h1_element(A: GradedAlgebraQ, coords: Sequence) -> CohomElement:
    basis = A.quotient_basis(1)
    if len(coords) != len(basis):
        raise PreconditionError(f"{len(coords)} coordinates for H^1 of dimension {len(basis)}")
    return A.element({m: Fraction(c) for m, c in zip(basis, coords) if c}, 1)


def _degree_two_row(A: GradedAlgebraQ, terms) -> dict:
    col = A.column(2)
    return {col[m]: c for m, c in A.reduce(2, terms).items()}


def delta_kernel_dim(A: GradedAlgebraQ, alpha: CohomElement) -> int:
    """dim of the kernel of x -> alpha * x from H^1 to H^2."""
    if alpha.degree != 1:
        raise PreconditionError(f"expected a degree-one class, got degree {alpha.degree}")
    basis = A.quotient_basis(1)
    if A.top_degree < 2:
        return len(basis)
    image = RowEchelon()
    for m in basis:
        image.add(_degree_two_row(A, free_mul(alpha.terms, {m: Fraction(1)}, A.degrees)))
    return len(basis) - image.rank


def in_R1(A: GradedAlgebraQ, alpha: CohomElement) -> bool:
    """alpha = 0 counts: H^1 of the zero differential is all of A^1."""
    if alpha.degree != 1:
        raise PreconditionError(f"expected a degree-one class, got degree {alpha.degree}")
    if alpha.is_zero():
        return len(A.quotient_basis(1)) > 0
    return delta_kernel_dim(A, alpha) >= 2


def wedge_products(A: GradedAlgebraQ) -> List[dict]:
    """e_i * e_j reduced in H^2, for the pairs i < j of the standard basis."""
    basis = A.quotient_basis(1)
    if A.top_degree < 2:
        return [{} for _ in pairs(len(basis))]
    return [
        _degree_two_row(A, free_mul({basis[i]: Fraction(1)}, {basis[j]: Fraction(1)}, A.degrees))
        for i, j in pairs(len(basis))
    ]


def wedge_kernel(A: GradedAlgebraQ) -> Tuple[int, List[Vector]]:
    """
    Kernel of the product map from the exterior square of H^1 to H^2.

    Returns:
        (dimension, basis), vectors in Plücker coordinates
    """
    products = wedge_products(A)
    npairs = len(products)
    if npairs == 0:
        return 0, []
    ncols = len(A.monomials(2)) if A.top_degree >= 2 else 0
    # one equation per monomial of F_2: sum_ij x_ij (e_i e_j)[monomial] = 0
    equations = [[row.get(c, Fraction(0)) for row in products] for c in range(ncols)]
    kernel = qkernel(equations, npairs)
    logger.debug(f"{A.name}: wedge kernel of dimension {len(kernel)} in {npairs} coordinates")
    return len(kernel), kernel


def linear_ideal_of_subspace(K: Sequence[Sequence], m: int) -> IdealQ:
    """
    Linear forms in the Plücker coordinates of Gr(2, m) vanishing on span(K).
    """
    variables = plucker_variables(m)
    forms = qkernel([list(k) for k in K], len(variables))
    return IdealQ.of([MultiPolyQ.linear(variables, f) for f in forms], variables)
