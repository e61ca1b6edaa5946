"""
Components of the first resonance variety.

The Plücker image of the kernel of the product map meets the Grassmannian
in a zero-dimensional scheme here. Instead of solving that system, rational
candidate points are read off the algebra (local planes, factored
relations, decomposable kernel vectors), checked against the equations,
and the count of distinct verified points is matched with the scheme
degree from the Hilbert series. A shortfall raises rather than guessing.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from torarr.cohom.algebra import FreeTerms, GradedAlgebraQ, OmegaBar, OmegaSmall, free_mul
from torarr.cohom.rational import RationalPresentation
from torarr.cohom.unimodular import UnimodularPresentation
from torarr.config import get_settings
from torarr.errors import PreconditionError, UnresolvedResonanceError, UnsupportedResonanceError
from torarr.linalg import IntMatrix, Lattice, saturation
from torarr.poly import buchberger, contains_point, projective_dim_degree
from torarr.resonance.plucker import Plane, PluckerPoint, grassmann_pfaffian_ideal, plane_from_plucker
from torarr.resonance.varieties import h1_coordinates, linear_ideal_of_subspace, wedge_kernel

logger = logging.getLogger(__name__)

FactorPair = Tuple[FreeTerms, FreeTerms]


def _vanishes(A: GradedAlgebraQ, a: FreeTerms, b: FreeTerms) -> bool:
    if A.top_degree < 2:
        return True
    return not A.reduce(2, free_mul(a, b, A.degrees))


def local_planes(A: GradedAlgebraQ) -> List[Plane]:
    """<e, psi_i> for every hypertorus class e with e * psi_i = 0."""
    planes = []
    for m in A.quotient_basis(1):
        if not isinstance(A.generators[m[0]], (OmegaSmall, OmegaBar)):
            continue
        e = A.element({m: Fraction(1)}, 1)
        for i in range(len(A.psi_images)):
            psi = A.psi(i)
            if not _vanishes(A, e.terms, psi.terms):
                continue
            try:
                planes.append(Plane.span(h1_coordinates(A, e), h1_coordinates(A, psi)))
            except PreconditionError:
                continue
    return planes


def factored_planes(A: GradedAlgebraQ, factored: Iterable[FactorPair]) -> List[Plane]:
    """Planes spanned by two degree-one factors whose product is a relation."""
    planes = []
    for f, g in factored:
        if not _vanishes(A, f, g):
            continue
        try:
            planes.append(
                Plane.span(h1_coordinates(A, A.element(f, 1)), h1_coordinates(A, A.element(g, 1)))
            )
        except PreconditionError:
            continue
    return planes


def presentation_factors(presentation) -> List[FactorPair]:
    """Factor pairs of the two-term circuit relations of a presentation."""
    if isinstance(presentation, UnimodularPresentation):
        return [
            (factors[0], factors[1])
            for _, _, factors in presentation.circuit_factors
            if len(factors) == 2
        ]
    return []


def resonance_components(
    A: GradedAlgebraQ,
    factored: Sequence[FactorPair] = (),
    scan_limit: Optional[int] = None,
) -> List[Plane]:
    """
    The planes whose union is R^1(A).

    Candidates are tried in a fixed order (local planes, factored
    relations, decomposable kernel vectors), so the output order is stable.

    Raises:
        UnsupportedResonanceError: the scheme has positive dimension
        UnresolvedResonanceError: fewer verified points than its degree
    """
    dim_k, kernel = wedge_kernel(A)
    m = len(A.quotient_basis(1))
    if m < 2 or dim_k == 0:
        return []
    I = linear_ideal_of_subspace(kernel, m)
    J = grassmann_pfaffian_ideal(m)
    ideal = I + J
    G = buchberger(ideal.generators, "grevlex", ideal.variables)
    if scan_limit is None:
        scan_limit = get_settings().hilbert_scan_limit
    dim, degree = projective_dim_degree(G, scan_limit)
    logger.info(f"{A.name}: Plücker scheme of dimension {dim} and degree {degree}")
    if dim > 0:
        raise UnsupportedResonanceError(
            f"unsupported: R^1 component of positive dimension ({dim}) in {A.name}"
        )
    if dim < 0:
        return []

    candidates: List[Plane] = local_planes(A) + factored_planes(A, factored)
    for vector in kernel:
        point = PluckerPoint(vector)
        if point.is_decomposable():
            candidates.append(plane_from_plucker(point))

    planes: List[Plane] = []
    for plane in candidates:
        if plane in planes:
            continue
        if contains_point(ideal.generators, plane.plucker().coords):
            planes.append(plane)
    if len(planes) < degree:
        raise UnresolvedResonanceError(len(planes), degree)
    if len(planes) > degree:
        # distinct points on a scheme of this degree cannot exceed it
        raise PreconditionError(f"{len(planes)} verified points on a scheme of degree {degree}")
    logger.info(f"{A.name}: {len(planes)} resonance planes")
    return planes


def presentation_resonance(presentation, scan_limit: Optional[int] = None) -> List[Plane]:
    """resonance_components with the candidates a presentation provides."""
    if not isinstance(presentation, (UnimodularPresentation, RationalPresentation)):
        raise PreconditionError(f"not a presentation: {type(presentation).__name__}")
    return resonance_components(presentation.algebra, presentation_factors(presentation), scan_limit)


def _clear_denominators(v: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = lcm(*(Fraction(x).denominator for x in v))
    return tuple(int(Fraction(x) * scale) for x in v)


def resonance_lattices(planes: Sequence[Plane], embedding: Optional[IntMatrix] = None) -> List[Lattice]:
    """
    Integral points of each plane after an injective integral map.

    Args:
        planes: planes in H^1 over Q
        embedding: matrix taking H^1 coordinates to the coordinates of an
            integral lattice Z^k (e.g. a covering pullback); identity if None

    Returns:
        One saturated rank-2 lattice per plane.
    """
    out = []
    for plane in planes:
        u, v = plane.basis
        if embedding is not None:
            u, v = embedding.apply(u), embedding.apply(v)
        L = Lattice.from_generators([_clear_denominators(u), _clear_denominators(v)], len(u))
        if L.rank != 2:
            raise PreconditionError(f"the embedding collapses the plane {plane}")
        out.append(saturation(L))
    return out
