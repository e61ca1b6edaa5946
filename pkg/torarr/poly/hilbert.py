"""
Hilbert functions of homogeneous ideals from the leading-monomial ideal of
a Groebner basis, and the projective dimension and degree they determine.
"""

import logging
from math import comb
from typing import Dict, FrozenSet, Optional, Tuple

from torarr.errors import NotHomogeneousError, ScanLimitError
from torarr.poly.groebner import GroebnerBasis
from torarr.poly.multivariate import Monomial, divides, mono_div, mono_lcm
from torarr.poly.univariate import UniPolyZ

logger = logging.getLogger(__name__)


def _minimalize(gens) -> FrozenSet[Monomial]:
    gens = sorted(set(gens), key=sum)
    kept = []
    for m in gens:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def hilbert_numerator(monomials) -> UniPolyZ:
    """
    K(t) with HS(S/M) = K(t) / (1 - t)^v for the monomial ideal M.

    Uses K(M + <m>) = K(M) - t^deg(m) K(M : m).
    """
    cache: Dict[FrozenSet[Monomial], UniPolyZ] = {}

    def numerator(gens: FrozenSet[Monomial]) -> UniPolyZ:
        if gens in cache:
            return cache[gens]
        if not gens:
            return UniPolyZ([1])
        ordered = sorted(gens, key=lambda m: (sum(m), m))
        m = ordered[-1]
        rest = frozenset(ordered[:-1])
        colon = _minimalize(mono_div(mono_lcm(g, m), m) for g in rest)
        value = numerator(rest) - numerator(colon).shift(sum(m))
        cache[gens] = value
        return value

    return numerator(_minimalize(monomials))


def _require_homogeneous(G: GroebnerBasis):
    if not G.homogeneous:
        raise NotHomogeneousError("Hilbert function of a non-homogeneous ideal")


def hilbert_function(G: GroebnerBasis, d: int) -> int:
    """Number of degree-d standard monomials of G."""
    _require_homogeneous(G)
    if d < 0:
        return 0
    v = len(G.variables)
    K = hilbert_numerator(G.leading_monomials)
    return sum(
        c * comb(d - k + v - 1, v - 1)
        for k, c in enumerate(K.coeffs) if k <= d
    )


def projective_dim_degree(G: GroebnerBasis, scan_limit: Optional[int] = None) -> Tuple[int, int]:
    """
    Dimension and degree of the projective scheme cut out by G.

    Args:
        G: Groebner basis of a homogeneous ideal
        scan_limit: largest degree at which the Hilbert function may still
            differ from the Hilbert polynomial; defaults to twice the
            number of variables

    Returns:
        (dim, degree); the empty scheme gives (-1, 0)

    Raises:
        NotHomogeneousError: G came from non-homogeneous generators
        ScanLimitError: the Hilbert function settles only beyond scan_limit
    """
    _require_homogeneous(G)
    v = len(G.variables)
    if scan_limit is None:
        scan_limit = 2 * v
    K = hilbert_numerator(G.leading_monomials)
    if K.is_zero():
        return -1, 0
    Q, s = K, 0
    while Q(1) == 0:
        Q = Q.divide_by_one_minus_t()
        s += 1
    krull = v - s
    if krull <= 0:
        return -1, 0

    # HF(d) equals the Hilbert polynomial for d > deg K - v
    settles_at = max(0, K.degree - v + 1)
    if settles_at > scan_limit:
        raise ScanLimitError(
            f"Hilbert function settles at degree {settles_at}, beyond the scan limit {scan_limit}"
        )
    for d in range(settles_at, scan_limit + 1):
        poly_value = sum(c * comb(d - k + krull - 1, krull - 1) for k, c in enumerate(Q.coeffs))
        if hilbert_function(G, d) != poly_value:
            raise ScanLimitError(f"Hilbert function disagrees with the polynomial at degree {d}")

    degree = Q(1)
    logger.debug(f"projective scheme: dim {krull - 1}, degree {degree}")
    return krull - 1, degree
