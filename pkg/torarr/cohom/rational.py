"""
Rational presentation of the cohomology of a central toric arrangement,
generated by omega-bar_{W,S} (S independent, W a component of the
intersection of the hypertori in S) and the torus classes.

Conventions: the total order is column order; l(S,T) is the parity of the
permutation sorting sorted(S) + sorted(T); |S_<i| counts the elements of S
before i; c_T is the product of the signs of the dependency on T.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from torarr.cohom.algebra import (
    CohomElement,
    FreeTerms,
    GradedAlgebraQ,
    OmegaBar,
    Torus,
    free_add,
    free_mul,
)
from torarr.cohom.unimodular import psi_terms
from torarr.errors import PreconditionError
from torarr.layers import LayerPoset, enumerate_layers, projection_kernel, transfer_map
from torarr.linalg import IntMatrix
from torarr.matroid import ArithmeticMatroid, from_matrix
from torarr.matroid.circuits import circuits
from torarr.matroid.subsets import mask_of

logger = logging.getLogger(__name__)


def merge_parity(S: Sequence[int], T: Sequence[int]) -> int:
    """l(S, T): inversions of sorted(S) + sorted(T), mod 2."""
    return sum(1 for s in S for t in T if s > t) % 2


@dataclass
class RationalPresentation:
    algebra: GradedAlgebraQ
    matrix: IntMatrix
    poset: LayerPoset
    matroid: ArithmeticMatroid

    def omega_bar_index(self, layer: int, subset: Sequence[int]) -> int:
        return self.algebra.index_of(OmegaBar(layer, tuple(sorted(subset))))

    def omega_bar(self, layer: int, subset: Sequence[int], algebra: Optional[GradedAlgebraQ] = None) -> CohomElement:
        algebra = algebra or self.algebra
        subset = tuple(sorted(subset))
        return algebra.generator(OmegaBar(layer, subset))

    def hypertorus_class(self, i: int, algebra: Optional[GradedAlgebraQ] = None) -> CohomElement:
        """omega-bar_{H_i,{i}} for the identity component H_i."""
        return self.omega_bar(self.poset.hypertori[i], (i,), algebra)

    def component_containing(self, subset: Sequence[int], layer: int) -> int:
        """The component of the intersection over subset that contains the given layer."""
        for U in self.poset.components(subset):
            if self.poset.leq(U, layer):
                return U
        raise PreconditionError(f"no component over {tuple(subset)} contains layer {layer}")


def _generators(N: IntMatrix, poset: LayerPoset, matroid: ArithmeticMatroid):
    n, r = N.ncols, N.nrows
    independent = [
        S for k in range(1, r + 1) for S in combinations(range(n), k)
        if matroid.rk(mask_of(S)) == k
    ]
    first = [OmegaBar(W, S) for S in independent if len(S) == 1 for W in poset.components(S)]
    higher = [OmegaBar(W, S) for S in independent if len(S) > 1 for W in poset.components(S)]
    return first + [Torus(j) for j in range(r)] + higher


def build_rational_presentation(
    N: IntMatrix,
    max_subsets: int = None,
    max_generators: int = None,
    force: bool = False,
) -> RationalPresentation:
    """
    Raises:
        GuardExceededError: too many columns or generators
        PreconditionError: N has a zero column
    """
    poset = enumerate_layers(N, max_subsets, force)
    matroid = from_matrix(N, max_subsets, force)
    n, r = N.ncols, N.nrows
    generators = _generators(N, poset, matroid)
    torus_offset = next(i for i, g in enumerate(generators) if isinstance(g, Torus)) if r else len(generators)
    psi = [psi_terms(N, i, torus_offset) for i in range(n)]
    algebra = GradedAlgebraQ(
        generators, r, name="H(rational)", psi_images=psi,
        max_generators=max_generators, force=force,
    )
    pres = RationalPresentation(algebra, N, poset, matroid)
    degrees = algebra.degrees
    bars = [(idx, g) for idx, g in enumerate(generators) if isinstance(g, OmegaBar)]

    def gen(idx):
        return {(idx,): Fraction(1)}

    # omega-bar_{W,S} psi_i = 0 for i in S
    for idx, g in bars:
        if g.degree + 1 > r:
            continue
        for i in g.subset:
            algebra.add_relation(free_mul(gen(idx), psi[i], degrees), provenance="annihilation")

    # products of omega-bars
    for pos, (a, ga) in enumerate(bars):
        for b, gb in bars[pos:]:
            if ga.degree + gb.degree > r:
                continue
            product = free_mul(gen(a), gen(b), degrees)
            S, T = ga.subset, gb.subset
            union = tuple(sorted(S + T))
            if set(S) & set(T) or matroid.rk(mask_of(union)) < len(union):
                algebra.add_relation(product, provenance="product vanishes")
                continue
            above = [
                U for U in poset.components(union)
                if poset.leq(ga.layer, U) and poset.leq(gb.layer, U)
            ]
            rhs: FreeTerms = {}
            sign = -1 if merge_parity(S, T) else 1
            for U in above:
                rhs = free_add(rhs, gen(algebra.index_of(OmegaBar(U, union))), Fraction(sign))
            algebra.add_relation(free_add(product, rhs, Fraction(-1)), provenance="product rule")

    # circuit relations
    for circuit in circuits(N, max_subsets, force):
        I = circuit.columns
        k = dict(zip(I, circuit.dependency))
        for L in poset.components(I):
            terms: FreeTerms = {}
            for i in I:
                rest = tuple(j for j in I if j != i)
                m_rest = matroid.m(mask_of(rest))
                for t_size in range(0, len(rest) + 1, 2):
                    for T in combinations(rest, t_size):
                        S = tuple(j for j in rest if j not in T)
                        before = sum(1 for s in S if s < i)
                        c_T = 1
                        for j in T:
                            c_T *= 1 if k[j] > 0 else -1
                        sign = (-1) ** (before + merge_parity(S, T)) * c_T
                        coeff = Fraction(sign * matroid.m(mask_of(S)), m_rest)
                        if S:
                            W = pres.component_containing(S, L)
                            term = gen(algebra.index_of(OmegaBar(W, S)))
                        else:
                            term = {(): Fraction(1)}
                        for j in T:
                            term = free_mul(term, psi[j], degrees)
                        terms = free_add(terms, term, coeff)
            algebra.add_relation(terms, provenance=f"circuit {tuple(j + 1 for j in I)} at layer {L}")

    logger.info(
        f"rational presentation: {len(generators)} generators, {len(algebra.relations)} relations"
    )
    return pres


# -- relations among component groups of four hypertori -----------------------

# each split {I, J} with the signs of the hypertorus classes multiplying it
SPLITS = (
    ((0, 1), (2, 3), (1, -1, 1, -1)),
    ((0, 3), (1, 2), (1, 1, -1, -1)),
)


def _require_four(pres: RationalPresentation):
    if pres.matrix.ncols != 4:
        raise PreconditionError(f"needs exactly 4 hypertori, got {pres.matrix.ncols}")


def signed_hypertori(pres: RationalPresentation, algebra: GradedAlgebraQ, signs: Sequence[int]) -> CohomElement:
    """sum_i signs[i] omega-bar_i, e.g. omega-bar_1 - omega-bar_2 + omega-bar_3 - omega-bar_4."""
    _require_four(pres)
    total = algebra.zero(1)
    for i, s in enumerate(signs):
        total = total + pres.hypertorus_class(i, algebra) * s
    return total


def transfer_relations(pres: RationalPresentation, algebra: GradedAlgebraQ) -> List[Tuple[str, CohomElement]]:
    """
    For each split {I, J} whose projection kernels agree and every a in LG(I),
    the degree-3 element sigma * (omega-bar_{a,I} + omega-bar_{phi(a),J}).
    """
    _require_four(pres)
    N = pres.matrix
    out = []
    for I, J, signs in SPLITS:
        if projection_kernel(N, I) != projection_kernel(N, J):
            continue
        sigma = signed_hypertori(pres, algebra, signs)
        phi = transfer_map(N, I, J)
        for a, b in phi.items():
            ia, ib = pres.poset.index[a], pres.poset.index[b]
            element = sigma * (pres.omega_bar(ia, I, algebra) + pres.omega_bar(ib, J, algebra))
            out.append((f"{_pair(I)}/{_pair(J)} at {ia}", element))
    return out


def aggregate_relations(pres: RationalPresentation, algebra: GradedAlgebraQ) -> List[Tuple[str, CohomElement]]:
    """sigma * (sum over LG(I) + sum over LG(J)) for both splits."""
    _require_four(pres)
    out = []
    for I, J, signs in SPLITS:
        sigma = signed_hypertori(pres, algebra, signs)
        total = algebra.zero(2)
        for subset in (I, J):
            for W in pres.poset.components(subset):
                total = total + pres.omega_bar(W, subset, algebra)
        out.append((f"{_pair(I)}/{_pair(J)}", sigma * total))
    return out


def linear_relation_S3(pres: RationalPresentation, b: int, algebra: GradedAlgebraQ) -> CohomElement:
    """sum_{i=1..4} (-1)^i omega-bar_{b_i, [4] minus i}, b_i the component containing the point b."""
    _require_four(pres)
    total = algebra.zero(3)
    for i in range(4):
        rest = tuple(j for j in range(4) if j != i)
        term = pres.omega_bar(pres.component_containing(rest, b), rest, algebra)
        # (-1)^i with 1-based i
        total = total + (term if i % 2 == 1 else -term)
    return total


def product_rule_holds(pres: RationalPresentation, i: int, a: int, pair: Tuple[int, int], algebra: GradedAlgebraQ) -> bool:
    """
    omega-bar_i * omega-bar_{a,pair} equals (-1)^l(i,pair) times the sum of
    omega-bar_{b,{i}+pair} over the components b above a.
    """
    union = tuple(sorted((i,) + tuple(pair)))
    lhs = pres.hypertorus_class(i, algebra) * pres.omega_bar(a, pair, algebra)
    rhs = algebra.zero(3)
    for U in pres.poset.components(union):
        if pres.poset.leq(a, U):
            rhs = rhs + pres.omega_bar(U, union, algebra)
    if merge_parity((i,), pair):
        rhs = -rhs
    return lhs == rhs


def _pair(I: Tuple[int, ...]) -> str:
    return "{" + ",".join(str(i + 1) for i in I) + "}"


def generator_counts(pres: RationalPresentation) -> Dict[int, int]:
    """Number of omega-bar generators per degree."""
    counts: Dict[int, int] = {}
    for g in pres.algebra.generators:
        if isinstance(g, OmegaBar):
            counts[g.degree] = counts.get(g.degree, 0) + 1
    return counts
