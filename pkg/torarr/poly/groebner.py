"""
Buchberger's algorithm over Q.

Linear generators are put in reduced echelon form first and every other
generator is reduced against them; their leading variables never occur
again, so the coprime criterion discards all pairs they would form.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from torarr.errors import PreconditionError, VariableMismatchError
from torarr.linalg.rational import RowEchelon
from torarr.poly.multivariate import (
    Monomial,
    MultiPolyQ,
    Terms,
    coprime,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
    order_key,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealQ:
    """Ideal given by generators in a fixed variable tuple."""
    variables: Tuple[str, ...]
    generators: Tuple[MultiPolyQ, ...]

    @classmethod
    def of(cls, generators: Sequence[MultiPolyQ], variables: Sequence[str] = None) -> "IdealQ":
        if variables is None:
            if not generators:
                raise PreconditionError("an ideal with no generators needs its variables")
            variables = generators[0].variables
        variables = tuple(variables)
        for g in generators:
            if g.variables != variables:
                raise VariableMismatchError(f"{g.variables} vs {variables}")
        return cls(variables, tuple(generators))

    def __add__(self, other: "IdealQ") -> "IdealQ":
        if self.variables != other.variables:
            raise VariableMismatchError(f"{self.variables} vs {other.variables}")
        return IdealQ(self.variables, self.generators + other.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


class GroebnerBasis:
    """Reduced Groebner basis: monic, sorted by increasing leading monomial."""

    def __init__(self, variables: Tuple[str, ...], polys: List[MultiPolyQ], order: str, homogeneous: bool):
        self.variables = variables
        self.order = order
        self.homogeneous = homogeneous
        key = order_key(order)
        self.polys = sorted(polys, key=lambda p: key(p.leading_monomial(order)))

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [p.leading_monomial(self.order) for p in self.polys]

    def is_unit(self) -> bool:
        return any(p.degree == 0 for p in self.polys)

    def normal_form(self, p: MultiPolyQ) -> MultiPolyQ:
        return normal_form(p, self)

    def contains(self, p: MultiPolyQ) -> bool:
        return normal_form(p, self).is_zero()

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


def _reduce_terms(terms: Terms, divisors: List[Tuple[Monomial, Terms]], key) -> Terms:
    """Full reduction of terms by monic divisors (leading monomial, terms)."""
    p = dict(terms)
    remainder: Terms = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for g_lm, g in divisors:
            if divides(g_lm, lm):
                shift = mono_div(lm, g_lm)
                for m, a in g.items():
                    mm = mono_mul(m, shift)
                    value = p.get(mm, 0) - c * a
                    if value:
                        p[mm] = value
                    else:
                        p.pop(mm, None)
                break
        else:
            remainder[lm] = c
            del p[lm]
    return remainder


def _monic(terms: Terms, key) -> Tuple[Monomial, Terms]:
    lm = max(terms, key=key)
    lc = terms[lm]
    return lm, {m: c / lc for m, c in terms.items()}


def _spoly(f: Tuple[Monomial, Terms], g: Tuple[Monomial, Terms]) -> Terms:
    lcm = mono_lcm(f[0], g[0])
    out: Terms = {}
    for (lm, terms), sign in ((f, 1), (g, -1)):
        shift = mono_div(lcm, lm)
        for m, c in terms.items():
            mm = mono_mul(m, shift)
            value = out.get(mm, 0) + sign * c
            if value:
                out[mm] = value
            else:
                out.pop(mm, None)
    return out


def _linear_echelon(linear: List[MultiPolyQ], nvars: int) -> List[Terms]:
    """Reduced echelon form of degree <= 1 generators; the pivot is the leading variable."""
    ech = RowEchelon()
    # column nvars holds the constant term, so it is never a pivot unless the ideal is the unit ideal
    for p in linear:
        row: Dict[int, Fraction] = {}
        for m, c in p.terms.items():
            j = m.index(1) if sum(m) else nvars
            row[j] = c
        ech.add(row)
    out = []
    for pivot, row in sorted(ech.reduced_rows().items()):
        terms: Terms = {}
        for j, c in row.items():
            m = tuple(int(i == j) for i in range(nvars))
            terms[m] = c
        out.append(terms)
    return out


def buchberger(gens: Sequence[MultiPolyQ], order: str = "grevlex", variables: Sequence[str] = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by gens.

    Args:
        gens: generators, all over the same variables
        order: "grevlex" or "lex"
        variables: required only when gens is empty

    Returns:
        GroebnerBasis
    """
    ideal = IdealQ.of(list(gens), variables)
    variables = ideal.variables
    if not variables:
        raise PreconditionError("buchberger needs at least one variable")
    nvars = len(variables)
    key = order_key(order)
    homogeneous = ideal.is_homogeneous()

    nonzero = [g for g in ideal.generators if not g.is_zero()]
    linear = [g for g in nonzero if g.degree <= 1]
    other = [g for g in nonzero if g.degree > 1]

    basis: List[Tuple[Monomial, Terms]] = [_monic(t, key) for t in _linear_echelon(linear, nvars)]
    if any(sum(lm) == 0 for lm, _ in basis):
        logger.debug("unit ideal (constant among linear generators)")
        return GroebnerBasis(variables, [MultiPolyQ.constant(variables, 1)], order, homogeneous)
    n_linear = len(basis)

    for g in other:
        rem = _reduce_terms(g.terms, basis, key)
        if rem:
            basis.append(_monic(rem, key))

    pairs = [(i, j) for j in range(len(basis)) for i in range(j) if j >= n_linear]
    reductions = 0
    while pairs:
        # normal selection strategy: smallest lcm first
        pairs.sort(key=lambda ij: key(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])), reverse=True)
        i, j = pairs.pop()
        if coprime(basis[i][0], basis[j][0]):
            continue
        lcm = mono_lcm(basis[i][0], basis[j][0])
        # chain criterion
        if any(
            k not in (i, j)
            and divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        rem = _reduce_terms(_spoly(basis[i], basis[j]), basis, key)
        reductions += 1
        if not rem:
            continue
        new = _monic(rem, key)
        if sum(new[0]) == 0:
            logger.debug("unit ideal reached during completion")
            return GroebnerBasis(variables, [MultiPolyQ.constant(variables, 1)], order, homogeneous)
        basis.append(new)
        k = len(basis) - 1
        pairs.extend((i2, k) for i2 in range(k))

    reduced = _interreduce(basis, key)
    logger.debug(f"buchberger: {len(reduced)} basis elements after {reductions} S-polynomial reductions")
    return GroebnerBasis(variables, [MultiPolyQ(variables, t) for _, t in reduced], order, homogeneous)


def _interreduce(basis: List[Tuple[Monomial, Terms]], key) -> List[Tuple[Monomial, Terms]]:
    minimal = []
    for idx, (lm, terms) in enumerate(basis):
        redundant = any(
            divides(other_lm, lm) and (other_lm != lm or j < idx)
            for j, (other_lm, _) in enumerate(basis) if j != idx
        )
        if not redundant:
            minimal.append((lm, terms))
    out = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [g for j, g in enumerate(minimal) if j != idx]
        tail = {m: c for m, c in terms.items() if m != lm}
        tail = _reduce_terms(tail, others, key)
        tail[lm] = Fraction(1)
        out.append((lm, tail))
    return out


def normal_form(p: MultiPolyQ, G: GroebnerBasis) -> MultiPolyQ:
    """Remainder of p on division by G; irreducible by every leading monomial."""
    if p.variables != G.variables:
        raise VariableMismatchError(f"{p.variables} vs {G.variables}")
    key = order_key(G.order)
    divisors = [(g.leading_monomial(G.order), g.terms) for g in G.polys]
    return MultiPolyQ(p.variables, _reduce_terms(p.terms, divisors, key))


def contains_point(gens: Sequence[MultiPolyQ], point: Sequence) -> bool:
    """
    True iff every generator vanishes at the projective point.

    Raises:
        PreconditionError: the point is the zero vector
    """
    if not any(point):
        raise PreconditionError("the zero vector is not a projective point")
    return all(g.evaluate(point) == 0 for g in gens)
