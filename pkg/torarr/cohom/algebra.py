"""
Graded-commutative algebras over Q given by generators and relations,
computed one degree at a time.

F_d is the degree-d part of the free graded-commutative algebra on the
generators, with monomials written as sorted tuples of generator indices.
R_d is spanned by every relation times every monomial of complementary
degree, and H^d = F_d / R_d. Standard monomials (the non-pivot columns of
the echelon form of R_d) give the quotient basis.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from torarr.config import get_settings
from torarr.errors import GuardExceededError, NotHomogeneousError, PreconditionError
from torarr.linalg import RowEchelon

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
FreeTerms = Dict[Monomial, Fraction]

TORUS_NAMES = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class OmegaSmall:
    """omega_i of the integral presentation."""
    index: int

    @property
    def degree(self) -> int:
        return 1

    def __str__(self):
        return f"omega{self.index + 1}"


@dataclass(frozen=True)
class Torus:
    """theta_j, the j-th coordinate class of H^1 of the ambient torus."""
    index: int

    @property
    def degree(self) -> int:
        return 1

    def __str__(self):
        return TORUS_NAMES[self.index] if self.index < len(TORUS_NAMES) else f"theta{self.index + 1}"


@dataclass(frozen=True)
class OmegaBar:
    """omega-bar_{W,S}: W a component of the intersection of the hypertori in S."""
    layer: int
    subset: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.subset)

    def __str__(self):
        cols = ",".join(str(i + 1) for i in self.subset)
        return f"wbar[{self.layer}|{cols}]"


GeneratorLabel = Union[OmegaSmall, Torus, OmegaBar]


@dataclass
class Relation:
    degree: int
    terms: FreeTerms
    provenance: str = ""


def mono_product(a: Monomial, b: Monomial, degrees: Sequence[int]) -> Tuple[int, Optional[Monomial]]:
    """
    Product of two normal-form monomials.

    Returns:
        (sign, monomial), or (0, None) when a repeated odd generator kills it
    """
    sign = 1
    for x in a:
        if degrees[x] % 2 == 0:
            continue
        for y in b:
            if y < x and degrees[y] % 2:
                sign = -sign
    merged = tuple(sorted(a + b))
    for u, v in zip(merged, merged[1:]):
        if u == v and degrees[u] % 2:
            return 0, None
    return sign, merged


def free_mul(a: FreeTerms, b: FreeTerms, degrees: Sequence[int]) -> FreeTerms:
    out: FreeTerms = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            s, m = mono_product(m1, m2, degrees)
            if s:
                value = out.get(m, 0) + s * c1 * c2
                if value:
                    out[m] = value
                else:
                    out.pop(m, None)
    return out


def free_add(a: FreeTerms, b: FreeTerms, scale: Fraction = Fraction(1)) -> FreeTerms:
    out = dict(a)
    for m, c in b.items():
        value = out.get(m, 0) + scale * c
        if value:
            out[m] = value
        else:
            out.pop(m, None)
    return out


def free_degree(terms: FreeTerms, degrees: Sequence[int]) -> Optional[int]:
    """Common degree of the terms, None for zero."""
    found = {sum(degrees[g] for g in m) for m in terms}
    if not found:
        return None
    if len(found) > 1:
        raise NotHomogeneousError(f"terms of degrees {sorted(found)}")
    return found.pop()


class GradedAlgebraQ:
    """
    Quotient of a free graded-commutative algebra by homogeneous relations.

    The generator tuple fixes the total order used for normal forms.
    psi_images, when given, expresses psi_i in the generators.
    """

    def __init__(
        self,
        generators: Sequence[GeneratorLabel],
        top_degree: int,
        name: str = "",
        psi_images: Optional[Sequence[FreeTerms]] = None,
        max_generators: int = None,
        force: bool = False,
    ):
        limit = max_generators if max_generators is not None else get_settings().max_generators
        if len(generators) > limit and not force:
            raise GuardExceededError("generator count", len(generators), limit)
        self.generators: Tuple[GeneratorLabel, ...] = tuple(generators)
        self.degrees: Tuple[int, ...] = tuple(g.degree for g in self.generators)
        self.top_degree = top_degree
        self.name = name
        self.psi_images: List[FreeTerms] = [dict(p) for p in (psi_images or [])]
        self.relations: List[Relation] = []
        self._gen_index = {g: i for i, g in enumerate(self.generators)}
        self._monomials: Dict[int, List[Monomial]] = {}
        self._columns: Dict[int, Dict[Monomial, int]] = {}
        self._echelon: Dict[int, RowEchelon] = {}

    # -- construction ------------------------------------------------------

    def add_relation(self, terms: FreeTerms, provenance: str = "") -> bool:
        """Record a homogeneous relation; zero relations are dropped."""
        terms = {m: Fraction(c) for m, c in terms.items() if c}
        degree = free_degree(terms, self.degrees)
        if degree is None:
            return False
        self.relations.append(Relation(degree, terms, provenance))
        self._echelon.clear()
        return True

    def with_relations(self, extra: Sequence[FreeTerms], name: str, provenance: str = "") -> "GradedAlgebraQ":
        other = GradedAlgebraQ(
            self.generators, self.top_degree, name, self.psi_images,
            max_generators=len(self.generators), force=True,
        )
        other.relations = list(self.relations)
        for terms in extra:
            other.add_relation(terms, provenance)
        return other

    # -- free algebra ------------------------------------------------------

    def index_of(self, label: GeneratorLabel) -> int:
        try:
            return self._gen_index[label]
        except KeyError:
            raise PreconditionError(f"{label} is not a generator of {self.name or 'this algebra'}")

    def monomials(self, d: int) -> List[Monomial]:
        """Normal-form monomials of degree d, in generator order."""
        if d not in self._monomials:
            out: List[Monomial] = []
            degrees = self.degrees

            def extend(start: int, remaining: int, prefix: Tuple[int, ...]):
                if remaining == 0:
                    out.append(prefix)
                    return
                for g in range(start, len(degrees)):
                    dg = degrees[g]
                    if dg > remaining:
                        continue
                    if dg % 2:
                        extend(g + 1, remaining - dg, prefix + (g,))
                    else:
                        extend(g, remaining - dg, prefix + (g,))

            extend(0, d, ())
            self._monomials[d] = out
            self._columns[d] = {m: i for i, m in enumerate(out)}
        return self._monomials[d]

    def column(self, d: int) -> Dict[Monomial, int]:
        self.monomials(d)
        return self._columns[d]

    def relation_rows(self, d: int) -> Iterator[FreeTerms]:
        """Every relation times every monomial of complementary degree."""
        for rel in self.relations:
            if rel.degree > d:
                continue
            for m in self.monomials(d - rel.degree):
                row = free_mul(rel.terms, {m: Fraction(1)}, self.degrees)
                if row:
                    yield row

    def relation_space(self, d: int) -> RowEchelon:
        if d not in self._echelon:
            col = self.column(d)
            ech = RowEchelon()
            for row in self.relation_rows(d):
                ech.add({col[m]: c for m, c in row.items()})
            self._echelon[d] = ech
            logger.debug(f"{self.name} R_{d}: rank {ech.rank} in dim {len(col)}")
        return self._echelon[d]

    # -- invariants --------------------------------------------------------

    def graded_dimension(self, d: int) -> int:
        if d < 0 or d > self.top_degree:
            raise PreconditionError(f"degree {d} outside 0..{self.top_degree}")
        return len(self.monomials(d)) - self.relation_space(d).rank

    def graded_dimensions(self) -> List[int]:
        return [self.graded_dimension(d) for d in range(self.top_degree + 1)]

    def quotient_basis(self, d: int) -> List[Monomial]:
        pivots = set(self.relation_space(d).pivots)
        return [m for i, m in enumerate(self.monomials(d)) if i not in pivots]

    def reduce(self, d: int, terms: FreeTerms) -> FreeTerms:
        """Normal form modulo R_d, supported on standard monomials."""
        if d > self.top_degree:
            return {}
        col = self.column(d)
        mons = self.monomials(d)
        rem = self.relation_space(d).reduce({col[m]: c for m, c in terms.items()})
        return {mons[i]: c for i, c in rem.items()}

    def quotient_coordinates(self, element: "CohomElement") -> Tuple[Fraction, ...]:
        """Coordinates of an element in quotient_basis(element.degree)."""
        reduced = self.reduce(element.degree, element.terms)
        return tuple(reduced.get(m, Fraction(0)) for m in self.quotient_basis(element.degree))

    # -- elements ----------------------------------------------------------

    def element(self, terms: FreeTerms, degree: Optional[int] = None) -> "CohomElement":
        found = free_degree(terms, self.degrees)
        if degree is None:
            if found is None:
                raise PreconditionError("the degree of a zero element must be given")
            degree = found
        elif found is not None and found != degree:
            raise NotHomogeneousError(f"terms of degree {found} given degree {degree}")
        return CohomElement(self, degree, terms)

    def one(self) -> "CohomElement":
        return CohomElement(self, 0, {(): Fraction(1)})

    def zero(self, degree: int) -> "CohomElement":
        return CohomElement(self, degree, {})

    def generator(self, label: Union[GeneratorLabel, str]) -> "CohomElement":
        """Generator by label object or by its printed name (e.g. 'omega1', 'alpha', 'psi2')."""
        if isinstance(label, str):
            if label.startswith("psi"):
                return self.psi(int(label[3:]) - 1)
            matches = [g for g in self.generators if str(g) == label]
            if not matches:
                raise PreconditionError(f"no generator named {label!r}")
            label = matches[0]
        i = self.index_of(label)
        return CohomElement(self, self.degrees[i], {(i,): Fraction(1)})

    def psi(self, i: int) -> "CohomElement":
        """psi_i, the class of the i-th defining character."""
        if not 0 <= i < len(self.psi_images):
            raise PreconditionError(f"psi index {i + 1} outside 1..{len(self.psi_images)}")
        return CohomElement(self, 1, self.psi_images[i])

    def multiply(self, x: "CohomElement", y: "CohomElement") -> "CohomElement":
        if x.algebra is not self or y.algebra is not self:
            raise PreconditionError("elements belong to a different algebra")
        degree = x.degree + y.degree
        if degree > self.top_degree:
            return self.zero(degree)
        return CohomElement(self, degree, free_mul(x.terms, y.terms, self.degrees))

    def multiplication_rank(self, p: int, q: int) -> int:
        """Rank of H^p (x) H^q -> H^(p+q)."""
        if p + q > self.top_degree:
            raise PreconditionError(f"p + q = {p + q} exceeds the top degree {self.top_degree}")
        target = RowEchelon()
        col = self.column(p + q)
        for a in self.quotient_basis(p):
            for b in self.quotient_basis(q):
                s, m = mono_product(a, b, self.degrees)
                if not s:
                    continue
                reduced = self.reduce(p + q, {m: Fraction(s)})
                target.add({col[k]: c for k, c in reduced.items()})
        return target.rank

    def describe(self, terms: FreeTerms) -> str:
        if not terms:
            return "0"
        pieces = []
        for m, c in sorted(terms.items()):
            mono = "*".join(str(self.generators[g]) for g in m) or "1"
            pieces.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(pieces)


@dataclass
class CohomElement:
    """Homogeneous element; equality and zero tests are taken modulo the relations."""
    algebra: GradedAlgebraQ
    degree: int
    terms: FreeTerms = field(default_factory=dict)

    __hash__ = None

    def _same(self, other: "CohomElement"):
        if other.algebra is not self.algebra:
            raise PreconditionError("elements belong to different algebras")
        if other.degree != self.degree and other.terms and self.terms:
            raise NotHomogeneousError(f"adding degrees {self.degree} and {other.degree}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        degree = self.degree if self.terms else other.degree
        return CohomElement(self.algebra, degree, free_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return CohomElement(self.algebra, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohomElement(
                self.algebra, self.degree,
                {m: c * other for m, c in self.terms.items() if c * other},
            )
        return self.algebra.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def normal_form(self) -> FreeTerms:
        return self.algebra.reduce(self.degree, self.terms)

    def is_zero(self) -> bool:
        return not self.normal_form()

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, CohomElement):
            return NotImplemented
        return (self - other).is_zero()

    def __str__(self):
        return self.algebra.describe(self.terms)
