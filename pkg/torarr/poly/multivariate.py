"""
Sparse multivariate polynomials with exact rational coefficients.
"""

from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from torarr.errors import PreconditionError, VariableMismatchError
from torarr.poly.univariate import format_terms

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, Fraction]
Scalar = Union[int, Fraction]


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


TERM_ORDERS: Dict[str, Callable[[Monomial], tuple]] = {
    "grevlex": grevlex_key,
    "lex": lex_key,
}


def order_key(order: str) -> Callable[[Monomial], tuple]:
    try:
        return TERM_ORDERS[order]
    except KeyError:
        raise PreconditionError(f"unknown term order {order!r}; use one of {sorted(TERM_ORDERS)}")


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MultiPolyQ:
    """
    Polynomial over Q in named variables.

    The variable tuple is part of the value: combining polynomials over
    different variable tuples raises VariableMismatchError.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Dict[Monomial, Scalar]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        nvars = len(self.variables)
        clean: Terms = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise PreconditionError(f"monomial {m} for {nvars} variables")
            if any(e < 0 for e in m):
                raise PreconditionError(f"negative exponent in {m}")
            if c:
                clean[tuple(m)] = Fraction(c)
        self.terms = clean

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPolyQ":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> "MultiPolyQ":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPolyQ":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"{name!r} is not one of {variables}")
        i = variables.index(name)
        return cls(variables, {tuple(int(j == i) for j in range(len(variables))): 1})

    @classmethod
    def linear(cls, variables: Sequence[str], coeffs: Sequence[Scalar]) -> "MultiPolyQ":
        n = len(variables)
        return cls(variables, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    def _check(self, other: "MultiPolyQ"):
        if self.variables != other.variables:
            raise VariableMismatchError(f"{self.variables} vs {other.variables}")

    def _coerce(self, other) -> "MultiPolyQ":
        if isinstance(other, MultiPolyQ):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPolyQ.constant(self.variables, other)
        raise TypeError(f"cannot combine MultiPolyQ with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "MultiPolyQ":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPolyQ(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolyQ(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPolyQ":
        if isinstance(other, (int, Fraction)):
            return MultiPolyQ(self.variables, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: Terms = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + a * b
        return MultiPolyQ(self.variables, out)

    __rmul__ = __mul__

    def __call__(self, point: Sequence[Scalar]) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != len(self.variables):
            raise VariableMismatchError(f"point of length {len(point)} for {len(self.variables)} variables")
        total = Fraction(0)
        for m, c in self.terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value *= Fraction(x) ** e
            total += value
        return total

    @property
    def degree(self) -> int:
        """Total degree, -1 for zero."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self, order: str = "grevlex") -> Monomial:
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading monomial")
        return max(self.terms, key=order_key(order))

    def leading_coefficient(self, order: str = "grevlex") -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "grevlex") -> "MultiPolyQ":
        return self * (1 / self.leading_coefficient(order))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPolyQ.constant(self.variables, other)
        return (
            isinstance(other, MultiPolyQ)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPolyQ({self})"

    def __str__(self):
        key = grevlex_key
        ordered = sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=True)
        return format_terms(ordered, names=self.variables)
