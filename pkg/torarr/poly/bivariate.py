"""
Integer polynomials in x, y: arithmetic Tutte polynomials and their
specialization to Poincaré polynomials.
"""

import logging
from typing import Dict, Tuple

from torarr.errors import InvalidMatroidError
from torarr.poly.univariate import UniPolyZ, format_terms

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int]


class BivariatePolyZ:
    """Sparse map (i, j) -> coefficient of x^i y^j; zeros never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Exponent, int] = None):
        self.terms: Dict[Exponent, int] = {
            (int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c
        }

    @classmethod
    def x(cls) -> "BivariatePolyZ":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolyZ":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: int) -> "BivariatePolyZ":
        return cls({(0, 0): c})

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "BivariatePolyZ":
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolyZ({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other) -> "BivariatePolyZ":
        other = _coerce(other)
        out: Dict[Exponent, int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivariatePolyZ":
        result = BivariatePolyZ.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolyZ.constant(other)
        return isinstance(other, BivariatePolyZ) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BivariatePolyZ({self.terms})"

    def __str__(self):
        ordered = sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        return format_terms(ordered, names=("x", "y"))

    def to_json(self) -> list:
        """[[i, j, coefficient], ...] in display order."""
        ordered = sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
        return [[i, j, c] for (i, j), c in ordered]


def _coerce(value) -> BivariatePolyZ:
    if isinstance(value, BivariatePolyZ):
        return value
    if isinstance(value, int):
        return BivariatePolyZ.constant(value)
    raise TypeError(f"cannot combine BivariatePolyZ with {type(value).__name__}")


def tutte_to_poincare(T: BivariatePolyZ, r: int) -> UniPolyZ:
    """
    P(t) = t^r * T((2t + 1) / t, 0).

    Args:
        T: arithmetic Tutte polynomial
        r: rank of the ambient torus

    Raises:
        InvalidMatroidError: some x-power exceeds r
    """
    result = UniPolyZ()
    two_t_plus_one = UniPolyZ([1, 2])
    for (i, j), c in T.terms.items():
        if j:
            continue
        if i > r:
            raise InvalidMatroidError(f"x^{i} with r = {r}")
        result = result + (two_t_plus_one ** i).shift(r - i) * c
    logger.debug(f"tutte_to_poincare({T}, r={r}) = {result}")
    return result
