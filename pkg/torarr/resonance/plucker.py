"""
Planes in H^1 and their Plücker coordinates.

Coordinates x_ij (i < j) are listed in lexicographic order of the pairs;
a plane spanned by u and v has x_ij = u_i v_j - u_j v_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import List, Sequence, Tuple

from torarr.errors import NotDecomposableError, PreconditionError
from torarr.linalg import rref
from torarr.poly import IdealQ, MultiPolyQ

Vector = Tuple[Fraction, ...]


def pairs(m: int) -> List[Tuple[int, int]]:
    """0-based index pairs i < j in lexicographic order."""
    return list(combinations(range(m), 2))


def plucker_variables(m: int) -> Tuple[str, ...]:
    sep = "" if m < 10 else "_"
    return tuple(f"x{i + 1}{sep}{j + 1}" for i, j in pairs(m))


def dimension_from_coordinates(count: int) -> int:
    """m with m(m-1)/2 = count."""
    m = (1 + isqrt(1 + 8 * count)) // 2
    if m * (m - 1) // 2 != count:
        raise PreconditionError(f"{count} is not a number of Plücker coordinates")
    return m


@dataclass(frozen=True)
class PluckerPoint:
    coords: Vector

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not any(coords):
            raise PreconditionError("the zero vector is not a Plücker point")
        object.__setattr__(self, "coords", coords)

    @property
    def dimension(self) -> int:
        return dimension_from_coordinates(len(self.coords))

    def normalized(self) -> Vector:
        """Scaled so that the first nonzero coordinate is 1."""
        lead = next(c for c in self.coords if c)
        return tuple(c / lead for c in self.coords)

    def projectively_equal(self, other: "PluckerPoint") -> bool:
        return self.normalized() == other.normalized()

    def skew_matrix(self) -> List[List[Fraction]]:
        m = self.dimension
        X = [[Fraction(0)] * m for _ in range(m)]
        for (i, j), c in zip(pairs(m), self.coords):
            X[i][j] = c
            X[j][i] = -c
        return X

    def is_decomposable(self) -> bool:
        X = self.skew_matrix()
        return all(
            X[i][j] * X[k][l] - X[i][k] * X[j][l] + X[i][l] * X[j][k] == 0
            for i, j, k, l in combinations(range(self.dimension), 4)
        )

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class Plane:
    """
    Two-dimensional subspace of Q^m, stored as its reduced echelon basis so
    that equal subspaces compare equal.
    """
    basis: Tuple[Vector, Vector]

    @classmethod
    def span(cls, u: Sequence, v: Sequence) -> "Plane":
        if len(u) != len(v):
            raise PreconditionError(f"vectors of lengths {len(u)} and {len(v)}")
        canonical = rref([u, v], len(u))
        if len(canonical) != 2:
            raise PreconditionError("the spanning vectors are dependent")
        return cls(canonical)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0])

    def plucker(self) -> PluckerPoint:
        u, v = self.basis
        return PluckerPoint(tuple(u[i] * v[j] - u[j] * v[i] for i, j in pairs(len(u))))

    def contains(self, w: Sequence) -> bool:
        return len(rref(list(self.basis) + [w], self.ambient_dim)) == 2

    def __str__(self):
        return "<" + ", ".join("(" + ",".join(str(x) for x in b) + ")" for b in self.basis) + ">"


def plane_from_plucker(p: PluckerPoint) -> Plane:
    """
    The plane whose Plücker coordinates are p.

    Rows a and b of the skew matrix span the plane whenever x_ab != 0.

    Raises:
        NotDecomposableError: p violates a Pfaffian quadric
    """
    if not p.is_decomposable():
        raise NotDecomposableError(f"{p} is not a decomposable tensor")
    X = p.skew_matrix()
    m = p.dimension
    a, b = next((i, j) for (i, j), c in zip(pairs(m), p.coords) if c)
    return Plane.span(X[a], X[b])


def grassmann_pfaffian_ideal(m: int) -> IdealQ:
    """The 4x4 principal Pfaffians x_ij x_kl - x_ik x_jl + x_il x_jk, i<j<k<l."""
    if m < 2:
        raise PreconditionError(f"Gr(2, {m}) needs m >= 2")
    variables = plucker_variables(m)
    index = {pair: n for n, pair in enumerate(pairs(m))}

    def x(i, j):
        return MultiPolyQ.variable(variables, variables[index[(i, j)]])

    quadrics = [
        x(i, j) * x(k, l) - x(i, k) * x(j, l) + x(i, l) * x(j, k)
        for i, j, k, l in combinations(range(m), 4)
    ]
    return IdealQ.of(quadrics, variables)
