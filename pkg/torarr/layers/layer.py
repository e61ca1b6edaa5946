"""
Canonical encoding of layers.

A layer is a connected component of an intersection of hypertori
H_i = {t : chi_{n_i}(t) = 1}. It is the coset of the subtorus cut out by the
saturated lattice Gamma-bar, and is recorded as that lattice (HNF basis)
together with the values, in Q/Z, that the layer's points give to each
basis character. Both parts are canonical, so dataclass equality is layer
equality.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

from torarr.errors import AmbientMismatchError, PreconditionError
from torarr.linalg import IntMatrix, Lattice, saturation, snf

logger = logging.getLogger(__name__)


def mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class Layer:
    """Subtorus coset: saturated direction lattice plus character values in [0, 1)."""
    direction: Lattice
    character: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.character) != self.direction.rank:
            raise PreconditionError(
                f"{len(self.character)} character values for a rank {self.direction.rank} lattice"
            )
        object.__setattr__(self, "character", tuple(mod1(Fraction(x)) for x in self.character))

    @property
    def rank(self) -> int:
        """Codimension in the torus."""
        return self.direction.rank

    @property
    def ambient_dim(self) -> int:
        return self.direction.ambient_dim

    def value(self, chi: Sequence[int]) -> Fraction:
        """
        The value in Q/Z of character chi on this layer.

        Raises:
            PreconditionError: chi is not constant on the layer
        """
        coords = self.direction.coordinates(chi)
        if coords is None:
            raise PreconditionError(f"character {tuple(chi)} is not constant on the layer")
        return mod1(sum((c * w for c, w in zip(coords, self.character)), Fraction(0)))

    def restrict(self, sub: Lattice) -> "Layer":
        """The unique layer with direction sub containing this one."""
        return Layer(sub, tuple(self.value(b) for b in sub.basis))

    def is_torsion_point(self) -> bool:
        return self.rank == self.ambient_dim

    def sort_key(self):
        return (self.rank, self.direction.basis, self.character)

    def __str__(self):
        chars = ",".join(str(c) for c in self.character)
        return f"{self.direction}[{chars}]"


def leq(W1: Layer, W2: Layer) -> bool:
    """W1 <= W2 in the poset of layers, i.e. W2 is contained in W1."""
    if W1.ambient_dim != W2.ambient_dim:
        raise AmbientMismatchError(f"layers in tori of rank {W1.ambient_dim} and {W2.ambient_dim}")
    if W1.rank > W2.rank:
        return False
    for b, w in zip(W1.direction.basis, W1.character):
        coords = W2.direction.coordinates(b)
        if coords is None:
            return False
        if mod1(sum((c * v for c, v in zip(coords, W2.character)), Fraction(0))) != w:
            return False
    return True


def full_torus(r: int) -> Layer:
    return Layer(Lattice.zero(r), ())


def components_of(N: IntMatrix, columns: Sequence[int]) -> List[Layer]:
    """
    Connected components of the intersection of the hypertori of the given columns.

    The characters of Gamma-bar that are trivial on Gamma = <N[S]> are read
    off the Smith form of the columns written in Gamma-bar coordinates.
    """
    r = N.nrows
    if not columns:
        return [full_torus(r)]
    gamma = Lattice.from_columns(N.select_columns(columns))
    closure = saturation(gamma)
    k = closure.rank
    coords = [closure.coordinates(c) for c in N.select_columns(columns).columns()]
    C = IntMatrix.from_columns(coords, k)
    dec = snf(C)
    diag = dec.diag
    U = dec.left.rows
    layers = []
    for t in product(*(range(d) for d in diag)):
        w = [Fraction(0)] * k
        for i, (ti, di) in enumerate(zip(t, diag)):
            if ti:
                for j in range(k):
                    w[j] += Fraction(ti * U[i][j], di)
        layers.append(Layer(closure, tuple(w)))
    return sorted(layers, key=Layer.sort_key)
