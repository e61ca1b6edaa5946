"""
Component groups LG(I): the connected components of the intersection of the
hypertori in I, with the group law induced by the torus (characters add).
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from torarr.errors import PreconditionError
from torarr.layers.layer import Layer, components_of
from torarr.linalg import FiniteAbelianGroup, IntMatrix, Lattice, quotient_group, saturation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentGroup:
    """LG(I) as a set of layers sharing one direction lattice."""
    subset: Tuple[int, ...]
    direction: Lattice
    group: FiniteAbelianGroup
    elements: Tuple[Layer, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Layer:
        return Layer(self.direction, (0,) * self.direction.rank)

    def _check(self, W: Layer):
        if W.direction != self.direction:
            raise PreconditionError(f"layer {W} is not a component for the subset {self.subset}")

    def add(self, W1: Layer, W2: Layer) -> Layer:
        self._check(W1)
        self._check(W2)
        return Layer(self.direction, tuple(a + b for a, b in zip(W1.character, W2.character)))

    def negate(self, W: Layer) -> Layer:
        self._check(W)
        return Layer(self.direction, tuple(-a for a in W.character))

    def multiple(self, W: Layer, k: int) -> Layer:
        self._check(W)
        return Layer(self.direction, tuple(k * a for a in W.character))

    def element_order(self, W: Layer) -> int:
        k, current = 1, W
        while current != self.identity:
            current = self.add(current, W)
            k += 1
        return k

    def subgroup_generated(self, generators: Iterable[Layer]) -> FrozenSet[Layer]:
        found = {self.identity}
        frontier = [self.identity]
        gens = list(generators)
        for g in gens:
            self._check(g)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.add(x, g)
                if y not in found:
                    found.add(y)
                    frontier.append(y)
        return frozenset(found)


def component_group(N: IntMatrix, subset: Sequence[int]) -> ComponentGroup:
    """
    LG(I) for the columns in subset (0-based).

    The order of the group is the multiplicity m(I).
    """
    subset = tuple(sorted(subset))
    elements = tuple(components_of(N, subset))
    direction = elements[0].direction
    gamma = Lattice.from_columns(N.select_columns(subset)) if subset else Lattice.zero(N.nrows)
    group = quotient_group(saturation(gamma), gamma)
    return ComponentGroup(subset, direction, group, elements)


@dataclass
class Projection:
    """pi: LG(J) -> LG(I) for I a subset of J, sending a component to the one containing it."""
    source: ComponentGroup
    target: ComponentGroup
    mapping: Dict[Layer, Layer]

    def __call__(self, W: Layer) -> Layer:
        return self.mapping[W]

    def kernel(self) -> FrozenSet[Layer]:
        e = self.target.identity
        return frozenset(W for W, image in self.mapping.items() if image == e)

    def is_bijective(self) -> bool:
        return len(set(self.mapping.values())) == self.source.order == self.target.order


def projection(N: IntMatrix, J: Sequence[int], I: Sequence[int]) -> Projection:
    """
    Raises:
        PreconditionError: I is not contained in J
    """
    if not set(I) <= set(J):
        raise PreconditionError(f"projection needs I within J, got I={sorted(I)} J={sorted(J)}")
    source = component_group(N, J)
    target = component_group(N, I)
    mapping = {W: W.restrict(target.direction) for W in source.elements}
    return Projection(source, target, mapping)


def projection_kernel(N: IntMatrix, I: Sequence[int], J: Sequence[int] = None) -> FrozenSet[Layer]:
    """ker(LG(J) -> LG(I)); J defaults to all columns."""
    if J is None:
        J = range(N.ncols)
    return projection(N, J, I).kernel()


def commuting_iso_exists(N: IntMatrix, I: Sequence[int], J: Sequence[int]) -> bool:
    """Is there an isomorphism LG(I) -> LG(J) compatible with the projections from LG([n])?"""
    return projection_kernel(N, I) == projection_kernel(N, J)


def lg_kernel_table(N: IntMatrix) -> Dict[Tuple[int, int], FrozenSet[Layer]]:
    """Kernel of LG([n]) -> LG(I) for every 2-subset I (0-based keys)."""
    full = component_group(N, range(N.ncols))
    table = {}
    for pair in combinations(range(N.ncols), 2):
        target = component_group(N, pair)
        table[pair] = frozenset(
            W for W in full.elements if W.restrict(target.direction) == target.identity
        )
    return table


def transfer_map(N: IntMatrix, I: Sequence[int], J: Sequence[int]) -> Dict[Layer, Layer]:
    """
    The isomorphism phi: LG(I) -> LG(J) with phi . pi_I = pi_J.

    Raises:
        PreconditionError: the projection kernels differ
    """
    full = range(N.ncols)
    pi_I = projection(N, full, I)
    pi_J = projection(N, full, J)
    if pi_I.kernel() != pi_J.kernel():
        raise PreconditionError(f"kernels of the projections to {sorted(I)} and {sorted(J)} differ")
    phi: Dict[Layer, Layer] = {}
    for W in pi_I.source.elements:
        phi.setdefault(pi_I(W), pi_J(W))
    return phi
