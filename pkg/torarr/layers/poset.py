"""
The poset of layers S(A) of a central toric arrangement.

Layers are stored in canonical order (rank, direction basis, character),
so two enumerations of the same matrix produce identical posets no matter
in which order the column subsets were visited.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from torarr.errors import PreconditionError
from torarr.layers.layer import Layer, components_of, leq
from torarr.linalg import IntMatrix
from torarr.matroid.subsets import check_ground_guard, label, members

logger = logging.getLogger(__name__)


class LayerPoset:
    """
    Graded poset of layers ordered by reverse inclusion.

    Elements are addressed by their index in the canonical layer order;
    index 0 is the full torus.
    """

    def __init__(self, matrix: IntMatrix, layers: Sequence[Layer], components: Dict[int, Tuple[int, ...]]):
        self.matrix = matrix
        self.layers: Tuple[Layer, ...] = tuple(layers)
        self.index: Dict[Layer, int] = {W: i for i, W in enumerate(self.layers)}
        self._components = components
        self.ground_size = matrix.ncols

        top = max((W.rank for W in self.layers), default=0)
        self.ranks: List[List[int]] = [[] for _ in range(top + 1)]
        for i, W in enumerate(self.layers):
            self.ranks[W.rank].append(i)

        # strict upper sets
        self.above: List[FrozenSet[int]] = []
        for i, W in enumerate(self.layers):
            ups = frozenset(
                j for j in range(len(self.layers))
                if self.layers[j].rank > W.rank and leq(W, self.layers[j])
            )
            self.above.append(ups)
        self.below: List[FrozenSet[int]] = [
            frozenset(i for i in range(len(self.layers)) if j in self.above[i])
            for j in range(len(self.layers))
        ]
        # H_i is the component through the identity of the i-th hypertorus
        self.hypertori: Tuple[int, ...] = tuple(
            min(components[1 << i], key=lambda k: any(self.layers[k].character))
            for i in range(self.ground_size)
        )
        self._hasse: Optional[nx.DiGraph] = None

    def __len__(self):
        return len(self.layers)

    @property
    def rank(self) -> int:
        return len(self.ranks) - 1

    def rank_profile(self) -> List[int]:
        return [len(group) for group in self.ranks]

    def atoms(self) -> List[int]:
        return list(self.ranks[1]) if len(self.ranks) > 1 else []

    def leq(self, i: int, j: int) -> bool:
        return i == j or j in self.above[i]

    def components(self, columns: Iterable[int]) -> Tuple[int, ...]:
        """Indices of the connected components of the intersection of the given hypertori."""
        mask = 0
        for c in columns:
            mask |= 1 << c
        return self._components[mask]

    def _up(self, i: int) -> Set[int]:
        return set(self.above[i]) | {i}

    def _down(self, i: int) -> Set[int]:
        return set(self.below[i]) | {i}

    def min_upper_bounds(self, a: int, b: int) -> FrozenSet[int]:
        """a v b: minimal common upper bounds, possibly empty."""
        common = self._up(a) & self._up(b)
        return frozenset(x for x in common if not (self.below[x] & common))

    def max_lower_bounds(self, a: int, b: int) -> FrozenSet[int]:
        common = self._down(a) & self._down(b)
        return frozenset(x for x in common if not (self.above[x] & common))

    def hasse_diagram(self) -> nx.DiGraph:
        """Cover relations as edges from the smaller to the larger layer."""
        if self._hasse is None:
            order = nx.DiGraph()
            for i in range(len(self.layers)):
                order.add_node(i, rank=self.layers[i].rank)
            for i, ups in enumerate(self.above):
                order.add_edges_from((i, j) for j in ups)
            hasse = nx.transitive_reduction(order)
            hasse.add_nodes_from(order.nodes(data=True))
            self._hasse = hasse
        return self._hasse

    def covers(self) -> List[Tuple[int, int]]:
        return sorted(self.hasse_diagram().edges())

    def describe(self, i: int) -> str:
        if i in self.hypertori:
            return f"H{self.hypertori.index(i) + 1}"
        return f"r{self.layers[i].rank}.{self.ranks[self.layers[i].rank].index(i)}"


def enumerate_layers(
    N: IntMatrix,
    max_subsets: int = None,
    force: bool = False,
    subset_order: Optional[Sequence[int]] = None,
) -> LayerPoset:
    """
    Build S(A) for the arrangement of the columns of N.

    Args:
        N: r x n integer matrix without zero columns
        max_subsets: ground size guard, defaults to the configured value
        force: ignore the guard
        subset_order: permutation of the subset masks to visit

    Raises:
        GuardExceededError: n exceeds the guard
        PreconditionError: N has a zero column
    """
    n = N.ncols
    check_ground_guard(n, max_subsets, force)
    for j, col in enumerate(N.columns()):
        if not any(col):
            raise PreconditionError(f"column {j + 1} is zero and defines no hypertorus")

    masks = list(range(1 << n)) if subset_order is None else list(subset_order)
    if sorted(masks) != list(range(1 << n)):
        raise PreconditionError("subset_order must visit every subset exactly once")

    per_subset: Dict[int, List[Layer]] = {}
    seen: Set[Layer] = set()
    for mask in masks:
        comps = components_of(N, members(mask))
        per_subset[mask] = comps
        seen.update(comps)
        logger.debug(f"subset {label(mask)}: {len(comps)} components")

    layers = sorted(seen, key=Layer.sort_key)
    index = {W: i for i, W in enumerate(layers)}
    components = {mask: tuple(sorted(index[W] for W in comps)) for mask, comps in per_subset.items()}
    poset = LayerPoset(N, layers, components)
    logger.info(f"poset of layers: {len(layers)} layers, rank profile {poset.rank_profile()}")
    return poset
