"""
Isomorphism of posets of layers and the intersection property (P).
"""

import logging
from collections import Counter
from itertools import combinations
from typing import Dict, Optional, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher

from torarr.errors import PreconditionError
from torarr.layers.poset import LayerPoset

logger = logging.getLogger(__name__)


def _signatures(P: LayerPoset) -> Dict[int, Tuple[int, int, int]]:
    hasse = P.hasse_diagram()
    return {v: (P.layers[v].rank, hasse.in_degree(v), hasse.out_degree(v)) for v in hasse.nodes}


def _shared_cover_profile(P: LayerPoset) -> Counter:
    """Multiset, per rank, of how many upper covers each pair of same-rank layers shares."""
    hasse = P.hasse_diagram()
    profile = Counter()
    for rank, group in enumerate(P.ranks):
        ups = {v: set(hasse.successors(v)) for v in group}
        for a, b in combinations(group, 2):
            profile[(rank, len(ups[a] & ups[b]))] += 1
    return profile


def invariants_match(P1: LayerPoset, P2: LayerPoset) -> bool:
    if P1.rank_profile() != P2.rank_profile():
        return False
    if Counter(_signatures(P1).values()) != Counter(_signatures(P2).values()):
        return False
    return _shared_cover_profile(P1) == _shared_cover_profile(P2)


def is_isomorphic(P1: LayerPoset, P2: LayerPoset) -> Optional[Dict[int, int]]:
    """
    Find an order isomorphism between two posets of layers.

    Returns:
        A bijection (layer index in P1 -> layer index in P2) preserving and
        reflecting the order, or None when there is none.
    """
    if not invariants_match(P1, P2):
        logger.debug("poset invariants differ")
        return None
    sig1, sig2 = _signatures(P1), _signatures(P2)
    H1, H2 = P1.hasse_diagram(), P2.hasse_diagram()
    for v in H1.nodes:
        H1.nodes[v]["sig"] = sig1[v]
    for v in H2.nodes:
        H2.nodes[v]["sig"] = sig2[v]
    matcher = DiGraphMatcher(H1, H2, node_match=lambda a, b: a["sig"] == b["sig"])
    for mapping in matcher.isomorphisms_iter():
        if _preserves_order(P1, P2, mapping):
            return dict(mapping)
    return None


def _preserves_order(P1: LayerPoset, P2: LayerPoset, mapping: Dict[int, int]) -> bool:
    n = len(P1)
    return all(
        P1.leq(i, j) == P2.leq(mapping[i], mapping[j])
        for i in range(n) for j in range(n)
    )


PARTITIONS_OF_FOUR = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _four_atoms(P: LayerPoset):
    atoms = P.atoms()
    if len(atoms) != 4 or P.ground_size != 4:
        raise PreconditionError(f"property (P) needs exactly 4 atoms, got {len(atoms)}")


def split_holds(P: LayerPoset, first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    """
    Does every component of H_i n H_j meet every component of H_k n H_l?

    Args:
        first, second: complementary 1-based column pairs, e.g. (1, 2) and (3, 4)
    """
    _four_atoms(P)
    if sorted(first + second) != [1, 2, 3, 4]:
        raise PreconditionError(f"{first} and {second} do not split the four hypertori")
    H = P.hypertori
    (i, j), (k, l) = first, second
    left = P.min_upper_bounds(H[i - 1], H[j - 1])
    right = P.min_upper_bounds(H[k - 1], H[l - 1])
    return all(P.min_upper_bounds(a, b) for a in left for b in right)


def property_P(P: LayerPoset) -> Tuple[bool, Optional[Tuple[Tuple[int, int], Tuple[int, int]]]]:
    """
    Is there a split {i,j} + {k,l} of the four hypertori such that every
    component of H_i n H_j meets every component of H_k n H_l?

    Returns:
        (holds, witness) with the witness as 1-based column pairs.

    Raises:
        PreconditionError: the poset does not have exactly 4 atoms
    """
    _four_atoms(P)
    for (i, j), (k, l) in PARTITIONS_OF_FOUR:
        witness = ((i + 1, j + 1), (k + 1, l + 1))
        if split_holds(P, *witness):
            logger.info(f"property (P) holds with split {witness}")
            return True, witness
    return False, None
