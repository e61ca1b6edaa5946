"""
Tests for layers, the poset of layers, poset isomorphism and property (P).
"""

from fractions import Fraction
from itertools import product

import pytest

from torarr.errors import AmbientMismatchError, PreconditionError
from torarr.layers import (
    Layer,
    components_of,
    enumerate_layers,
    full_torus,
    hasse_dot,
    is_isomorphic,
    leq,
    property_P,
    split_holds,
)
from torarr.linalg import IntMatrix, Lattice
from torarr.matroid import from_matrix
from torarr.matroid.subsets import members


@pytest.fixture(scope="module")
def poset_A71(A71):
    return enumerate_layers(A71)


@pytest.fixture(scope="module")
def poset_A72(A72):
    return enumerate_layers(A72)


def test_layer_character_reduced_mod_one():
    L = Lattice.from_generators([(1, 0)], 2)
    assert Layer(L, (Fraction(3, 2),)) == Layer(L, (Fraction(1, 2),))
    assert Layer(L, (Fraction(-1, 5),)).character == (Fraction(4, 5),)
    with pytest.raises(PreconditionError):
        Layer(L, ())


def test_layer_value():
    W = Layer(Lattice.ambient(2), (Fraction(1, 2), 0))
    assert W.value((2, 0)) == 0
    assert W.value((1, 1)) == Fraction(1, 2)
    assert W.is_torsion_point()
    line = Layer(Lattice.from_generators([(1, 0)], 2), (0,))
    with pytest.raises(PreconditionError):
        line.value((0, 1))


def test_components_of_a_pair(N):
    comps = components_of(N, (0, 1))
    assert len(comps) == 5
    assert len(set(comps)) == 5
    assert all(W.rank == 2 for W in comps)
    assert components_of(N, ()) == [full_torus(3)]


def test_leq_rejects_different_ambients():
    with pytest.raises(AmbientMismatchError):
        leq(full_torus(2), full_torus(3))


@pytest.mark.parametrize("name,profile", [
    ("A71", [1, 3, 7]),
    ("A72", [1, 3, 7]),
    ("N", [1, 4, 30, 25]),
    ("N_prime", [1, 4, 30, 25]),
    ("N_second", [1, 4, 6, 1]),
])
def test_rank_profiles(name, profile, request):
    P = enumerate_layers(request.getfixturevalue(name))
    assert P.rank_profile() == profile
    assert P.ranks[0] == [0]
    assert len(P.atoms()) == len(P.hypertori)


def test_component_counts_match_multiplicities(N, poset_N):
    M = from_matrix(N)
    for mask in range(16):
        assert len(poset_N.components(members(mask))) == M.m(mask)


def test_leq_is_a_partial_order(poset_A71, poset_N):
    for P in (poset_A71, poset_N):
        n = len(P)
        for i in range(n):
            assert P.leq(0, i)
            assert P.leq(i, i)
        for i, j in product(range(n), repeat=2):
            if i != j and P.leq(i, j):
                assert not P.leq(j, i)
                assert all(P.leq(i, k) for k in P.above[j])


def test_points_of_covering(poset_A71):
    P = poset_A71
    points = P.ranks[2]
    hypertori = set(P.hypertori)
    for p in points:
        assert all(P.leq(h, p) for h in hypertori)
    H1, H2 = P.hypertori[:2]
    assert P.min_upper_bounds(H1, H2) == frozenset(points)
    assert P.max_lower_bounds(points[0], points[1]) == frozenset(hypertori)
    assert not P.leq(points[0], points[1])
    assert P.min_upper_bounds(H1, points[0]) == {points[0]}
    assert P.max_lower_bounds(points[0], points[0]) == {points[0]}


def test_meet_of_two_hypertori_is_bottom(poset_N):
    H1, H2 = poset_N.hypertori[:2]
    assert poset_N.max_lower_bounds(H1, H2) == {0}


def test_subset_order_does_not_matter(N, poset_N):
    shuffled = enumerate_layers(N, subset_order=list(reversed(range(16))))
    assert shuffled.layers == poset_N.layers
    assert shuffled.covers() == poset_N.covers()
    with pytest.raises(PreconditionError):
        enumerate_layers(N, subset_order=[0, 1, 2])


def test_zero_column_rejected():
    with pytest.raises(PreconditionError):
        enumerate_layers(IntMatrix.from_rows([[1, 0], [0, 0]]))


def test_coverings_are_isomorphic(poset_A71, poset_A72):
    mapping = is_isomorphic(poset_A71, poset_A72)
    assert mapping is not None
    for i, j in product(range(len(poset_A71)), repeat=2):
        assert poset_A71.leq(i, j) == poset_A72.leq(mapping[i], mapping[j])
    assert is_isomorphic(poset_A72, poset_A71) is not None


def test_poset_isomorphic_to_itself(poset_N):
    mapping = is_isomorphic(poset_N, poset_N)
    assert mapping is not None
    assert sorted(mapping) == list(range(len(poset_N)))


def test_N_and_N_prime_posets_differ(poset_N, poset_N_prime):
    assert is_isomorphic(poset_N, poset_N_prime) is None


def test_property_P(poset_N, poset_N_prime, N_second, poset_A71):
    assert property_P(poset_N) == (True, ((1, 2), (3, 4)))
    # the {1,2}/{3,4} split fails for N', but {1,3}/{2,4} holds
    assert property_P(poset_N_prime) == (True, ((1, 3), (2, 4)))
    assert property_P(enumerate_layers(N_second))[0]
    with pytest.raises(PreconditionError):
        property_P(poset_A71)


def test_split_holds(poset_N, poset_N_prime, poset_A71):
    assert split_holds(poset_N, (1, 2), (3, 4))
    assert not split_holds(poset_N_prime, (1, 2), (3, 4))
    assert split_holds(poset_N_prime, (1, 3), (2, 4))
    with pytest.raises(PreconditionError):
        split_holds(poset_N, (1, 2), (2, 4))
    with pytest.raises(PreconditionError):
        split_holds(poset_A71, (1, 2), (3, 4))


def test_joins_in_N_prime_form_a_matching(poset_N_prime):
    P = poset_N_prime
    left, right = P.components((0, 1)), P.components((2, 3))
    sizes = [[len(P.min_upper_bounds(a, b)) for b in right] for a in left]
    assert {s for row in sizes for s in row} == {0, 5}
    for row in sizes:
        assert row.count(5) == 1
    for j in range(len(right)):
        assert [row[j] for row in sizes].count(5) == 1


def test_hasse_dot_of_covering(poset_A71):
    dot = hasse_dot(poset_A71)
    assert dot.startswith("digraph layers {")
    assert dot.count("->") == 24
    assert dot.count("[label=") == 11
    assert '[label="H1"]' in dot


def test_hasse_dot_of_small_posets():
    single = enumerate_layers(IntMatrix.from_rows([[], []], 0))
    assert len(single) == 1
    assert "->" not in hasse_dot(single)
    chain = enumerate_layers(IntMatrix.from_rows([[1], [0]]))
    assert hasse_dot(chain).count("->") == 1
