"""
Tests for sublattices of Z^m, cokernels and quotient groups.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torarr.errors import AmbientMismatchError, PreconditionError
from torarr.linalg import (
    IntMatrix,
    Lattice,
    cokernel,
    in_scaled,
    index_in,
    intersect,
    lattice_sum,
    quotient_group,
    saturation,
    torsion_order,
)


def test_from_generators_is_canonical():
    L1 = Lattice.from_generators([(2, 0), (0, 3)], 2)
    L2 = Lattice.from_generators([(2, 3), (2, 0), (4, 6)], 2)
    assert L1 == L2
    assert L1.rank == 2


def test_wrong_ambient_rejected():
    with pytest.raises(AmbientMismatchError):
        Lattice.from_generators([(1, 2, 3)], 2)
    with pytest.raises(AmbientMismatchError):
        lattice_sum(Lattice.ambient(2), Lattice.ambient(3))


def test_membership_and_coordinates():
    L = Lattice.from_generators([(1, 1), (0, 5)], 2)
    assert (3, 8) in L
    assert (1, 2) not in L
    coords = L.coordinates((3, 8))
    assert tuple(sum(c * b[j] for c, b in zip(coords, L.basis)) for j in range(2)) == (3, 8)


def test_cokernel_of_N():
    N = IntMatrix.from_rows([[1, 1, 1, 3], [0, 5, 0, 5], [0, 0, 5, 5]])
    free, group = cokernel(N)
    assert free == 0
    assert group.invariant_factors == (5, 5)
    assert group.order == 25
    assert torsion_order(N.select_columns([0, 1])) == 5


def test_cokernel_with_free_part():
    free, group = cokernel(IntMatrix.from_rows([[2], [0]]))
    assert free == 1
    assert group.invariant_factors == (2,)
    assert cokernel(IntMatrix.from_rows([[], []], 0))[0] == 2


def test_saturation():
    assert saturation(Lattice.from_generators([(2, 0), (0, 2)], 2)) == Lattice.ambient(2)
    L = Lattice.from_generators([(2, 4, 6)], 3)
    assert saturation(L) == Lattice.from_generators([(1, 2, 3)], 3)
    assert saturation(Lattice.zero(3)) == Lattice.zero(3)
    assert Lattice.ambient(3).is_saturated()
    assert not L.is_saturated()


def test_quotient_group():
    sup = Lattice.ambient(2)
    sub = Lattice.from_generators([(5, 0), (1, 5)], 2)
    G = quotient_group(sup, sub)
    assert G.invariant_factors == (25,)
    assert index_in(sup, sub) == 25
    with pytest.raises(PreconditionError):
        quotient_group(Lattice.from_generators([(1, 0)], 2), sup)
    with pytest.raises(PreconditionError):
        quotient_group(sub, sup)


def test_intersection():
    L1 = Lattice.from_generators([(2, 0), (0, 1)], 2)
    L2 = Lattice.from_generators([(1, 0), (0, 3)], 2)
    assert intersect(L1, L2) == Lattice.from_generators([(2, 0), (0, 3)], 2)
    line = Lattice.from_generators([(1, 1)], 2)
    assert intersect(line, Lattice.from_generators([(1, 0)], 2)) == Lattice.zero(2)


def test_in_scaled():
    L = Lattice.from_generators([(1, 0), (0, 1)], 2)
    assert in_scaled((7, 14), 7, L)
    assert not in_scaled((7, 1), 7, L)
    with pytest.raises(PreconditionError):
        in_scaled((0, 0), 0, L)


small_vectors = st.lists(st.integers(-5, 5), min_size=3, max_size=3)


@settings(max_examples=100, deadline=None)
@given(st.lists(small_vectors, min_size=1, max_size=4), st.lists(small_vectors, min_size=1, max_size=4))
def test_intersection_is_contained_in_both(g1, g2):
    L1, L2 = Lattice.from_generators(g1, 3), Lattice.from_generators(g2, 3)
    meet = intersect(L1, L2)
    assert L1.contains_lattice(meet)
    assert L2.contains_lattice(meet)
    assert lattice_sum(L1, L2).contains_lattice(L1)


@settings(max_examples=100, deadline=None)
@given(st.lists(small_vectors, min_size=1, max_size=4))
def test_saturation_is_idempotent(gens):
    L = Lattice.from_generators(gens, 3)
    S = saturation(L)
    assert saturation(S) == S
    assert S.contains_lattice(L)
    assert S.rank == L.rank
