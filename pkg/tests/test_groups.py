"""
Tests for the component groups LG(I), their projections and the
kernel tables of N and N'.
"""

from itertools import combinations

import pytest

from torarr.errors import PreconditionError
from torarr.layers import (
    commuting_iso_exists,
    component_group,
    lg_kernel_table,
    projection,
    projection_kernel,
    transfer_map,
)

FULL = range(4)


def test_full_group_of_N(N):
    G = component_group(N, FULL)
    assert G.group.invariant_factors == (5, 5)
    assert G.order == 25
    assert G.identity in G.elements


def test_small_groups(N):
    trivial = component_group(N, [])
    assert trivial.order == 1
    assert trivial.group.invariant_factors == ()
    pair = component_group(N, [0, 1])
    assert pair.group.invariant_factors == (5,)
    assert pair.order == 5


def test_group_law(N):
    G = component_group(N, FULL)
    W = next(x for x in G.elements if x != G.identity)
    assert G.add(W, G.identity) == W
    assert G.add(W, G.negate(W)) == G.identity
    assert G.multiple(W, 5) == G.identity
    assert G.element_order(W) == 5
    assert len(G.subgroup_generated([W])) == 5
    assert G.subgroup_generated(G.elements) == frozenset(G.elements)
    with pytest.raises(PreconditionError):
        G.add(W, component_group(N, [0, 1]).identity)


def test_projection_to_three_hypertori_is_bijective(N, N_prime):
    for M in (N, N_prime):
        for i in FULL:
            rest = [j for j in FULL if j != i]
            assert projection(M, FULL, rest).is_bijective()


def test_projection_edge_cases(N):
    assert len(projection(N, FULL, []).kernel()) == 25
    assert len(projection(N, FULL, FULL).kernel()) == 1
    assert len(projection_kernel(N, [0, 1])) == 5
    with pytest.raises(PreconditionError):
        projection(N, [0, 1], [2])


def test_projections_compose(N):
    outer = projection(N, FULL, [0, 1, 2])
    inner = projection(N, [0, 1, 2], [0, 1])
    direct = projection(N, FULL, [0, 1])
    for W in outer.source.elements:
        assert inner(outer(W)) == direct(W)


def test_kernels_of_N_are_distinct(N):
    table = lg_kernel_table(N)
    assert len(table) == 6
    assert all(len(K) == 5 for K in table.values())
    assert len(set(table.values())) == 6


def test_kernels_of_N_prime_coincide_in_two_pairs(N_prime):
    table = lg_kernel_table(N_prime)
    equal = sorted((I, J) for I, J in combinations(sorted(table), 2) if table[I] == table[J])
    assert equal == [((0, 1), (2, 3)), ((0, 3), (1, 2))]


def test_kernel_table_matches_projection_kernels(N_prime):
    table = lg_kernel_table(N_prime)
    for pair, K in table.items():
        assert projection_kernel(N_prime, pair) == K


def test_commuting_isomorphisms(N, N_prime):
    assert commuting_iso_exists(N_prime, (0, 1), (2, 3))
    assert not commuting_iso_exists(N, (0, 1), (2, 3))
    assert commuting_iso_exists(N, (0, 1), (0, 1))
    for M in (N, N_prime):
        table = lg_kernel_table(M)
        for I, J in combinations(sorted(table), 2):
            assert commuting_iso_exists(M, I, J) == (table[I] == table[J])


def test_transfer_map(N, N_prime):
    phi = transfer_map(N_prime, (0, 1), (2, 3))
    assert len(phi) == 5
    assert len(set(phi.values())) == 5
    pi_I = projection(N_prime, FULL, (0, 1))
    pi_J = projection(N_prime, FULL, (2, 3))
    for W in pi_I.source.elements:
        assert phi[pi_I(W)] == pi_J(W)
    with pytest.raises(PreconditionError):
        transfer_map(N, (0, 1), (2, 3))
