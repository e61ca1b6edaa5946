"""
Tests for the graded cohomology algebras: Betti numbers of the named
arrangements, the Betti/Tutte cross-check on random matrices, the torus
quotient S and its multiplication ranks, and the integral pieces.
"""

import random
from functools import reduce
from math import gcd

import pytest

from torarr.cohom import (
    GradedAlgebraQ,
    Torus,
    aggregate_relations,
    build_rational_presentation,
    build_unimodular_presentation,
    generator,
    generator_counts,
    graded_dimension,
    integral_graded_unimodular,
    linear_relation_S3,
    multiplication_rank,
    multiplication_rank_table,
    multiply,
    product_rule_holds,
    psi,
    quotient_by_torus_ideal,
    rational_invariants,
    transfer_relations,
)
from torarr.errors import GuardExceededError, NotHomogeneousError, NotUnimodularError, PreconditionError
from torarr.linalg import IntMatrix
from torarr.matroid import from_matrix, poincare_polynomial
from torarr.matroid.subsets import size


@pytest.fixture(scope="module")
def S_N(rational_N):
    return quotient_by_torus_ideal(rational_N.algebra)


@pytest.fixture(scope="module")
def S_N_prime(rational_N_prime):
    return quotient_by_torus_ideal(rational_N_prime.algebra)


def test_exterior_algebra_signs():
    E = GradedAlgebraQ([Torus(0), Torus(1)], 2, name="E")
    x, y = E.generator("alpha"), E.generator("beta")
    assert E.graded_dimensions() == [1, 2, 1]
    assert x * y == -(y * x)
    assert (x * x).is_zero()
    assert multiply(x, y) == x * y
    assert not (x * y).is_zero()
    with pytest.raises(NotHomogeneousError):
        x + E.one()
    with pytest.raises(PreconditionError):
        E.generator("gamma")


def test_relations_cut_down_dimensions():
    E = GradedAlgebraQ([Torus(0), Torus(1)], 2, name="E")
    x, y = E.generator("alpha"), E.generator("beta")
    E.add_relation((x * y).terms, provenance="test")
    assert E.graded_dimensions() == [1, 2, 0]
    assert graded_dimension(E, 1) == 2
    with pytest.raises(PreconditionError):
        E.graded_dimension(3)


def test_generator_guard():
    with pytest.raises(GuardExceededError):
        GradedAlgebraQ([Torus(0), Torus(1)], 2, max_generators=1)
    GradedAlgebraQ([Torus(0), Torus(1)], 2, max_generators=1, force=True)


def test_unimodular_presentation_of_A(unimodular_A):
    H = unimodular_A.algebra
    assert len(H.generators) == 5
    assert H.graded_dimensions() == [1, 5, 6]
    assert multiplication_rank(H, 1, 1) == 6


def test_degree_two_identities(unimodular_A):
    H = unimodular_A.algebra
    w1, w2, w3 = (generator(H, f"omega{i}") for i in (1, 2, 3))
    p1, p2, p3 = (psi(H, i) for i in range(3))
    assert (w1 * p1).is_zero()
    assert (w2 * p2).is_zero()
    assert (w3 * p3).is_zero()
    assert ((w2 - w1 + p1) * (w3 - w2 - p1)).is_zero()
    assert ((w1 - w3) * (w1 - w2 - p1)).is_zero()
    assert ((w2 - w3) * (w1 - w2 + p2)).is_zero()
    assert not (w1 * w2).is_zero()
    assert p1 + p2 == p3


def test_unimodular_rejects_other_inputs(N):
    with pytest.raises(NotUnimodularError):
        build_unimodular_presentation(N)
    with pytest.raises(PreconditionError):
        build_unimodular_presentation(IntMatrix.from_rows([[1, 0], [0, 0]]))


@pytest.mark.parametrize("name,dims", [
    ("A", [1, 5, 6]),
    ("A71", [1, 5, 18]),
    ("N_second", [1, 7, 17, 14]),
])
def test_betti_numbers(name, dims, request):
    pres = build_rational_presentation(request.getfixturevalue(name))
    assert pres.algebra.graded_dimensions() == dims


def test_betti_numbers_of_N(rational_N, rational_N_prime):
    assert rational_N.algebra.graded_dimensions() == [1, 7, 41, 110]
    assert rational_N_prime.algebra.graded_dimensions() == [1, 7, 41, 110]


def test_generator_counts(rational_N):
    assert generator_counts(rational_N) == {1: 4, 2: 30, 3: 100}
    assert len(rational_N.algebra.generators) == 137


def _is_primitive(col):
    return reduce(gcd, (abs(x) for x in col), 0) == 1


def _generator_total(matrix):
    M = from_matrix(matrix)
    return matrix.nrows + sum(
        M.m(mask) for mask in range(1, 1 << matrix.ncols) if M.rk(mask) == size(mask)
    )


def _random_arrangements(count=25, seed=20240611, max_generators=40):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        r, n = rng.randint(1, 3), rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
        matrix = IntMatrix.from_rows(rows, n)
        cols = matrix.columns()
        if not all(_is_primitive(c) for c in cols):
            continue
        signed = {tuple(c) for c in cols} | {tuple(-x for x in c) for c in cols}
        if len(signed) != 2 * n:
            continue
        if _generator_total(matrix) > max_generators:
            continue
        found.append(matrix)
    return found


@pytest.mark.parametrize("matrix", _random_arrangements(), ids=lambda m: str(m.rows))
def test_betti_numbers_match_poincare_polynomial(matrix):
    dims = build_rational_presentation(matrix).algebra.graded_dimensions()
    poincare = poincare_polynomial(from_matrix(matrix), matrix.nrows)
    assert dims == [poincare.coefficient(k) for k in range(matrix.nrows + 1)]


def test_torus_quotient_multiplication_ranks(S_N, S_N_prime):
    assert S_N.name.startswith("S(")
    assert multiplication_rank(S_N, 1, 2) == 51
    assert multiplication_rank(S_N_prime, 1, 2) == 43


def test_torus_classes_vanish_in_quotient(S_N):
    for i in range(4):
        assert S_N.psi(i).is_zero()


def test_transfer_relations_hold_for_N_prime(rational_N_prime, S_N_prime):
    relations = transfer_relations(rational_N_prime, S_N_prime)
    assert len(relations) == 10
    for label, element in relations:
        assert element.degree == 3
        assert element.is_zero(), label


def test_aggregate_relations_hold_for_N(rational_N, S_N):
    assert transfer_relations(rational_N, S_N) == []
    relations = aggregate_relations(rational_N, S_N)
    assert len(relations) == 2
    for label, element in relations:
        assert element.is_zero(), label


def test_linear_relations_in_top_degree(rational_N, S_N):
    points = rational_N.poset.components(range(4))
    assert len(points) == 25
    for b in points:
        assert linear_relation_S3(rational_N, b, S_N).is_zero()


def test_product_rule(rational_N):
    H = rational_N.algebra
    for a in rational_N.poset.components((0, 1)):
        assert product_rule_holds(rational_N, 2, a, (0, 1), H)
        assert product_rule_holds(rational_N, 3, a, (0, 1), H)


def test_four_hypertori_required(rational_A):
    with pytest.raises(PreconditionError):
        aggregate_relations(rational_A, rational_A.algebra)


def test_multiplication_rank_table(unimodular_A):
    assert multiplication_rank_table(unimodular_A.algebra) == {(1, 1): 6}
    with pytest.raises(PreconditionError):
        multiplication_rank(unimodular_A.algebra, 2, 1)


def test_rational_invariants_of_coverings(A71, A72):
    dims, table = rational_invariants(A71)
    assert dims == [1, 5, 18]
    assert (dims, table) == rational_invariants(A72)


@pytest.mark.parametrize("name,free_ranks", [
    ("A", [1, 5, 6]),
    ("N_second", [1, 7, 17, 14]),
])
def test_integral_pieces_are_torsion_free(name, free_ranks, request):
    matrix = request.getfixturevalue(name)
    pieces = [integral_graded_unimodular(matrix, k) for k in range(matrix.nrows + 1)]
    assert [free for free, _ in pieces] == free_ranks
    assert all(torsion == () for _, torsion in pieces)


def test_integral_pieces_need_unimodular_input(N, A):
    with pytest.raises(NotUnimodularError):
        integral_graded_unimodular(N, 1)
    with pytest.raises(PreconditionError):
        integral_graded_unimodular(A, 3)
