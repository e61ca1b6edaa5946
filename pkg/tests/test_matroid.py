"""
Tests for arithmetic matroids, matroids over Z, circuits and the Tutte
and Poincaré polynomials of the named arrangements.
"""

from functools import reduce
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torarr.errors import GuardExceededError, PreconditionError
from torarr.linalg import IntMatrix
from torarr.matroid import (
    ArithmeticMatroid,
    arithmetic_tutte,
    equals,
    from_matrix,
    is_totally_unimodular,
    poincare_polynomial,
    rank_axioms_check,
    zmatroid_equals,
    zmatroid_from_matrix,
)
from torarr.matroid.circuits import circuits
from torarr.matroid.subsets import label, mask_of, members, size
from torarr.poly import BivariatePolyZ

# by subset size: (rank, multiplicity, module)
N_TABLES = {
    0: (0, 1, (3, ())),
    1: (1, 1, (2, ())),
    2: (2, 5, (1, (5,))),
    3: (3, 25, (0, (5, 5))),
    4: (3, 25, (0, (5, 5))),
}


def test_subset_masks():
    assert mask_of([0, 2]) == 0b101
    assert members(0b101) == (0, 2)
    assert size(0b1011) == 3
    assert label(0b11) == "{1,2}"


@pytest.mark.parametrize("name", ["N", "N_prime"])
def test_tables_of_N_and_N_prime(name, request):
    matrix = request.getfixturevalue(name)
    M = from_matrix(matrix)
    Z = zmatroid_from_matrix(matrix)
    for mask in range(16):
        rank, mult, module = N_TABLES[size(mask)]
        assert M.rk(mask) == rank
        assert M.m(mask) == mult
        assert Z.module(mask) == module
    assert M.rank == 3


def test_N_and_N_prime_agree(N, N_prime):
    assert equals(from_matrix(N), from_matrix(N_prime))
    assert zmatroid_equals(zmatroid_from_matrix(N), zmatroid_from_matrix(N_prime))


def test_equals_needs_same_ground_set(N, A):
    with pytest.raises(PreconditionError):
        equals(from_matrix(N), from_matrix(A))


@pytest.mark.parametrize("name,terms", [
    ("A", {(2, 0): 1, (1, 0): 1, (0, 1): 1}),
    ("A71", {(2, 0): 1, (1, 0): 1, (0, 1): 7, (0, 0): 12}),
    ("A72", {(2, 0): 1, (1, 0): 1, (0, 1): 7, (0, 0): 12}),
    ("N", {(3, 0): 1, (2, 0): 1, (1, 0): 25, (0, 1): 25, (0, 0): 48}),
    ("N_prime", {(3, 0): 1, (2, 0): 1, (1, 0): 25, (0, 1): 25, (0, 0): 48}),
    ("N_second", {(3, 0): 1, (2, 0): 1, (1, 0): 1, (0, 1): 1}),
])
def test_arithmetic_tutte(name, terms, request):
    M = from_matrix(request.getfixturevalue(name))
    assert arithmetic_tutte(M) == BivariatePolyZ(terms)


@pytest.mark.parametrize("name,coefficients", [
    ("A", [1, 5, 6]),
    ("A71", [1, 5, 18]),
    ("N", [1, 7, 41, 110]),
    ("N_prime", [1, 7, 41, 110]),
    ("N_second", [1, 7, 17, 14]),
])
def test_poincare_polynomial(name, coefficients, request):
    matrix = request.getfixturevalue(name)
    assert poincare_polynomial(from_matrix(matrix), matrix.nrows) == coefficients


def test_poincare_of_non_essential_arrangement():
    matrix = IntMatrix.from_rows([[1], [0]])
    assert poincare_polynomial(from_matrix(matrix), 2) == [1, 3, 2]
    with pytest.raises(PreconditionError):
        poincare_polynomial(from_matrix(matrix), 0)


def test_totally_unimodular(A, N, N_second, A71):
    assert is_totally_unimodular(A)
    assert is_totally_unimodular(N_second)
    assert not is_totally_unimodular(N)
    assert not is_totally_unimodular(A71)


def test_rank_axioms():
    assert rank_axioms_check(ArithmeticMatroid(1, (0, 1), (1, 3)))
    assert not rank_axioms_check(ArithmeticMatroid(1, (0, 2), (1, 1)))
    assert not rank_axioms_check(ArithmeticMatroid(1, (0, 1), (1, 0)))


def test_ground_guard(N):
    with pytest.raises(GuardExceededError):
        from_matrix(N, max_subsets=3)
    assert from_matrix(N, max_subsets=3, force=True).rank == 3


def test_circuits(A, N):
    (c,) = circuits(A)
    assert c.columns == (0, 1, 2)
    assert c.dependency == (1, 1, -1)
    assert c.is_signed()
    assert c.coefficient(2) == -1
    (c,) = circuits(N)
    assert c.dependency == (1, 1, 1, -1)


def _gcd_of_minors(matrix, columns, k):
    if k == 0:
        return 1
    sub = matrix.select_columns(columns)
    minors = (
        IntMatrix.from_rows([[sub.rows[i][j] for j in cols] for i in rows], k).determinant()
        for rows in combinations(range(matrix.nrows), k)
        for cols in combinations(range(len(columns)), k)
    )
    return reduce(gcd, (abs(d) for d in minors), 0)


small_matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=r, max_size=r
        ).map(lambda rows: IntMatrix.from_rows(rows, n))
    )
)


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_random_matrices_satisfy_axioms(matrix):
    M = from_matrix(matrix)
    assert rank_axioms_check(M)
    for mask in range(1 << matrix.ncols):
        cols = members(mask)
        assert M.m(mask) == _gcd_of_minors(matrix, cols, M.rk(mask))
