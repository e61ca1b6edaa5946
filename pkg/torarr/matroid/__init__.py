"""Arithmetic matroids and matroids over Z."""

from torarr.matroid.arithmetic import (
    ArithmeticMatroid,
    ZMatroid,
    arithmetic_tutte,
    equals,
    from_matrix,
    is_totally_unimodular,
    poincare_polynomial,
    rank_axioms_check,
    zmatroid_equals,
    zmatroid_from_matrix,
)

__all__ = [
    "ArithmeticMatroid",
    "ZMatroid",
    "from_matrix",
    "zmatroid_from_matrix",
    "rank_axioms_check",
    "equals",
    "zmatroid_equals",
    "arithmetic_tutte",
    "poincare_polynomial",
    "is_totally_unimodular",
]
