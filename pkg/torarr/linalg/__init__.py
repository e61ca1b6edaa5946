"""Exact integer and rational linear algebra."""

from torarr.linalg.normal_forms import IntMatrix, SnfDecomposition, hnf, invariant_factors, snf
from torarr.linalg.lattice import (
    FiniteAbelianGroup,
    Lattice,
    cokernel,
    in_scaled,
    index_in,
    intersect,
    lattice_sum,
    member,
    quotient_group,
    saturation,
    torsion_order,
)
from torarr.linalg.rational import RowEchelon, qkernel, qrank, rref

__all__ = [
    "IntMatrix",
    "SnfDecomposition",
    "hnf",
    "snf",
    "invariant_factors",
    "FiniteAbelianGroup",
    "Lattice",
    "cokernel",
    "saturation",
    "quotient_group",
    "member",
    "intersect",
    "lattice_sum",
    "in_scaled",
    "index_in",
    "torsion_order",
    "RowEchelon",
    "qrank",
    "qkernel",
    "rref",
]
