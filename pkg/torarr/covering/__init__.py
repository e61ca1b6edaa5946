"""Cyclic coverings of the three-line arrangement and the integral obstruction."""

from torarr.covering.pipeline import (
    CoveringSpec,
    H1Lattice,
    NonIsomorphismReport,
    base_planes,
    build_h1_lattice,
    c_table,
    c_value,
    closed_form_sublattices,
    n_triangles,
    pair_sum_in_nL,
    pullback_matrix,
    radical,
    torus_lattice,
    torus_line,
    torus_line_generators,
    verify_non_isomorphism,
)

__all__ = [
    "CoveringSpec",
    "H1Lattice",
    "NonIsomorphismReport",
    "base_planes",
    "build_h1_lattice",
    "c_table",
    "c_value",
    "closed_form_sublattices",
    "n_triangles",
    "pair_sum_in_nL",
    "pullback_matrix",
    "radical",
    "torus_lattice",
    "torus_line",
    "torus_line_generators",
    "verify_non_isomorphism",
]
