"""Cohomology algebras of toric arrangement complements."""

from torarr.cohom.algebra import (
    CohomElement,
    GradedAlgebraQ,
    OmegaBar,
    OmegaSmall,
    Relation,
    Torus,
)
from torarr.cohom.unimodular import UnimodularPresentation, build_unimodular_presentation
from torarr.cohom.rational import (
    RationalPresentation,
    aggregate_relations,
    build_rational_presentation,
    generator_counts,
    linear_relation_S3,
    product_rule_holds,
    transfer_relations,
)
from torarr.cohom.invariants import (
    graded_dimension,
    multiplication_rank,
    multiplication_rank_table,
    multiply,
    quotient_by_torus_ideal,
    rational_invariants,
)
from torarr.cohom.integral import integral_graded_unimodular


def psi(A: GradedAlgebraQ, i: int) -> CohomElement:
    """Degree-one class of the i-th hypertorus's character (0-based)."""
    return A.psi(i)


def generator(A: GradedAlgebraQ, label) -> CohomElement:
    return A.generator(label)


__all__ = [
    "CohomElement",
    "GradedAlgebraQ",
    "OmegaBar",
    "OmegaSmall",
    "Relation",
    "Torus",
    "UnimodularPresentation",
    "build_unimodular_presentation",
    "RationalPresentation",
    "build_rational_presentation",
    "generator_counts",
    "transfer_relations",
    "aggregate_relations",
    "linear_relation_S3",
    "product_rule_holds",
    "graded_dimension",
    "multiply",
    "quotient_by_torus_ideal",
    "multiplication_rank",
    "multiplication_rank_table",
    "rational_invariants",
    "integral_graded_unimodular",
    "psi",
    "generator",
]
