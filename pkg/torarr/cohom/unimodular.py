"""
Integral presentation of the cohomology of a totally unimodular toric
arrangement, generated in degree one by omega_i and the torus classes.

Relations, for the columns in their fixed order:
  * omega_i psi_i = 0
  * for each circuit I with dependency c (and again with -c), writing
    i_1 < ... < i_k for its columns and w_i = omega_i if c_i = 1,
    omega_i - psi_i if c_i = -1, the product over j = 2..k of
    (w_{i_j} - w_{i_{j-1}} + c_{i_{j-1}} psi_{i_{j-1}}) vanishes.
The psi-dependencies sum_i c_i psi_i = 0 hold identically because psi_i is
written in the torus classes.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from torarr.cohom.algebra import FreeTerms, GradedAlgebraQ, OmegaSmall, Torus, free_add, free_mul
from torarr.errors import NotUnimodularError, PreconditionError
from torarr.linalg import IntMatrix
from torarr.matroid import is_totally_unimodular
from torarr.matroid.circuits import Circuit, circuits

logger = logging.getLogger(__name__)


@dataclass
class UnimodularPresentation:
    """The algebra together with the factored circuit relations."""
    algebra: GradedAlgebraQ
    matrix: IntMatrix
    circuit_factors: List[Tuple[Circuit, int, List[FreeTerms]]] = field(default_factory=list)


def psi_terms(N: IntMatrix, i: int, torus_offset: int) -> FreeTerms:
    """psi_i = sum_j N[j, i] theta_j as free-algebra terms."""
    return {(torus_offset + j,): Fraction(N.rows[j][i]) for j in range(N.nrows) if N.rows[j][i]}


def _check_columns(N: IntMatrix):
    for j, col in enumerate(N.columns()):
        if not any(col):
            raise PreconditionError(f"column {j + 1} is zero and defines no hypertorus")


def circuit_factors(circuit: Circuit, sign: int, omega: Dict[int, FreeTerms], psi: Dict[int, FreeTerms]) -> List[FreeTerms]:
    c = {col: sign * k for col, k in zip(circuit.columns, circuit.dependency)}

    def tilde(i):
        return omega[i] if c[i] == 1 else free_add(omega[i], psi[i], Fraction(-1))

    factors = []
    cols = circuit.columns
    for prev, cur in zip(cols, cols[1:]):
        f = free_add(tilde(cur), tilde(prev), Fraction(-1))
        f = free_add(f, psi[prev], Fraction(c[prev]))
        factors.append(f)
    return factors


def build_unimodular_presentation(N: IntMatrix, max_subsets: int = None, force: bool = False) -> UnimodularPresentation:
    """
    Raises:
        NotUnimodularError: some intersection of hypertori is disconnected
    """
    _check_columns(N)
    if not is_totally_unimodular(N, max_subsets, force):
        raise NotUnimodularError(
            "the arrangement is not totally unimodular; use the rational presentation"
        )
    n, r = N.ncols, N.nrows
    generators = [OmegaSmall(i) for i in range(n)] + [Torus(j) for j in range(r)]
    psi = {i: psi_terms(N, i, n) for i in range(n)}
    algebra = GradedAlgebraQ(generators, r, name="H(unimodular)", psi_images=[psi[i] for i in range(n)])
    degrees = algebra.degrees
    omega = {i: {(i,): Fraction(1)} for i in range(n)}

    for i in range(n):
        algebra.add_relation(free_mul(omega[i], psi[i], degrees), provenance=f"omega{i + 1} psi{i + 1}")

    presentation = UnimodularPresentation(algebra, N)
    for circuit in circuits(N, max_subsets, force):
        for sign in (1, -1):
            factors = circuit_factors(circuit, sign, omega, psi)
            product = {(): Fraction(1)}
            for f in factors:
                product = free_mul(product, f, degrees)
            tag = f"circuit {tuple(i + 1 for i in circuit.columns)} sign {sign:+d}"
            if len(factors) <= r:
                algebra.add_relation(product, provenance=tag)
            presentation.circuit_factors.append((circuit, sign, factors))
    logger.info(f"unimodular presentation: {len(generators)} generators, {len(algebra.relations)} relations")
    return presentation
