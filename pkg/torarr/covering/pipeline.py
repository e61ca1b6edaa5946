"""
Integral obstruction for the arrangements A_n^a = {t1 = 1, t1^a t2^n = 1,
t1^(a+1) t2^n = 1} in (C*)^2.

A_n^a is the pullback of A = {t1 = 1, t2 = 1, t1 t2 = 1} along the cyclic
covering (t1, t2) -> (t1, t1^a t2^n). The pullback is injective on H^1, so
the integral resonance sublattices of A_n^a are the saturated images of the
five resonance planes of A. From them we read off

  * c(i, j) = |torsion of H^1 / <Q_i, Q_j>|,
  * the torus lattice L = Rad of the intersection of <Q_i, Q_j>, i<j<=3,
  * the lines Q_i meet L in, i = 1, 2, 3,

and whether two of those line generators sum into nL with some signs. An
isomorphism H(A_n^1; Z) -> H(A_n^2; Z) would have to preserve that answer.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from torarr.cohom import build_unimodular_presentation, rational_invariants
from torarr.errors import CoveringError, PreconditionError
from torarr.layers import enumerate_layers, is_isomorphic
from torarr.linalg import IntMatrix, Lattice, in_scaled, intersect, lattice_sum, saturation, torsion_order
from torarr.matroid import from_matrix, poincare_polynomial
from torarr.resonance import Plane, presentation_resonance, resonance_lattices

logger = logging.getLogger(__name__)

H1_LABELS = ("omega1", "omega2", "omega3", "alpha", "beta")
BASE_MATRIX = IntMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
TORUS_INDICES = (1, 2, 3)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class CoveringSpec:
    n: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise CoveringError(f"n must be positive, got {self.n}")
        if gcd(self.a, self.n) != 1 or gcd(self.a + 1, self.n) != 1:
            raise CoveringError(f"a = {self.a} and a + 1 must both be prime to n = {self.n}")

    @property
    def hypotheses_hold(self) -> bool:
        """n > 5 and gcd(n, 6) = 1."""
        return self.n > 5 and gcd(self.n, 6) == 1

    def matrix(self) -> IntMatrix:
        return IntMatrix.from_rows([[1, self.a, self.a + 1], [0, self.n, self.n]])


@dataclass
class H1Lattice:
    """H^1(M(A_n^a); Z) on (omega1, omega2, omega3, alpha, beta) with Q_1..Q_5."""
    spec: CoveringSpec
    ambient: Lattice
    sublattices: List[Lattice]
    labels: Tuple[str, ...] = H1_LABELS

    def Q(self, i: int) -> Lattice:
        """Q_i, 1-based."""
        if not 1 <= i <= len(self.sublattices):
            raise CoveringError(f"no sublattice Q{i}; there are {len(self.sublattices)}")
        return self.sublattices[i - 1]

    def describe(self, v: Sequence[int]) -> str:
        pieces = []
        for c, name in zip(v, self.labels):
            if c == 0:
                continue
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            pieces.append(f"{coeff}{name}")
        return " + ".join(pieces).replace("+ -", "- ") or "0"


def pullback_matrix(spec: CoveringSpec) -> IntMatrix:
    """
    Columns are the images of omega1, omega2, omega3, psi1, psi2 in the
    basis omega1, omega2, omega3, alpha, beta; psi2 -> a alpha + n beta.
    """
    columns = [
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, spec.a, spec.n),
    ]
    return IntMatrix.from_columns(columns, 5)


@lru_cache(maxsize=1)
def base_planes() -> Tuple[Plane, ...]:
    """Resonance planes of A: the three local planes, then the two circuit planes."""
    presentation = build_unimodular_presentation(BASE_MATRIX)
    planes = presentation_resonance(presentation)
    if len(planes) != 5:
        raise CoveringError(f"expected five resonance planes of the base arrangement, got {len(planes)}")
    return tuple(planes)


def closed_form_sublattices(spec: CoveringSpec) -> List[Lattice]:
    n, a = spec.n, spec.a
    gens = [
        [(1, 0, 0, 0, 0), (0, 0, 0, 1, 0)],
        [(0, 1, 0, 0, 0), (0, 0, 0, a, n)],
        [(0, 0, 1, 0, 0), (0, 0, 0, a + 1, n)],
        [(1, 0, -1, 0, 0), (1, -1, 0, -1, 0)],
        [(0, 1, -1, 0, 0), (1, -1, 0, a, n)],
    ]
    return [Lattice.from_generators(g, 5) for g in gens]


def build_h1_lattice(spec: CoveringSpec) -> H1Lattice:
    """
    Raises:
        CoveringError: the pulled-back planes disagree with the closed forms
    """
    sublattices = resonance_lattices(base_planes(), pullback_matrix(spec))
    expected = closed_form_sublattices(spec)
    for i, (got, want) in enumerate(zip(sublattices, expected), start=1):
        if got != want:
            raise CoveringError(f"Q{i} for n={spec.n}, a={spec.a}: computed {got}, expected {want}")
    return H1Lattice(spec, Lattice.ambient(5), sublattices)


def c_value(H: H1Lattice, i: int, j: int) -> int:
    """|torsion of H^1 / <Q_i, Q_j>|, 1-based indices."""
    if i == j:
        raise CoveringError(f"c-value needs two distinct sublattices, got ({i}, {j})")
    span = lattice_sum(H.Q(i), H.Q(j))
    return torsion_order(span.basis_matrix().transpose())


def c_table(H: H1Lattice) -> Dict[Tuple[int, int], int]:
    k = len(H.sublattices)
    return {(i, j): c_value(H, i, j) for i, j in combinations(range(1, k + 1), 2)}


def n_triangles(table: Dict[Tuple[int, int], int], n: int) -> List[Tuple[int, int, int]]:
    """Triples whose three pairwise c-values all equal n."""
    indices = sorted({i for pair in table for i in pair})
    return [
        t for t in combinations(indices, 3)
        if all(table[p] == n for p in combinations(t, 2))
    ]


def radical(sub: Lattice, ambient: Lattice) -> Lattice:
    """{x in ambient : kx in sub for some k > 0}."""
    if not ambient.contains_lattice(sub):
        raise PreconditionError(f"{sub} is not contained in {ambient}")
    return intersect(saturation(sub), ambient)


def torus_lattice(H: H1Lattice, indices: Sequence[int] = TORUS_INDICES) -> Lattice:
    """Rad of the intersection of <Q_i, Q_j> over the pairs of indices."""
    meet = H.ambient
    for i, j in combinations(indices, 2):
        meet = intersect(meet, lattice_sum(H.Q(i), H.Q(j)))
    return radical(meet, H.ambient)


def torus_line(H: H1Lattice, i: int, L: Optional[Lattice] = None) -> Vector:
    """
    Generator of Q_i intersected with L.

    Raises:
        CoveringError: the intersection is not a line
    """
    L = L if L is not None else torus_lattice(H)
    line = intersect(H.Q(i), L)
    if line.rank != 1:
        raise CoveringError(f"Q{i} meets the torus lattice in rank {line.rank}, not a line")
    return line.basis[0]


def torus_line_generators(H: H1Lattice, indices: Sequence[int] = TORUS_INDICES) -> List[Vector]:
    L = torus_lattice(H)
    return [torus_line(H, i, L) for i in indices]


def pair_sum_in_nL(lines: Sequence[Vector], n: int, L: Lattice) -> Optional[Tuple[int, int, int, int]]:
    """
    First (i, j, s, t), 1-based, with s*v_i + t*v_j in nL; None if no pair works.
    """
    for (i, u), (j, v) in combinations(enumerate(lines, start=1), 2):
        for s, t in product((1, -1), repeat=2):
            total = tuple(s * x + t * y for x, y in zip(u, v))
            if in_scaled(total, n, L):
                return i, j, s, t
    return None


@dataclass
class NonIsomorphismReport:
    n: int
    hypotheses_met: bool
    h1_rank: int
    poset_isomorphic: bool
    rational_invariants_agree: bool
    c_tables: Dict[int, Dict[Tuple[int, int], int]] = field(default_factory=dict)
    c_patterns_agree: bool = False
    triangles: Dict[int, List[Tuple[int, int, int]]] = field(default_factory=dict)
    torus_lattice: Dict[int, Lattice] = field(default_factory=dict)
    lines: Dict[int, List[Vector]] = field(default_factory=dict)
    pair_sums: Dict[int, Optional[Tuple[int, int, int, int]]] = field(default_factory=dict)
    verdict: Optional[bool] = None

    @property
    def status(self) -> str:
        if not self.hypotheses_met:
            return "withheld"
        return "non-isomorphic" if self.verdict else "inconclusive"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "hypotheses_met": self.hypotheses_met,
            "h1_rank": self.h1_rank,
            "poset_isomorphic": self.poset_isomorphic,
            "rational_invariants_agree": self.rational_invariants_agree,
            "c_tables": {
                str(a): {f"{i},{j}": c for (i, j), c in table.items()}
                for a, table in self.c_tables.items()
            },
            "c_patterns_agree": self.c_patterns_agree,
            "triangles": {str(a): [list(t) for t in ts] for a, ts in self.triangles.items()},
            "torus_lattice": {str(a): [list(b) for b in L.basis] for a, L in self.torus_lattice.items()},
            "lines": {str(a): [list(v) for v in vs] for a, vs in self.lines.items()},
            "pair_sums": {
                str(a): (list(w) if w is not None else None) for a, w in self.pair_sums.items()
            },
            "status": self.status,
        }


def verify_non_isomorphism(n: int) -> NonIsomorphismReport:
    """
    Compare H(A_n^1; Z) and H(A_n^2; Z) through their resonance sublattices.

    Without n > 5 and gcd(n, 6) = 1 the data is still computed but the
    verdict is withheld.
    """
    specs = {a: CoveringSpec(n, a) for a in (1, 2)}
    hypotheses = all(s.hypotheses_hold for s in specs.values())
    matrices = {a: s.matrix() for a, s in specs.items()}

    h1_rank = poincare_polynomial(from_matrix(matrices[1]), 2).coefficient(1)
    posets = {a: enumerate_layers(M) for a, M in matrices.items()}
    premise = is_isomorphic(posets[1], posets[2]) is not None
    invariants = {a: rational_invariants(M) for a, M in matrices.items()}

    report = NonIsomorphismReport(
        n=n,
        hypotheses_met=hypotheses,
        h1_rank=h1_rank,
        poset_isomorphic=premise,
        rational_invariants_agree=invariants[1] == invariants[2],
    )
    for a, spec in specs.items():
        H = build_h1_lattice(spec)
        report.c_tables[a] = c_table(H)
        report.triangles[a] = n_triangles(report.c_tables[a], n)
        L = torus_lattice(H)
        report.torus_lattice[a] = L
        report.lines[a] = [torus_line(H, i, L) for i in TORUS_INDICES]
        report.pair_sums[a] = pair_sum_in_nL(report.lines[a], n, L)

    report.c_patterns_agree = report.c_tables[1] == report.c_tables[2]
    obstruction = (
        report.c_patterns_agree
        and all(t == [TORUS_INDICES] for t in report.triangles.values())
        and (report.pair_sums[1] is None) != (report.pair_sums[2] is None)
    )
    if not hypotheses:
        logger.warning(f"n = {n}: needs n > 5 and gcd(n, 6) = 1; verdict withheld")
        report.verdict = None
    else:
        report.verdict = obstruction
    logger.info(f"n = {n}: {report.status}")
    return report
