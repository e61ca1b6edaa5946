"""
Reproduction harness: recomputes every headline value for the built-in
arrangements and compares it with the expected (golden) value.
"""

import copy
import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from torarr.cli.catalog import NAMED_MATRICES, covering_matrix
from torarr.cli.matrix_file import input_digest
from torarr.cli.report import Report
from torarr.cohom import (
    build_rational_presentation,
    build_unimodular_presentation,
    integral_graded_unimodular,
    quotient_by_torus_ideal,
    rational_invariants,
)
from torarr.covering import (
    CoveringSpec,
    build_h1_lattice,
    c_table,
    closed_form_sublattices,
    pair_sum_in_nL,
    torus_lattice,
    torus_line_generators,
    verify_non_isomorphism,
)
from torarr.errors import InputError, TorarrError
from torarr.layers import (
    commuting_iso_exists,
    component_group,
    enumerate_layers,
    is_isomorphic,
    lg_kernel_table,
    property_P,
    split_holds,
)
from torarr.linalg import rref
from torarr.matroid import arithmetic_tutte, from_matrix, poincare_polynomial, zmatroid_from_matrix
from torarr.matroid.subsets import members, size
from torarr.poly import buchberger, projective_dim_degree
from torarr.resonance import (
    Plane,
    PluckerPoint,
    grassmann_pfaffian_ideal,
    linear_ideal_of_subspace,
    presentation_resonance,
    wedge_kernel,
)

logger = logging.getLogger(__name__)

N = NAMED_MATRICES["N"]
N_PRIME = NAMED_MATRICES["Nprime"]
N_SECOND = NAMED_MATRICES["Nsecond"]
A = NAMED_MATRICES["A"]

GOLDEN = {
    "tutte": {
        "A": {(2, 0): 1, (1, 0): 1, (0, 1): 1},
        "A(7,1)": {(2, 0): 1, (1, 0): 1, (0, 1): 7, (0, 0): 12},
        "A(7,2)": {(2, 0): 1, (1, 0): 1, (0, 1): 7, (0, 0): 12},
        "N": {(3, 0): 1, (2, 0): 1, (1, 0): 25, (0, 1): 25, (0, 0): 48},
        "Nprime": {(3, 0): 1, (2, 0): 1, (1, 0): 25, (0, 1): 25, (0, 0): 48},
        "Nsecond": {(3, 0): 1, (2, 0): 1, (1, 0): 1, (0, 1): 1},
    },
    "poincare": {
        "A": [1, 5, 6],
        "A(7,1)": [1, 5, 18],
        "N": [1, 7, 41, 110],
        "Nprime": [1, 7, 41, 110],
        "Nsecond": [1, 7, 17, 14],
    },
    # by subset size: (rank, multiplicity, module)
    "matroid-tables": {
        0: (0, 1, (3, ())),
        1: (1, 1, (2, ())),
        2: (2, 5, (1, (5,))),
        3: (3, 25, (0, (5, 5))),
        4: (3, 25, (0, (5, 5))),
    },
    "layers": {
        "A(7,a)": [1, 3, 7],
        "N": [1, 4, 30, 25],
        # the {1,2}/{3,4} split separates N from N'; N' still has (P) through {1,3}/{2,4}
        "split_12_34": {"N": True, "Nprime": False},
        "property_P_witness": {"N": ((1, 2), (3, 4)), "Nprime": ((1, 3), (2, 4))},
        "join_sizes": [0, 5],
    },
    "betti": {
        "A": [1, 5, 6],
        "A(7,1)": [1, 5, 18],
        "N": [1, 7, 41, 110],
        "Nprime": [1, 7, 41, 110],
        "Nsecond": [1, 7, 17, 14],
    },
    "degree-two": {"vanishing": 6},
    "resonance-A": {
        "kernel_dim": 4,
        # x15, x24, x45, x12+x13, x13+x23, x13-x34+x35
        "ideal_I": [
            [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, -1, 1, 0],
        ],
        "dim_degree": (0, 5),
        "plucker": [
            [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
            [1, -1, 1, 0, 1, 0, 0, -1, 0, 0],
            [1, -1, 0, 0, 1, 0, -1, 0, 1, 0],
        ],
    },
    # H^1 coordinates on (omega-bar 1..4, alpha, beta, gamma)
    "resonance-N": {
        "N": [
            [[1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0]],
            [[0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 5, 0]],
            [[0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 5]],
            [[0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 3, 5, 5]],
        ],
        "Nprime": [
            [[1, 0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0]],
            [[0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 4, 5, 0]],
            [[0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 5]],
            [[0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 6, 5, 5]],
        ],
    },
    "integral-lattices": {"n": 7, "a": [1, 2]},
    "c-values": {"n_pairs": [(1, 2), (1, 3), (2, 3), (4, 5)], "value": 7},
    "obstruction": {
        "pair_sum": {(7, 1): True, (7, 2): False, (5, 2): True},
        "non_isomorphic": [7, 11, 13],
        "withheld": [5],
    },
    "mult-ranks": {"N": 51, "Nprime": 43, "A": 6},
    "component-groups": {
        "LG_full": (5, 5),
        "Nprime_coincidences": [((0, 1), (2, 3)), ((0, 3), (1, 2))],
    },
    "rational-invariants": {"n": 7},
    "integral-pieces": {"A": [1, 5, 6], "Nsecond": [1, 7, 17, 14]},
}


def _named(name: str):
    if name.startswith("A(") and name != "A":
        n, a = (int(x) for x in name[2:-1].split(","))
        return covering_matrix(n, a)
    return NAMED_MATRICES[name]


def check_tutte(g) -> Tuple[bool, str]:
    bad = [k for k, want in g.items() if arithmetic_tutte(from_matrix(_named(k))).terms != want]
    return not bad, f"mismatch: {bad}" if bad else f"{len(g)} arrangements"


def check_poincare(g):
    bad = []
    for name, want in g.items():
        M = _named(name)
        if poincare_polynomial(from_matrix(M), M.nrows) != want:
            bad.append(name)
    return not bad, f"mismatch: {bad}" if bad else f"{len(g)} arrangements"


def check_matroid_tables(g):
    tables = []
    for M in (N, N_PRIME):
        am, zm = from_matrix(M), zmatroid_from_matrix(M)
        tables.append((am.rank_table, am.mult_table, zm.module_table))
        for mask in range(1 << M.ncols):
            rk, mult, module = g[size(mask)]
            if (am.rk(mask), am.m(mask), zm.module(mask)) != (rk, mult, module):
                return False, f"subset {[i + 1 for i in members(mask)]}"
    return tables[0] == tables[1], "N and N' tables agree" if tables[0] == tables[1] else "tables differ"


def check_layers(g):
    P1, P2 = enumerate_layers(covering_matrix(7, 1)), enumerate_layers(covering_matrix(7, 2))
    if P1.rank_profile() != g["A(7,a)"] or P2.rank_profile() != g["A(7,a)"]:
        return False, "covering rank profiles"
    if is_isomorphic(P1, P2) is None:
        return False, "coverings not isomorphic"
    S, S_prime = enumerate_layers(N), enumerate_layers(N_PRIME)
    if S.rank_profile() != g["N"] or S_prime.rank_profile() != g["N"]:
        return False, "N rank profiles"
    if is_isomorphic(S, S_prime) is not None:
        return False, "N and N' isomorphic"
    for name, P in (("N", S), ("Nprime", S_prime)):
        if split_holds(P, (1, 2), (3, 4)) != g["split_12_34"][name]:
            return False, f"split 12|34 for {name}"
        if property_P(P) != (True, tuple(g["property_P_witness"][name])):
            return False, f"property (P) witness for {name}"
    # components of H1 n H2 against those of H3 n H4: joins of size 5 along a matching, else empty
    left, right = S_prime.components((0, 1)), S_prime.components((2, 3))
    sizes = [[len(S_prime.min_upper_bounds(a, b)) for b in right] for a in left]
    values = sorted({s for row in sizes for s in row})
    matching = all(row.count(5) == 1 for row in sizes) and all(
        [row[j] for row in sizes].count(5) == 1 for j in range(len(right))
    )
    return values == g["join_sizes"] and matching, f"join sizes {values}"


def check_betti(g):
    bad = []
    for name, want in g.items():
        dims = build_rational_presentation(_named(name)).algebra.graded_dimensions()
        if dims != want:
            bad.append(f"{name}: {dims}")
    return not bad, "; ".join(bad) or f"{len(g)} arrangements"


def check_degree_two(g):
    pres = build_unimodular_presentation(A)
    H = pres.algebra
    w = [H.generator(f"omega{i}") for i in (1, 2, 3)]
    p1, p2, p3 = H.psi(0), H.psi(1), H.psi(2)
    elements = [
        w[0] * p1,
        w[1] * p2,
        w[2] * p3,
        (w[1] - w[0] + p1) * (w[2] - w[1] - p1),
        (w[0] - w[2]) * (w[0] - w[1] - p1),
        (w[1] - w[2]) * (w[0] - w[1] + p2),
    ]
    zero = sum(1 for e in elements if e.is_zero())
    return zero == g["vanishing"], f"{zero} of {len(elements)} vanish"


def check_resonance_A(g):
    pres = build_unimodular_presentation(A)
    dim_k, kernel = wedge_kernel(pres.algebra)
    if dim_k != g["kernel_dim"]:
        return False, f"kernel dimension {dim_k}"
    I = linear_ideal_of_subspace(kernel, 5)
    forms = [[g_.terms.get(tuple(int(j == i) for j in range(10)), 0) for i in range(10)] for g_ in I.generators]
    if rref(forms, 10) != rref(g["ideal_I"], 10):
        return False, "ideal I differs"
    ideal = I + grassmann_pfaffian_ideal(5)
    dim_degree = projective_dim_degree(buchberger(ideal.generators, "grevlex", ideal.variables))
    if dim_degree != tuple(g["dim_degree"]):
        return False, f"dimension and degree {dim_degree}"
    planes = presentation_resonance(pres)
    found = [p.plucker() for p in planes]
    expected = [PluckerPoint(tuple(v)) for v in g["plucker"]]
    ok = len(found) == len(expected) and all(
        any(f.projectively_equal(e) for f in found) for e in expected
    )
    return ok, f"{len(found)} planes"


def check_resonance_N(g):
    details = []
    ok = True
    for name, want in g.items():
        planes = presentation_resonance(build_rational_presentation(NAMED_MATRICES[name]))
        expected = [Plane.span(u, v) for u, v in want]
        same = len(planes) == len(expected) and all(p in planes for p in expected)
        ok = ok and same
        details.append(f"{name}: {len(planes)} planes")
    return ok, "; ".join(details)


def check_integral_lattices(g):
    for a in g["a"]:
        spec = CoveringSpec(g["n"], a)
        if build_h1_lattice(spec).sublattices != closed_form_sublattices(spec):
            return False, f"a = {a}"
    return True, "Q1..Q5 for a = " + ", ".join(str(a) for a in g["a"])


def check_c_values(g):
    n = g["value"]
    for a in (1, 2):
        table = c_table(build_h1_lattice(CoveringSpec(n, a)))
        for pair, c in table.items():
            want = n if pair in [tuple(p) for p in g["n_pairs"]] else 1
            if c != want:
                return False, f"a = {a}, c{pair} = {c}"
    return True, f"value {n} on {len(g['n_pairs'])} pairs, 1 elsewhere"


def check_obstruction(g):
    for (n, a), want in g["pair_sum"].items():
        H = build_h1_lattice(CoveringSpec(n, a))
        got = pair_sum_in_nL(torus_line_generators(H), n, torus_lattice(H)) is not None
        if got != want:
            return False, f"pair sum for n={n}, a={a}"
    for n in g["non_isomorphic"]:
        if verify_non_isomorphism(n).status != "non-isomorphic":
            return False, f"n = {n}"
    for n in g["withheld"]:
        if verify_non_isomorphism(n).status != "withheld":
            return False, f"n = {n}"
    return True, "non-isomorphic for n = " + ", ".join(str(n) for n in g["non_isomorphic"])


def check_mult_ranks(g):
    got = {
        name: quotient_by_torus_ideal(build_rational_presentation(NAMED_MATRICES[name]).algebra).multiplication_rank(1, 2)
        for name in ("N", "Nprime")
    }
    got["A"] = build_unimodular_presentation(A).algebra.multiplication_rank(1, 1)
    return got == g, ", ".join(f"{k}: {v}" for k, v in got.items())


def check_component_groups(g):
    full = component_group(N, range(4))
    if full.group.invariant_factors != tuple(g["LG_full"]):
        return False, f"LG([4]) = {full.group}"
    kernels = lg_kernel_table(N)
    if len(set(kernels.values())) != len(kernels):
        return False, "N kernels not distinct"
    kernels_prime = lg_kernel_table(N_PRIME)
    equal = sorted((I, J) for I, J in combinations(sorted(kernels_prime), 2) if kernels_prime[I] == kernels_prime[J])
    if equal != sorted(tuple(p) for p in g["Nprime_coincidences"]):
        return False, f"N' coincidences {equal}"
    for M, table in ((N, kernels), (N_PRIME, kernels_prime)):
        for I, J in combinations(sorted(table), 2):
            if commuting_iso_exists(M, I, J) != (table[I] == table[J]):
                return False, f"commuting isomorphism {I} {J}"
    return True, "(Z/5)^2, kernel pattern as expected"


def check_rational_invariants(g):
    n = g["n"]
    first, second = rational_invariants(covering_matrix(n, 1)), rational_invariants(covering_matrix(n, 2))
    return first == second, f"graded dimensions {first[0]}"


def check_integral_pieces(g):
    for name, want in g.items():
        M = NAMED_MATRICES[name]
        pieces = [integral_graded_unimodular(M, k) for k in range(M.nrows + 1)]
        if [free for free, _ in pieces] != want or any(torsion for _, torsion in pieces):
            return False, f"{name}: {pieces}"
    return True, "torsion-free"


CHECKS: Dict[str, Callable] = {
    "tutte": check_tutte,
    "poincare": check_poincare,
    "matroid-tables": check_matroid_tables,
    "layers": check_layers,
    "betti": check_betti,
    "degree-two": check_degree_two,
    "resonance-A": check_resonance_A,
    "resonance-N": check_resonance_N,
    "integral-lattices": check_integral_lattices,
    "c-values": check_c_values,
    "obstruction": check_obstruction,
    "mult-ranks": check_mult_ranks,
    "component-groups": check_component_groups,
    "rational-invariants": check_rational_invariants,
    "integral-pieces": check_integral_pieces,
}


def _perturb(value):
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, list) and value:
        return [_perturb(value[0])] + value[1:]
    if isinstance(value, tuple) and value:
        return (_perturb(value[0]),) + value[1:]
    if isinstance(value, dict) and value:
        key = next(iter(value))
        return {**value, key: _perturb(value[key])}
    return value


def run_reproduction(only: Optional[List[str]] = None, corrupt: Optional[str] = None) -> Report:
    """
    Args:
        only: names of the checks to run (all when None)
        corrupt: a check whose golden value is perturbed first; it must fail

    Raises:
        InputError: unknown check name
    """
    names = list(only) if only else list(CHECKS)
    for name in names + ([corrupt] if corrupt else []):
        if name not in CHECKS:
            raise InputError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    if corrupt and corrupt not in names:
        names.append(corrupt)
    golden = copy.deepcopy(GOLDEN)
    if corrupt:
        golden[corrupt] = _perturb(golden[corrupt])
        logger.warning(f"golden value of {corrupt!r} perturbed")

    report = Report("reproduce", input_digest(N, N_PRIME, N_SECOND, A))
    for name in names:
        logger.info(f"Running check {name}")
        try:
            passed, detail = CHECKS[name](golden[name])
        except TorarrError as e:
            logger.error(f"Check {name} raised: {e}")
            passed, detail = False, str(e)
        report.check(name, passed, detail)
    report.results["checks_run"] = len(names)
    report.results["passed"] = sum(1 for c in report.checks if c.passed)
    return report
