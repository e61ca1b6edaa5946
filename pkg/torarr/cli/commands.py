"""
Subcommand implementations. Each takes parsed matrices and options and
returns a Report; printing and exit codes belong to main.py.
"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple

from torarr.cohom import (
    build_rational_presentation,
    build_unimodular_presentation,
    integral_graded_unimodular,
    quotient_by_torus_ideal,
)
from torarr.cli.matrix_file import format_matrix, input_digest
from torarr.cli.report import Report
from torarr.covering import CoveringSpec, build_h1_lattice
from torarr.errors import CoveringError, InputError, UnresolvedResonanceError, UnsupportedResonanceError
from torarr.layers import enumerate_layers, hasse_dot, is_isomorphic, property_P, split_holds
from torarr.linalg import IntMatrix
from torarr.matroid import (
    arithmetic_tutte,
    from_matrix,
    is_totally_unimodular,
    poincare_polynomial,
    zmatroid_from_matrix,
)
from torarr.resonance import h1_element, presentation_resonance

logger = logging.getLogger(__name__)


def _module_text(module) -> str:
    free, torsion = module
    parts = [f"Z^{free}"] if free else []
    parts += [f"Z/{d}" for d in torsion]
    return " x ".join(parts) or "0"


def cmd_matroid(N: IntMatrix, max_subsets: int = None, force: bool = False) -> Report:
    report = Report("matroid", input_digest(N))
    M = from_matrix(N, max_subsets, force)
    Z = zmatroid_from_matrix(N, max_subsets, force)
    tutte = arithmetic_tutte(M)
    poincare = poincare_polynomial(M, N.nrows)
    report.results["matrix"] = format_matrix(N).strip().replace("\n", "; ")
    report.results["subsets"] = [
        {**row, "module": _module_text(Z.module(mask))}
        for mask, row in enumerate(M.table_rows())
    ]
    report.results["tutte"] = {"text": str(tutte), "terms": tutte.to_json()}
    report.results["poincare"] = {"text": str(poincare), "coefficients": poincare.to_json()}
    return report


def cmd_layers(N: IntMatrix, dot: Optional[str] = None, max_subsets: int = None, force: bool = False) -> Report:
    report = Report("layers", input_digest(N))
    P = enumerate_layers(N, max_subsets, force)
    report.results["layer_count"] = len(P)
    report.results["rank_profile"] = P.rank_profile()
    report.results["cover_count"] = len(P.covers())
    if dot:
        Path(dot).write_text(hasse_dot(P))
        logger.info(f"Wrote Hasse diagram to {dot}")
        report.results["dot"] = dot
    return report


def cmd_poset_compare(N1: IntMatrix, N2: IntMatrix, max_subsets: int = None, force: bool = False) -> Report:
    report = Report("compare", input_digest(N1, N2))
    P1 = enumerate_layers(N1, max_subsets, force)
    P2 = enumerate_layers(N2, max_subsets, force)
    mapping = is_isomorphic(P1, P2)
    report.results["rank_profiles"] = [P1.rank_profile(), P2.rank_profile()]
    report.results["isomorphic"] = mapping is not None
    if len(P1.atoms()) == 4 and len(P2.atoms()) == 4 and N1.ncols == 4 and N2.ncols == 4:
        props = []
        for P in (P1, P2):
            holds, witness = property_P(P)
            props.append({
                "holds": holds,
                "witness": [list(w) for w in witness] if witness else None,
                "splits": {
                    f"{i}{j}|{k}{l}": split_holds(P, (i, j), (k, l))
                    for (i, j), (k, l) in (((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3)))
                },
            })
        report.results["property_P"] = props
    return report


def cmd_cohomology(
    N: IntMatrix,
    over: str = "Q",
    quotient_torus: bool = False,
    mult_rank: Optional[Sequence[int]] = None,
    max_subsets: int = None,
    force: bool = False,
) -> Report:
    """
    Raises:
        NotUnimodularError: integral coefficients on a non-unimodular arrangement
        InputError: --quotient-torus or --mult-rank with integral coefficients
    """
    report = Report("cohomology", input_digest(N))
    report.results["over"] = over
    if over == "Z":
        if quotient_torus or mult_rank:
            raise InputError("--quotient-torus and --mult-rank need rational coefficients (--over Q)")
        pieces = []
        for k in range(N.nrows + 1):
            free, torsion = integral_graded_unimodular(N, k, max_subsets=max_subsets, force=force)
            pieces.append({"degree": k, "free_rank": free, "torsion": list(torsion)})
        report.results["graded_pieces"] = pieces
        return report

    algebra = build_rational_presentation(N, max_subsets=max_subsets, force=force).algebra
    if quotient_torus:
        algebra = quotient_by_torus_ideal(algebra)
    report.results["algebra"] = algebra.name
    report.results["generators"] = len(algebra.generators)
    report.results["graded_dimensions"] = algebra.graded_dimensions()
    if mult_rank:
        p, q = mult_rank
        report.results["multiplication_rank"] = {"p": p, "q": q, "rank": algebra.multiplication_rank(p, q)}
    return report


def _presentation(N: IntMatrix, max_subsets: int = None, force: bool = False):
    if is_totally_unimodular(N, max_subsets, force):
        return build_unimodular_presentation(N, max_subsets, force)
    return build_rational_presentation(N, max_subsets=max_subsets, force=force)


def cmd_resonance(
    N: IntMatrix,
    integral: Optional[Tuple[int, int]] = None,
    max_subsets: int = None,
    force: bool = False,
) -> Report:
    report = Report("resonance", input_digest(N))
    if integral:
        n, a = integral
        try:
            H = build_h1_lattice(CoveringSpec(n, a))
        except CoveringError as e:
            raise InputError(str(e))
        report.results["covering"] = {"n": n, "a": a}
        report.results["sublattices"] = [
            {"name": f"Q{i}", "basis": ", ".join(H.describe(b) for b in Q.basis)}
            for i, Q in enumerate(H.sublattices, start=1)
        ]
        return report

    presentation = _presentation(N, max_subsets, force)
    algebra = presentation.algebra
    try:
        planes = presentation_resonance(presentation)
    except (UnresolvedResonanceError, UnsupportedResonanceError) as e:
        report.check("resonance components resolved", False, str(e))
        return report
    report.results["algebra"] = algebra.name
    report.results["planes"] = [
        {
            "basis": ", ".join(str(h1_element(algebra, v)) for v in plane.basis),
            "plucker": str(plane.plucker()),
        }
        for plane in planes
    ]
    report.check("resonance components resolved", True, f"{len(planes)} planes")
    return report
