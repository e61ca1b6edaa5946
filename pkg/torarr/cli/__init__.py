"""Command-line surface: matrix files, reports and subcommands."""

from torarr.cli.catalog import NAMED_MATRICES, covering_matrix, named_matrix
from torarr.cli.matrix_file import format_matrix, input_digest, load_matrix, parse_matrix_text
from torarr.cli.report import Check, Report
from torarr.cli.commands import (
    cmd_cohomology,
    cmd_layers,
    cmd_matroid,
    cmd_poset_compare,
    cmd_resonance,
)
from torarr.cli.reproduce import CHECKS, GOLDEN, run_reproduction

__all__ = [
    "NAMED_MATRICES",
    "covering_matrix",
    "named_matrix",
    "format_matrix",
    "input_digest",
    "load_matrix",
    "parse_matrix_text",
    "Check",
    "Report",
    "cmd_cohomology",
    "cmd_layers",
    "cmd_matroid",
    "cmd_poset_compare",
    "cmd_resonance",
    "CHECKS",
    "GOLDEN",
    "run_reproduction",
]
