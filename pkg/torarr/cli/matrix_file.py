"""
Matrix files: a header line "r n" followed by r rows of n integers, with
'#' comment lines allowed anywhere. A YAML document {"rows": [[...], ...]}
is accepted as well.
"""

import hashlib
import logging
from pathlib import Path
from typing import List, Union

import yaml

from torarr.cli.catalog import named_matrix
from torarr.errors import InputError, MatrixParseError
from torarr.linalg import IntMatrix

logger = logging.getLogger(__name__)


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatrixParseError(f"{token!r} is not an integer", line)


def _parse_rows_document(doc) -> IntMatrix:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise MatrixParseError("structured matrix document needs a 'rows' key")
    rows = doc["rows"]
    if not isinstance(rows, list) or not rows:
        raise MatrixParseError("'rows' must be a non-empty list of integer lists")
    width = None
    clean: List[List[int]] = []
    for k, row in enumerate(rows, start=1):
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise MatrixParseError(f"row {k} is not a list of integers")
        if width is not None and len(row) != width:
            raise MatrixParseError(f"row {k} has {len(row)} entries, expected {width}")
        width = len(row)
        clean.append(row)
    return IntMatrix.from_rows(clean, width)


def parse_matrix_text(text: str) -> IntMatrix:
    """
    Raises:
        MatrixParseError: malformed header, rows or document
    """
    content = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not content:
        raise MatrixParseError("empty matrix file")
    if content[0][1].startswith("{") or content[0][1].startswith("rows"):
        try:
            doc = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise MatrixParseError(f"invalid structured document: {e}")
        return _parse_rows_document(doc)

    header_line, header = content[0]
    fields = header.split()
    if len(fields) != 2:
        raise MatrixParseError(f"header must be 'r n', got {header!r}", header_line)
    r, n = (_parse_int(f, header_line) for f in fields)
    if r < 1 or n < 0:
        raise MatrixParseError(f"need r >= 1 and n >= 0, got r={r}, n={n}", header_line)
    body = content[1:]
    if n == 0:
        # rows of zero entries are blank lines
        if body:
            number, line = body[0]
            raise MatrixParseError(f"expected 0 entries, found {len(line.split())}", number)
        return IntMatrix.from_rows([[] for _ in range(r)], 0)
    if len(body) != r:
        last = body[-1][0] if body else header_line
        raise MatrixParseError(f"expected {r} rows, found {len(body)}", last)
    rows = []
    for number, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixParseError(f"expected {n} entries, found {len(tokens)}", number)
        rows.append([_parse_int(t, number) for t in tokens])
    return IntMatrix.from_rows(rows, n)


def format_matrix(N: IntMatrix) -> str:
    """Canonical text form; parse_matrix_text(format_matrix(N)) == N."""
    lines = [f"{N.nrows} {N.ncols}"]
    lines += [" ".join(str(x) for x in row) for row in N.rows]
    return "\n".join(lines) + "\n"


def input_digest(*matrices: IntMatrix) -> str:
    h = hashlib.sha256()
    for N in matrices:
        h.update(format_matrix(N).encode())
    return h.hexdigest()


def load_matrix(source: Union[str, Path]) -> IntMatrix:
    """
    A named matrix (@N, @A(7,1), ...) or a matrix file.

    Raises:
        InputError: unknown name, missing file or parse error
    """
    source = str(source)
    if source.startswith("@"):
        return named_matrix(source)
    path = Path(source)
    if not path.exists():
        raise InputError(f"Matrix file not found: {path}")
    N = parse_matrix_text(path.read_text())
    logger.info(f"Loaded {N.nrows}x{N.ncols} matrix from {path}")
    return N
