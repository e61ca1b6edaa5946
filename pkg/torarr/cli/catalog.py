"""Built-in matrices addressed as @NAME on the command line."""

import re

from torarr.covering import CoveringSpec
from torarr.errors import CoveringError, InputError
from torarr.linalg import IntMatrix

NAMED_MATRICES = {
    "N": IntMatrix.from_rows([[1, 1, 1, 3], [0, 5, 0, 5], [0, 0, 5, 5]]),
    "Nprime": IntMatrix.from_rows([[1, 4, 1, 6], [0, 5, 0, 5], [0, 0, 5, 5]]),
    "Nsecond": IntMatrix.from_rows([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]),
    "A": IntMatrix.from_rows([[1, 0, 1], [0, 1, 1]]),
}

_COVERING = re.compile(r"^A\((-?\d+),\s*(-?\d+)\)$")


def covering_matrix(n: int, a: int) -> IntMatrix:
    """A_n^a: columns (1,0), (a,n), (a+1,n)."""
    return CoveringSpec(n, a).matrix()


def named_matrix(name: str) -> IntMatrix:
    """
    Raises:
        InputError: unknown name or invalid covering parameters
    """
    key = name[1:] if name.startswith("@") else name
    if key in NAMED_MATRICES:
        return NAMED_MATRICES[key]
    match = _COVERING.match(key)
    if match:
        n, a = int(match.group(1)), int(match.group(2))
        try:
            return covering_matrix(n, a)
        except CoveringError as e:
            raise InputError(f"@{key}: {e}")
    known = ", ".join(f"@{k}" for k in NAMED_MATRICES)
    raise InputError(f"unknown matrix {name!r}; known: {known}, @A(n,a)")
