"""
Subsets of the ground set {0, ..., n-1} as integer bitmasks.
"""

from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from torarr.config import get_settings
from torarr.errors import GuardExceededError


def mask_of(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def subsets_of_size(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    return combinations(range(n), k)


def label(mask: int) -> str:
    """1-based display label, e.g. {1,2} for mask 0b11."""
    return "{" + ",".join(str(i + 1) for i in members(mask)) + "}"


def check_ground_guard(n: int, max_subsets: int = None, force: bool = False):
    """
    Refuse to enumerate 2^n subsets beyond the configured guard.

    Raises:
        GuardExceededError: n > max_subsets and force is not set
    """
    limit = max_subsets if max_subsets is not None else get_settings().max_subsets
    if n > limit and not force:
        raise GuardExceededError("ground set size", n, limit)


def all_masks(n: int) -> List[int]:
    return list(range(1 << n))
