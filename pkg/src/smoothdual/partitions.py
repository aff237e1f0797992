"""Partitions of r as cycle types in S_r, with centralizer data."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

Partition = tuple


@lru_cache(maxsize=None)
def _partitions_bounded(r, largest):
    if r == 0:
        return ((),)
    out = []
    for first in range(min(r, largest), 0, -1):
        for rest in _partitions_bounded(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(r: int) -> list[Partition]:
    """All partitions of r, lexicographically decreasing: [r], [r-1, 1], ..."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    return list(_partitions_bounded(r, r))


def partition_count(r: int) -> int:
    return len(_partitions_bounded(r, r))


def distinct_part_multiplicities(p) -> list[tuple[int, int]]:
    """[(t_1, n_1), ..., (t_k, n_k)] with t_1 < ... < t_k."""
    return sorted(Counter(p).items())


def centralizer_order(p) -> int:
    # Z(gamma) is the product of wreath products Z/t wr S_n
    order = 1
    for t, n in distinct_part_multiplicities(p):
        order *= t**n * factorial(n)
    return order


def conjugacy_class_size(p) -> int:
    return factorial(sum(p)) // centralizer_order(p)
