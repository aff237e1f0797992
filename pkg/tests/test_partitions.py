from math import factorial

import pytest

from oracles import brute_centralizers, brute_class_sizes, brute_partitions
from smoothdual.partitions import (
    centralizer_order,
    conjugacy_class_size,
    distinct_part_multiplicities,
    enumerate_partitions,
)


def test_small_cases():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(2) == [(2,), (1, 1)]
    assert len(enumerate_partitions(4)) == 5


def test_order_is_lexicographically_decreasing():
    parts = enumerate_partitions(7)
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("r", range(21))
def test_matches_brute_force(r):
    parts = enumerate_partitions(r)
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(r)


@pytest.mark.parametrize("p, expected", [
    ((2, 1), [(1, 1), (2, 1)]),
    ((1, 1), [(1, 2)]),
    ((3, 3, 2, 1, 1, 1), [(1, 3), (2, 1), (3, 2)]),
])
def test_distinct_part_multiplicities(p, expected):
    assert distinct_part_multiplicities(p) == expected


@pytest.mark.parametrize("p, expected", [((1, 1), 2), ((2, 1), 2), ((3,), 3)])
def test_centralizer_examples(p, expected):
    assert centralizer_order(p) == expected


@pytest.mark.parametrize("p, expected", [((1, 1), 1), ((2, 1), 3), ((2, 2), 3)])
def test_class_size_examples(p, expected):
    assert conjugacy_class_size(p) == expected


@pytest.mark.parametrize("r", range(1, 7))
def test_centralizers_match_symmetric_group(r):
    brute = brute_centralizers(r)
    assert {p: centralizer_order(p) for p in enumerate_partitions(r)} == brute
    assert {p: conjugacy_class_size(p) for p in enumerate_partitions(r)} == brute_class_sizes(r)


@pytest.mark.parametrize("r", range(11))
def test_class_equation(r):
    assert sum(conjugacy_class_size(p) for p in enumerate_partitions(r)) == factorial(r)
