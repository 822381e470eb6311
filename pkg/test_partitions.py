"""
Tests for partition enumeration and weights
"""

import unittest
from fractions import Fraction

import pytest
import sympy

from partitions import (
    Partition,
    cycle_weight,
    enumerate_partitions,
    multinomial,
    partition_count,
)


def partitions_by_insertion(n):
    """Independent generator: grow every partition of n-1 by a new part or a +1"""
    shapes = {()}
    for _ in range(n):
        grown = set()
        for shape in shapes:
            grown.add(tuple(sorted(shape + (1,), reverse=True)))
            for i in range(len(shape)):
                bumped = list(shape)
                bumped[i] += 1
                grown.add(tuple(sorted(bumped, reverse=True)))
        shapes = grown
    return shapes


class TestPartition(unittest.TestCase):
    """Repetition-vector partitions"""

    def test_from_parts(self):
        p = Partition.from_parts([2, 1, 1])
        self.assertEqual(p.n, 4)
        self.assertEqual(p.reps, (2, 1))
        self.assertEqual(p.length, 3)
        self.assertEqual(p.parts(), (2, 1, 1))
        self.assertEqual(list(p.multiplicities()), [(1, 2), (2, 1)])

    def test_trailing_zeros_trimmed(self):
        self.assertEqual(Partition(2, (2, 0, 0)), Partition.from_parts([1, 1]))
        self.assertEqual(Partition(3, (0, 0, 1)).rep(7), 0)

    def test_weight_validated(self):
        with self.assertRaises(ValueError):
            Partition(4, (1, 1))
        with self.assertRaises(ValueError):
            Partition.from_parts([0, 2])

    def test_empty_partition(self):
        self.assertEqual(enumerate_partitions(0), (Partition(0, ()),))
        self.assertEqual(str(Partition(0, ())), "()")


class TestEnumeration(unittest.TestCase):
    """Enumeration order and counts"""

    def test_order_for_four(self):
        parts = [p.parts() for p in enumerate_partitions(4)]
        self.assertEqual(parts, [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])

    def test_each_partition_once(self):
        for n in range(12):
            shapes = [p.parts() for p in enumerate_partitions(n)]
            self.assertEqual(len(shapes), len(set(shapes)))
            self.assertEqual(set(shapes), partitions_by_insertion(n))

    def test_negative_rejected(self):
        with self.assertRaises(ValueError):
            enumerate_partitions(-1)


@pytest.mark.parametrize("n", range(31))
def test_counts_match_sympy(n):
    assert partition_count(n) == sympy.npartitions(n)


def test_multinomial():
    assert multinomial(Partition.from_parts([2, 1, 1])) == 3
    assert multinomial(Partition.from_parts([1, 1, 1, 1])) == 1
    assert multinomial(Partition.from_parts([3, 2, 1])) == 6


@pytest.mark.parametrize("n", range(1, 13))
def test_cycle_weights_sum_to_one(n):
    assert sum(cycle_weight(p) for p in enumerate_partitions(n)) == 1


def test_cycle_weight_value():
    assert cycle_weight(Partition.from_parts([2, 1, 1])) == Fraction(1, 4)
