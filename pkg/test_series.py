"""
Tests for truncated univariate and bivariate series
"""

import math
import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import ConstantTermNotOne, NonzeroConstantTerm, NotNormalized, OrderMismatch
from exactalg import MultiPoly
from series import (
    BiTruncSeries,
    TruncSeries,
    bi_compose,
    bi_lift,
    bi_substitute,
    compare_bi,
    compare_series,
    exp_partition_expansion,
    graded_check,
    series_compose,
    series_derivative,
    series_exp,
    series_inverse,
    series_log,
    series_pow,
    series_reciprocal,
)


class TestTruncSeries(unittest.TestCase):
    """Univariate arithmetic"""

    def setUp(self):
        self.z = TruncSeries.variable(5)

    def test_padding_and_truncation(self):
        f = TruncSeries(3, [1, 2, 3, 4, 5, 6])
        self.assertEqual(len(f), 4)
        self.assertEqual(f[3], 4)
        self.assertEqual(TruncSeries(3, [1])[2], 0)

    def test_order_must_be_positive(self):
        with self.assertRaises(ValueError):
            TruncSeries(0)

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatch):
            self.z + TruncSeries.variable(4)

    def test_product_truncates(self):
        square = TruncSeries(3, [1, 1]) * TruncSeries(3, [1, 1])
        self.assertEqual(square, TruncSeries(3, [1, 2, 1]))
        cube = square * TruncSeries(3, [0, 0, 1, 1])
        self.assertEqual(cube, TruncSeries(3, [0, 0, 1, 3]))

    def test_exp_of_z(self):
        e = series_exp(self.z)
        self.assertEqual([c.constant_term() for c in e], [Fraction(1, math.factorial(k)) for k in range(6)])

    def test_log_of_one_plus_z(self):
        log = series_log(TruncSeries(5, [1, 1]))
        expected = [0] + [Fraction((-1) ** (k + 1), k) for k in range(1, 6)]
        self.assertEqual(log, TruncSeries(5, expected))

    def test_log_needs_unit_constant(self):
        with self.assertRaises(ConstantTermNotOne):
            series_log(TruncSeries(3, [2, 1]))
        with self.assertRaises(NonzeroConstantTerm):
            series_exp(TruncSeries(3, [1, 1]))

    def test_reciprocal_of_geometric(self):
        self.assertEqual(series_reciprocal(TruncSeries(5, [1, -1])), TruncSeries(5, [1] * 6))
        with self.assertRaises(ValueError):
            series_reciprocal(self.z)

    def test_fractional_power(self):
        root = series_pow(TruncSeries(5, [1, 1]), Fraction(1, 2))
        self.assertEqual(root * root, TruncSeries(5, [1, 1]))

    def test_derivative(self):
        f = TruncSeries(3, [5, 1, 1, 1])
        self.assertEqual(series_derivative(f), TruncSeries(3, [1, 2, 3]))

    def test_compose(self):
        f = TruncSeries(4, [0, 1, 1])
        self.assertEqual(series_compose(f, f), TruncSeries(4, [0, 1, 2, 2, 1]))
        with self.assertRaises(NonzeroConstantTerm):
            series_compose(f, TruncSeries(4, [1, 1]))

    def test_inverse_catalan(self):
        f = TruncSeries(6, [0, 1, 1])
        expected = TruncSeries(6, [0, 1, -1, 2, -5, 14, -42])
        self.assertEqual(series_inverse(f), expected)
        self.assertEqual(series_inverse(f, method="newton"), expected)

    def test_inverse_needs_normalized_series(self):
        with self.assertRaises(NotNormalized):
            series_inverse(TruncSeries(3, [0, 2, 1]))
        with self.assertRaises(NotNormalized):
            series_inverse(TruncSeries(3, [1, 1]))
        with self.assertRaises(ValueError):
            series_inverse(self.z, method="bisection")

    def test_exp_partition_expansion(self):
        coeffs = exp_partition_expansion([1, 0, 0, 0])
        self.assertEqual(coeffs, [Fraction(1, math.factorial(n)) for n in range(5)])

    def test_exp_partition_expansion_matches_series_exp(self):
        c = [MultiPoly.generator("p", k) for k in range(1, 13)]
        self.assertEqual(exp_partition_expansion(c), list(series_exp(TruncSeries(12, [0] + c))))

    def test_inverse_with_symbolic_coefficients(self):
        b, h1, h2 = MultiPoly.gen("b"), MultiPoly.gen("h1"), MultiPoly.gen("h2")
        f = TruncSeries(5, [0, 1, b])
        expected = TruncSeries(5, [0, 1, -b, (b ** 2).scale(2), (b ** 3).scale(-5), (b ** 4).scale(14)])
        self.assertEqual(series_inverse(f), expected)
        self.assertEqual(series_inverse(f, method="newton"), expected)
        f = TruncSeries(4, [0, 1, h1, h2])
        expected = TruncSeries(4, [0, 1, -h1, (h1 ** 2).scale(2) - h2, (h1 ** 3).scale(-5) + (h1 * h2).scale(5)])
        self.assertEqual(series_inverse(f), expected)
        self.assertEqual(series_inverse(f, method="newton"), expected)

    def test_graded_check(self):
        cp1 = MultiPoly.gen("CP1")
        self.assertTrue(graded_check(TruncSeries(2, [0, 1, cp1]), -1))
        self.assertFalse(graded_check(TruncSeries(2, [0, 1, cp1]), 0))


class TestBiTruncSeries(unittest.TestCase):
    """Bivariate series truncated by total degree"""

    def test_positions_order(self):
        F = BiTruncSeries(2)
        self.assertEqual(list(F.positions()),
                         [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)])

    def test_cells_above_order_dropped(self):
        F = BiTruncSeries(2, {(1, 1): 3, (2, 1): 5, (0, 0): 0})
        self.assertEqual(F.items(), [((1, 1), MultiPoly.constant(3))])
        with self.assertRaises(IndexError):
            F[2, 1]

    def test_exp_of_sum_factors(self):
        z = TruncSeries.variable(5)
        e = series_exp(z)
        lhs = bi_compose(e, bi_lift(z, "z0") + bi_lift(z, "z1"))
        rhs = bi_lift(e, "z0") * bi_lift(e, "z1")
        self.assertTrue(compare_bi("exp", lhs, rhs))

    def test_transpose(self):
        F = BiTruncSeries(3, {(2, 1): 7})
        self.assertEqual(F.transpose()[1, 2], 7)

    def test_substitute_diagonal(self):
        z = TruncSeries.variable(3)
        F = bi_lift(z, "z0") * bi_lift(z, "z1")
        self.assertEqual(bi_substitute(F, z, z), TruncSeries(3, [0, 0, 1]))

    def test_lift_rejects_unknown_variable(self):
        with self.assertRaises(ValueError):
            bi_lift(TruncSeries.variable(2), "z2")


def test_compare_series_reports_first_difference():
    lhs = TruncSeries(4, [0, 1, 2, 3])
    rhs = TruncSeries(4, [0, 1, 2, 4, 5])
    report = compare_series("demo", lhs, rhs)
    assert not report
    assert report.position == (3,)
    assert report.left == 3 and report.right == 4


def test_compare_bi_reports_first_difference():
    lhs = BiTruncSeries(3, {(1, 0): 1, (2, 1): 1})
    rhs = BiTruncSeries(3, {(1, 0): 1, (1, 2): 1})
    report = compare_bi("demo", lhs, rhs)
    assert not report
    assert report.position == (2, 1)


def test_compare_rejects_mixed_orders():
    with pytest.raises(OrderMismatch):
        compare_series("demo", TruncSeries.variable(2), TruncSeries.variable(3))


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6))
def test_exp_log_roundtrip(tail):
    f = TruncSeries(len(tail), [1] + tail)
    assert series_exp(series_log(f)) == f


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=5))
def test_inverse_is_two_sided(tail):
    order = len(tail) + 1
    f = TruncSeries(order, [0, 1] + tail)
    g = series_inverse(f)
    z = TruncSeries.variable(order)
    assert series_compose(f, g) == z
    assert series_compose(g, f) == z


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=9, max_size=9),
       st.lists(rationals, min_size=8, max_size=8),
       st.lists(rationals, min_size=8, max_size=8))
def test_composition_is_associative(f_coeffs, g_tail, h_tail):
    f = TruncSeries(8, f_coeffs)
    g = TruncSeries(8, [0] + g_tail)
    h = TruncSeries(8, [0] + h_tail)
    assert series_compose(f, series_compose(g, h)) == series_compose(series_compose(f, g), h)


small_ints = st.integers(min_value=-2, max_value=2)
symbolic_coefficients = st.tuples(small_ints, small_ints, small_ints, small_ints).map(
    lambda w: w[0] + MultiPoly.gen("h1") * w[1] + MultiPoly.gen("h2") * w[2] + MultiPoly.gen("b") * w[3]
)


@settings(max_examples=25, deadline=None)
@given(st.lists(symbolic_coefficients, min_size=1, max_size=4))
def test_newton_agrees_with_solving(tail):
    f = TruncSeries(len(tail) + 1, [0, 1] + tail)
    assert series_inverse(f, method="newton") == series_inverse(f)
