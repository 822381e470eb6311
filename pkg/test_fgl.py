"""
Tests for the cobordism formal group law
"""

import unittest
from fractions import Fraction

import pytest

import fgl
from exactalg import MultiPoly
from series import BiTruncSeries, TruncSeries, compare_bi, graded_check


def g(name):
    return MultiPoly.gen(name)


class TestLogarithm(unittest.TestCase):
    """Miscenko's logarithm and its inverse"""

    def test_log_coefficients(self):
        expected = TruncSeries(3, [0, 1, g("CP1").scale(Fraction(1, 2)), g("CP2").scale(Fraction(1, 3))])
        self.assertEqual(fgl.miscenko_log(3), expected)

    def test_exp_coefficients(self):
        a = g("CP1").scale(Fraction(1, 2))
        c = g("CP2").scale(Fraction(1, 3))
        expected = TruncSeries(3, [0, 1, -a, (a * a).scale(2) - c])
        self.assertEqual(fgl.fgl_exp(3), expected)

    def test_grading(self):
        self.assertTrue(graded_check(fgl.miscenko_log(6), -1))
        self.assertTrue(graded_check(fgl.fgl_exp(6), -1))
        self.assertTrue(graded_check(fgl.bmu_series(6)))
        self.assertTrue(fgl.grading_check(5))

    def test_order_must_be_positive(self):
        with self.assertRaises(ValueError):
            fgl.miscenko_log(0)

    def test_context(self):
        ctx = fgl.FglContext.build(4)
        self.assertEqual(ctx.log_series, fgl.miscenko_log(4))
        self.assertEqual(ctx.exp_series, fgl.fgl_exp(4))
        self.assertEqual(ctx.sum(), fgl.fgl_sum(4))
        self.assertEqual(ctx.bmu(), fgl.bmu_series(4))


class TestFormalGroupSum(unittest.TestCase):
    """z0 +_MU z1"""

    def setUp(self):
        self.F = fgl.fgl_sum(5)

    def test_low_degree_cells(self):
        self.assertEqual(self.F[1, 0], 1)
        self.assertEqual(self.F[0, 1], 1)
        self.assertEqual(self.F[2, 0], 0)
        self.assertEqual(self.F[1, 1], -g("CP1"))

    def test_hurewicz_image_of_first_cell(self):
        image = fgl.hurewicz_image(self.F)
        self.assertEqual(image[1, 1], g("h1").scale(2))

    def test_group_law_axioms(self):
        for report in fgl.group_law_checks(5):
            self.assertTrue(report, report.name)

    def test_bmu_first_coefficients(self):
        bmu = fgl.bmu_series(3)
        b = g("b")
        self.assertEqual(bmu[1], b)
        self.assertEqual(bmu[2], (b * b).scale(Fraction(1, 2)) + (b * g("CP1")).scale(Fraction(1, 2)))


@pytest.mark.parametrize("order", [2, 4, 8])
def test_hopf_relation(order):
    report = fgl.hopf_check(order)
    assert report.ok, report.detail


def test_hopf_discrepancy_is_located():
    lhs, rhs = fgl.hopf_sides(4)
    report = compare_bi("hopf", lhs + BiTruncSeries(4, {(2, 0): 1}), rhs)
    assert not report
    assert report.position == (2, 0)
    assert report.left - report.right == 1


@pytest.mark.parametrize("order", [2, 4, 8])
def test_additive_image(order):
    assert fgl.additive_image_check(order)


def test_roundtrips():
    reports = fgl.roundtrip_check(12)
    assert [r.name for r in reports] == ["log-exp", "exp-log", "newton", "exp-of-log"]
    assert all(reports)


def test_broken_sum_is_detected():
    F = fgl.fgl_sum(4)
    broken = F + BiTruncSeries(4, {(2, 1): g("CP2")})
    report = compare_bi("commutativity", broken, broken.transpose())
    assert not report
    assert report.position == (2, 1)
