"""
Quillen's formal group law for complex cobordism, modelled over Q[CP_1, CP_2, ...]

log_MU(z) = sum_k CP_{k-1}/k z^k is Miscenko's logarithm, exp_MU its
compositional inverse, and z0 +_MU z1 = exp_MU(log_MU(z0) + log_MU(z1)).
The series b^MU(z) is never stored as opaque symbols: it is always
exp(b log_MU(z)).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from exactalg import MultiPoly
from hurewicz import apply_hurewicz, orientation_series
from series import (
    BiTruncSeries,
    CheckReport,
    TruncSeries,
    bi_compose,
    bi_graded_check,
    bi_lift,
    bi_substitute,
    compare_bi,
    compare_series,
    graded_check,
    series_compose,
    series_exp,
    series_inverse,
    series_log,
    series_scale,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FglContext:
    """Logarithm and exponential of the formal group law at one truncation order"""
    order: int
    log_series: TruncSeries
    exp_series: TruncSeries

    @classmethod
    def build(cls, order: int) -> "FglContext":
        return cls(order, miscenko_log(order), fgl_exp(order))

    def sum(self) -> BiTruncSeries:
        return fgl_sum(self.order)

    def bmu(self) -> TruncSeries:
        return bmu_series(self.order)


@lru_cache(maxsize=None)
def miscenko_log(N: int) -> TruncSeries:
    """z + CP_1/2 z^2 + ... + CP_{N-1}/N z^N"""
    if N < 1:
        raise ValueError("order must be a positive integer")
    coeffs = [MultiPoly.zero()]
    coeffs += [MultiPoly.generator("CP", k - 1).scale(Fraction(1, k)) for k in range(1, N + 1)]
    return TruncSeries(N, coeffs)


@lru_cache(maxsize=None)
def fgl_exp(N: int) -> TruncSeries:
    return series_inverse(miscenko_log(N))


@lru_cache(maxsize=None)
def fgl_sum(N: int) -> BiTruncSeries:
    """F(z0, z1) = exp_MU(log_MU(z0) + log_MU(z1)) to total degree N"""
    log = miscenko_log(N)
    total = bi_compose(fgl_exp(N), bi_lift(log, "z0") + bi_lift(log, "z1"))
    logger.debug("Formal group sum to order %d has %d nonzero cells", N, len(total.items()))
    return total


@lru_cache(maxsize=None)
def bmu_series(N: int) -> TruncSeries:
    """b^MU(z) = exp(b log_MU(z)) over Q[CP_*, b]"""
    return series_exp(series_scale(miscenko_log(N), MultiPoly.generator("b")))


def hurewicz_image(series):
    """Apply CP_k -> h(CP_k) to every coefficient of a uni- or bivariate series"""
    return series.map_coefficients(apply_hurewicz)


def hopf_sides(N: int) -> Tuple[BiTruncSeries, BiTruncSeries]:
    """b^MU(z0) b^MU(z1) and b^MU(z0 +_MU z1), truncated to total degree N"""
    bmu = bmu_series(N)
    return bi_lift(bmu, "z0") * bi_lift(bmu, "z1"), bi_compose(bmu, fgl_sum(N))


def hopf_check(N: int) -> CheckReport:
    lhs, rhs = hopf_sides(N)
    report = compare_bi("hopf", lhs, rhs)
    logger.info("Hopf relation at order %d: %s", N, "ok" if report else "FAILED")
    return report


def additive_image_check(N: int) -> CheckReport:
    """After the Hurewicz map the formal group law is B(B^{-1}(z0) + B^{-1}(z1))"""
    lhs = hurewicz_image(fgl_sum(N))
    B = orientation_series(N)
    B_inverse = series_inverse(B)
    rhs = bi_compose(B, bi_lift(B_inverse, "z0") + bi_lift(B_inverse, "z1"))
    report = compare_bi("additive", lhs, rhs)
    logger.info("Additive image at order %d: %s", N, "ok" if report else "FAILED")
    return report


def associativity_check(N: int) -> CheckReport:
    """log_MU(F(z0, z1)) = log_MU(z0) + log_MU(z1), certifying associativity"""
    log = miscenko_log(N)
    lhs = bi_compose(log, fgl_sum(N))
    rhs = bi_lift(log, "z0") + bi_lift(log, "z1")
    return compare_bi("associativity", lhs, rhs)


def grading_check(N: int) -> CheckReport:
    """Cell (i, j) of the sum has degree 2(i + j - 1); z^k of b^MU(z) has degree 2k"""
    ok = bi_graded_check(fgl_sum(N), -1) and graded_check(miscenko_log(N), -1) \
        and graded_check(bmu_series(N))
    return CheckReport("grading", ok, f"homogeneous up to order {N}")


def group_law_checks(N: int) -> List[CheckReport]:
    """Unit, commutativity, associativity and grading of the formal group sum"""
    F = fgl_sum(N)
    z = TruncSeries.variable(N)
    unit = compare_series("unit", bi_substitute(F, z, TruncSeries.zero(N)), z)
    commutativity = compare_bi("commutativity", F, F.transpose())
    return [unit, commutativity, associativity_check(N), grading_check(N)]


def roundtrip_check(N: int) -> List[CheckReport]:
    """exp_MU is a two-sided inverse, both inversion strategies agree, exp and log invert"""
    log, exp = miscenko_log(N), fgl_exp(N)
    z = TruncSeries.variable(N)
    bmu = bmu_series(N)
    return [
        compare_series("log-exp", series_compose(log, exp), z),
        compare_series("exp-log", series_compose(exp, log), z),
        compare_series("newton", series_inverse(log, method="newton"), exp),
        compare_series("exp-of-log", series_exp(series_log(bmu)), bmu),
    ]
