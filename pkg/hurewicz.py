"""
Characteristic numbers of projective spaces and the partition expansion of b^MU_n

H_*(MU) is identified with Z[h_1, h_2, ...] through the orientation series
B(z) = z + h_1 z^2 + h_2 z^3 + ..., and characteristic numbers are taken in the
normal-bundle convention. Rational computations use the ordinary generator b;
results are reported in the divided-power basis b_(r) = b^r / r!.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from errors import IntegralityViolation
from exactalg import Generator, MultiPoly, Scalar, exact_div_int, is_divisible_over_Z
from partitions import Partition, enumerate_partitions, multinomial
from series import (
    BiTruncSeries,
    CheckReport,
    TruncSeries,
    bi_compose,
    bi_lift,
    compare_bi,
    exp_partition_expansion,
    series_exp,
    series_inverse,
    series_log,
    series_pow,
    series_scale,
)

logger = logging.getLogger(__name__)

B = Generator("b")


class DividedExpr:
    """
    Element of S_* (x) Z[b_(*)] written as sum_r coefficient_r * b_(r).

    Coefficients are MultiPoly in the h_i (or, before the Hurewicz map, in the
    CP_i); b_(r) has degree 2r and b_(i) b_(j) = C(i+j, i) b_(i+j).
    """

    __slots__ = ("_table",)

    def __init__(self, table: Optional[Mapping[int, object]] = None):
        self._table: Dict[int, MultiPoly] = {}
        for r, value in (table or {}).items():
            if r < 0:
                raise ValueError("divided-power index must be nonnegative")
            poly = MultiPoly.coerce(value)
            if not poly.is_zero():
                self._table[r] = poly

    @classmethod
    def basis(cls, r: int) -> "DividedExpr":
        return cls({r: 1})

    @classmethod
    def from_b_polynomial(cls, poly: MultiPoly) -> "DividedExpr":
        """Rewrite b^r as r! b_(r); the remaining factors form the coefficient"""
        table: Dict[int, MultiPoly] = {}
        for mono, coeff in poly.items():
            r = dict(mono).get(B, 0)
            rest = tuple((g, e) for g, e in mono if g != B)
            term = MultiPoly({rest: coeff * math.factorial(r)})
            table[r] = table.get(r, MultiPoly.zero()) + term
        return cls(table)

    def to_b_polynomial(self) -> MultiPoly:
        b = MultiPoly.generator("b")
        total = MultiPoly.zero()
        for r, coeff in self._table.items():
            total = total + coeff * (b ** r).scale(Fraction(1, math.factorial(r)))
        return total

    def __getitem__(self, r: int) -> MultiPoly:
        return self._table.get(r, MultiPoly.zero())

    def entries(self) -> List[Tuple[int, MultiPoly]]:
        """(r, coefficient) pairs, highest divided power first"""
        return sorted(self._table.items(), reverse=True)

    def indices(self) -> List[int]:
        return sorted(self._table)

    def is_zero(self) -> bool:
        return not self._table

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self._table.values())

    def is_homogeneous(self, degree: int) -> bool:
        return all(c.is_homogeneous(degree - 2 * r) for r, c in self._table.items())

    def map_coefficients(self, fn) -> "DividedExpr":
        return DividedExpr({r: fn(c) for r, c in self._table.items()})

    def substitute(self, mapping: Mapping[Generator, object]) -> "DividedExpr":
        return self.map_coefficients(lambda c: c.substitute(mapping))

    def scale(self, factor: Scalar) -> "DividedExpr":
        return self.map_coefficients(lambda c: c.scale(factor))

    def __add__(self, other: "DividedExpr") -> "DividedExpr":
        table = dict(self._table)
        for r, c in other._table.items():
            table[r] = table.get(r, MultiPoly.zero()) + c
        return DividedExpr(table)

    def __neg__(self) -> "DividedExpr":
        return self.scale(-1)

    def __sub__(self, other: "DividedExpr") -> "DividedExpr":
        return self + (-other)

    def __mul__(self, other: "DividedExpr") -> "DividedExpr":
        if not isinstance(other, DividedExpr):
            return NotImplemented
        table: Dict[int, MultiPoly] = {}
        for i, a in self._table.items():
            for j, c in other._table.items():
                term = (a * c).scale(math.comb(i + j, i))
                table[i + j] = table.get(i + j, MultiPoly.zero()) + term
        return DividedExpr(table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DividedExpr):
            return NotImplemented
        return self._table == other._table

    def __hash__(self) -> int:
        return hash(frozenset(self._table.items()))

    def __repr__(self) -> str:
        from render import divided_text
        return f"DividedExpr({divided_text(self)})"


def h(i: int) -> MultiPoly:
    return MultiPoly.generator("h", i)


def CP(i: int) -> MultiPoly:
    return MultiPoly.generator("CP", i)


def orientation_series(order: int) -> TruncSeries:
    """B(z) = z + h_1 z^2 + ... + h_{N-1} z^N"""
    return TruncSeries(order, [0, 1] + [h(i) for i in range(1, order)])


@lru_cache(maxsize=None)
def hurewicz_cp(n: int) -> MultiPoly:
    """h(CP_n) = [z^n] (1 + h_1 z + h_2 z^2 + ...)^{-(n+1)}"""
    if n < 0:
        raise ValueError("CP index must be nonnegative")
    if n == 0:
        return MultiPoly.one()
    normal = TruncSeries(n, [1] + [h(i) for i in range(1, n + 1)])
    value = series_pow(normal, -(n + 1)).coeffs[n]
    logger.debug("h(CP_%d) has %d terms", n, len(value))
    return value


@lru_cache(maxsize=None)
def hurewicz_log_coeff(k: int) -> MultiPoly:
    """h(CP_{k-1}) / k, read off as [z^k] of the compositional inverse of B(z)"""
    if k < 1:
        raise ValueError("logarithm coefficients start at k = 1")
    if k == 1:
        return MultiPoly.one()
    return series_inverse(orientation_series(k)).coeffs[k]


def hurewicz_substitution(generators) -> Dict[Generator, MultiPoly]:
    return {g: hurewicz_cp(g.index) for g in generators if g.family == "CP"}


def apply_hurewicz(poly: MultiPoly) -> MultiPoly:
    """Replace every CP_k by its characteristic-number class h(CP_k)"""
    return poly.substitute(hurewicz_substitution(poly.generators()))


@lru_cache(maxsize=None)
def _count_01_matrices(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> int:
    if not rows:
        return int(not any(cols))
    first, rest = rows[0], rows[1:]
    total = 0
    for chosen in itertools.combinations(range(len(cols)), first):
        if all(cols[j] > 0 for j in chosen):
            remaining = list(cols)
            for j in chosen:
                remaining[j] -= 1
            total += _count_01_matrices(rest, tuple(sorted(remaining, reverse=True)))
    return total


@lru_cache(maxsize=None)
def chern_oracle_cp(n: int) -> MultiPoly:
    """
    h(CP_n) straight from Chern numbers of the stable normal bundle.

    In H^*(CP_n) = Z[x]/(x^{n+1}) the normal bundle has c(nu) = (1+x)^{-(n+1)},
    so c_i(nu) = (-1)^i C(n+i, i) x^i. Since e_mu = sum_lambda M[mu][lambda] m_lambda
    with M counting 0-1 matrices of row sums mu and column sums lambda, the
    pairings <m_lambda(nu), [CP_n]> solve M v = (prod_i c_{mu_i}(nu))_mu.
    """
    if n < 0:
        raise ValueError("CP index must be nonnegative")
    if n == 0:
        return MultiPoly.one()
    chern = [(-1) ** i * math.comb(n + i, i) for i in range(n + 1)]
    shapes = [p.parts() for p in enumerate_partitions(n)]
    matrix = sympy.Matrix([[_count_01_matrices(mu, lam) for lam in shapes] for mu in shapes])
    elementary = sympy.Matrix([math.prod(chern[i] for i in mu) for mu in shapes])
    pairings = matrix.LUsolve(elementary)
    result = MultiPoly.zero()
    for lam, value in zip(shapes, pairings):
        value = sympy.Rational(value)
        coeff = Fraction(int(value.p), int(value.q))
        if coeff:
            result = result + math.prod((h(part) for part in lam), start=MultiPoly.one()).scale(coeff)
    return result


@lru_cache(maxsize=None)
def hurewicz_bmu(n: int) -> DividedExpr:
    """
    h(b^MU_n) = sum over |pi| = n of multinomial(pi) prod_k (h(CP_{k-1})/k)^{r_k} b_(r(pi))
    """
    if n < 1:
        raise ValueError("b^MU_n is expanded for n >= 1")
    factors = {k: exact_div_int(hurewicz_cp(k - 1), k) for k in range(1, n + 1)}
    table: Dict[int, MultiPoly] = {}
    for partition in enumerate_partitions(n):
        term = MultiPoly.constant(multinomial(partition))
        for k, r in partition.multiplicities():
            term = term * factors[k] ** r
        table[partition.length] = table.get(partition.length, MultiPoly.zero()) + term
    expr = DividedExpr(table)
    if not expr.is_integral():
        raise IntegralityViolation(f"h(b^MU_{n}) has a non-integral coefficient")
    return expr


def hurewicz_log_series(order: int) -> TruncSeries:
    """Image of log_MU under the Hurewicz map: sum_k h(CP_{k-1})/k z^k"""
    return TruncSeries(order, [0] + [hurewicz_cp(k - 1).scale(Fraction(1, k))
                                     for k in range(1, order + 1)])


def expansion_by_series(n: int) -> DividedExpr:
    """[z^n] exp(b * h(log_MU)(z)) from the series engine, in the divided-power basis"""
    b = MultiPoly.generator("b")
    series = series_exp(series_scale(hurewicz_log_series(n), b))
    return DividedExpr.from_b_polynomial(series.coeffs[n])


def _augmentation(poly: MultiPoly) -> MultiPoly:
    return MultiPoly.constant(poly.constant_term())


def cycle_map(e: DividedExpr) -> DividedExpr:
    """Steenrod's cycle map: h_i -> 0 for i > 0, constants survive"""
    return e.map_coefficients(_augmentation)


def divisibility_check(k: int) -> bool:
    """h(CP_{k-1}) is an integral class divisible by k"""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return is_divisible_over_Z(hurewicz_cp(k - 1), k)


@dataclass(frozen=True)
class TwistExpansion:
    """
    CP_n(t omega) = sum_r t^r C_r vol(CP_r, omega).

    `terms` holds C_r at divided index r, with CP classes kept symbolic; `t`
    is None when the twist parameter is left symbolic.
    """
    n: int
    t: Optional[Fraction]
    terms: DividedExpr

    def at(self, t: Scalar) -> DividedExpr:
        t = Fraction(t)
        return DividedExpr({r: c.scale(t ** r) for r, c in self.terms.entries()})

    def value(self) -> DividedExpr:
        return self.terms if self.t is None else self.at(self.t)

    def leading_term(self) -> MultiPoly:
        return self.terms[self.n]

    def linear_term(self) -> MultiPoly:
        return self.terms[1]

    def weyl_term(self) -> DividedExpr:
        """CP_i -> 0 for i > 0 leaves only t^n vol(CP_n, omega)"""
        return self.terms.map_coefficients(_augmentation)

    def hurewicz_image(self) -> DividedExpr:
        return self.value().map_coefficients(apply_hurewicz)


def twist_expansion(n: int, t: Optional[Scalar] = None) -> TwistExpansion:
    """Sum over |pi| = n of multinomial(pi) prod_k (CP_{k-1}/k)^{r_k} t^{r(pi)} vol(CP_{r(pi)})"""
    if n < 1:
        raise ValueError("twisted projective spaces are expanded for n >= 1")
    if t is not None:
        t = Fraction(t)
        if t <= 0:
            raise ValueError("twist parameter t must be positive")
    table: Dict[int, MultiPoly] = {}
    for partition in enumerate_partitions(n):
        term = MultiPoly.constant(multinomial(partition))
        for k, r in partition.multiplicities():
            term = term * CP(k - 1).scale(Fraction(1, k)) ** r
        table[partition.length] = table.get(partition.length, MultiPoly.zero()) + term
    return TwistExpansion(n, t, DividedExpr(table))


def cumulants_to_moments(kappa: Sequence[Scalar], max_n: Optional[int] = None) -> List[Fraction]:
    """m_n = n! [z^n] exp(sum_k kappa_k z^k / k!), a complete Bell polynomial"""
    max_n = len(kappa) if max_n is None else max_n
    values = list(kappa)[:max_n] + [0] * (max_n - len(kappa))
    scaled = [Fraction(v) / math.factorial(k) for k, v in enumerate(values, start=1)]
    coeffs = exp_partition_expansion(scaled)
    return [c.constant_term() * math.factorial(n) for n, c in enumerate(coeffs)]


def moments_to_cumulants(moments: Sequence[Scalar]) -> List[Fraction]:
    """Inverse of cumulants_to_moments; moments[0] must be 1"""
    if len(moments) < 2:
        raise ValueError("need m_0 and at least one further moment")
    order = len(moments) - 1
    series = TruncSeries(order, [Fraction(m) / math.factorial(n) for n, m in enumerate(moments)])
    logs = series_log(series)
    return [logs[k].constant_term() * math.factorial(k) for k in range(1, order + 1)]


# Verification suites

def oracle_check(max_n: int) -> CheckReport:
    for n in range(max_n + 1):
        lagrange, oracle = hurewicz_cp(n), chern_oracle_cp(n)
        if lagrange != oracle:
            return CheckReport("oracle", False, f"h(CP_{n}) disagrees with the Chern oracle",
                               (n,), lagrange, oracle)
    logger.info("Chern oracle agrees for n <= %d", max_n)
    return CheckReport("oracle", True, f"Lagrange inversion = Chern numbers for n <= {max_n}")


def expansion_check(max_n: int) -> CheckReport:
    for n in range(1, max_n + 1):
        formula, series = hurewicz_bmu(n), expansion_by_series(n)
        if formula != series:
            return CheckReport("expansion", False, f"partition formula differs at n = {n}",
                               (n,), formula, series)
    return CheckReport("expansion", True, f"partition formula = exp series for n <= {max_n}")


def integrality_check(max_n: int) -> CheckReport:
    for n in range(1, max_n + 1):
        try:
            expr = hurewicz_bmu(n)
        except IntegralityViolation as exc:
            return CheckReport("integrality", False, str(exc), (n,))
        if not expr.is_homogeneous(2 * n):
            return CheckReport("integrality", False, f"h(b^MU_{n}) is not homogeneous", (n,), expr)
    return CheckReport("integrality", True, f"integral and homogeneous for n <= {max_n}")


def divisibility_suite(max_k: int) -> CheckReport:
    for k in range(1, max_k + 1):
        if not divisibility_check(k):
            return CheckReport("divisibility", False, f"h(CP_{k - 1}) not divisible by {k}",
                               (k,), hurewicz_cp(k - 1))
    return CheckReport("divisibility", True, f"h(CP_(k-1)) divisible by k for k <= {max_k}")


def cycle_check(max_n: int) -> CheckReport:
    for n in range(1, max_n + 1):
        image = cycle_map(hurewicz_bmu(n))
        if image != DividedExpr.basis(n):
            return CheckReport("cycle", False, f"cycle map of b^MU_{n} is not b_({n})",
                               (n,), image, DividedExpr.basis(n))
    return CheckReport("cycle", True, f"cycle map sends b^MU_n to b_(n) for n <= {max_n}")


def twist_check(max_n: int) -> CheckReport:
    for n in range(1, max_n + 1):
        twist = twist_expansion(n)
        if twist.leading_term() != MultiPoly.one():
            return CheckReport("twist", False, f"leading term at n = {n}", (n,), twist.leading_term())
        expected_linear = CP(n - 1).scale(Fraction(1, n))
        if twist.linear_term() != expected_linear:
            return CheckReport("twist", False, f"linear term at n = {n}", (n,),
                               twist.linear_term(), expected_linear)
        if twist.weyl_term() != DividedExpr.basis(n):
            return CheckReport("twist", False, f"Weyl term at n = {n}", (n,), twist.weyl_term())
        specialised = twist_expansion(n, 1).hurewicz_image()
        if specialised != hurewicz_bmu(n):
            return CheckReport("twist", False, f"t = 1 specialisation at n = {n}", (n,),
                               specialised, hurewicz_bmu(n))
    return CheckReport("twist", True, f"leading, linear and Weyl terms for n <= {max_n}")


def cumulant_check(max_n: int) -> CheckReport:
    kappa = [Fraction((-1) ** k * k, k + 2) for k in range(1, max_n + 1)]
    moments = cumulants_to_moments(kappa)
    series = series_exp(TruncSeries(max_n, [0] + [Fraction(v) / math.factorial(k)
                                                 for k, v in enumerate(kappa, start=1)]))
    for n in range(max_n + 1):
        expected = series[n].constant_term() * math.factorial(n)
        if moments[n] != expected:
            return CheckReport("cumulants", False, f"moment m_{n} differs", (n,),
                               moments[n], expected)
    if moments_to_cumulants(moments) != kappa:
        return CheckReport("cumulants", False, "moments do not invert back to cumulants")
    gaussian = cumulants_to_moments([0, 1], max_n=max(4, max_n))
    if gaussian[4] != 3:
        return CheckReport("cumulants", False, "Gaussian fourth moment is not 3 sigma^2",
                           (4,), gaussian[4], 3)
    return CheckReport("cumulants", True, f"Bell expansion = exp series for n <= {max_n}")


def divided_hopf_check(order: int) -> CheckReport:
    """
    b(z0) b(z1) = b(z0 + z1) with b(z) = sum_n b_(n) z^n.

    The left side multiplies divided powers; the right side is exp(b (z0 + z1))
    over Q[b], so both are compared as polynomials in b.
    """
    b = MultiPoly.generator("b")
    z = TruncSeries.variable(order)
    lhs = BiTruncSeries(order, {
        (i, d - i): (DividedExpr.basis(i) * DividedExpr.basis(d - i)).to_b_polynomial()
        for d in range(order + 1) for i in range(d + 1)
    })
    rhs = bi_compose(series_exp(series_scale(z, b)), bi_lift(z, "z0") + bi_lift(z, "z1"))
    report = compare_bi("divided", lhs, rhs)
    if report:
        report.detail = f"divided-power Hopf relation to total degree {order}"
    return report
