"""
Complete (h), elementary (e) and power-sum (p) symmetric functions

Conversions are degree-by-degree closed forms:
  H(t) = exp(sum_k p_k t^k / k)          (h in terms of p)
  p_n = n h_n - sum_{i<n} p_i h_{n-i}    (Newton, p in terms of h)
  sum_i (-1)^i e_i h_{n-i} = 0           (e in terms of h and back)
Every other pair goes through the h basis by substitution.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict

from exactalg import Generator, MultiPoly
from series import CheckReport, TruncSeries, exp_partition_expansion, series_exp

logger = logging.getLogger(__name__)

BASES = ("h", "e", "p")


def _gen(basis: str, n: int) -> MultiPoly:
    return MultiPoly.generator(basis, n)


@lru_cache(maxsize=None)
def _h_in_p_table(n: int):
    return tuple(exp_partition_expansion([_gen("p", k).scale(Fraction(1, k))
                                          for k in range(1, n + 1)]))


def p_to_h(n: int) -> MultiPoly:
    """h_n written in the power sums p_1, ..., p_n"""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    return _h_in_p_table(n)[n]


@lru_cache(maxsize=None)
def h_to_p(n: int) -> MultiPoly:
    """p_n written in h_1, ..., h_n by Newton's recurrence"""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    total = _gen("h", n).scale(n)
    for i in range(1, n):
        total = total - h_to_p(i) * _gen("h", n - i)
    return total


def _alternating_solve(n: int, known: Callable[[int], MultiPoly], other: str) -> MultiPoly:
    # sum_{i=0}^{n} (-1)^i known_i other_{n-i} = 0, solved for known_n
    total = MultiPoly.zero()
    for i in range(n):
        term = (MultiPoly.one() if i == 0 else known(i)) * _gen(other, n - i)
        total = total + (term if i % 2 == 0 else -term)
    return total if n % 2 else -total


@lru_cache(maxsize=None)
def e_from_h(n: int) -> MultiPoly:
    """e_n written in h_1, ..., h_n"""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    return _alternating_solve(n, e_from_h, "h")


@lru_cache(maxsize=None)
def h_from_e(n: int) -> MultiPoly:
    """h_n written in e_1, ..., e_n (the same relation read the other way)"""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    return _alternating_solve(n, h_from_e, "e")


@lru_cache(maxsize=None)
def e_to_p(n: int) -> MultiPoly:
    """e_n written in power sums via E(t) = exp(sum_k (-1)^{k-1} p_k t^k / k)"""
    if n < 1:
        raise ValueError("degree must be a positive integer")
    c = [_gen("p", k).scale(Fraction((-1) ** (k - 1), k)) for k in range(1, n + 1)]
    return exp_partition_expansion(c)[n]


def _in_h(family: str, n: int) -> MultiPoly:
    if family == "h":
        return _gen("h", n)
    if family == "p":
        return h_to_p(n)
    return e_from_h(n)


def _h_in(basis: str, n: int) -> MultiPoly:
    if basis == "h":
        return _gen("h", n)
    if basis == "p":
        return p_to_h(n)
    return h_from_e(n)


@lru_cache(maxsize=None)
def express(family: str, n: int, basis: str) -> MultiPoly:
    """family_n (one of h_n, e_n, p_n) written in the generators of `basis`"""
    if family not in BASES or basis not in BASES:
        raise ValueError(f"symmetric-function bases are {', '.join(BASES)}")
    if n < 1:
        raise ValueError("degree must be a positive integer")
    if family == basis:
        return _gen(family, n)
    in_h = _in_h(family, n)
    if basis == "h":
        return in_h
    return in_h.substitute({Generator("h", i): _h_in(basis, i) for i in range(1, n + 1)})


@dataclass(frozen=True)
class SymExpr:
    """A symmetric function written in a single basis"""
    basis: str
    value: MultiPoly

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        stray = [g.name for g in self.value.generators() if g.family != self.basis]
        if stray:
            raise ValueError(f"{', '.join(stray)} do not belong to the {self.basis} basis")

    def convert(self, basis: str) -> "SymExpr":
        mapping = {g: express(self.basis, g.index, basis) for g in self.value.generators()}
        return SymExpr(basis, self.value.substitute(mapping))


def finite_model(basis: str, n: int, m: int) -> int:
    """Value of basis_n at x_1 = ... = x_m = 1"""
    if basis == "h":
        return math.comb(m + n - 1, n)
    if basis == "e":
        return math.comb(m, n)
    return m


def _finite_values(basis: str, degree: int, m: int) -> Dict[Generator, int]:
    return {Generator(basis, i): finite_model(basis, i, m) for i in range(1, degree + 1)}


def verify_symfunc(N: int, power_sums: Callable[[int], MultiPoly] = h_to_p,
                   max_variables: int = 4) -> CheckReport:
    """
    Check the classical identities to degree N.

    `power_sums(n)` must return p_n in the h basis; it is a parameter so a
    deliberately broken recurrence can be shown to fail.
    """
    p_in_h = {Generator("p", i): power_sums(i) for i in range(1, N + 1)}
    h_in_p = {Generator("h", i): p_to_h(i) for i in range(1, N + 1)}
    h_gens = {i: _gen("h", i) for i in range(1, N + 1)}
    exp_series = series_exp(TruncSeries(N, [0] + [_gen("p", k).scale(Fraction(1, k))
                                                  for k in range(1, N + 1)]))
    for n in range(1, N + 1):
        if p_to_h(n).substitute(p_in_h) != h_gens[n]:
            return CheckReport("symfunc", False, f"h -> p -> h roundtrip fails at degree {n}", (n,))
        if power_sums(n).substitute(h_in_p) != _gen("p", n):
            return CheckReport("symfunc", False, f"p -> h -> p roundtrip fails at degree {n}", (n,))
        alternating = _gen("h", n)
        for i in range(1, n + 1):
            term = e_from_h(i) * (h_gens[n - i] if i < n else MultiPoly.one())
            alternating = alternating + (term if i % 2 == 0 else -term)
        if not alternating.is_zero():
            return CheckReport("symfunc", False, f"sum (-1)^i e_i h_(n-i) != 0 at degree {n}",
                               (n,), alternating)
        if exp_series[n] != p_to_h(n):
            return CheckReport("symfunc", False, f"H(t) = exp(sum p_k t^k/k) fails at degree {n}",
                               (n,), exp_series[n], p_to_h(n))
        if e_to_p(n) != express("e", n, "p"):
            return CheckReport("symfunc", False, f"E(t) exponential form fails at degree {n}", (n,))
        for m in range(1, max_variables + 1):
            h_values = _finite_values("h", n, m)
            checks = (
                (p_to_h(n).evaluate(_finite_values("p", n, m)), finite_model("h", n, m)),
                (power_sums(n).evaluate(h_values), finite_model("p", n, m)),
                (e_from_h(n).evaluate(h_values), finite_model("e", n, m)),
            )
            for got, expected in checks:
                if got != expected:
                    return CheckReport("symfunc", False,
                                       f"finite model with {m} variables fails at degree {n}",
                                       (n, m), got, expected)
    logger.info("Symmetric-function identities hold to degree %d", N)
    return CheckReport("symfunc", True, f"all identities hold to degree {N}")
