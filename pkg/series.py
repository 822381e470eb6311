"""
Truncated power series over MultiPoly coefficients

Univariate series carry their truncation order N and hold exactly N+1
coefficients; bivariate series are truncated by total degree. Mixing orders
raises OrderMismatch instead of silently re-truncating.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from errors import ConstantTermNotOne, NonzeroConstantTerm, NotNormalized, OrderMismatch
from exactalg import MultiPoly, Scalar
from partitions import enumerate_partitions

logger = logging.getLogger(__name__)

Coefficient = Union[MultiPoly, Scalar]


class TruncSeries:
    """c_0 + c_1 z + ... + c_N z^N, everything above z^N discarded"""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Coefficient] = ()):
        if order < 1:
            raise ValueError("truncation order must be a positive integer")
        values = [MultiPoly.coerce(c) for c in list(coeffs)[: order + 1]]
        values += [MultiPoly.zero()] * (order + 1 - len(values))
        self.order = order
        self.coeffs: Tuple[MultiPoly, ...] = tuple(values)

    @classmethod
    def variable(cls, order: int) -> "TruncSeries":
        return cls(order, [0, 1])

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, [1])

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def map_coefficients(self, fn: Callable[[MultiPoly], MultiPoly]) -> "TruncSeries":
        return TruncSeries(self.order, [fn(c) for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncSeries":
        return series_scale(self, -1)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        from render import series_text
        return f"TruncSeries(order={self.order}, {series_text(self)})"


def _check_orders(f: TruncSeries, g: TruncSeries) -> None:
    if f.order != g.order:
        raise OrderMismatch(f.order, g.order)


def series_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    _check_orders(f, g)
    return TruncSeries(f.order, [a + b for a, b in zip(f.coeffs, g.coeffs)])


def series_sub(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    _check_orders(f, g)
    return TruncSeries(f.order, [a - b for a, b in zip(f.coeffs, g.coeffs)])


def series_scale(f: TruncSeries, factor: Coefficient) -> TruncSeries:
    factor = MultiPoly.coerce(factor)
    return TruncSeries(f.order, [c * factor for c in f.coeffs])


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order"""
    _check_orders(f, g)
    n = f.order
    out = [MultiPoly.zero()] * (n + 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j in range(n + 1 - i):
            b = g.coeffs[j]
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return TruncSeries(n, out)


def series_derivative(f: TruncSeries) -> TruncSeries:
    """d/dz; the top coefficient is unknown after truncation and set to zero"""
    return TruncSeries(f.order, [f.coeffs[k + 1].scale(k + 1) for k in range(f.order)])


def series_compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(z)) by Horner's rule; g must have zero constant term"""
    _check_orders(f, g)
    if not g.coeffs[0].is_zero():
        raise NonzeroConstantTerm("inner series of a composition must have zero constant term")
    result = TruncSeries(f.order, [f.coeffs[-1]])
    for k in range(f.order - 1, -1, -1):
        result = series_mul(result, g)
        result = TruncSeries(f.order, [result.coeffs[0] + f.coeffs[k]] + list(result.coeffs[1:]))
    return result


def _check_curve(f: TruncSeries) -> None:
    if not f.coeffs[0].is_zero() or f.coeffs[1] != MultiPoly.one():
        raise NotNormalized("compositional inverse needs c_0 = 0 and c_1 = 1")


def _inverse_by_solving(f: TruncSeries) -> TruncSeries:
    # [z^n] f(g) = g_n + (terms in g_1 .. g_{n-1}), so each pass fixes one degree
    g = list(TruncSeries.variable(f.order).coeffs)
    for n in range(2, f.order + 1):
        residue = series_compose(f, TruncSeries(f.order, g)).coeffs[n]
        g[n] = g[n] - residue
    return TruncSeries(f.order, g)


def _inverse_by_newton(f: TruncSeries) -> TruncSeries:
    z = TruncSeries.variable(f.order)
    df = series_derivative(f)
    g = z
    for _ in range(f.order + 1):
        residue = series_compose(f, g) - z
        if residue.is_zero():
            return g
        g = g - residue * series_reciprocal(series_compose(df, g))
    raise RuntimeError("Newton iteration for the compositional inverse did not converge")


def series_inverse(f: TruncSeries, method: str = "solve") -> TruncSeries:
    """
    The unique g with f(g(z)) = g(f(z)) = z up to order N.

    method="solve" fixes one coefficient per degree; method="newton" uses the
    quadratically convergent iteration g <- g - (f(g) - z) / f'(g). Both are
    exact and must agree.
    """
    _check_curve(f)
    if method == "solve":
        return _inverse_by_solving(f)
    if method == "newton":
        return _inverse_by_newton(f)
    raise ValueError(f"unknown inversion method {method!r}")


def series_reciprocal(f: TruncSeries) -> TruncSeries:
    """1/f for a series whose constant term is a nonzero rational"""
    c0 = f.coeffs[0]
    if not c0.is_constant() or c0.is_zero():
        raise ValueError("reciprocal needs a nonzero rational constant term")
    inv = Fraction(1) / c0.constant_term()
    out = [MultiPoly.constant(inv)]
    for n in range(1, f.order + 1):
        acc = MultiPoly.zero()
        for k in range(1, n + 1):
            if not f.coeffs[k].is_zero():
                acc = acc + f.coeffs[k] * out[n - k]
        out.append(acc.scale(-inv))
    return TruncSeries(f.order, out)


def series_exp(f: TruncSeries) -> TruncSeries:
    """exp(f) via n g_n = sum_k k f_k g_{n-k}"""
    if not f.coeffs[0].is_zero():
        raise NonzeroConstantTerm("exp needs a series with zero constant term")
    g = [MultiPoly.one()]
    for n in range(1, f.order + 1):
        acc = MultiPoly.zero()
        for k in range(1, n + 1):
            if not f.coeffs[k].is_zero():
                acc = acc + f.coeffs[k].scale(k) * g[n - k]
        g.append(acc.scale(Fraction(1, n)))
    return TruncSeries(f.order, g)


def series_log(f: TruncSeries) -> TruncSeries:
    """log(f) for f with constant term 1, inverse to series_exp"""
    if f.coeffs[0] != MultiPoly.one():
        raise ConstantTermNotOne("log needs a series with constant term 1")
    out = [MultiPoly.zero()]
    for n in range(1, f.order + 1):
        acc = MultiPoly.zero()
        for k in range(1, n):
            if not out[k].is_zero():
                acc = acc + out[k].scale(k) * f.coeffs[n - k]
        out.append(f.coeffs[n] - acc.scale(Fraction(1, n)))
    return TruncSeries(f.order, out)


def series_pow(f: TruncSeries, alpha: Scalar) -> TruncSeries:
    """f^alpha = exp(alpha log f) for grouplike f and rational alpha"""
    return series_exp(series_scale(series_log(f), alpha))


def exp_partition_expansion(c: Sequence[Coefficient]) -> List[MultiPoly]:
    """
    Coefficients of exp(sum_k c_k z^k) as partition sums.

    `c` lists c_1, ..., c_N; the result lists the coefficients of z^0 .. z^N,
    with output[n] = sum over |pi| = n of prod_k c_k^{r_k} / r_k!.
    """
    values = [MultiPoly.coerce(x) for x in c]
    powers: Dict[Tuple[int, int], MultiPoly] = {}

    def power(k: int, r: int) -> MultiPoly:
        if (k, r) not in powers:
            powers[(k, r)] = (values[k - 1] ** r).scale(Fraction(1, math.factorial(r)))
        return powers[(k, r)]

    output = [MultiPoly.one()]
    for n in range(1, len(values) + 1):
        total = MultiPoly.zero()
        for partition in enumerate_partitions(n):
            term = MultiPoly.one()
            for k, r in partition.multiplicities():
                term = term * power(k, r)
                if term.is_zero():
                    break
            total = total + term
        output.append(total)
    return output


class BiTruncSeries:
    """sum of c_{i,j} z0^i z1^j over i + j <= N; only nonzero cells are stored"""

    __slots__ = ("order", "_cells")

    def __init__(self, order: int, cells: Optional[Dict[Tuple[int, int], Coefficient]] = None):
        if order < 1:
            raise ValueError("truncation order must be a positive integer")
        self.order = order
        self._cells: Dict[Tuple[int, int], MultiPoly] = {}
        for (i, j), value in (cells or {}).items():
            if i < 0 or j < 0:
                raise ValueError("bivariate exponents must be nonnegative")
            if i + j > order:
                continue
            poly = MultiPoly.coerce(value)
            if not poly.is_zero():
                self._cells[(i, j)] = poly

    def __getitem__(self, position: Tuple[int, int]) -> MultiPoly:
        i, j = position
        if i < 0 or j < 0 or i + j > self.order:
            raise IndexError(f"({i}, {j}) lies outside total degree {self.order}")
        return self._cells.get((i, j), MultiPoly.zero())

    def positions(self) -> Iterator[Tuple[int, int]]:
        """All (i, j) with i + j <= N, by total degree and then descending i"""
        for d in range(self.order + 1):
            for i in range(d, -1, -1):
                yield (i, d - i)

    def items(self) -> List[Tuple[Tuple[int, int], MultiPoly]]:
        return [(pos, self._cells[pos]) for pos in self.positions() if pos in self._cells]

    def is_zero(self) -> bool:
        return not self._cells

    def transpose(self) -> "BiTruncSeries":
        return BiTruncSeries(self.order, {(j, i): c for (i, j), c in self._cells.items()})

    def map_coefficients(self, fn: Callable[[MultiPoly], MultiPoly]) -> "BiTruncSeries":
        return BiTruncSeries(self.order, {pos: fn(c) for pos, c in self._cells.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiTruncSeries):
            return NotImplemented
        return self.order == other.order and self._cells == other._cells

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._cells.items())))

    def __add__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        return bi_add(self, other)

    def __sub__(self, other: "BiTruncSeries") -> "BiTruncSeries":
        return bi_add(self, bi_scale(other, -1))

    def __mul__(self, other) -> "BiTruncSeries":
        if isinstance(other, BiTruncSeries):
            return bi_mul(self, other)
        return bi_scale(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        from render import bi_text
        return f"BiTruncSeries(order={self.order}, {bi_text(self)})"


def _check_bi_orders(F: BiTruncSeries, G: BiTruncSeries) -> None:
    if F.order != G.order:
        raise OrderMismatch(F.order, G.order)


def bi_add(F: BiTruncSeries, G: BiTruncSeries) -> BiTruncSeries:
    _check_bi_orders(F, G)
    cells = dict(F._cells)
    for pos, c in G._cells.items():
        cells[pos] = cells.get(pos, MultiPoly.zero()) + c
    return BiTruncSeries(F.order, cells)


def bi_scale(F: BiTruncSeries, factor: Coefficient) -> BiTruncSeries:
    factor = MultiPoly.coerce(factor)
    return BiTruncSeries(F.order, {pos: c * factor for pos, c in F._cells.items()})


def bi_mul(F: BiTruncSeries, G: BiTruncSeries) -> BiTruncSeries:
    """Product truncated by total degree"""
    _check_bi_orders(F, G)
    n = F.order
    cells: Dict[Tuple[int, int], MultiPoly] = {}
    for (i1, j1), a in F._cells.items():
        for (i2, j2), b in G._cells.items():
            if i1 + j1 + i2 + j2 > n:
                continue
            pos = (i1 + i2, j1 + j2)
            cells[pos] = cells.get(pos, MultiPoly.zero()) + a * b
    return BiTruncSeries(n, cells)


def bi_lift(f: TruncSeries, which: str) -> BiTruncSeries:
    """Embed f(z) as f(z0) or f(z1)"""
    if which == "z0":
        return BiTruncSeries(f.order, {(k, 0): c for k, c in enumerate(f.coeffs)})
    if which == "z1":
        return BiTruncSeries(f.order, {(0, k): c for k, c in enumerate(f.coeffs)})
    raise ValueError(f"bivariate variables are z0 and z1, not {which!r}")


def bi_compose(f: TruncSeries, G: BiTruncSeries) -> BiTruncSeries:
    """f(G(z0, z1)) for a bivariate G with zero constant term"""
    if f.order != G.order:
        raise OrderMismatch(f.order, G.order)
    if not G[0, 0].is_zero():
        raise NonzeroConstantTerm("inner bivariate series must have zero constant term")
    result = BiTruncSeries(f.order, {(0, 0): f.coeffs[-1]})
    for k in range(f.order - 1, -1, -1):
        result = bi_mul(result, G) + BiTruncSeries(f.order, {(0, 0): f.coeffs[k]})
    return result


def bi_substitute(F: BiTruncSeries, g0: TruncSeries, g1: TruncSeries) -> TruncSeries:
    """F(g0(z), g1(z)) truncated at the common order"""
    _check_orders(g0, g1)
    if F.order != g0.order:
        raise OrderMismatch(F.order, g0.order)
    if not g0.coeffs[0].is_zero() or not g1.coeffs[0].is_zero():
        raise NonzeroConstantTerm("substituted series must have zero constant term")
    n = F.order
    powers0 = [TruncSeries.one(n)]
    powers1 = [TruncSeries.one(n)]
    for _ in range(n):
        powers0.append(series_mul(powers0[-1], g0))
        powers1.append(series_mul(powers1[-1], g1))
    total = TruncSeries.zero(n)
    for (i, j), c in F.items():
        total = total + series_scale(series_mul(powers0[i], powers1[j]), c)
    return total


def graded_check(f: TruncSeries, shift: int = 0) -> bool:
    """Coefficient of z^k is homogeneous of degree 2(k + shift), z having degree -2"""
    return all(c.is_homogeneous(2 * (k + shift)) for k, c in enumerate(f.coeffs))


def bi_graded_check(F: BiTruncSeries, shift: int = 0) -> bool:
    return all(c.is_homogeneous(2 * (i + j + shift)) for (i, j), c in F.items())


@dataclass
class CheckReport:
    """Outcome of a verification; failure is a value, not an exception"""
    name: str
    ok: bool
    detail: str = ""
    position: Optional[Tuple[int, ...]] = None
    left: Optional[object] = None
    right: Optional[object] = None

    def __bool__(self) -> bool:
        return self.ok


def compare_series(name: str, lhs: TruncSeries, rhs: TruncSeries) -> CheckReport:
    _check_orders(lhs, rhs)
    for k in range(lhs.order + 1):
        if lhs[k] != rhs[k]:
            logger.warning("%s: coefficient of z^%d differs", name, k)
            return CheckReport(name, False, f"coefficient of z^{k} differs", (k,), lhs[k], rhs[k])
    return CheckReport(name, True, f"equal up to order {lhs.order}")


def compare_bi(name: str, lhs: BiTruncSeries, rhs: BiTruncSeries) -> CheckReport:
    """Coefficientwise comparison reporting the first differing (i, j)"""
    _check_bi_orders(lhs, rhs)
    for pos in lhs.positions():
        if lhs[pos] != rhs[pos]:
            logger.warning("%s: coefficient at %s differs", name, pos)
            return CheckReport(name, False, f"coefficient of z0^{pos[0]} z1^{pos[1]} differs",
                               pos, lhs[pos], rhs[pos])
    return CheckReport(name, True, f"equal up to total degree {lhs.order}")
