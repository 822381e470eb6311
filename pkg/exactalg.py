"""
Exact coefficient ring: rationals and sparse graded multivariate polynomials

Every series, expansion and check in mufgl has coefficients in MultiPoly,
a polynomial over Fraction in the named generators CP_i, h_i, p_i, e_i and b.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from errors import NotDivisible

logger = logging.getLogger(__name__)

# Exact rationals are always kept in lowest terms with a positive denominator.
Rational = Fraction

FAMILIES = ("CP", "h", "p", "e", "b")


@dataclass(frozen=True)
class Generator:
    """A named ring generator; CP_i, h_i, p_i, e_i carry degree 2i and b degree 2"""
    family: str
    index: int = 0
    rank: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")
        if self.family == "b":
            if self.index != 0:
                raise ValueError("generator b takes no index")
        elif self.family == "CP":
            if self.index < 0:
                raise ValueError("CP index must be nonnegative")
        elif self.index < 1:
            raise ValueError(f"{self.family} index must be at least 1")
        object.__setattr__(self, "rank", FAMILIES.index(self.family))

    def __lt__(self, other: "Generator") -> bool:
        return (self.rank, self.index) < (other.rank, other.index)

    @property
    def degree(self) -> int:
        return 2 if self.family == "b" else 2 * self.index

    @property
    def name(self) -> str:
        return "b" if self.family == "b" else f"{self.family}{self.index}"

    @classmethod
    def parse(cls, name: str) -> "Generator":
        """Inverse of `name`: 'CP3' -> CP_3, 'h2' -> h_2, 'b' -> b"""
        if name == "b":
            return cls("b")
        for family in ("CP", "h", "p", "e"):
            suffix = name[len(family):]
            if name.startswith(family) and suffix.isdigit():
                return cls(family, int(suffix))
        raise ValueError(f"cannot parse generator name {name!r}")


Monomial = Tuple[Tuple[Generator, int], ...]
Scalar = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


def _normalize_monomial(pairs: Iterable[Tuple[Generator, int]]) -> Monomial:
    exponents: Dict[Generator, int] = {}
    for gen, exp in pairs:
        if gen.family == "CP" and gen.index == 0:
            continue  # CP_0 is the unit
        if exp < 0:
            raise ValueError("generator exponents must be nonnegative")
        exponents[gen] = exponents.get(gen, 0) + exp
    return tuple(sorted((g, e) for g, e in exponents.items() if e))


def _monomial_product(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exponents = dict(a)
    for gen, exp in b:
        exponents[gen] = exponents.get(gen, 0) + exp
    return tuple(sorted(exponents.items()))


def monomial_degree(mono: Monomial) -> int:
    return sum(gen.degree * exp for gen, exp in mono)


def monomial_sort_key(mono: Monomial):
    """Graded lexicographic: degree first, then family order CP < h < p < e < b, then index"""
    return (monomial_degree(mono), tuple((g.rank, g.index, e) for g, e in mono))


class MultiPoly:
    """
    Sparse polynomial over Q in graded generators.

    Values are immutable: every operation returns a new MultiPoly, and the
    stored term table never contains zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        table: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            key = _normalize_monomial(mono)
            table[key] = table.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {k: v for k, v in table.items() if v}
        self._hash = None

    @classmethod
    def _from_clean(cls, table: Dict[Monomial, Fraction]) -> "MultiPoly":
        poly = cls.__new__(cls)
        poly._terms = {k: v for k, v in table.items() if v}
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        return cls._from_clean({ONE_MONOMIAL: Fraction(value)})

    @classmethod
    def generator(cls, family: str, index: int = 0) -> "MultiPoly":
        return cls({((Generator(family, index), 1),): 1})

    @classmethod
    def gen(cls, name: str) -> "MultiPoly":
        return cls({((Generator.parse(name), 1),): 1})

    @staticmethod
    def coerce(value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial")

    # Inspection

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: monomial_sort_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def coefficient(self, mono: Iterable[Tuple[Generator, int]]) -> Fraction:
        return self._terms.get(_normalize_monomial(mono), Fraction(0))

    def generators(self) -> List[Generator]:
        return sorted({gen for mono in self._terms for gen, _ in mono})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def is_homogeneous(self, degree: int) -> bool:
        return all(monomial_degree(mono) == degree for mono in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        table = dict(self._terms)
        for mono, coeff in other._terms.items():
            table[mono] = table.get(mono, Fraction(0)) + coeff
        return MultiPoly._from_clean(table)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        table: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = _monomial_product(m1, m2)
                table[key] = table.get(key, Fraction(0)) + c1 * c2
        return MultiPoly._from_clean(table)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "MultiPoly":
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero()
        return MultiPoly._from_clean({m: c * factor for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the numbers they compare equal to
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from render import poly_text
        return f"MultiPoly({poly_text(self)})"

    # Homomorphisms

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly._from_clean({m: Fraction(fn(c)) for m, c in self._terms.items()})

    def substitute(self, mapping: Mapping[Generator, Union["MultiPoly", Scalar]]) -> "MultiPoly":
        """Ring homomorphism sending each mapped generator to its image; others are kept"""
        if not mapping:
            return self
        images = {gen: MultiPoly.coerce(value) for gen, value in mapping.items()}
        powers: Dict[Tuple[Generator, int], MultiPoly] = {}
        result: Dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            kept: List[Tuple[Generator, int]] = []
            factor = MultiPoly.constant(coeff)
            for gen, exp in mono:
                if gen in images:
                    if (gen, exp) not in powers:
                        powers[(gen, exp)] = images[gen] ** exp
                    factor = factor * powers[(gen, exp)]
                    if factor.is_zero():
                        break
                else:
                    kept.append((gen, exp))
            if factor.is_zero():
                continue
            rest = tuple(kept)
            for m, c in factor._terms.items():
                key = _monomial_product(rest, m)
                result[key] = result.get(key, Fraction(0)) + c
        return MultiPoly._from_clean(result)

    def evaluate(self, values: Mapping[Generator, Scalar]) -> Fraction:
        """Specialise every generator to a rational number"""
        missing = [g.name for g in self.generators() if g not in values]
        if missing:
            raise ValueError(f"no value given for generators {', '.join(missing)}")
        return self.substitute(values).constant_term()


def poly_arith(a: MultiPoly, b: MultiPoly, kind: str) -> MultiPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def is_divisible_over_Z(a: MultiPoly, k: int) -> bool:
    """True iff a has integer coefficients, each a multiple of k"""
    if k < 1:
        raise ValueError("divisor must be a positive integer")
    return all(c.denominator == 1 and c.numerator % k == 0 for _, c in a.items())


def exact_div_int(a: MultiPoly, k: int) -> MultiPoly:
    """
    Divide by a positive integer exactly.

    An integral polynomial must be divisible coefficientwise (NotDivisible
    otherwise); a polynomial that already has fractional coefficients is
    simply divided over Q.
    """
    if k < 1:
        raise ValueError("divisor must be a positive integer")
    if a.is_integral():
        for mono, coeff in a.sorted_terms():
            if coeff.numerator % k:
                logger.debug("Divisibility by %d fails at coefficient %s", k, coeff)
                raise NotDivisible(k, str(coeff))
    return a.scale(Fraction(1, k))


def degree_check(a: MultiPoly, d: int) -> bool:
    return a.is_homogeneous(d)
