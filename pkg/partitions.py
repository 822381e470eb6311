"""
Integer partitions in repetition-vector form, with multinomial weights
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    A partition pi = 1^{r_1} 2^{r_2} ... of n.

    `reps[k-1]` is r_k, the number of parts equal to k; trailing zeros are
    trimmed so equal partitions compare equal. `length` is r(pi) = sum r_k.
    """
    n: int
    reps: Tuple[int, ...]
    length: int = field(init=False)

    def __post_init__(self):
        reps = tuple(self.reps)
        while reps and reps[-1] == 0:
            reps = reps[:-1]
        if any(r < 0 for r in reps):
            raise ValueError("repetition counts must be nonnegative")
        weight = sum(k * r for k, r in enumerate(reps, start=1))
        if weight != self.n:
            raise ValueError(f"repetition vector {reps} has weight {weight}, not {self.n}")
        object.__setattr__(self, "reps", reps)
        object.__setattr__(self, "length", sum(reps))

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        reps = [0] * max(parts, default=0)
        for p in parts:
            reps[p - 1] += 1
        return cls(sum(parts), tuple(reps))

    def rep(self, k: int) -> int:
        """r_k, zero beyond the largest part"""
        return self.reps[k - 1] if 1 <= k <= len(self.reps) else 0

    def parts(self) -> Tuple[int, ...]:
        """Parts in weakly decreasing order"""
        return tuple(k for k in range(len(self.reps), 0, -1) for _ in range(self.reps[k - 1]))

    def multiplicities(self) -> Iterator[Tuple[int, int]]:
        """(k, r_k) for every part size that occurs"""
        return ((k, r) for k, r in enumerate(self.reps, start=1) if r)

    def __str__(self) -> str:
        if not self.reps:
            return "()"
        return " ".join(f"{k}^{r}" for k, r in self.multiplicities())


def _descending_parts(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """
    Every partition of n exactly once, in reverse lexicographic order of the
    part lists: 4, 3+1, 2+2, 2+1+1, 1+1+1+1. n = 0 gives the empty partition.
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    result = tuple(Partition.from_parts(parts) for parts in _descending_parts(n, n))
    logger.debug("Enumerated %d partitions of %d", len(result), n)
    return result


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))


def multinomial(p: Partition) -> int:
    """r(pi)! / prod_k r_k!"""
    return math.factorial(p.length) // math.prod(math.factorial(r) for r in p.reps)


def cycle_weight(p: Partition) -> Fraction:
    """prod_k 1/(k^{r_k} r_k!), the cycle-index coefficient of pi"""
    denominator = math.prod(k ** r * math.factorial(r) for k, r in p.multiplicities())
    return Fraction(1, denominator)
