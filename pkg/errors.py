"""
Error types for mufgl

Domain errors signal a violated precondition or a failed algebraic claim;
constructor misuse (bad generator names, inconsistent partitions) raises
ValueError instead.
"""


class MufglError(Exception):
    """Base class for every error raised by the algebra layer"""


class NotDivisible(MufglError):
    """An integral polynomial has a coefficient not divisible by the requested integer"""

    def __init__(self, divisor: int, offending: str):
        self.divisor = divisor
        self.offending = offending
        super().__init__(f"coefficient {offending} is not divisible by {divisor}")


class OrderMismatch(MufglError):
    """Two truncated series with different truncation orders were combined"""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"truncation orders differ: {left} != {right}")


class NonzeroConstantTerm(MufglError):
    """A series substituted into another (or exponentiated) has a nonzero constant term"""


class ConstantTermNotOne(MufglError):
    """The logarithm was requested of a series whose constant term is not 1"""


class NotNormalized(MufglError):
    """Compositional inversion needs c_0 = 0 and c_1 = 1"""


class IntegralityViolation(MufglError):
    """An expansion that must have integer coefficients produced a fraction"""


class UsageError(MufglError):
    """Invalid command-line input that argparse cannot catch on its own"""
