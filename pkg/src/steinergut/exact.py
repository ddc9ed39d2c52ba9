"""Exact scalar plumbing: rational rendering and square roots compared by squaring."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


def frac_str(x: Union[int, Fraction]) -> str:
    """Render as ``num/den``, omitting the denominator when it is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class SquareRoot:
    """A nonnegative value known exactly as the square root of a rational.

    Comparisons against nonnegative rationals go through the square, so no
    precision is ever lost; float() and decimal() are conveniences only.
    """

    square: Fraction

    def __float__(self) -> float:
        return math.sqrt(self.square.numerator / self.square.denominator)

    def __str__(self) -> str:
        return f"sqrt({frac_str(self.square)})"

    def decimal(self, digits: int) -> str:
        scaled = self.square.numerator * 10 ** (2 * digits) // self.square.denominator
        return _place_point(math.isqrt(scaled), digits)

    def le_squared(self, other: Union[int, Fraction]) -> bool:
        """self <= other, assuming other >= 0."""
        return self.square <= Fraction(other) ** 2

    def ge_squared(self, other: Union[int, Fraction]) -> bool:
        """self >= other, assuming other >= 0."""
        return self.square >= Fraction(other) ** 2

    def eq_squared(self, other: Union[int, Fraction]) -> bool:
        return self.square == Fraction(other) ** 2


Scalar = Union[int, Fraction, SquareRoot]


def _place_point(unscaled: int, digits: int) -> str:
    s = str(unscaled)
    if digits == 0:
        return s
    s = s.rjust(digits + 1, "0")
    return f"{s[:-digits]}.{s[-digits:]}"


def value_str(x: Scalar) -> str:
    """Exact text form of a scalar: ``num/den`` or ``sqrt(num/den)``."""
    if isinstance(x, SquareRoot):
        return str(x)
    return frac_str(x)


def decimal_str(x: Scalar, digits: int) -> str:
    """Truncated decimal rendering with ``digits`` places (convenience column)."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if isinstance(x, SquareRoot):
        return x.decimal(digits)
    f = Fraction(x)
    if f < 0:
        return "-" + decimal_str(-f, digits)
    scaled = f.numerator * 10**digits // f.denominator
    return _place_point(scaled, digits)

