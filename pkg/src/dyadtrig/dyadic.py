"""Exact dyadic rationals and quadrant range reduction.

A dyadic rational is a number num / 2**exp.  Values are kept canonical (odd
numerator, or 0/1 for zero) so that equality is structural and the
denominator exponent is directly the lattice level the value lives on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonDyadicError, PrecisionOverflowError

# Denominator exponent cap: keeps 2**exp and the derived signature words
# inside a 64-bit signed word.
MAX_EXP = 62

_WORD = 1 << 63


@dataclass(frozen=True, slots=True)
class DyadicRational:
    """Value num / 2**exp, canonical: num odd, or num == 0 and exp == 0."""

    num: int
    exp: int

    @property
    def denominator(self) -> int:
        return 1 << self.exp

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


ZERO = DyadicRational(0, 0)
ONE = DyadicRational(1, 0)


def normalize(num: int, exp: int) -> DyadicRational:
    """Canonical dyadic rational equal to num / 2**exp."""
    if exp < 0 or exp > MAX_EXP:
        raise PrecisionOverflowError(f"denominator exponent {exp} outside [0, {MAX_EXP}]")
    if not -_WORD < num < _WORD:
        raise PrecisionOverflowError(f"numerator {num} does not fit a 64-bit word")
    if num == 0:
        return ZERO
    while num % 2 == 0 and exp > 0:
        num //= 2
        exp -= 1
    return DyadicRational(num, exp)


def from_fraction(value: Fraction) -> DyadicRational:
    """Convert an exact fraction, rejecting non power-of-two denominators."""
    den = value.denominator
    if den & (den - 1):
        raise NonDyadicError(f"denominator {den} is not a power of two")
    return normalize(value.numerator, den.bit_length() - 1)


def parse_dyadic(text: str) -> DyadicRational:
    """Parse the textual form "n/m" (m a power of two) or a bare integer."""
    body = text.strip()
    num_part, sep, den_part = body.partition("/")
    try:
        num = int(num_part)
        den = int(den_part) if sep else 1
    except ValueError:
        raise NonDyadicError(f"cannot parse dyadic rational from {text!r}") from None
    if den <= 0:
        raise NonDyadicError(f"denominator must be positive, got {den}")
    if den & (den - 1):
        raise NonDyadicError(f"denominator {den} is not a power of two")
    return normalize(num, den.bit_length() - 1)


@dataclass(frozen=True, slots=True)
class QuadratureFrame:
    """Reduced argument in [0, 1/4] turn plus the two quadrant signs."""

    y: DyadicRational
    inv: int  # sign of cosine in the source quadrant
    mir: int  # sign of sine in the source quadrant


_QUARTER = Fraction(1, 4)
_HALF = Fraction(1, 2)


def quadrature(x: DyadicRational, inv: int = 1, mir: int = 1) -> QuadratureFrame:
    """Fold an angle x (in turns, full circle = 1) into [0, 1/4].

    The argument is first reduced modulo one turn into (-1/2, 1/2], which
    bounds the half-turn subtraction below to a single step; each half-turn
    step flips both signs, and mirroring a negative angle flips the sine sign.
    """
    r = x.as_fraction() % 1
    if r > _HALF:
        r -= 1
    while r > _QUARTER or r < -_QUARTER:
        r -= _HALF if r > 0 else -_HALF
        inv, mir = -inv, -mir
    if r < 0:
        r, mir = -r, -mir
    return QuadratureFrame(from_fraction(r), inv, mir)
