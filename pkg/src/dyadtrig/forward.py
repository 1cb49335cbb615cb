"""Forward trigonometric evaluation by unwinding a rebalanced nested radical.

Every lattice value is reached through v = 4*cos(x*pi/2)**2 (cosine seed) or
4*sin(x*pi/2)**2 (sine seed).  Rebalancing pushes all scale factors out of
the radical, so the unwind only ever computes sqrt(2 + a) with a sign chosen
by one signature bit per level; the individual functions post-process v.
"""

from __future__ import annotations

import math
from fractions import Fraction
from enum import Enum

from .dyadic import ONE, ZERO, DyadicRational, normalize, quadrature
from .errors import DepthError, DomainError, PoleError
from .intmath import rational_sqrt
from .signature import MAX_DEPTH, SignatureWord, SigSeed, build_signature


class TrigKind(Enum):
    COS = "cos"
    SIN = "sin"
    TAN = "tan"
    COT = "cot"
    COS2 = "cos2"
    SIN2 = "sin2"
    TAN2 = "tan2"
    COT2 = "cot2"

    @property
    def seed(self) -> SigSeed:
        if self in (TrigKind.COS, TrigKind.TAN, TrigKind.COS2, TrigKind.TAN2):
            return SigSeed.COS
        return SigSeed.SIN


def _unwind(bits: int) -> tuple[float, int]:
    a = 0.0
    s = bits
    steps = 0
    while s > 3:
        radicand = 2.0 + a
        assert 0.0 <= radicand <= 4.0
        a = (1 - 2 * (s & 1)) * math.sqrt(radicand)
        s >>= 1
        steps += 1
    return 2.0 + a, steps


def _unwind_exact(bits: int) -> Fraction:
    a = Fraction(0)
    s = bits
    while s > 3:
        radicand = 2 + a
        num, den = rational_sqrt(radicand.numerator, radicand.denominator)
        a = (1 - 2 * (s & 1)) * Fraction(num, den)
        s >>= 1
    return 2 + a


def radical_unwind(sig: SignatureWord) -> float:
    """Unwind a full signature word: one sign bit and one square root per level.

    Returns 2 + a in [0, 4], i.e. 4*cos(theta)**2 or 4*sin(theta)**2 depending
    on the seed the word was built from.
    """
    return _unwind(sig.bits)[0]


def radical_unwind_truncated(turn_bits: int, depth: int) -> float:
    """Unwind exactly `depth` levels from the low bits of a raw turn mask."""
    if depth < 0:
        raise DomainError(f"depth must be nonnegative, got {depth}")
    if depth > MAX_DEPTH:
        raise DepthError(f"depth {depth} exceeds {MAX_DEPTH}")
    a = 0.0
    s = turn_bits
    for _ in range(depth):
        radicand = 2.0 + a
        assert 0.0 <= radicand <= 4.0
        a = (1 - 2 * (s & 1)) * math.sqrt(radicand)
        s >>= 1
    return 2.0 + a


def dyadic_loop(x: DyadicRational, seed: SigSeed, exact: bool = False) -> float | Fraction:
    """Radical value for x in [0, 1] quarter-turns: 4*cos(x*pi/2)**2 under the
    cosine seed, 4*sin(x*pi/2)**2 under the sine seed.

    The endpoints come out exact; everything in between goes through the
    signature search.  With exact=True the unwind runs in rational arithmetic
    on top of rational_sqrt instead of binary64.
    """
    if x == ZERO:
        v = 4 * (1 - (int(seed) & 1))
    elif x == ONE:
        v = 4 * (int(seed) & 1)
    elif x.num < 0 or x.num > (1 << x.exp):
        raise DomainError(f"dyadic_loop needs x in [0, 1], got {x}")
    else:
        bits = build_signature(x, seed).bits
        return _unwind_exact(bits) if exact else _unwind(bits)[0]
    return Fraction(v) if exact else float(v)


def _sqrt_value(v: float | Fraction, exact: bool) -> float | Fraction:
    if exact:
        root_num, root_den = math.isqrt(v.numerator), math.isqrt(v.denominator)
        if root_num * root_num == v.numerator and root_den * root_den == v.denominator:
            return Fraction(root_num, root_den)  # perfect squares stay exact
        num, den = rational_sqrt(v.numerator, v.denominator)
        return Fraction(num, den)
    return math.sqrt(v)


def forward(kind: TrigKind, x: DyadicRational, exact: bool = False) -> float | Fraction:
    """Evaluate `kind` at x quarter-turns (angle x*pi/2) on the dyadic lattice.

    tan has a pole at x = 1 and cot at x = 0; both raise instead of returning
    an infinity so lattice sweeps must skip them explicitly.
    """
    if kind in (TrigKind.TAN, TrigKind.TAN2) and x == ONE:
        raise PoleError("tan pole at x = 1")
    if kind in (TrigKind.COT, TrigKind.COT2) and x == ZERO:
        raise PoleError("cot pole at x = 0")
    v = dyadic_loop(x, kind.seed, exact=exact)
    if kind in (TrigKind.COS, TrigKind.SIN):
        return _sqrt_value(v, exact) / 2
    if kind in (TrigKind.COS2, TrigKind.SIN2):
        return v / 4
    squared = 4 / v - 1
    if exact and squared < 0:
        # rational_sqrt may overshoot by ~2**-29, driving tan**2 of very
        # small angles just below zero; the radicand floors at zero
        squared = Fraction(0)
    if kind in (TrigKind.TAN2, TrigKind.COT2):
        return squared
    return _sqrt_value(squared, exact)


def full_circle(kind: TrigKind, x: DyadicRational) -> float:
    """cos or sin of x full turns (period 1), any sign or magnitude."""
    if kind not in (TrigKind.COS, TrigKind.SIN):
        raise DomainError(f"full_circle handles cos and sin only, got {kind.value}")
    frame = quadrature(x)
    y = frame.y
    # y <= 1/4, so a nonzero canonical y has exp >= 2 and scaling by 4 is exact
    quarter_units = normalize(y.num, y.exp - 2) if y.num else ZERO
    if kind is TrigKind.COS:
        return frame.inv * forward(TrigKind.COS, quarter_units)
    return frame.mir * forward(TrigKind.SIN, quarter_units)
