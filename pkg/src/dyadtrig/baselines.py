"""Taylor-series and CORDIC reference implementations.

These exist to make the cost of the conventional approaches explicit: CORDIC
needs a stored table of arctangents and the Taylor series needs factorial
coefficients.  They live in their own module so the core library carries no
tables at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError


@dataclass(frozen=True)
class CordicTable:
    """Precomputed rotation angles atan(2**-i) and the accumulated gain."""

    angles: tuple[float, ...]
    gain: float

    @property
    def size_bits(self) -> int:
        """Storage footprint of the table in bits (binary64 entries)."""
        return 64 * len(self.angles)


@lru_cache(maxsize=None)
def cordic_table(iters: int) -> CordicTable:
    if not 1 <= iters <= 60:
        raise DomainError(f"cordic iterations must lie in [1, 60], got {iters}")
    angles = tuple(math.atan(2.0 ** -i) for i in range(iters))
    gain = 1.0
    for i in range(iters):
        gain /= math.sqrt(1.0 + 2.0 ** (-2 * i))
    return CordicTable(angles, gain)


def taylor_cos(x: float, terms: int) -> float:
    """Horner evaluation of sum (-1)**i * x**(2i) / (2i)! for i < terms."""
    if not 1 <= terms <= 20:
        raise DomainError(f"terms must lie in [1, 20], got {terms}")
    x2 = x * x
    acc = (-1.0) ** (terms - 1) / math.factorial(2 * (terms - 1))
    for i in range(terms - 2, -1, -1):
        acc = acc * x2 + (-1.0) ** i / math.factorial(2 * i)
    return acc


def cordic_rotate(theta: float, iters: int) -> tuple[float, float]:
    """Rotation-mode CORDIC: (cos theta, sin theta) for theta in [0, pi/2]."""
    table = cordic_table(iters)
    x, y, z = table.gain, 0.0, theta
    for i, angle in enumerate(table.angles):
        d = 1.0 if z >= 0.0 else -1.0
        x, y = x - d * y * 2.0 ** -i, y + d * x * 2.0 ** -i
        z -= d * angle
    return x, y


def cordic_atan(v: float, iters: int) -> float:
    """Vectoring-mode CORDIC: atan(v) for v >= 0."""
    table = cordic_table(iters)
    x, y, z = 1.0, v, 0.0
    for i, angle in enumerate(table.angles):
        d = -1.0 if y >= 0.0 else 1.0
        x, y = x - d * y * 2.0 ** -i, y + d * x * 2.0 ** -i
        z -= d * angle
    return z
