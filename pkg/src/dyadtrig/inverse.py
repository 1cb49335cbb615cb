"""Inverse trigonometric evaluation returning exact dyadic rationals.

find5 runs the forward radical backwards: subtracting 2 and squaring undoes
one square-root level per step, and the sign of (xt - 2) at each step is
exactly the sign bit the forward unwind consumed there.  Each step therefore
makes one bisection decision, fusing the search with the evaluation that
drives it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .dyadic import DyadicRational, from_fraction, normalize
from .errors import DomainError
from .forward import radical_unwind_truncated


class InverseKind(Enum):
    ACOS = "acos"
    ASIN = "asin"
    ATAN = "atan"
    ACOT = "acot"

    @property
    def sign_seed(self) -> int:
        """Initial search word: 0 for the cosine family, 1 for the sine family."""
        return 0 if self in (InverseKind.ACOS, InverseKind.ATAN) else 1


@dataclass(frozen=True, slots=True)
class InverseConfig:
    eps: float = 1e-10
    max_depth: int = 48  # beyond this, repeated squaring has consumed binary64

    def __post_init__(self) -> None:
        if not 0.0 < self.eps < 1.0:
            raise DomainError(f"eps must lie in (0, 1), got {self.eps}")
        if not 1 <= self.max_depth <= 61:
            raise DomainError(f"max_depth must lie in [1, 61], got {self.max_depth}")


DEFAULT_CONFIG = InverseConfig()


@dataclass(frozen=True, slots=True)
class InverseResult:
    """Recovered dyadic argument plus whether the search actually terminated.

    `iterations` counts bisection probes: on a lattice input of denominator
    2**k the search converges on probe k exactly; an unconverged result
    reports the max_depth probes that were spent.
    """

    value: DyadicRational
    converged: bool
    iterations: int


def find5(xt: float, ss: int, cfg: InverseConfig = DEFAULT_CONFIG) -> InverseResult:
    """Recover x from xt = 4*cos(x*pi/2)**2 (ss = 0) or 4*sin(..)**2 (ss = 1).

    Repeatedly squares (xt - 2): each squaring strips one radical level, the
    comparison against 2 yields that level's sign, and the search point moves
    by the next halving step in the direction given by the parity of the
    accumulated sign word.  Terminates when xt lands within eps of 2; a
    search that exhausts max_depth returns its best dyadic flagged as
    unconverged rather than raising.
    """
    if ss not in (0, 1):
        raise DomainError(f"sign seed must be 0 or 1, got {ss}")
    band = 4 * math.ulp(4.0)
    if not -band <= xt <= 4.0 + band:  # also rejects NaN
        raise DomainError(f"find5 needs xt in [0, 4], got {xt}")
    xt = min(max(xt, 0.0), 4.0)
    if xt == 0.0:
        return InverseResult(normalize(1 - ss, 0), True, 0)
    if xt == 4.0:
        return InverseResult(normalize(ss, 0), True, 0)
    y = Fraction(1, 2)
    s = ss
    probes = 0
    while True:
        probes += 1
        if abs(xt - 2.0) < cfg.eps:
            return InverseResult(from_fraction(y), True, probes)
        if probes > cfg.max_depth:
            return InverseResult(from_fraction(y), False, probes - 1)
        direction = 1 - 2 * (s.bit_count() & 1)
        step = Fraction(direction, 2 * y.denominator)
        if xt < 2.0:
            y += step
            s = (s << 1) | 1
        else:
            y -= step
            s = s << 1
        xt = (xt - 2.0) * (xt - 2.0)


def inverse(kind: InverseKind, v: float, cfg: InverseConfig = DEFAULT_CONFIG) -> InverseResult:
    """Inverse of `kind` in quarter-turn units: the result t satisfies
    kind's defining relation at the angle t*pi/2.

    acos/asin square the doubled input; atan/acot use the square-root-free
    transform 4 / (v**2 + 1), which feeds the same search.
    """
    if math.isnan(v):
        raise DomainError("inverse input is NaN")
    if kind in (InverseKind.ACOS, InverseKind.ASIN):
        if not 0.0 <= v <= 1.0:
            raise DomainError(f"{kind.value} needs v in [0, 1], got {v}")
        xt = (2.0 * v) ** 2
    else:
        if v < 0.0:
            raise DomainError(f"{kind.value} needs v >= 0, got {v}")
        xt = 4.0 / (v * v + 1.0)
    return find5(xt, kind.sign_seed, cfg)


def naive_inverse(kind: InverseKind, v: float, cfg: InverseConfig = DEFAULT_CONFIG) -> InverseResult:
    """Plain binary search for acos/asin, probing a depth-limited forward
    unwind at every level: O(k**2) square roots against find5's O(k) steps.
    Kept as the independent slow oracle for the fused search.
    """
    if kind not in (InverseKind.ACOS, InverseKind.ASIN):
        raise DomainError(f"naive search covers acos and asin only, got {kind.value}")
    if math.isnan(v) or not 0.0 <= v <= 1.0:
        raise DomainError(f"{kind.value} needs v in [0, 1], got {v}")
    ss = kind.sign_seed
    if v == 0.0:
        return InverseResult(normalize(1 - ss, 0), True, 0)
    if v == 1.0:
        return InverseResult(normalize(ss, 0), True, 0)
    orient = float(1 - 2 * ss)  # cos falls, sin rises: orients both comparisons
    y = Fraction(1, 2)
    s = ss
    depth = 0
    probes = 0
    while True:
        probes += 1
        probe = math.sqrt(radical_unwind_truncated(s, depth)) / 2.0
        if abs(v - probe) < cfg.eps:
            return InverseResult(from_fraction(y), True, probes)
        if depth >= cfg.max_depth:
            return InverseResult(from_fraction(y), False, probes - 1)
        step = Fraction(1, 2 * y.denominator)
        if orient * v < orient * probe:
            y += step
            s = (s << 1) | (1 - (s.bit_count() & 1))
        else:
            y -= step
            s = (s << 1) | (s.bit_count() & 1)
        depth += 1
