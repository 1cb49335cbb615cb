"""Sign-signature words locating a dyadic rational in the bisection tree.

A signature word packs, from most to least significant bit: a sentinel bit, a
seed bit selecting cosine or sine, then one bit per bisection level recording
the turn taken at that level (0 keeps the running sign, 1 flips it), with the
innermost level in bit 0.  bit_length - 2 therefore doubles as the search
depth, so a single integer carries both the sign history and the recursion
bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .dyadic import DyadicRational
from .errors import DomainError, SeedMismatchError

MAX_DEPTH = 61  # word must fit 63 value bits: sentinel + seed + depth


class SigSeed(IntEnum):
    """Initial word value; the low bit is the starting sign (0 -> +1, 1 -> -1)."""

    COS = 2  # 0b10
    SIN = 3  # 0b11


@dataclass(frozen=True, slots=True)
class SignatureWord:
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 2:
            raise DomainError(f"signature word must carry a sentinel, got {self.bits}")

    @property
    def depth(self) -> int:
        """Number of radical levels below the outermost one."""
        return self.bits.bit_length() - 2


def build_signature(x: DyadicRational, seed: SigSeed) -> SignatureWord:
    """Binary-search x = n / 2**k through (0, 1), one appended bit per halving.

    The appended bit comes from the population-count parity of the word built
    so far; because the word starts primed with the sentinel and seed bits,
    the parity logic is the reverse of what the raw turn mask would use.  A
    left turn (n below the midpoint) appends the complement parity, a right
    turn appends the parity itself and recenters n.
    """
    n, k = x.num, x.exp
    if n <= 0 or n >= (1 << k):
        raise DomainError(f"build_signature needs 0 < x < 1, got {x}")
    s = int(seed)
    m = 1 << k
    while True:
        m >>= 1
        if n == m:
            return SignatureWord(s)
        if n < m:
            s = (s << 1) | (1 - (s.bit_count() & 1))
        else:
            s = (s << 1) | (s.bit_count() & 1)
            n -= m


def unprimed_bits(sig: SignatureWord, seed: SigSeed) -> int:
    """Turn-history mask with the sentinel and seed bits stripped."""
    if sig.bits >> sig.depth != int(seed):
        raise SeedMismatchError(f"word {sig.bits} was not built from seed {seed.name}")
    return sig.bits - (int(seed) << sig.depth)


def level_signs(sig: SignatureWord, seed: SigSeed) -> tuple[int, ...]:
    """Radical signs per level, outermost first (bit 0 of the mask is innermost)."""
    mask = unprimed_bits(sig, seed)
    d = sig.depth
    return tuple(-1 if (mask >> (d - i)) & 1 else 1 for i in range(1, d + 1))


def sign_oracle(n: int, k: int, i: int) -> int:
    """Closed-form sign of radical level i for the angle n*pi / 2**(k+1).

    Evaluates (-1)**floor(n / 2**(k-i+1) + 1/2) in exact integer arithmetic;
    the floor collapses to one shift.  Level 0 is the sign outside the
    radical, level i >= 1 sits in front of the i-th nested root.  Test oracle
    for build_signature, not used on the evaluation path.
    """
    if not 0 < n < (1 << k):
        raise DomainError(f"sign_oracle needs 0 < n < 2**k, got n={n}, k={k}")
    if not 0 <= i <= k:
        raise DomainError(f"level index {i} outside [0, {k}]")
    half_steps = (2 * n + (1 << (k - i + 1))) >> (k - i + 2)
    return -1 if half_steps & 1 else 1
