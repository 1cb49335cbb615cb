"""Shift-and-add integer square root and a rational square root built on it.

Everything here lives inside a 64-bit signed word model: arguments are capped
at MAXVAL = 2**60 - 1 so that sums like result + error never leave the word.
"""

from .errors import DomainError

MAXBIT = 60
MAXVAL = (1 << MAXBIT) - 1        # 1152921504606846975
MAXSTART = 1 << (MAXBIT - 2)      # 288230376151711744, largest power of 4 in the word


def sqrt_start(n: int) -> int:
    """Largest power of four that is <= n.

    Scans downward from MAXSTART two bits at a time, so the result is always
    an even power of two.
    """
    if n < 1:
        raise DomainError(f"sqrt_start needs n >= 1, got {n}")
    if n > MAXVAL:
        raise DomainError(f"sqrt_start needs n <= {MAXVAL}, got {n}")
    bit = MAXSTART
    while bit > n:
        bit >>= 2
    return bit


def isqrt(n: int, start: int) -> int:
    """Floor square root of n, given a power-of-four starting error term.

    Re-balances n = (result + error)**2 = result**2 + 2*result*error + error**2
    one bit at a time: when the remainder still covers result + error the bit
    is kept (and subtracted), otherwise dropped.  Two bits shift out of the
    error term per pass, so the loop runs exactly log4(start) + 1 times.

    `start` must be a power of four >= sqrt_start(n); start == 0 is allowed
    only together with n == 0.
    """
    if n < 0:
        raise DomainError(f"isqrt needs n >= 0, got {n}")
    if start == 0 and n > 0:
        raise DomainError("isqrt needs a nonzero start for n > 0")
    number = n
    result = 0
    bit = start
    while bit:
        if number >= result + bit:
            number -= result + bit
            result = bit + (result >> 1)
        else:
            result >>= 1
        bit >>= 2
    return result


def rational_sqrt(p: int, q: int) -> tuple[int, int]:
    """In-word rational approximation (a, b) to sqrt(p / q).

    Both parts are rescaled by f = MAXVAL // max(p, q) before taking integer
    square roots, so the approximation uses the full precision of the word:
    a = isqrt(p*f), b = isqrt(q*f).
    """
    if q == 0:
        raise ZeroDivisionError("rational_sqrt: denominator is zero")
    if p < 0 or q < 0:
        raise DomainError(f"rational_sqrt needs p, q >= 0, got {p}/{q}")
    if p > MAXVAL or q > MAXVAL:
        raise DomainError(f"rational_sqrt operands exceed {MAXVAL}")
    f = MAXVAL // max(p, q)
    a = isqrt(p * f, sqrt_start(p * f)) if p else 0
    b = isqrt(q * f, sqrt_start(q * f))
    return a, b
