"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the domain an operation is defined on."""


class NonDyadicError(DomainError):
    """Number whose denominator is not a power of two."""


class PrecisionOverflowError(DomainError):
    """Value does not fit the 64-bit word model (numerator or exponent too large)."""


class PoleError(DomainError):
    """Evaluation requested at a pole of tan or cot."""


class DepthError(DomainError):
    """Requested unwind depth exceeds what a signature word can hold."""


class SeedMismatchError(ValueError):
    """Signature word decoded with a different seed than it was built with."""
