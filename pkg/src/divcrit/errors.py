"""Exception types shared across the package."""


class DivisibilityError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(DivisibilityError):
    """A numeral string contained no digits."""


class InvalidDigit(DivisibilityError):
    """A character is not a digit, or its value is >= the base."""

    def __init__(self, position: int, character: str, base: int):
        self.position = position
        self.character = character
        self.base = base
        super().__init__(
            f"invalid digit {character!r} at position {position} for base {base}"
        )


class ZeroN(DivisibilityError):
    """N = 0 carries no divisibility information."""


class InvalidDivisor(DivisibilityError):
    """Divisors must be integers >= 2."""


class NoSoundCandidate(DivisibilityError):
    """Every candidate parameter set failed the soundness filter."""


class NegativeInput(DivisibilityError):
    """Digit splitting operates on magnitudes; callers track the sign."""


class BaseMismatch(DivisibilityError):
    """The numeral's base differs from the parameter set's radix."""


class NoSoundCriterion(DivisibilityError):
    """No equivalence-preserving rule is available for the request."""
