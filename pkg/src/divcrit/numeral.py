"""Radix numerals: signed little-endian digit sequences with exact conversion.

Digits are stored units-first, so ``digits[k]`` is the coefficient of
``base**k``.  That keeps positional index k in code equal to index k in the
criterion coefficient sequences, with no reindexing at the call sites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput, InvalidDigit

ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
MIN_BASE = 2
MAX_BASE = 36

# ASCII hyphen-minus and U+2212; output always uses the ASCII form.
_MINUS_CHARS = ("-", "−")

_DIGIT_VALUE = {ch: k for k, ch in enumerate(ALPHABET)}
_DIGIT_VALUE.update({ch.lower(): k for k, ch in enumerate(ALPHABET) if ch.isalpha()})


@dataclass(frozen=True)
class Numeral:
    """An integer as a sign plus little-endian digits in a fixed base.

    Canonical form: every digit is in [0, base); the highest-index digit is
    nonzero unless the numeral is exactly zero (single digit 0); zero carries
    positive sign.  Instances are immutable and safe to share across threads.
    """

    base: int
    sign: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if not MIN_BASE <= self.base <= MAX_BASE:
            raise ValueError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {self.base}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not self.digits:
            raise ValueError("digit sequence must not be empty")
        for k, d in enumerate(self.digits):
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} at index {k} out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("leading zero padding is not canonical")
        if self.is_zero and self.sign != 1:
            raise ValueError("zero must carry positive sign")

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)

    @property
    def degree(self) -> int:
        """Highest digit index m; an (m+1)-digit numeral."""
        return len(self.digits) - 1

    @classmethod
    def parse(cls, text: str, base: int) -> Numeral:
        """Parse optional '-'/U+2212 followed by digits 0-9, A-Z (case-insensitive).

        Raises EmptyInput when no digits are present and InvalidDigit(position,
        character) for any character whose value is >= base.
        """
        if not MIN_BASE <= base <= MAX_BASE:
            raise ValueError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")
        if not text:
            raise EmptyInput("empty numeral")
        sign = 1
        start = 0
        if text[0] in _MINUS_CHARS:
            sign = -1
            start = 1
        if start == len(text):
            raise EmptyInput("numeral has a sign but no digits")
        values = []
        for pos in range(start, len(text)):
            value = _DIGIT_VALUE.get(text[pos], -1)
            if value < 0 or value >= base:
                raise InvalidDigit(pos, text[pos], base)
            values.append(value)
        # canonicalize: strip leading (most-significant) zeros, store units first
        while len(values) > 1 and values[0] == 0:
            values.pop(0)
        digits = tuple(reversed(values))
        if digits == (0,):
            sign = 1
        return cls(base=base, sign=sign, digits=digits)

    @classmethod
    def from_value(cls, value: int, base: int) -> Numeral:
        """Exact conversion from an integer of any magnitude."""
        if not MIN_BASE <= base <= MAX_BASE:
            raise ValueError(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")
        sign = -1 if value < 0 else 1
        magnitude = abs(value)
        digits = []
        while True:
            magnitude, d = divmod(magnitude, base)
            digits.append(d)
            if magnitude == 0:
                break
        return cls(base=base, sign=sign, digits=tuple(digits))

    def to_value(self) -> int:
        """sign * sum(digits[k] * base**k), exact at any size."""
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return self.sign * total

    def text(self) -> str:
        """Render with digits 0-9A-Z and an ASCII '-' for negatives."""
        body = "".join(ALPHABET[d] for d in reversed(self.digits))
        return body if self.sign > 0 else "-" + body

    def __str__(self) -> str:
        return self.text()


def format_int(value: int, base: int) -> str:
    """Render an integer in the given base (0-9A-Z alphabet)."""
    return Numeral.from_value(value, base).text()
