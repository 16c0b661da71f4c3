"""Applying criteria: single reduction steps, iterated reduction, and the
full linear form over all digits.

All functions are pure and exact; values are plain Python integers, so no
magnitude ever overflows.  Negative inputs are handled by splitting the
magnitude and negating the result, which preserves R = w*A (mod n) up to a
global sign that divisibility ignores.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BaseMismatch, NegativeInput
from .numeral import Numeral
from .params import ParameterSet


def split(value: int, base: int) -> tuple[int, int]:
    """Quotient/remainder split A = base*B + b with 0 <= b < base."""
    if value < 0:
        raise NegativeInput("split expects a magnitude; negate and track the sign")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    return divmod(value, base)


def restricted_step(value: int, ps: ParameterSet) -> int:
    """One reduction step R = u*B + w*b, negated for negative input."""
    if value < 0:
        return -restricted_step(-value, ps)
    big, unit = divmod(value, ps.t)
    return ps.u * big + ps.w * unit


class Termination(enum.Enum):
    BELOW_THRESHOLD = "below-threshold"
    FIXED_POINT = "fixed-point"
    NO_DECREASE = "no-decrease"
    ITERATION_CAP = "iteration-cap"


@dataclass(frozen=True)
class ReductionTrace:
    """The sequence A = R_0, R_1, ... produced by iterating the rule."""

    params: ParameterSet
    values: tuple[int, ...]
    termination: Termination

    @property
    def steps(self) -> int:
        return len(self.values) - 1

    @property
    def final(self) -> int:
        return self.values[-1]


def _digit_count(value: int, base: int) -> int:
    magnitude = abs(value)
    count = 1
    while magnitude >= base:
        magnitude //= base
        count += 1
    return count


def reduce(
    value: int,
    ps: ParameterSet,
    threshold: int | None = None,
    max_iters: int | None = None,
) -> ReductionTrace:
    """Iterate restricted_step until the value is small.

    Stops when |R| <= threshold (BelowThreshold), the value repeats
    (FixedPoint), |R| stops strictly decreasing (NoDecrease), or max_iters
    steps have run (IterationCap).  threshold defaults to t**3, the smallest
    bound for which digit-sized parameters provably shrink every larger value,
    so termination never relies on the cap; max_iters defaults to the input's
    digit count plus 8.
    """
    if threshold is None:
        threshold = ps.t ** 3
    if threshold < ps.t:
        raise ValueError(f"threshold must be >= t = {ps.t}, got {threshold}")
    if max_iters is None:
        max_iters = _digit_count(value, ps.t) + 8
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")

    values = [value]
    termination = None
    while True:
        current = values[-1]
        if abs(current) <= threshold:
            termination = Termination.BELOW_THRESHOLD
            break
        if len(values) - 1 >= max_iters:
            termination = Termination.ITERATION_CAP
            break
        nxt = restricted_step(current, ps)
        values.append(nxt)
        if nxt == current:
            termination = Termination.FIXED_POINT
            break
        if abs(nxt) >= abs(current):
            termination = Termination.NO_DECREASE
            break
    return ReductionTrace(params=ps, values=tuple(values), termination=termination)


def gdc_coefficients(ps: ParameterSet, degree: int) -> list[int]:
    """Coefficients [u**k * w**(m-k) for k = 0..m], exact at any magnitude."""
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    return [ps.u ** k * ps.w ** (degree - k) for k in range(degree + 1)]


@dataclass(frozen=True)
class GdcForm:
    """The full linear criterion for one degree: coefficients c_k = u**k *
    w**(m-k), plus the criterion value C when bound to a numeral."""

    params: ParameterSet
    degree: int
    coefficients: tuple[int, ...]
    value: int | None = None

    @classmethod
    def for_degree(cls, ps: ParameterSet, degree: int) -> GdcForm:
        return cls(params=ps, degree=degree,
                   coefficients=tuple(gdc_coefficients(ps, degree)))

    @classmethod
    def bind(cls, x: Numeral, ps: ParameterSet) -> GdcForm:
        form = cls.for_degree(ps, x.degree)
        return cls(params=ps, degree=form.degree, coefficients=form.coefficients,
                   value=gdc_evaluate(x, ps))


def gdc_evaluate(x: Numeral, ps: ParameterSet) -> int:
    """C = sum(u**k * w**(m-k) * a_k) over the numeral's digits, negated for
    negative numerals.  Satisfies C = w**m * A (mod n)."""
    if x.base != ps.t:
        raise BaseMismatch(f"numeral base {x.base} != parameter radix {ps.t}")
    m = x.degree
    total = 0
    power_u = 1
    for k, d in enumerate(x.digits):
        total += power_u * ps.w ** (m - k) * d
        power_u *= ps.u
    return x.sign * total


def identical_digit_form(a: int, degree: int, ps: ParameterSet) -> int:
    """Criterion value for the repdigit with digit a repeated degree+1 times.

    Closed form a * (u**(m+1) - w**(m+1)) / (u - w), with the u = w case
    collapsing to a * (m+1) * u**m; always equals gdc_evaluate on the
    corresponding repdigit numeral.
    """
    if not 0 <= a <= ps.t - 1:
        raise ValueError(f"digit must be in [0, {ps.t - 1}], got {a}")
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if ps.u == ps.w:
        return a * (degree + 1) * ps.u ** degree
    numerator = ps.u ** (degree + 1) - ps.w ** (degree + 1)
    return a * (numerator // (ps.u - ps.w))


def digit_sum(x: Numeral) -> int:
    """Plain digit sum; equals gdc_evaluate with (w, u) = (1, 1)."""
    return x.sign * sum(x.digits)


def alternating_sum(x: Numeral) -> int:
    """Alternating digit sum with the most-significant digit positive.

    Equals gdc_evaluate with (w, u) = (-1, 1): the coefficient of digit k is
    (-1)**(m-k), so for even degree it also equals sum((-1)**k * a_k) while
    for odd degree it is the global negation, which divisibility ignores.
    """
    m = x.degree
    total = sum(d if (m - k) % 2 == 0 else -d for k, d in enumerate(x.digits))
    return x.sign * total
