"""Digit-based divisibility rules for any divisor in any radix.

A pair of integers (w, u) with w*t - u equal to a nonzero multiple of the
divisor defines a one-step reduction rule R = u*B + w*b on A = t*B + b and,
iterated over all digits, a full linear criterion.  This package derives
such rules, applies them, classifies whether they are two-way equivalences,
and audits rule tables against a direct modular oracle.
"""

from .errors import (
    BaseMismatch,
    DivisibilityError,
    EmptyInput,
    InvalidDigit,
    InvalidDivisor,
    NegativeInput,
    NoSoundCandidate,
    NoSoundCriterion,
    ZeroN,
)
from .numeral import Numeral, format_int
from .params import (
    FULL,
    ParameterSet,
    Soundness,
    candidates,
    classify,
    forward_only,
    representations,
    select_best,
)
from .rules import (
    GdcForm,
    ReductionTrace,
    Termination,
    alternating_sum,
    digit_sum,
    gdc_coefficients,
    gdc_evaluate,
    identical_digit_form,
    reduce,
    restricted_step,
    split,
)
from .tables import (
    PAPER_TABLE_1,
    PAPER_TABLE_2,
    FindingKind,
    RuleRow,
    TableAuditFinding,
    audit_paper_table,
    generate,
    render,
    rule_text,
)
from .verify import (
    EquivalenceReport,
    congruence_check,
    equivalence_audit,
    oracle_divisible,
    resolve_params,
    verdict,
)

__version__ = "0.1.0"

__all__ = [
    "BaseMismatch",
    "DivisibilityError",
    "EmptyInput",
    "EquivalenceReport",
    "FindingKind",
    "FULL",
    "GdcForm",
    "InvalidDigit",
    "InvalidDivisor",
    "NegativeInput",
    "NoSoundCandidate",
    "NoSoundCriterion",
    "Numeral",
    "PAPER_TABLE_1",
    "PAPER_TABLE_2",
    "ParameterSet",
    "ReductionTrace",
    "RuleRow",
    "Soundness",
    "TableAuditFinding",
    "Termination",
    "ZeroN",
    "alternating_sum",
    "audit_paper_table",
    "candidates",
    "classify",
    "congruence_check",
    "digit_sum",
    "equivalence_audit",
    "format_int",
    "forward_only",
    "gdc_coefficients",
    "gdc_evaluate",
    "generate",
    "identical_digit_form",
    "oracle_divisible",
    "reduce",
    "render",
    "representations",
    "resolve_params",
    "restricted_step",
    "rule_text",
    "select_best",
    "split",
    "verdict",
]
