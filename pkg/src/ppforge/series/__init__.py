"""S(k, r) sums, their closed forms and the identities they satisfy."""

from .beta import EulerApprox, beta_closed_odd, beta_numeric, euler_approx_report
from .closed import (
    CORRECTIONS,
    PRINTED,
    TABLE_KS,
    TABLE_RS,
    ClosedForm,
    Erratum,
    TableReport,
    approximation,
    closed_form,
    constant_term,
    derive_coefficient,
    printed_approximation,
    printed_form,
    validate_table,
)
from .identities import (
    TwoTermIdentity,
    VerificationError,
    approx_eq3,
    approx_eq8_rational,
    gosper_check,
    gosper_closed,
    ramanujan_value,
    two_term_identity,
)
from .lambert import DIGITS_CAP, PrecisionBudgetError, SeriesKey, SeriesValue, eval_S, eval_S_terms

__all__ = [
    "EulerApprox", "beta_closed_odd", "beta_numeric", "euler_approx_report",
    "CORRECTIONS", "PRINTED", "TABLE_KS", "TABLE_RS", "ClosedForm", "Erratum", "TableReport", "approximation",
    "closed_form", "constant_term", "derive_coefficient", "printed_approximation",
    "printed_form", "validate_table",
    "TwoTermIdentity", "VerificationError", "approx_eq3", "approx_eq8_rational",
    "gosper_check", "gosper_closed", "ramanujan_value", "two_term_identity",
    "DIGITS_CAP", "PrecisionBudgetError", "SeriesKey", "SeriesValue", "eval_S", "eval_S_terms",
]
