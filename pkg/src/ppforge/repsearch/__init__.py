"""Four-term representations of integers by S(k, 1) and S(k, 4) sums."""

from .appendix import (
    APPENDIX_DIGITS,
    AppendixReport,
    EighteenDigitReport,
    InTextErratum,
    RowCheck,
    check_row,
    eighteen_digit_case,
    in_text_errata,
    verify_appendix,
)
from .lattice import canonical_vector, in_lattice, pair_value, partner, reduced_basis, sigma
from .search import (
    BatchOutcome,
    PrecisionExhausted,
    Representation,
    RepQuery,
    RepresentationNotFound,
    approx_expression,
    approx_terms,
    approx_value,
    batch_search,
    default_values,
    find_representation,
    format_approx,
    gcd_report,
    pair_order,
    zeta_exact_check,
    zeta_value,
)

__all__ = [
    "APPENDIX_DIGITS", "AppendixReport", "EighteenDigitReport", "InTextErratum", "RowCheck",
    "check_row", "eighteen_digit_case", "in_text_errata", "verify_appendix",
    "canonical_vector", "in_lattice", "pair_value", "partner", "reduced_basis", "sigma",
    "BatchOutcome", "PrecisionExhausted", "Representation", "RepQuery", "RepresentationNotFound",
    "approx_expression", "approx_terms", "approx_value", "batch_search", "default_values",
    "find_representation", "format_approx", "gcd_report", "pair_order", "zeta_exact_check",
    "zeta_value",
]
