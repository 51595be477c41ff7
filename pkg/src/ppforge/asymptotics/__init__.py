"""Growth fits a(n) ~ c^n Gamma(n+s) / (d pi^(n+t)) and constant recognition."""

from .fit import (
    FitError,
    GrowthCandidate,
    GrowthFit,
    agreement_digits,
    fit_growth,
    fit_sequence,
    isolate_scale,
    refine_root,
    richardson,
)
from .recognize import Recognition, minimal_polynomial, poly_text, recognize_constant

__all__ = [
    "FitError", "GrowthCandidate", "GrowthFit", "agreement_digits", "fit_growth",
    "fit_sequence", "isolate_scale", "refine_root", "richardson",
    "Recognition", "minimal_polynomial", "poly_text", "recognize_constant",
]
