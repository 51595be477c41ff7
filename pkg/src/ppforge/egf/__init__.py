"""Trigonometric expressions, exact series and EGF sequences."""

from .expr import BinOp, Const, ExprSyntaxError, Neg, Trig, TrigExpr, Var, parse, to_text
from .oeis import SNAPSHOTS, Snapshot, check_snapshot, computed_prefix, cosine_sum_diagnostic
from .series import PoleAtOrigin, PowerSeries, egf_terms, expand, integrality, select

__all__ = [
    "BinOp", "Const", "ExprSyntaxError", "Neg", "Trig", "TrigExpr", "Var", "parse", "to_text",
    "SNAPSHOTS", "Snapshot", "check_snapshot", "computed_prefix", "cosine_sum_diagnostic",
    "PoleAtOrigin", "PowerSeries", "egf_terms", "expand", "integrality", "select",
]
