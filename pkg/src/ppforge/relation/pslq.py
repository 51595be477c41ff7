"""Integer relation search with an exclusion certificate and a verification gate."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .._backend import kernels
from ..kernel.numeric import HiReal, from_fraction

LOG2_10 = math.log2(10)
# orders of magnitude the smallest |y| must drop at detection
CONFIDENCE_DROP = 15


class InconclusiveSearch(ArithmeticError):
    """Precision or iterations ran out before a relation was found or excluded."""

    def __init__(self, message: str, norm_bound: float = 0.0):
        super().__init__(message)
        self.norm_bound = norm_bound


@dataclass(frozen=True)
class RelationProblem:
    values: tuple
    digits: int
    coeff_bound: int

    def __post_init__(self):
        vals = tuple(self.values)
        if len(vals) < 2:
            raise ValueError("need at least two values")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")
        object.__setattr__(self, "values", vals)


@dataclass(frozen=True)
class RelationResult:
    coeffs: tuple[int, ...]
    residual_log10: int
    confidence: str  # "accepted" or "spurious-risk"
    iterations: int = 0
    drop_orders: float = 0.0
    verify_digits: int = 0


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # found, excluded, precision, cap, rejected
    result: RelationResult | None
    norm_bound: float
    iterations: int
    notes: list = field(default_factory=list)


def canonical(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Divide out the gcd and make the first nonzero entry positive."""
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    if g == 0:
        raise ValueError("zero vector")
    out = [c // g for c in coeffs]
    for c in out:
        if c:
            if c < 0:
                out = [-v for v in out]
            break
    return tuple(out)


def _as_mpf(v):
    if isinstance(v, HiReal):
        return v.value
    if isinstance(v, Fraction):
        return from_fraction(v)
    return mpmath.mpf(v)


def _value_digits(v) -> int | None:
    if isinstance(v, HiReal):
        return v.digits
    if isinstance(v, (int, Fraction)):
        return None  # exact
    return None


def verify_relation(coeffs: Sequence[int], values: Sequence, digits: int) -> float:
    """log10 |sum c_i x_i| evaluated at ``digits``; -inf for an exact zero."""
    if len(coeffs) != len(values):
        raise ValueError("length mismatch")
    with mpmath.workdps(digits + 10):
        total = mpmath.fsum(c * _as_mpf(v) for c, v in zip(coeffs, values))
        if total == 0:
            return float("-inf")
        return float(mpmath.log10(abs(total)))


def _to_fixed(values, prec: int) -> list[int]:
    with mpmath.workprec(prec + 64):
        xs = [_as_mpf(v) for v in values]
        scale = max(abs(x) for x in xs)
        if scale == 0:
            raise ValueError("all values are zero")
        return [int(mpmath.nint(mpmath.ldexp(x / scale, prec))) for x in xs]


def search_relation(
    problem: RelationProblem,
    recompute: Callable[[int], Sequence] | None = None,
) -> SearchOutcome:
    """Run PSLQ and the verification gate, reporting how the search ended.

    ``recompute(d)`` returns the same values at ``d`` digits; it is used for
    the 1.5x re-verification when the stored values are not precise enough.
    """
    m = len(problem.values)
    digits = problem.digits
    prec = int(digits * LOG2_10)
    x = _to_fixed(problem.values, prec)
    tol_digits = digits - max(15, digits // 4)
    tol = int(mpmath.ldexp(mpmath.mpf(10) ** (-tol_digits), prec)) or 1
    norm_cap = math.isqrt(m * problem.coeff_bound**2) + 1
    max_iter = 50 * m * digits
    status, vec, it, nb, y_now, y_prev = kernels.pslq_fixed(x, prec, tol, max_iter, norm_cap)
    norm_bound = nb / 2.0**prec if nb else 0.0
    if status != "found":
        return SearchOutcome(status, None, norm_bound, it)
    coeffs = canonical(vec)
    if max(abs(c) for c in coeffs) > problem.coeff_bound:
        return SearchOutcome("excluded", None, norm_bound, it, ["relation exceeds coeff_bound"])

    drop = math.log10(y_prev) - math.log10(y_now) if y_now else float(digits)
    verify_digits = math.ceil(1.5 * digits)
    available = [_value_digits(v) for v in problem.values]
    known = [d for d in available if d is not None]
    values = problem.values
    if known and min(known) < verify_digits:
        if recompute is not None:
            values = tuple(recompute(verify_digits))
        else:
            verify_digits = min(known)
    with mpmath.workdps(verify_digits + 10):
        scale = max(abs(_as_mpf(v)) for v in values)
        scale_log = float(mpmath.log10(scale))
    res = verify_relation(coeffs, values, verify_digits)
    rel = res - scale_log
    residual = -verify_digits if rel == float("-inf") else math.ceil(rel)
    if rel > -(digits / 2):
        return SearchOutcome("rejected", None, norm_bound, it, [f"residual 1e{rel:.1f} at {verify_digits} digits"])
    full_check = verify_digits >= math.ceil(1.5 * digits)
    confidence = "accepted" if drop >= CONFIDENCE_DROP and full_check else "spurious-risk"
    result = RelationResult(coeffs, residual, confidence, it, drop, verify_digits)
    return SearchOutcome("found", result, norm_bound, it)


def find_integer_relation(
    problem: RelationProblem,
    recompute: Callable[[int], Sequence] | None = None,
) -> RelationResult | None:
    """A verified integer relation, or None when one within bound is excluded.

    Raises InconclusiveSearch when precision or iterations run out, or when
    the candidate fails re-verification.
    """
    out = search_relation(problem, recompute)
    if out.status == "found":
        return out.result
    if out.status == "excluded":
        return None
    raise InconclusiveSearch(
        f"search ended with status {out.status!r} after {out.iterations} iterations",
        out.norm_bound,
    )
