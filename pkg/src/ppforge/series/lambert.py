"""S(k, r) = sum_{n>=1} n^k / (e^{r pi n} - 1) to a guaranteed accuracy.

With q = e^{-r pi} each term is n^k q^n / (1 - q^n).  Terms are summed in
binary fixed point, q^n built by one multiplication per step.

Truncation: for n > N the ratio of consecutive n^k q^n is at most
rho = ((N+2)/(N+1))^k q, so once rho < 1 the tail is bounded by

    (N+1)^k q^(N+1) / ((1 - q) (1 - rho)).

N is the smallest cutoff for which this bound is below the target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .._backend import kernels
from ..kernel.numeric import HiReal

DIGITS_CAP = 20000
LOG2_10 = math.log2(10)


class PrecisionBudgetError(ValueError):
    """Requested digits exceed the configured cap."""


@dataclass(frozen=True)
class SeriesKey:
    k: int
    r: Fraction

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        r = Fraction(self.r)
        if r <= 0:
            raise ValueError("r must be positive")
        object.__setattr__(self, "r", r)

    @property
    def r_text(self) -> str:
        return f"{self.r.numerator}/{self.r.denominator}"


@dataclass(frozen=True)
class SeriesValue:
    key: SeriesKey
    digits: int
    value: HiReal
    terms_used: int

    def __str__(self) -> str:
        return str(self.value)


def _log_terms(k: int, x: float, n: int) -> float:
    # natural log of n^k q^n with x = r pi
    return k * math.log(n) - x * n


def log_magnitude(k: int, r: Fraction) -> float:
    """Natural log of S(k, r), from a float log-sum-exp over the terms."""
    x = float(r) * math.pi
    peak = max(1, round(k / x))
    top = _log_terms(k, x, peak)
    acc = 0.0
    n = 1
    while True:
        t = _log_terms(k, x, n) - top
        if t > -700:
            acc += math.exp(t) / -math.expm1(-x * n)
        elif n > peak:
            break
        n += 1
    return top + math.log(acc)


def cutoff(k: int, r: Fraction, log_target: float) -> int:
    """Smallest N whose tail bound is below e^log_target."""
    x = float(r) * math.pi
    lq1 = -math.log1p(-math.exp(-x))
    n = 1
    while True:
        m = n + 1
        lrho = k * math.log((n + 2) / m) - x
        if lrho < 0:
            bound = _log_terms(k, x, m) + lq1 - math.log(-math.expm1(lrho))
            if bound < log_target:
                return n
        n += 1


def _evaluate(k: int, r: Fraction, digits: int) -> SeriesValue:
    if digits > DIGITS_CAP:
        raise PrecisionBudgetError(f"{digits} digits exceeds the cap of {DIGITS_CAP}")
    lmag = log_magnitude(k, r)
    # absolute error below 10^-digits and relative error below 10^-digits
    log_scale = min(0.0, lmag - math.log(2))
    log_target = -(digits + 5) * math.log(10) + log_scale
    N = cutoff(k, r, log_target)
    x = float(r) * math.pi
    # fixed-point rounding grows like N^(k+2) ulps, amplified by 1/(1-q)^2
    wp = int(
        (digits + 5) * LOG2_10
        - log_scale / math.log(2)
        + (k + 2) * math.log2(N + 1)
        - 2 * math.log2(-math.expm1(-x))
        + 32
    )
    with mpmath.workprec(wp + 64):
        q = mpmath.exp(-mpmath.pi * r.numerator / r.denominator)
        qf = int(mpmath.floor(mpmath.ldexp(q, wp)))
    total = kernels.lambert_fixed(k, qf, wp, N)
    with mpmath.workprec(max(wp, total.bit_length()) + 16):
        v = mpmath.ldexp(mpmath.mpf(total), -wp)
    return SeriesValue(SeriesKey(k, r), digits, HiReal(v, digits), N)


@lru_cache(maxsize=4096)
def _cached(k: int, r: Fraction, digits: int) -> SeriesValue:
    return _evaluate(k, r, digits)


def eval_S(k: int, r, digits: int) -> SeriesValue:
    """S(k, r) with absolute and relative error below 10^-digits."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r = Fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    if digits < 10:
        raise ValueError("digits must be >= 10")
    return _cached(k, r, digits)


def eval_S_terms(k: int, r, digits: int, n_terms: int) -> mpmath.mpf:
    """Partial sum over n = 1..n_terms at ``digits`` (slow reference)."""
    r = Fraction(r)
    with mpmath.workdps(digits + 10):
        q = mpmath.exp(-mpmath.pi * r.numerator / r.denominator)
        return mpmath.fsum(
            mpmath.mpf(n) ** k * q**n / (1 - q**n) for n in range(1, n_terms + 1)
        )
