"""Rational approximations and exact identities built on S(k, r)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..kernel.numeric import from_fraction, gamma_three_quarters, workdps
from ..kernel.sequences import bernoulli, zeta_even_rational
from .closed import closed_form
from .lambert import eval_S

IDENTITY_DIGITS = 40


class VerificationError(ArithmeticError):
    """A claimed identity failed its numeric check."""


def approx_eq3(k: int, r) -> tuple[Fraction, int]:
    """(u, e) with S(k, r) ~ u / pi^e from the first term's asymptotics."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r = Fraction(r)
    return Fraction(math.factorial(k)) / r ** (k + 1), k + 1


def approx_eq8_rational(k: int, r) -> Fraction:
    """k! zeta(k+1) / (r pi)^(k+1), a rational for odd k."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be odd")
    r = Fraction(r)
    return math.factorial(k) * zeta_even_rational(k + 1) / r ** (k + 1)


def ramanujan_value(k: int) -> Fraction:
    """Exact S(k, 2) = B_(k+1) / (2(k+1)) for k = 1 mod 4, k >= 5."""
    if k % 4 != 1 or k < 5:
        raise ValueError("the r = 2 sum is rational here only for k = 1 mod 4, k >= 5")
    return bernoulli(k + 1) / (2 * (k + 1))


@dataclass(frozen=True)
class TwoTermIdentity:
    k: int
    pair: tuple[int, int]
    a: int
    b: int
    V: Fraction
    residual_log10: float
    zeta_exact: bool


def _pair_coefficients(k: int, pair: tuple[int, int]) -> tuple[int, int]:
    h = (k + 1) // 2
    if pair == (1, 4):
        # closed forms give A(k,4) = A(k,1) / 4^h when k = 3 mod 4
        return 16, -16 * 4**h
    if k > 13:
        raise ValueError("pair (1,2) needs a closed form, available for k <= 13")
    A1 = closed_form(k, 1).A
    A2 = closed_form(k, 2).A
    # a A1 + b A2 = 0, smallest a > 0 making V integral
    ratio = -A1 / A2
    a, b = ratio.denominator, ratio.numerator
    V = (a + b) * bernoulli(k + 1) / (2 * (k + 1))
    return a * V.denominator, b * V.denominator


def two_term_identity(k: int, pair=(1, 4), digits: int = IDENTITY_DIGITS) -> TwoTermIdentity:
    """a S(k, r1) + b S(k, r2) = V with V = (a + b) B_(k+1) / (2(k+1)).

    Pair (1, 4) uses (16, -16 4^((k+1)/2)); pair (1, 2) scales the
    closed-form cancellation to an integral V.  Raises VerificationError if
    the identity fails at ``digits``.
    """
    pair = tuple(pair)
    if k % 4 != 3:
        raise ValueError("two-term identities need k = 3 mod 4")
    if pair not in ((1, 4), (1, 2)):
        raise ValueError("pair must be (1, 4) or (1, 2)")
    a, b = _pair_coefficients(k, pair)
    V = (a + b) * bernoulli(k + 1) / (2 * (k + 1))
    wd = digits + len(str(abs(b))) + 5
    s1 = eval_S(k, pair[0], wd).value.value
    s2 = eval_S(k, pair[1], wd).value.value
    with workdps(wd):
        diff = a * s1 + b * s2 - from_fraction(V)
        res = float(mpmath.log10(abs(diff))) if diff else -float(wd)
    if res > -(digits - 5):
        raise VerificationError(f"identity at k={k}, pair {pair} fails: residual 1e{res:.1f}")
    zeta = a * approx_eq8_rational(k, pair[0]) + b * approx_eq8_rational(k, pair[1]) == V
    return TwoTermIdentity(k, pair, a, b, V, res, zeta)


def gosper_closed(digits: int):
    """The closed form of S(3, 2/7) in radicals and Gamma(3/4)."""
    with workdps(digits):
        s2 = mpmath.sqrt(2)
        q7 = mpmath.root(7, 4)
        g = gamma_three_quarters(digits + 10).value
        poly = 301 + 210 * s2 * q7 + 120 * mpmath.sqrt(7) + 90 * s2 * q7**3
        return mpmath.mpf(-1) / 240 + poly / 320 * mpmath.pi**2 / g**8


def gosper_check(digits: int):
    """|S(3, 2/7) - closed form| at ``digits``."""
    s = eval_S(3, Fraction(2, 7), digits).value.value
    with workdps(digits):
        return abs(s - gosper_closed(digits))
