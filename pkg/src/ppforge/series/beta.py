"""Dirichlet beta and the secant-number approximations it explains."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..kernel.numeric import HiReal, significant_agreement, workdps
from ..kernel.sequences import euler_secant


def beta_closed_odd(s: int) -> Fraction:
    """Q with beta(s) = Q pi^s for odd s = 2n + 1: Q = E_2n / (4^(n+1) (2n)!)."""
    if s < 1 or s % 2 == 0:
        raise ValueError("s must be odd and positive")
    n = (s - 1) // 2
    return Fraction(euler_secant(2 * n), 4 ** (n + 1) * math.factorial(2 * n))


def beta_numeric(s, digits: int) -> HiReal:
    """beta(s) = sum (-1)^n / (2n+1)^s by Cohen-Villegas-Zagier acceleration."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with workdps(digits + 10):
        s = mpmath.mpf(s) if not isinstance(s, Fraction) else mpmath.mpf(s.numerator) / s.denominator
        if s <= 0:
            raise ValueError("s must be positive")
        n = int(1.31 * (digits + 10)) + 10
        d = (3 + mpmath.sqrt(8)) ** n
        d = (d + 1 / d) / 2
        b = mpmath.mpf(-1)
        c = -d
        total = mpmath.mpf(0)
        for k in range(n):
            c = b - c
            total += c / mpmath.mpf(2 * k + 1) ** s
            b = b * (k + n) * (k - n) / ((k + mpmath.mpf(0.5)) * (k + 1))
        return HiReal(total / d, digits)


@dataclass(frozen=True)
class EulerApprox:
    n2: int
    exact: int
    numerator: int  # 2^(n2+2) n2!
    pi_exp: int
    approx: HiReal
    agree: int

    @property
    def exact_digits(self) -> int:
        return len(str(abs(self.exact)))

    def expression(self) -> str:
        return f"2^{self.n2 + 2}*{self.n2}!/pi^{self.pi_exp}"


def euler_approx_report(n2: int) -> EulerApprox:
    """Compare E_n2 with 2^(n2+2) n2! / pi^(n2+1)."""
    if n2 < 2 or n2 % 2:
        raise ValueError("n2 must be even and >= 2")
    exact = euler_secant(n2)
    num = 2 ** (n2 + 2) * math.factorial(n2)
    digits = len(str(exact)) + 20
    with workdps(digits):
        value = mpmath.mpf(num) / mpmath.pi ** (n2 + 1)
    agree = significant_agreement(exact, value, cap=len(str(exact)))
    return EulerApprox(n2, exact, num, n2 + 1, HiReal(value, digits), agree)
