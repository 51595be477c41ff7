"""Recognizing constants: minimal polynomials and a small quotient dictionary."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from ..kernel.numeric import HiReal, gamma_three_quarters, workdps
from ..relation import InconclusiveSearch, RelationProblem, search_relation


@dataclass(frozen=True)
class Recognition:
    poly: tuple[int, ...] | None  # ascending coefficients, primitive, leading > 0
    form: str
    residual_log10: float
    verified_digits: int

    @property
    def degree(self) -> int | None:
        return None if self.poly is None else len(self.poly) - 1


def poly_text(poly: tuple[int, ...], var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``x^4 - 32*x^2 + 128``."""
    parts = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _normalize_poly(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    g = 0
    for v in c:
        g = math.gcd(g, v)
    c = [v // g for v in c]
    if c[-1] < 0:
        c = [-v for v in c]
    return tuple(c)


def _poly_residual(poly, x) -> float:
    terms = [p * x**i for i, p in enumerate(poly)]
    scale = max(abs(t) for t in terms)
    total = mpmath.fsum(terms)
    if total == 0:
        return float("-inf")
    return float(mpmath.log10(abs(total) / scale))


def _search_powers(x, digits: int, degree: int, bound: int, step: int = 1):
    vals = [HiReal(x ** (step * i), digits) for i in range(degree + 1)]
    out = search_relation(RelationProblem(vals, digits, bound))
    if out.status != "found":
        return None
    coeffs = out.result.coeffs
    poly = [0] * (step * degree + 1)
    for i, c in enumerate(coeffs):
        poly[step * i] = c
    return _normalize_poly(poly)


def minimal_polynomial(
    x: HiReal,
    max_degree: int = 8,
    coeff_bound: int = 10**4,
    recompute: Callable[[int], HiReal] | None = None,
) -> Recognition | None:
    """Lowest-degree integer polynomial vanishing at ``x``.

    The search runs at half the known precision and a candidate is kept
    only if it also vanishes at the full (doubled) precision, or at
    ``recompute(2 * digits)`` when given.
    """
    full = x.digits
    search = full // 2
    if recompute is not None:
        search = full
    if search < 20 + max_degree * math.log10(max(coeff_bound, 2)):
        raise ValueError(f"{x.digits} digits are too few for degree {max_degree}")
    with workdps(full):
        xv = x.value
        check = recompute(2 * search).value if recompute is not None else xv
        check_digits = 2 * search if recompute is not None else full
        for deg in range(1, max_degree + 1):
            cands = []
            if deg % 2 == 0:
                cands.append(lambda d=deg: _search_powers(xv, search, d // 2, coeff_bound, step=2))
            cands.append(lambda d=deg: _search_powers(xv, search, d, coeff_bound))
            for make in cands:
                try:
                    poly = make()
                except InconclusiveSearch:
                    poly = None
                if poly is None or len(poly) - 1 != deg:
                    continue
                with workdps(check_digits):
                    res = _poly_residual(poly, check)
                if res <= -1.5 * search:
                    return Recognition(poly, f"root of {poly_text(poly)}", res, check_digits)
    return None


def _dictionary(digits: int):
    with workdps(digits):
        s2 = mpmath.sqrt(2)
        s7 = mpmath.sqrt(7)
        q2 = mpmath.root(2, 4)
        q7 = mpmath.root(7, 4)
        radicals = [
            ("sqrt(2)", s2),
            ("sqrt(7)", s7),
            ("2^(1/4)", q2),
            ("7^(1/4)", q7),
            ("sqrt(2)*7^(1/4)", s2 * q7),
            ("sqrt(14)", s2 * s7),
            ("1", mpmath.mpf(1)),
        ]
        g = gamma_three_quarters(digits + 5).value
        out = []
        for k in range(-8, 9):
            for name, r in radicals:
                if k == 0 and name == "1":
                    continue
                label = name if k == 0 else (f"Gamma(3/4)^{k}" if name == "1" else f"{name}*Gamma(3/4)^{k}")
                out.append((label, r * g**k))
        return out


def recognize_constant(
    x: HiReal,
    max_degree: int = 8,
    coeff_bound: int = 10**4,
    recompute: Callable[[int], HiReal] | None = None,
) -> Recognition | None:
    """Minimal polynomial of ``x``, else a rational multiple of a dictionary entry."""
    rec = minimal_polynomial(x, max_degree, coeff_bound, recompute)
    if rec is not None:
        return rec
    search = x.digits // 2
    for label, q in _dictionary(x.digits):
        with workdps(x.digits):
            y = x.value / q
            vals = [HiReal(mpmath.mpf(1), search), HiReal(y, search)]
        out = search_relation(RelationProblem(vals, search, coeff_bound))
        if out.status != "found":
            continue
        a, b = out.result.coeffs
        if b == 0:
            continue
        ratio = Fraction(-a, b)
        with workdps(x.digits):
            diff = x.value - mpmath.mpf(ratio.numerator) / ratio.denominator * q
            res = float(mpmath.log10(abs(diff) / abs(x.value))) if diff else float("-inf")
        if res <= -1.5 * search:
            return Recognition(None, f"{ratio}*{label}", res, x.digits)
    return None
