"""Closed forms S(k, r) = A pi^((k+1)/2) / Gamma(3/4)^(2(k+1)) + B for r = 1, 2, 4.

The table is kept twice: as printed in the source, and with the entries
that numeric validation contradicts replaced.  B always equals
B_(k+1) / (2(k+1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ..kernel.numeric import from_fraction, gamma_three_quarters, to_fraction, workdps
from ..kernel.sequences import bernoulli
from .lambert import eval_S

F = Fraction

TABLE_KS = (3, 5, 7, 9, 11, 13)
TABLE_RS = (1, 2, 4)


@dataclass(frozen=True)
class ClosedForm:
    k: int
    r: int
    A: Fraction
    B: Fraction

    @property
    def pi_power(self) -> Fraction:
        return Fraction(self.k + 1, 2)

    @property
    def gamma_power(self) -> int:
        return 2 * (self.k + 1)

    def evaluate(self, digits: int):
        """Numeric value as an mpf, carried at ``digits`` plus guard digits."""
        with workdps(digits):
            g = gamma_three_quarters(digits + 10).value
            h = (self.k + 1) // 2
            return from_fraction(self.A) * mpmath.pi**h / g ** self.gamma_power + from_fraction(self.B)

    def text(self) -> str:
        if self.A == 0:
            return str(self.B)
        sign = "+" if self.B >= 0 else "-"
        return (
            f"{self.A}*pi^{self.pi_power}/Gamma(3/4)^{self.gamma_power} {sign} {abs(self.B)}"
        )


# (A, B, approximation (u, pi exponent)) as printed
PRINTED: dict[tuple[int, int], tuple[Fraction, Fraction, tuple[Fraction, int]]] = {
    (3, 1): (F(11, 320), F(-1, 240), (F(6), 4)),
    (3, 2): (F(1, 320), F(-1, 240), (F(3, 8), 4)),
    (3, 4): (F(11, 5120), F(-1, 240), (F(3, 128), 4)),
    (5, 1): (F(3, 64), F(1, 504), (F(120), 6)),
    (5, 2): (F(0), F(1, 504), (F(15, 8), 6)),
    (5, 4): (F(-3, 2**12), F(1, 504), (F(15, 2**9), 6)),
    (7, 1): (F(363, 2**12 * 5), F(-1, 480), (F(5040), 8)),
    (7, 2): (F(3, 2**12 * 5), F(-1, 480), (F(315, 2**4), 8)),
    (7, 4): (F(363, 2**17 * 5), F(-1, 480), (F(315, 2**12), 6)),
    (9, 1): (F(189, 2**8), F(1, 264), (F(362880), 10)),
    (9, 2): (F(0), F(1, 264), (F(2835, 8), 10)),
    (9, 4): (F(189, 2**18), F(1, 264), (F(2835, 2**13), 10)),
    (11, 1): (F(393309, 66560), F(-691, 65520), (F(39916800), 12)),
    (11, 2): (F(189, 66560), F(-691, 65520), (F(155925, 2**4), 12)),
    (11, 4): (F(393309, 2**22 * 5 * 13), F(-691, 65520), (F(155925, 2**16), 12)),
    (13, 1): (F(68607, 2**10), F(-1, 24), (F(6227020800), 14)),
    (13, 2): (F(0), F(1, 24), (F(6081075, 2**4), 14)),
    (13, 4): (F(68607, 2**24), F(1, 24), (F(6081075, 2**18), 14)),
}

# Entries replaced after numeric validation: key -> {field: corrected value}
CORRECTIONS: dict[tuple[int, int], dict[str, object]] = {
    (7, 1): {"A": F(363, 2**9 * 5)},
    (7, 2): {"A": F(3, 2**9 * 5)},
    (7, 4): {"approx": (F(315, 2**12), 8)},
    (9, 4): {"A": F(-189, 2**18)},
    (13, 1): {"B": F(1, 24)},
    (13, 4): {"A": F(-68607, 2**24)},
}


def _check_key(k: int, r: int):
    if k not in TABLE_KS or r not in TABLE_RS:
        raise KeyError(f"S({k},{r}) is outside the closed-form table")


def printed_form(k: int, r: int) -> ClosedForm:
    _check_key(k, r)
    A, B, _ = PRINTED[(k, r)]
    return ClosedForm(k, r, A, B)


def closed_form(k: int, r: int) -> ClosedForm:
    """The validated closed form of S(k, r)."""
    _check_key(k, r)
    A, B, _ = PRINTED[(k, r)]
    fix = CORRECTIONS.get((k, r), {})
    return ClosedForm(k, r, fix.get("A", A), fix.get("B", B))


def printed_approximation(k: int, r: int) -> tuple[Fraction, int]:
    _check_key(k, r)
    return PRINTED[(k, r)][2]


def approximation(k: int, r: int) -> tuple[Fraction, int]:
    _check_key(k, r)
    return CORRECTIONS.get((k, r), {}).get("approx", PRINTED[(k, r)][2])


def constant_term(k: int) -> Fraction:
    return bernoulli(k + 1) / (2 * (k + 1))


def derive_coefficient(k: int, r: int, digits: int = 60) -> Fraction:
    """A recovered numerically from S(k, r), B and Gamma(3/4)."""
    s = eval_S(k, r, digits).value.value
    B = constant_term(k)
    with workdps(digits):
        g = gamma_three_quarters(digits + 10).value
        a = (s - from_fraction(B)) * g ** (2 * (k + 1)) / mpmath.pi ** ((k + 1) // 2)
        if abs(a) < mpmath.mpf(10) ** (-digits // 2):
            return Fraction(0)
        q = to_fraction(a).limit_denominator(10**15)
        if abs(from_fraction(q) - a) > mpmath.mpf(10) ** (-digits // 2) * abs(a):
            raise ArithmeticError(f"A for S({k},{r}) is not a small rational")
    return q


@dataclass(frozen=True)
class Erratum:
    k: int
    r: int
    field: str
    printed: str
    corrected: str
    evidence: str


@dataclass(frozen=True)
class TableReport:
    rows: tuple[tuple[int, int, float, float], ...]  # k, r, log10 residual printed, corrected
    errata: tuple[Erratum, ...]

    @property
    def all_corrected_pass(self) -> bool:
        return all(c <= -45 for _, _, _, c in self.rows)

    def errata_text(self) -> str:
        lines = ["# closed-form table errata (numeric validation at 50 digits)"]
        for e in self.errata:
            lines.append(
                f"S({e.k},{e.r}) {e.field}: printed {e.printed} -> {e.corrected} [{e.evidence}]"
            )
        return "\n".join(lines) + "\n"


def _log10_abs(x) -> float:
    return float(mpmath.log10(abs(x))) if x else float("-inf")


def validate_table(digits: int = 50) -> TableReport:
    """Check printed and corrected forms against eval_S; list the errata."""
    rows = []
    errata = []
    for k in TABLE_KS:
        for r in TABLE_RS:
            s = eval_S(k, r, digits + 10).value.value
            with workdps(digits + 10):
                res_p = _log10_abs(printed_form(k, r).evaluate(digits + 10) - s)
                res_c = _log10_abs(closed_form(k, r).evaluate(digits + 10) - s)
            rows.append((k, r, res_p, res_c))
            printed = printed_form(k, r)
            fixed = closed_form(k, r)
            if printed.A != fixed.A:
                errata.append(
                    Erratum(k, r, "A", str(printed.A), str(fixed.A),
                            f"printed residual 1e{res_p:.0f}, corrected 1e{res_c:.0f}")
                )
            if printed.B != fixed.B:
                errata.append(
                    Erratum(k, r, "B", str(printed.B), str(fixed.B),
                            f"B_{k + 1}/{2 * (k + 1)} = {constant_term(k)}; printed residual 1e{res_p:.0f}")
                )
            pu, pe = printed_approximation(k, r)
            cu, ce = approximation(k, r)
            if (pu, pe) != (cu, ce):
                errata.append(
                    Erratum(k, r, "approximation", f"{pu}/pi^{pe}", f"{cu}/pi^{ce}",
                            f"k!/r^(k+1) = {cu} needs pi^(k+1) = pi^{k + 1}")
                )
    return TableReport(tuple(rows), tuple(errata))
