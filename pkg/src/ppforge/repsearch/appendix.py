"""Checks of the published representation corpus and its in-text displays."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from ..kernel.numeric import HiReal, workdps
from ..kernel.primes import smallest_prime_with_digits
from .lattice import canonical_vector
from .search import (
    ValueProvider,
    approx_terms,
    approx_value,
    default_values,
    format_approx,
    gcd_report,
    pair_values,
    residual,
    zeta_value,
)

APPENDIX_DIGITS = 80


@dataclass(frozen=True)
class RowCheck:
    line: int
    P: int
    k1: int
    k2: int
    vector: tuple[int, ...]
    residual_log10: int
    zeta_value: Fraction
    zeta_exact: bool
    approx_printed: str
    approx_computed: str
    rediscovered: bool
    gcd_report: dict

    @property
    def approx_match(self) -> bool:
        return self.approx_printed == self.approx_computed

    def passed(self, digits: int = APPENDIX_DIGITS) -> bool:
        return self.zeta_exact and self.residual_log10 <= -(digits // 2) and self.approx_match


@dataclass(frozen=True)
class InTextErratum:
    P: int
    location: str
    printed: str
    resolved: str
    evidence: str


@dataclass
class AppendixReport:
    digits: int
    rows: list[RowCheck] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)
    errata: list[InTextErratum] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed(self.digits) for r in self.rows)

    @property
    def ok(self) -> bool:
        return not self.errors and self.passed == len(self.rows)

    def summary(self) -> dict:
        return {
            "rows": len(self.rows),
            "passed": self.passed,
            "zeta_exact": sum(r.zeta_exact for r in self.rows),
            "approx_match": sum(r.approx_match for r in self.rows),
            "rediscovered": sum(r.rediscovered for r in self.rows),
            "coprime": sum(r.gcd_report["coprime"] for r in self.rows),
            "parse_errors": len(self.errors),
            "errata": len(self.errata),
        }


def check_row(row, digits: int = APPENDIX_DIGITS, values: ValueProvider = default_values) -> RowCheck:
    vec = tuple(row.vector)
    zv = zeta_value(row.k1, row.k2, vec)
    res = residual(row.P, row.k1, row.k2, vec, digits, values)
    computed = format_approx(approx_terms(row.k1, row.k2, vec))
    return RowCheck(
        line=getattr(row, "line", 0),
        P=row.P,
        k1=row.k1,
        k2=row.k2,
        vector=vec,
        residual_log10=res,
        zeta_value=zv,
        zeta_exact=zv == row.P,
        approx_printed=row.approx_text,
        approx_computed=computed,
        rediscovered=canonical_vector(row.P, row.k1, row.k2) == vec,
        gcd_report=gcd_report(vec),
    )


def _relation_residual(P, k1, k2, vec, digits, values) -> float:
    with workdps(digits):
        vals = pair_values(P, k1, k2, digits, values)
        total = mpmath.fsum(c * (v.value if isinstance(v, HiReal) else v) for c, v in zip(vec, vals))
    return float(total)


def in_text_errata(values: ValueProvider = default_values, digits: int = 40) -> list[InTextErratum]:
    """Resolve the displays for 7 and 31 that disagree with their raw rows."""
    out = []
    # 7: the display labels the sums S(5, .) and prints 4578525/(84 pi^8)
    raw7 = (-1, -228, 58368, 33, 33792)
    (u1, e1), _ = approx_terms(7, 9, raw7)
    wrong = _relation_residual(7, 5, 7, raw7, digits, values)
    out.append(
        InTextErratum(
            7,
            "worked example",
            "7 = -228 S(5,1) + 58368 S(5,4) + 33 S(7,1) + 33792 S(7,4); 7 ~ 4578525/(84 pi^8) + 95893875/(8 pi^10)",
            f"pair (7, 9); first term {u1}/pi^{e1}",
            f"vector at (5, 7) leaves {wrong:.6g}; the 84 and the sign do not follow from u = (a + b/4^8) 7!",
        )
    )
    # 31: every sign of the display is flipped relative to the raw row
    shown = (-1, -504, -32256, 64, -16384)
    raw = (-1, 504, 32256, -64, 16384)
    r_shown = _relation_residual(31, 5, 7, shown, digits, values)
    r_raw = residual(31, 5, 7, raw, digits, values)
    out.append(
        InTextErratum(
            31,
            "two-k display",
            "31 = -504 S(5,1) - 32256 S(5,4) + 64 S(7,1) - 2^14 S(7,4)",
            "31 = 504 S(5,1) + 32256 S(5,4) - 64 S(7,1) + 2^14 S(7,4)",
            f"displayed signs leave {r_shown:.6g}; raw row residual 1e{r_raw}",
        )
    )
    return out


def verify_appendix(
    rows: Iterable,
    digits: int = APPENDIX_DIGITS,
    values: ValueProvider = default_values,
    errors: Sequence[tuple[int, str]] = (),
) -> AppendixReport:
    """Residual, zeta-exact and approximation checks for every parsed row."""
    report = AppendixReport(digits, errors=list(errors))
    for row in rows:
        report.rows.append(check_row(row, digits, values))
    report.errata = in_text_errata(values)
    return report


# the "m = 18" example as printed
EIGHTEEN_LABEL = "10^18 + 3"
EIGHTEEN_DECIMAL = "1000000676938336801.2703"
EIGHTEEN_VECTOR = (-1, 5937369506, -6225783167123456, -6025884, 101097557458944)
EIGHTEEN_RATIONALS = (
    Fraction(-67943139037162110976, 825),
    Fraction(518365013406083, 6600),
    Fraction(248914919490662170624, 1365),
    Fraction(-118691882844287, 10920),
)
EIGHTEEN_APPROX = "-5778009767428887783353934375/8/Pi^20+1246249957994342793434971153125/8/Pi^24"


@dataclass(frozen=True)
class EighteenDigitReport:
    target: int
    rational_sum: Fraction
    vector: tuple[int, ...]
    printed_vector_residual: float
    approx_text: str
    approx_matches_printed: bool
    approx_value: HiReal
    decimal_shift_match: bool
    findings: tuple[str, ...]


def eighteen_digit_case(values: ValueProvider = default_values, digits: int = 80) -> EighteenDigitReport:
    """Evaluate the printed data exactly and locate the consistent target."""
    total = sum(EIGHTEEN_RATIONALS, Fraction(0))
    target = smallest_prime_with_digits(18)
    vec = canonical_vector(target, 19, 23)
    text = format_approx(approx_terms(19, 23, vec))
    val = approx_value(approx_terms(19, 23, vec), 30)
    printed_res = _relation_residual(target, 19, 23, EIGHTEEN_VECTOR, digits, values)
    digits_only = EIGHTEEN_DECIMAL.replace(".", "")
    shift = str(val).replace(".", "").startswith(digits_only[:22])
    findings = [
        f"printed rationals sum to {total}, which is {'' if total == target else 'not '}the smallest 18-digit prime",
        f"label {EIGHTEEN_LABEL} names a 19-digit number; the data represent {target}",
        f"printed decimal {EIGHTEEN_DECIMAL} is the approximation {val} with the point shifted one place",
        f"printed coefficient signs give {printed_res:.6g}, i.e. -2P: all four signs are flipped",
    ]
    return EighteenDigitReport(
        target=target,
        rational_sum=total,
        vector=vec,
        printed_vector_residual=printed_res,
        approx_text=text,
        approx_matches_printed=text == EIGHTEEN_APPROX,
        approx_value=val,
        decimal_shift_match=shift,
        findings=tuple(findings),
    )
