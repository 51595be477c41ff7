"""Search for 4-term representations P = a S(k1,1) + b S(k1,4) + c S(k2,1) + d S(k2,4)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath

from ..kernel.numeric import HiReal, from_fraction, workdps
from ..kernel.primes import is_probable_prime
from ..relation import RelationProblem, search_relation, verify_relation
from ..series import DIGITS_CAP, approx_eq8_rational, eval_S
from .lattice import Vector, canonical_vector, in_lattice

MODES = ("first-found", "all-pairs")
ORDERS = ("sum", "lex")
DEFAULT_COEFF_DIGITS = 8
APPROX_DIGITS = 25
ESCALATION = 1.5

# (k, r, digits) -> HiReal
ValueProvider = Callable[[int, int, int], HiReal]


def default_values(k: int, r: int, digits: int) -> HiReal:
    return eval_S(k, r, digits).value


class RepresentationNotFound(LookupError):
    def __init__(self, P: int, pairs: Sequence[tuple[int, int]], digits: int):
        super().__init__(f"no representation of {P} over {len(pairs)} pairs at {digits} digits")
        self.P = P
        self.pairs = tuple(pairs)
        self.digits = digits


class PrecisionExhausted(ArithmeticError):
    """The relation search stayed inconclusive up to the digits cap."""


@dataclass(frozen=True)
class RepQuery:
    P: int
    k_max: int = 13
    digits: int | None = None
    coeff_bound: int | None = None
    mode: str = "first-found"
    pairs: tuple[tuple[int, int], ...] | None = None
    digits_cap: int = 2000
    order: str = "sum"

    def __post_init__(self):
        if self.P < 2:
            raise ValueError("P must be >= 2")
        if self.k_max < 5 or self.k_max % 2 == 0:
            raise ValueError("k_max must be odd and >= 5")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.coeff_bound is not None and self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")
        if self.pairs is not None:
            pairs = tuple((int(a), int(b)) for a, b in self.pairs)
            for k1, k2 in pairs:
                if not (3 <= k1 < k2 <= self.k_max and k1 % 2 and k2 % 2):
                    raise ValueError(f"bad pair ({k1}, {k2})")
            object.__setattr__(self, "pairs", pairs)
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}")
        if self.digits_cap > DIGITS_CAP:
            raise ValueError(f"digits_cap above {DIGITS_CAP}")

    @property
    def bound(self) -> int:
        if self.coeff_bound is not None:
            return self.coeff_bound
        # coefficients grow roughly like P
        return 10 ** max(DEFAULT_COEFF_DIGITS, len(str(self.P)) + 4)

    def start_digits(self) -> int:
        """40 + 2 ceil(log10 P) + 10 (expected coefficient digits)."""
        if self.digits is not None:
            return self.digits
        coeff_digits = max(1, math.ceil(math.log10(self.bound)))
        return 40 + 2 * len(str(self.P)) + 10 * coeff_digits

    def scan(self) -> tuple[tuple[int, int], ...]:
        return self.pairs if self.pairs is not None else pair_order(self.k_max, self.order)


def pair_order(k_max: int, order: str = "sum") -> tuple[tuple[int, int], ...]:
    """Odd pairs 3 <= k1 < k2 <= k_max by increasing k1 + k2, then k1.

    ``order="lex"`` sorts by (k1, k2) instead.
    """
    ks = range(3, k_max + 1, 2)
    pairs = [(a, b) for a in ks for b in ks if a < b]
    if order == "lex":
        return tuple(pairs)
    return tuple(sorted(pairs, key=lambda p: (p[0] + p[1], p[0])))


@dataclass(frozen=True)
class Representation:
    P: int
    k1: int
    k2: int
    coeffs: Vector
    approx: tuple[tuple[Fraction, int], ...]
    approx_value: HiReal
    zeta_exact: bool
    residual_log10: int
    gcd_report: dict
    digits: int
    is_prime: bool
    notes: tuple = field(default=(), compare=False)

    @property
    def approx_text(self) -> str:
        return format_approx(self.approx)


def approx_terms(k1: int, k2: int, coeffs: Sequence[int]) -> tuple[tuple[Fraction, int], ...]:
    """(u, pi exponent) with u = (a + b / 4^(k+1)) k! for each k."""
    _, a, b, c, d = coeffs
    u1 = (a + Fraction(b, 4 ** (k1 + 1))) * math.factorial(k1)
    u2 = (c + Fraction(d, 4 ** (k2 + 1))) * math.factorial(k2)
    return (u1, k1 + 1), (u2, k2 + 1)


def format_approx(terms: Iterable[tuple[Fraction, int]]) -> str:
    """Appendix notation, e.g. ``61425/8/Pi^6+562275/4/Pi^8``."""
    out = ""
    for i, (u, e) in enumerate(terms):
        sign = "-" if u < 0 else ("+" if i else "")
        u = abs(u)
        body = str(u.numerator) if u.denominator == 1 else f"{u.numerator}/{u.denominator}"
        out += f"{sign}{body}/Pi^{e}"
    return out


def approx_value(terms, digits: int = APPROX_DIGITS) -> HiReal:
    with workdps(digits):
        total = mpmath.fsum(from_fraction(u) / mpmath.pi**e for u, e in terms)
    return HiReal(total, digits)


def zeta_value(k1: int, k2: int, coeffs: Sequence[int]) -> Fraction:
    """a R(k1,1) + b R(k1,4) + c R(k2,1) + d R(k2,4), R = k! zeta(k+1) / (r pi)^(k+1)."""
    _, a, b, c, d = coeffs
    return (
        a * approx_eq8_rational(k1, 1)
        + b * approx_eq8_rational(k1, 4)
        + c * approx_eq8_rational(k2, 1)
        + d * approx_eq8_rational(k2, 4)
    )


def zeta_exact_check(rep: Representation) -> Fraction:
    """The exact zeta-rational sum; it certifies ``rep`` when it equals P."""
    return zeta_value(rep.k1, rep.k2, rep.coeffs)


def approx_expression(rep: Representation) -> tuple[tuple[tuple[Fraction, int], ...], HiReal]:
    return rep.approx, approx_value(rep.approx)


def gcd_report(coeffs: Sequence[int]) -> dict:
    names = "abcd"
    vals = coeffs[1:]
    pairs = {}
    for i in range(4):
        for j in range(i + 1, 4):
            pairs[names[i] + names[j]] = math.gcd(vals[i], vals[j])
    return {"pairwise": pairs, "coprime": all(g == 1 for g in pairs.values())}


def pair_values(P: int, k1: int, k2: int, digits: int, values: ValueProvider) -> list:
    return [P] + [values(k, r, digits) for k in (k1, k2) for r in (1, 4)]


def residual(P: int, k1: int, k2: int, coeffs, digits: int, values: ValueProvider) -> int:
    """ceil(log10 |e P + a S(k1,1) + ...|) with values evaluated at ``digits``."""
    res = verify_relation(coeffs, pair_values(P, k1, k2, digits, values), digits)
    return -digits if res == float("-inf") else math.ceil(res)


def _cross_check(P, k1, k2, digits, cap, bound, values) -> tuple[str, int]:
    """PSLQ on the five values, escalating precision until it is conclusive.

    Returns (status, digits used).  A found relation must lie in the exact
    paired lattice; anything else would be a relation outside the known
    structure and is reported as ``outside``.
    """
    while True:
        vals = tuple(pair_values(P, k1, k2, digits, values))
        problem = RelationProblem(vals, digits, bound)
        recompute = lambda d: pair_values(P, k1, k2, d, values)  # noqa: E731
        out = search_relation(problem, recompute)
        if out.status == "found":
            vec = out.result.coeffs
            return ("lattice" if in_lattice(vec, P, k1, k2) else "outside"), digits
        if out.status == "excluded":
            return "excluded", digits
        nxt = math.ceil(digits * ESCALATION)
        if digits >= cap:
            raise PrecisionExhausted(f"relation search for {P} at ({k1}, {k2}) inconclusive at {digits} digits")
        digits = min(nxt, cap)


def try_pair(P: int, k1: int, k2: int, digits: int, bound: int, cap: int, values: ValueProvider) -> Representation | None:
    """Representation at (k1, k2) passing both gates, or None."""
    vec = canonical_vector(P, k1, k2)
    if vec is None or max(abs(x) for x in vec) > bound:
        return None
    status, used = _cross_check(P, k1, k2, digits, cap, bound, values)
    if status == "outside":
        return None
    res = residual(P, k1, k2, vec, used, values)
    if res > -(used / 2):
        return None
    zeta_ok = zeta_value(k1, k2, vec) == P
    if not zeta_ok:
        return None
    terms = approx_terms(k1, k2, vec)
    return Representation(
        P=P,
        k1=k1,
        k2=k2,
        coeffs=vec,
        approx=terms,
        approx_value=approx_value(terms),
        zeta_exact=zeta_ok,
        residual_log10=res,
        gcd_report=gcd_report(vec),
        digits=used,
        is_prime=is_probable_prime(P),
        notes=(f"pslq: {status}",),
    )


def find_representation(q: RepQuery, values: ValueProvider = default_values) -> list[Representation]:
    """Scan pairs and return the first verified representation, or all of them."""
    digits = q.start_digits()
    if digits > q.digits_cap:
        raise PrecisionExhausted(f"{digits} digits needed, cap is {q.digits_cap}")
    found = []
    for k1, k2 in q.scan():
        rep = try_pair(q.P, k1, k2, digits, q.bound, q.digits_cap, values)
        if rep is None:
            continue
        found.append(rep)
        if q.mode == "first-found":
            break
    if not found:
        raise RepresentationNotFound(q.P, q.scan(), digits)
    return found


@dataclass(frozen=True)
class BatchOutcome:
    target: int
    representation: Representation | None
    error: str | None


def batch_search(targets: Iterable[int], template: RepQuery, values: ValueProvider = default_values) -> list[BatchOutcome]:
    """One representation per target; failures are recorded, not raised."""
    memo: dict = {}

    def shared(k, r, digits):
        key = (k, r, digits)
        if key not in memo:
            memo[key] = values(k, r, digits)
        return memo[key]

    out = []
    for P in targets:
        try:
            q = RepQuery(
                P,
                template.k_max,
                template.digits,
                template.coeff_bound,
                "first-found",
                template.pairs,
                template.digits_cap,
                template.order,
            )
            rep = find_representation(q, shared)[0]
            out.append(BatchOutcome(P, rep, None))
        except (RepresentationNotFound, PrecisionExhausted, ValueError) as exc:
            out.append(BatchOutcome(P, None, str(exc)))
    return out
