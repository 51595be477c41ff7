"""``ppforge`` command line."""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from fractions import Fraction
from pathlib import Path

import mpmath

from .. import __version__
from ..asymptotics import FitError, agreement_digits, fit_sequence
from ..egf import SNAPSHOTS, ExprSyntaxError, PoleAtOrigin, egf_terms, select
from ..kernel.numeric import format_decimal, significant_agreement, workdps
from ..kernel.primes import is_probable_prime, primes_below, trial_factor
from ..repsearch import (
    PrecisionExhausted,
    RepQuery,
    RepresentationNotFound,
    batch_search,
    default_values,
    eighteen_digit_case,
    find_representation,
    verify_appendix,
    zeta_exact_check,
)
from ..series import (
    TABLE_KS,
    TABLE_RS,
    VerificationError,
    approx_eq3,
    approx_eq8_rational,
    beta_closed_odd,
    beta_numeric,
    closed_form,
    euler_approx_report,
    gosper_check,
    ramanujan_value,
    two_term_identity,
    validate_table,
)
from .appendix import AppendixParseError, read_appendix
from .cache import SeriesCache
from .config import Config, ConfigError, default_cache_path, load_config

OK, NOT_FOUND, VERIFY_FAILED, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_r(text: str) -> Fraction:
    try:
        r = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--r must be a positive rational, got {text!r}") from None
    if r <= 0:
        raise UsageError("--r must be positive")
    return r


class Context:
    def __init__(self, args, config: Config):
        self.args = args
        self.config = config
        self.json = args.json or config.output_format == "json"
        self.cache = None
        if not args.no_cache:
            path = config.cache_path or default_cache_path()
            try:
                Path(path).parent.mkdir(parents=True, exist_ok=True)
                self.cache = SeriesCache(path)
            except OSError as exc:
                warnings.warn(f"caching disabled: {exc}", stacklevel=2)

    @property
    def digits(self) -> int:
        d = self.args.digits if getattr(self.args, "digits", None) else self.config.default_digits
        if d > self.config.digits_cap:
            raise UsageError(f"--digits {d} exceeds digits_cap {self.config.digits_cap}")
        if d < 10:
            raise UsageError("--digits must be >= 10")
        return d

    def values(self, k, r, digits):
        if self.cache is not None:
            return self.cache.values(k, r, digits)
        return default_values(k, r, digits)


# -- subcommands -----------------------------------------------------------


def cmd_series(ctx: Context):
    a = ctx.args
    if a.k is None:
        raise UsageError("series needs --k")
    r = _parse_r(a.r)
    digits = ctx.digits
    v = ctx.values(a.k, r, digits)
    out = {
        "command": "series",
        "k": a.k,
        "r": _frac(r),
        "digits": digits,
        "value": format_decimal(v.value, digits),
    }
    lines = [f"S({a.k},{_frac(r)}) = {out['value']}"]
    u, e = approx_eq3(a.k, r)
    with workdps(digits):
        approx = mpmath.mpf(u.numerator) / u.denominator / mpmath.pi**e
    out["approx_leading"] = {"u": _frac(u), "pi_exp": e, "value": format_decimal(approx, 20)}
    lines.append(f"  ~ {_frac(u)}/pi^{e} = {out['approx_leading']['value']}")
    if a.k % 2 and r.denominator == 1 and int(r) in TABLE_RS and a.k in TABLE_KS:
        cf = closed_form(a.k, int(r))
        res = cf.evaluate(digits + 5) - v.value
        out["closed_form"] = cf.text()
        lines.append(f"  closed form {cf.text()} (difference {mpmath.nstr(res, 3)})")
    if a.k % 2:
        q = approx_eq8_rational(a.k, r)
        out["approx_zeta"] = _frac(q)
        lines.append(f"  zeta-corrected approximation {_frac(q)}")
    return OK, out, lines


def _resolve_expr(text: str) -> tuple[str, str | None, str]:
    snap = SNAPSHOTS.get(text.upper()) if text else None
    if snap is not None:
        return snap.expression, snap.oeis_id, snap.parity
    return text, None, "all"


def cmd_egf(ctx: Context):
    a = ctx.args
    if not a.expr:
        raise UsageError("egf needs --expr")
    expr, oeis, parity = _resolve_expr(a.expr)
    n = a.n or 12
    if parity == "all":
        terms = egf_terms(expr, n)
    else:
        # catalogued sequences read only the even or odd positions
        terms = select(egf_terms(expr, 2 * n + 1), parity)[:n]
    text = [_frac(t) for t in terms]
    out = {
        "command": "egf",
        "expression": expr,
        "n": n,
        "terms": text,
        "integral": all(t.denominator == 1 for t in terms),
    }
    if oeis:
        out["oeis"] = oeis
        out["positions"] = parity
    return OK, out, [", ".join(text)]


def cmd_asym(ctx: Context):
    a = ctx.args
    if not a.expr:
        raise UsageError("asym needs --expr")
    expr, oeis, _ = _resolve_expr(a.expr)
    n = a.n or 240
    terms = egf_terms(expr, n)
    try:
        fit = fit_sequence(terms, a.stride, a.offset)
    except FitError as exc:
        return NOT_FOUND, {"command": "asym", "expression": expr, "error": str(exc)}, [f"no fit: {exc}"]
    out = {
        "command": "asym",
        "expression": expr,
        "c": _frac(fit.c),
        "s": fit.s,
        "t": fit.t,
        "d_decimal": format_decimal(fit.d.value, 30),
        "d_form": fit.d_form,
        "quality": fit.quality,
        "n_used": fit.n_used,
        "formula": fit.formula(),
        "signs": fit.signs,
    }
    if oeis:
        out["oeis"] = oeis
    lines = [
        f"a(n) ~ {fit.formula()}",
        f"  c = {out['c']}, s = {fit.s}, t = {fit.t}, d = {out['d_decimal']}",
        f"  d: {fit.d_form or 'not recognized'}",
        f"  agreement at n = {fit.n_used}: {fit.quality} digits; signs {fit.signs}",
    ]
    if a.at is not None:
        agree = agreement_digits(terms, fit, a.at)
        out["agreement"] = {"n": a.at, "digits": agree}
        lines.append(f"  agreement at n = {a.at}: {agree} digits")
    return OK, out, lines


def _rep_record(rep) -> dict:
    return {
        "P": str(rep.P),
        "k1": rep.k1,
        "k2": rep.k2,
        "coeffs": [str(c) for c in rep.coeffs],
        "approx": rep.approx_text,
        "approx_value": format_decimal(rep.approx_value.value, 25),
        "zeta_exact": rep.zeta_exact,
        "zeta_value": _frac(zeta_exact_check(rep)),
        "residual_log10": rep.residual_log10,
        "digits": rep.digits,
        "is_prime": rep.is_prime,
        "coprime": rep.gcd_report["coprime"],
    }


def _rep_lines(rep) -> list[str]:
    vec = ", ".join(str(c) for c in rep.coeffs)
    return [
        f"{rep.P}, {rep.k1}, {rep.k2}, [{vec}], {rep.approx_text}",
        f"  approximation = {format_decimal(rep.approx_value.value, 25)}",
        f"  residual 1e{rep.residual_log10} at {rep.digits} digits; zeta-exact {rep.zeta_exact}"
        f"; {'probable prime' if rep.is_prime else 'composite'}",
    ]


def _parse_pair(text):
    if text is None:
        return None
    try:
        k1, k2 = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("--k for represent takes a pair k1,k2") from None
    return ((k1, k2),)


def _query(ctx: Context, P: int, pairs=None) -> RepQuery:
    a = ctx.args
    bound = a.bound or ctx.config.coeff_bound_default or None
    k_max = a.kmax or ctx.config.k_max_default
    if pairs:
        k_max = max(k_max, max(k2 for _, k2 in pairs) | 1)
    try:
        return RepQuery(
            P,
            k_max=k_max,
            digits=a.digits,
            coeff_bound=bound,
            mode="all-pairs" if a.all_pairs else "first-found",
            pairs=pairs,
            digits_cap=ctx.config.digits_cap,
            order=ctx.config.scan_order,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_represent(ctx: Context):
    a = ctx.args
    if a.p is None:
        raise UsageError("represent needs --p")
    q = _query(ctx, a.p, _parse_pair(a.k))
    try:
        reps = find_representation(q, ctx.values)
    except RepresentationNotFound as exc:
        out = {"command": "represent", "P": str(a.p), "found": [], "error": str(exc), "pairs_scanned": len(exc.pairs)}
        return NOT_FOUND, out, [str(exc)]
    except PrecisionExhausted as exc:
        return NOT_FOUND, {"command": "represent", "P": str(a.p), "found": [], "error": str(exc)}, [str(exc)]
    out = {"command": "represent", "P": str(a.p), "found": [_rep_record(r) for r in reps]}
    lines = [line for r in reps for line in _rep_lines(r)]
    return OK, out, lines


def _targets(ctx: Context) -> list[int]:
    a = ctx.args
    if a.file:
        try:
            text = Path(a.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {a.file}: {exc.strerror}") from None
        out = []
        for i, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if line:
                try:
                    out.append(int(line))
                except ValueError:
                    raise UsageError(f"{a.file} line {i}: not an integer") from None
        return out
    if a.n:
        return primes_below(a.n)
    raise UsageError("batch needs --file or --n (primes below n)")


def cmd_batch(ctx: Context):
    targets = _targets(ctx)
    template = _query(ctx, 2)
    results = batch_search(targets, template, ctx.values)
    records, lines = [], []
    for res in results:
        if res.representation is not None:
            records.append({"target": str(res.target), "representation": _rep_record(res.representation)})
            lines.append(_rep_lines(res.representation)[0])
        else:
            records.append({"target": str(res.target), "error": res.error})
            lines.append(f"{res.target}: {res.error}")
    found = sum(r.representation is not None for r in results)
    lines.append(f"represented {found}/{len(results)}")
    out = {"command": "batch", "targets": len(results), "represented": found, "results": records}
    return (OK if found == len(results) else NOT_FOUND), out, lines


def cmd_identities(ctx: Context):
    digits = ctx.args.digits or 40
    cases = [(3, (1, 4)), (3, (1, 2)), (11, (1, 4)), (19, (1, 4))]
    if ctx.args.k is not None:
        cases = [(int(ctx.args.k), (1, 4))]
    records, lines = [], []
    code = OK
    for k, pair in cases:
        try:
            ident = two_term_identity(k, pair, digits)
        except VerificationError as exc:
            records.append({"k": k, "pair": list(pair), "error": str(exc)})
            lines.append(str(exc))
            code = VERIFY_FAILED
            continue
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rec = {
            "k": k,
            "pair": list(pair),
            "a": str(ident.a),
            "b": str(ident.b),
            "value": _frac(ident.V),
            "residual_log10": round(ident.residual_log10, 1),
            "zeta_exact": ident.zeta_exact,
        }
        if ident.V.denominator == 1 and ident.V > 1:
            rec["factors"] = [str(p) for p in trial_factor(int(ident.V))]
            rec["is_prime"] = is_probable_prime(int(ident.V))
        records.append(rec)
        line = (
            f"{_frac(ident.V)} = {ident.a} S({k},{pair[0]}) + ({ident.b}) S({k},{pair[1]})"
            f"  [residual 1e{ident.residual_log10:.0f}, zeta-exact {ident.zeta_exact}]"
        )
        if "factors" in rec:
            line += f"  {' * '.join(rec['factors'])}"
        lines.append(line)
    g = gosper_check(digits)
    gres = float(mpmath.log10(g)) if g else -float(digits)
    lines.append(f"Gosper S(3,2/7) closed form residual 1e{gres:.0f}")
    out = {"command": "identities", "digits": digits, "identities": records, "gosper_residual_log10": round(gres, 1)}
    if gres > -(digits - 5):
        code = VERIFY_FAILED
    return code, out, lines


def cmd_ramanujan(ctx: Context):
    k = ctx.args.k if ctx.args.k is not None else 673
    try:
        value = ramanujan_value(k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    scaled = 24 * value
    out = {"command": "ramanujan", "k": k, "value": _frac(value)}
    lines = [f"S({k},2) = {_frac(value) if len(_frac(value)) < 80 else '(long rational)'}"]
    if scaled.denominator == 1:
        N = int(scaled)
        s = str(abs(N))
        prime = is_probable_prime(abs(N))
        u, e = approx_eq3(k, 2)
        digits = len(s) + 20
        with workdps(digits):
            approx = 24 * mpmath.mpf(u.numerator) / u.denominator / mpmath.pi**e
        agree = significant_agreement(N, approx, cap=len(s))
        out.update(
            {
                "scaled": "24*S",
                "digit_count": len(s),
                "prefix": s[:7],
                "suffix": s[-9:],
                "probable_prime": prime,
                "approx_agreement": agree,
            }
        )
        lines += [
            f"24 S({k},2) has {len(s)} digits: {s[:7]}...{s[-9:]}",
            f"  {'probable prime' if prime else 'composite'}",
            f"  24 {k}!/(2 pi)^{k + 1} agrees on {agree} leading digits",
        ]
    return OK, out, lines


def cmd_beta(ctx: Context):
    a = ctx.args
    s = a.s if a.s is not None else 7
    digits = a.digits or 30
    try:
        Q = beta_closed_odd(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    b = beta_numeric(s, digits + 10)
    with workdps(digits + 10):
        inv = mpmath.mpf(Q.denominator) / mpmath.pi**s
        check = b.value / mpmath.pi**s * Q.denominator
    out = {
        "command": "beta",
        "s": s,
        "digits": digits,
        "relation": f"beta({s}) = {Q.numerator} pi^{s}/{Q.denominator}",
        "beta": format_decimal(b.value, digits),
        "inverse_scaled": format_decimal(inv, digits),
        "numerator_check": format_decimal(check, digits),
    }
    lines = [
        out["relation"],
        f"  beta({s}) = {out['beta']}",
        f"  {Q.denominator}/pi^{s} = {out['inverse_scaled']}  (~ {Q.numerator})",
        f"  beta({s}) {Q.denominator}/pi^{s} = {out['numerator_check']}",
    ]
    if a.n is not None:
        try:
            rep = euler_approx_report(a.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out["euler"] = {
            "n": a.n,
            "digits": rep.exact_digits,
            "expression": rep.expression(),
            "agree": rep.agree,
            "probable_prime": is_probable_prime(rep.exact),
        }
        lines.append(
            f"E_{a.n}: {rep.exact_digits} digits, {rep.expression()} agrees on {rep.agree}"
            f"; {'probable prime' if out['euler']['probable_prime'] else 'composite'}"
        )
    return OK, out, lines


def cmd_table(ctx: Context):
    digits = ctx.args.digits or 50
    rep = validate_table(digits)
    rows = [
        {"k": k, "r": r, "printed_log10": _finite(p), "corrected_log10": _finite(c)}
        for k, r, p, c in rep.rows
    ]
    errata = [
        {"k": e.k, "r": e.r, "field": e.field, "printed": e.printed, "corrected": e.corrected, "evidence": e.evidence}
        for e in rep.errata
    ]
    ok = all(c <= -(digits - 5) for _, _, _, c in rep.rows)
    lines = [f"S({k},{r}): printed 1e{p:.0f}, corrected 1e{c:.0f}" for k, r, p, c in rep.rows]
    lines.append(rep.errata_text().rstrip())
    out = {"command": "table", "digits": digits, "rows": rows, "errata": errata, "ok": ok}
    return (OK if ok else VERIFY_FAILED), out, lines


def _finite(x: float):
    return None if math.isinf(x) else round(x, 1)


def cmd_verify_appendix(ctx: Context):
    a = ctx.args
    digits = a.digits or 80
    try:
        rows, errors = read_appendix(a.file, strict=a.strict)
    except AppendixParseError as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(f"cannot read {a.file}: {exc.strerror}") from None
    report = verify_appendix(rows, digits, ctx.values, errors)
    eighteen = eighteen_digit_case(ctx.values)
    out_rows = []
    lines = []
    for r in report.rows:
        out_rows.append(
            {
                "line": r.line,
                "P": str(r.P),
                "k1": r.k1,
                "k2": r.k2,
                "residual_log10": r.residual_log10,
                "zeta_exact": r.zeta_exact,
                "approx_match": r.approx_match,
                "rediscovered": r.rediscovered,
                "coprime": r.gcd_report["coprime"],
                "passed": r.passed(digits),
            }
        )
        flag = "ok  " if r.passed(digits) else "FAIL"
        lines.append(
            f"{flag} line {r.line}: {r.P} ({r.k1},{r.k2}) residual 1e{r.residual_log10}"
            f" zeta {'=' if r.zeta_exact else '!='} P, approx {'match' if r.approx_match else r.approx_computed}"
        )
    for line, msg in report.errors:
        lines.append(f"parse error {msg}")
    summary = report.summary()
    lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in summary.items()))
    for e in report.errata:
        lines.append(f"erratum {e.P} ({e.location}): {e.printed} -> {e.resolved} [{e.evidence}]")
    for f in eighteen.findings:
        lines.append(f"18-digit case: {f}")
    out = {
        "command": "verify-appendix",
        "digits": digits,
        "rows": out_rows,
        "parse_errors": [{"line": i, "message": m} for i, m in report.errors],
        "summary": summary,
        "errata": [
            {"P": e.P, "location": e.location, "printed": e.printed, "resolved": e.resolved, "evidence": e.evidence}
            for e in report.errata
        ],
        "eighteen_digit": {
            "target": str(eighteen.target),
            "rational_sum": _frac(eighteen.rational_sum),
            "vector": [str(c) for c in eighteen.vector],
            "approx_matches_printed": eighteen.approx_matches_printed,
            "findings": list(eighteen.findings),
        },
    }
    if errors and a.strict:
        return USAGE, out, lines
    return (OK if report.passed == len(report.rows) else VERIFY_FAILED), out, lines


COMMANDS = {
    "series": cmd_series,
    "egf": cmd_egf,
    "asym": cmd_asym,
    "represent": cmd_represent,
    "batch": cmd_batch,
    "identities": cmd_identities,
    "ramanujan": cmd_ramanujan,
    "beta": cmd_beta,
    "table": cmd_table,
    "verify-appendix": cmd_verify_appendix,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--config", help="flat key = value config file")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the value cache")
    common.add_argument("--digits", type=int)

    parser = _Parser(prog="ppforge", description="High-precision experiments with S(k, r) sums.")
    parser.add_argument("--version", action="version", version=f"ppforge {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("series", parents=[common], help="evaluate S(k, r)")
    p.add_argument("--k", type=int)
    p.add_argument("--r", default="1")

    p = sub.add_parser("egf", parents=[common], help="EGF coefficients of a trig expression")
    p.add_argument("--expr")
    p.add_argument("--n", type=int)

    p = sub.add_parser("asym", parents=[common], help="fit c^n Gamma(n+s)/(d pi^(n+t))")
    p.add_argument("--expr")
    p.add_argument("--n", type=int, help="number of EGF terms (default 240)")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--offset", type=int, default=0, help="index of the first term")
    p.add_argument("--at", type=int, help="also report agreement at this n")

    p = sub.add_parser("represent", parents=[common], help="4-term representation of --p")
    p.add_argument("--p", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--k", help="restrict to the pair k1,k2")
    p.add_argument("--all-pairs", action="store_true")

    p = sub.add_parser("batch", parents=[common], help="representations for many targets")
    p.add_argument("--file", help="targets, one integer per line")
    p.add_argument("--n", type=int, help="all primes below n")
    p.add_argument("--kmax", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--all-pairs", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("identities", parents=[common], help="two-term identities and the Gosper check")
    p.add_argument("--k", type=int)

    p = sub.add_parser("ramanujan", parents=[common], help="exact S(k, 2) for k = 1 mod 4")
    p.add_argument("--k", type=int)

    p = sub.add_parser("beta", parents=[common], help="Dirichlet beta at odd s")
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, help="also compare E_n with 2^(n+2) n!/pi^(n+1)")

    sub.add_parser("table", parents=[common], help="closed-form table validation")

    p = sub.add_parser("verify-appendix", parents=[common], help="check the raw representation table")
    p.add_argument("--file", help="corpus file (default: bundled table)")
    p.add_argument("--strict", action="store_true", help="fail on the first parse error")
    return parser


def _emit(ctx_json: bool, payload: dict, lines: list[str], stream):
    if ctx_json:
        json.dump(payload, stream, indent=2, sort_keys=True)
        stream.write("\n")
    else:
        for line in lines:
            stream.write(line + "\n")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        config = load_config(args.config)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ctx = Context(args, config)
            code, payload, lines = COMMANDS[args.command](ctx)
        for w in caught:
            stderr.write(f"warning: {w.message}\n")
    except (UsageError, ConfigError, ExprSyntaxError) as exc:
        stderr.write(f"ppforge: error: {exc}\n")
        return USAGE
    except PoleAtOrigin as exc:
        stderr.write(f"ppforge: error: {exc}\n")
        return USAGE
    _emit(ctx.json, payload, lines, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
