"""Persistent S(k, r) value cache.

File layout: a ``ppforge-cache v1`` header, then one record per line

    k <TAB> p/q <TAB> digits <TAB> value <TAB> created <TAB> checksum

where ``value`` has exactly ``digits`` significant digits in scientific
notation and ``checksum`` is the first 16 hex digits of the SHA-256 of the
other five fields joined by tabs.  Records are appended under an advisory
lock; compaction and quarantine rewrite the file atomically.
"""

from __future__ import annotations

import datetime as _dt
import fcntl
import hashlib
import os
import shutil
import warnings
from contextlib import contextmanager
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from pathlib import Path

import mpmath

from ..kernel.numeric import HiReal, format_scientific
from ..series import SeriesKey, SeriesValue, eval_S

HEADER = "ppforge-cache v1"


class CacheWarning(UserWarning):
    pass


@dataclass(frozen=True)
class CacheRecord:
    k: int
    r: str  # reduced "p/q"
    digits: int
    value: str
    created: str

    def fields(self) -> list[str]:
        return [str(self.k), self.r, str(self.digits), self.value, self.created]

    def checksum(self) -> str:
        return hashlib.sha256("\t".join(self.fields()).encode()).hexdigest()[:16]

    def line(self) -> str:
        return "\t".join(self.fields() + [self.checksum()])

    @classmethod
    def parse(cls, line: str) -> CacheRecord:
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 6:
            raise ValueError("wrong field count")
        k, r, digits, value, created, check = parts
        rec = cls(int(k), r, int(digits), value, created)
        if rec.checksum() != check:
            raise ValueError("checksum mismatch")
        if _significant_digits(value) != rec.digits:
            raise ValueError("digit count mismatch")
        return rec


def r_text(r) -> str:
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def _significant_digits(value: str) -> int:
    mant = value.lstrip("-").split("e")[0]
    return len(mant.replace(".", ""))


def truncate(value: str, digits: int) -> str:
    """Round a stored decimal to ``digits`` significant digits, half-even."""
    d = Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(Decimal(value))
    sign, dig, exp = d.as_tuple()
    s = "".join(map(str, dig)).ljust(digits, "0")[:digits]
    e10 = exp + len(dig) - 1
    mant = s[0] + ("." + s[1:] if len(s) > 1 else "")
    return f"{'-' if sign else ''}{mant}e{e10:+d}"


def _to_series_value(k: int, r, digits: int, value: str) -> SeriesValue:
    with mpmath.workdps(digits + 10):
        v = mpmath.mpf(value)
    return SeriesValue(SeriesKey(k, Fraction(r)), digits, HiReal(v, digits), 0)


class SeriesCache:
    """get-or-compute store for S(k, r) values keyed by (k, r, digits)."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.lock_path = self.path.with_name(self.path.name + ".lock")
        self._records: dict[tuple[int, str, int], CacheRecord] = {}
        self.hits = 0
        self.misses = 0
        self.warnings: list[str] = []
        self._load()

    @contextmanager
    def _locked(self):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.lock_path, "a") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                yield
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)

    def _warn(self, msg: str):
        self.warnings.append(msg)
        warnings.warn(msg, CacheWarning, stacklevel=3)

    def _load(self):
        if not self.path.exists():
            return
        lines = self.path.read_text().splitlines()
        bad = []
        if not lines or lines[0] != HEADER:
            bad.append((1, "missing header"))
            body = []
        else:
            body = lines[1:]
        for i, line in enumerate(body, start=2):
            if not line.strip():
                continue
            try:
                rec = CacheRecord.parse(line)
            except ValueError as exc:
                bad.append((i, str(exc)))
                continue
            self._records[(rec.k, rec.r, rec.digits)] = rec
        if bad:
            self._quarantine(bad)

    def _quarantine(self, bad):
        stamp = _dt.datetime.now(_dt.timezone.utc).strftime("%Y%m%dT%H%M%S%f")
        target = self.path.with_name(f"{self.path.name}.corrupt-{stamp}")
        with self._locked():
            shutil.copyfile(self.path, target)
            self._rewrite()
        where = ", ".join(f"line {i} ({why})" for i, why in bad)
        self._warn(f"cache {self.path}: dropped {where}; original kept as {target.name}")

    def _rewrite(self):
        tmp = self.path.with_name(self.path.name + ".tmp")
        with open(tmp, "w") as fh:
            fh.write(HEADER + "\n")
            for key in sorted(self._records):
                fh.write(self._records[key].line() + "\n")
        os.replace(tmp, self.path)

    def compact(self):
        with self._locked():
            self._rewrite()

    def _append(self, rec: CacheRecord):
        with self._locked():
            new = not self.path.exists() or self.path.stat().st_size == 0
            with open(self.path, "a") as fh:
                if new:
                    fh.write(HEADER + "\n")
                fh.write(rec.line() + "\n")

    def lookup(self, k: int, r, digits: int) -> str | None:
        """Stored decimal for the key, truncated from a longer record if needed."""
        rt = r_text(r)
        exact = self._records.get((k, rt, digits))
        if exact is not None:
            return exact.value
        longer = [d for (kk, rr, d) in self._records if kk == k and rr == rt and d > digits]
        if longer:
            return truncate(self._records[(k, rt, min(longer))].value, digits)
        return None

    def get_or_compute(self, k: int, r, digits: int) -> SeriesValue:
        stored = self.lookup(k, r, digits)
        if stored is not None:
            self.hits += 1
            return _to_series_value(k, r, digits, stored)
        self.misses += 1
        sv = eval_S(k, r, digits)
        rec = CacheRecord(
            k,
            r_text(r),
            digits,
            format_scientific(sv.value.value, digits),
            _dt.datetime.now(_dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        )
        self._records[(k, rec.r, digits)] = rec
        self._append(rec)
        return _to_series_value(k, r, digits, rec.value)

    def values(self, k: int, r, digits: int) -> HiReal:
        """ValueProvider interface for the representation search."""
        return self.get_or_compute(k, r, digits).value

    def __len__(self) -> int:
        return len(self._records)
