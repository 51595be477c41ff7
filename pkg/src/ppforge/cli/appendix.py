"""Grammar for raw representation rows.

    row    := P ',' k1 ',' k2 ',' '[' int (',' int){4} ']' ',' approx
    approx := ['-'] term (('+' | '-') term)*
    term   := int ['/' int] '/' ('Pi' | 'pi') '^' int
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

_INT = r"-?\d+"
_ROW = re.compile(
    rf"^\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*\[\s*({_INT}(?:\s*,\s*{_INT}){{4}})\s*\]\s*,\s*(.+?)\s*$"
)
_TERM = re.compile(r"([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*/\s*(?:Pi|pi)\s*\^\s*(\d+)")


class AppendixParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class AppendixRow:
    P: int
    k1: int
    k2: int
    vector: tuple[int, int, int, int, int]
    approx_text: str
    line: int = 0

    def approx_terms(self) -> tuple[tuple[Fraction, int], ...]:
        return parse_approx(self.approx_text)


def parse_approx(text: str, line: int = 0) -> tuple[tuple[Fraction, int], ...]:
    s = text.replace(" ", "")
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or (terms and not m.group(1)):
            raise AppendixParseError(line, f"bad approximation term at column {pos + 1} of {text!r}")
        sign, num, den, e = m.groups()
        u = Fraction(int(num), int(den) if den else 1)
        if u.denominator != (int(den) if den else 1):
            raise AppendixParseError(line, f"term {m.group(0)!r} is not in lowest terms")
        if sign == "-":
            u = -u
        elif sign == "+" and not terms:
            raise AppendixParseError(line, "leading '+' is not allowed")
        terms.append((u, int(e)))
        pos = m.end()
    if not terms:
        raise AppendixParseError(line, "empty approximation")
    return tuple(terms)


def parse_row(text: str, line: int = 0) -> AppendixRow:
    m = _ROW.match(text)
    if m is None:
        raise AppendixParseError(line, f"not a row: {text.strip()!r}")
    P, k1, k2 = (int(m.group(i)) for i in (1, 2, 3))
    vec = tuple(int(x) for x in m.group(4).split(","))
    approx = m.group(5).replace(" ", "")
    parse_approx(approx, line)
    if k1 % 2 == 0 or k2 % 2 == 0 or not 3 <= k1 < k2:
        raise AppendixParseError(line, f"bad pair ({k1}, {k2})")
    return AppendixRow(P, k1, k2, vec, approx, line)  # type: ignore[arg-type]


def serialize_row(row: AppendixRow) -> str:
    vec = ", ".join(str(x) for x in row.vector)
    return f"{row.P}, {row.k1}, {row.k2}, [{vec}], {row.approx_text}"


def parse_appendix(text: str, strict: bool = False) -> tuple[list[AppendixRow], list[tuple[int, str]]]:
    """Rows and per-line errors; with ``strict`` the first error raises."""
    rows, errors = [], []
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            rows.append(parse_row(body, i))
        except AppendixParseError as exc:
            if strict:
                raise
            errors.append((i, str(exc)))
    return rows, errors


def read_appendix(path: str | Path | None = None, strict: bool = False):
    """Parse ``path``, or the bundled raw table when ``path`` is None."""
    if path is None:
        text = resources.files("ppforge").joinpath("data/appendix.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_appendix(text, strict)
