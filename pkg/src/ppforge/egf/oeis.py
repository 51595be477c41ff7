"""Offline prefixes of the catalogued sequences and their generators.

Each entry records the generating expression, which positions of the EGF
expansion form the sequence, and the terms as listed in the source table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import egf_terms, select


@dataclass(frozen=True)
class Snapshot:
    oeis_id: str
    expression: str
    parity: str  # "all", "even" or "odd" positions of the EGF
    terms: tuple[int, ...]
    # index into the selected sequence where ``terms`` starts
    offset: int = 0


SNAPSHOTS: dict[str, Snapshot] = {
    s.oeis_id: s
    for s in (
        Snapshot(
            "A000111",
            "(1+sin(x))/cos(x)",
            "all",
            (1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792),
        ),
        # the table lists the secant numbers from E_2 on
        Snapshot("A000364", "1/cos(x)", "even", (1, 5, 61, 1385), offset=1),
        Snapshot("A000464", "sin(x)/cos(2x)", "odd", (1, 11, 361, 24611, 2873041, 512343611)),
        Snapshot("A000281", "cos(x)/cos(2x)", "even", (1, 3, 57, 2763, 250737)),
        Snapshot("A012393", "(cos(2x)+sin(2x))/cos(2x)", "odd", (2, 16, 512, 34816, 4063232)),
        Snapshot(
            "A006873",
            "(sin(x)+cos(3x))/cos(4x)",
            "all",
            (1, 1, 7, 47, 497, 6241, 95767, 1704527, 34741217),
        ),
        Snapshot(
            "A000708",
            "(1-2*cos(x))/(1-sin(x))",
            "all",
            (-1, -1, 0, 1, 6, 29, 150, 841, 5166, 34649),
        ),
    )
}

# Table row without a catalogue number; its listed values are unsigned.
COSINE_SUM_EXPRESSION = "(cos(x)+cos(2x)+cos(3x))/cos(x)"
COSINE_SUM_LISTED = (3, 11, 29, 191, 871, 52571)


def computed_prefix(snap: Snapshot, extra: int = 0) -> list[Fraction]:
    """The selected EGF values covering the snapshot (plus ``extra`` more)."""
    want = snap.offset + len(snap.terms) + extra
    count = 2 * want + 1 if snap.parity != "all" else want
    seq = select(egf_terms(snap.expression, count), snap.parity)
    return seq[snap.offset : want]


def check_snapshot(snap: Snapshot) -> bool:
    got = computed_prefix(snap)
    return [int(v) if v.denominator == 1 else v for v in got] == list(snap.terms)


@dataclass(frozen=True)
class CosineSumDiagnostic:
    computed: tuple[Fraction, ...]
    listed: tuple[int, ...]
    magnitudes_match: tuple[bool, ...]
    note: str


def cosine_sum_diagnostic(count: int = 12) -> CosineSumDiagnostic:
    """Compare the expansion of the cosine-sum row with its listed values.

    Only even positions are nonzero.  The comparison is informational; the
    computed expansion is authoritative.
    """
    seq = select(egf_terms(COSINE_SUM_EXPRESSION, 2 * count), "even")
    nonzero = [v for v in seq if v != 0]
    tail = nonzero[: len(COSINE_SUM_LISTED)]
    flags = tuple(abs(c) == v for c, v in zip(tail, COSINE_SUM_LISTED))
    mismatches = [
        f"{v} (computed {c})" for c, v, ok in zip(tail, COSINE_SUM_LISTED, flags) if not ok
    ]
    note = "listed values match up to sign" if all(flags) else "listed values differ: " + ", ".join(mismatches)
    return CosineSumDiagnostic(tuple(seq), COSINE_SUM_LISTED, flags, note)
