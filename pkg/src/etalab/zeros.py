"""Known critical-line zero ordinates and their verification.

The embedded defaults are limited to the two ordinates whose digits the
package reproduces elsewhere (the first and the sixth nontrivial zero,
to 10 and 8 significant digits).  Anything further is user input, never
a shipped constant.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from . import oracle

ZERO_MAGNITUDE_TOL = 1e-4


@dataclass(frozen=True)
class ZeroEntry:
    ordinal: int
    t: float


KNOWN_ZEROS: tuple[ZeroEntry, ...] = (
    ZeroEntry(1, 14.13472514),
    ZeroEntry(6, 37.586178),
)


@dataclass(frozen=True)
class ZeroCheck:
    ordinal: int
    t: float
    magnitude: float
    abs_error_bound: float
    zero_indistinguishable: bool
    is_zero_like: bool  # magnitude below the table-precision tolerance


def load_zero_table(path) -> list[ZeroEntry]:
    """Read a zero table from CSV with columns ordinal,t (header optional)."""
    entries: list[ZeroEntry] = []
    with open(Path(path), newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].strip().lower() in ("", "ordinal"):
                continue
            entries.append(ZeroEntry(int(row[0]), float(row[1])))
    if any(b.t <= a.t for a, b in zip(entries, entries[1:])):
        raise ValueError("zero table ordinates must be strictly increasing")
    return entries


def verify_zeros(
    entries=None, target_error: float = oracle.TARGET_FLOOR
) -> list[ZeroCheck]:
    """|eta(1/2 + it)| for each table entry, flagged against the tolerance."""
    if entries is None:
        entries = KNOWN_ZEROS
    checks = []
    for entry in entries:
        value = oracle.eta(complex(0.5, entry.t), target_error)
        checks.append(
            ZeroCheck(
                ordinal=entry.ordinal,
                t=entry.t,
                magnitude=abs(value.value),
                abs_error_bound=value.abs_error_bound,
                zero_indistinguishable=value.zero_indistinguishable,
                is_zero_like=abs(value.value) < ZERO_MAGNITUDE_TOL,
            )
        )
    return checks
