"""Leading-order cross-checks of the exact disk-gap quantities.

The exact gap radius_diff_sq - center_dist_sq behaves like
sigma^2 / (n (n+1)) / ((n+1)^sigma (n+2)^sigma) as n grows, and the
shrunk-disk variant like eps^2 sigma^2 / (n (n+1)) / (n+2)^(2 sigma).
These records compare the two evaluations; a ratio drifting away from
one as n grows flags transcription drift in the exact geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .points import as_complex
from . import orbit


@dataclass(frozen=True)
class AsymptoticRecord:
    n: int
    exact: float
    leading: float

    @property
    def ratio(self) -> float:
        return self.exact / self.leading


def _gap_exact(n: int, s: complex) -> tuple[float, float]:
    """(radius_diff_sq - center_dist_sq, radius_diff_sq) via the margin numerator."""
    sigma = s.real
    pair = orbit.disk_pair(n, s)
    num = orbit.nesting_margin(n, s)
    denom = (
        float(n) ** sigma
        * (n + 1.0) ** (2.0 * sigma)
        * (n + 2.0) ** sigma
    )
    return num / denom, pair.radius_diff_sq


def nesting_gap_record(n: int, s) -> AsymptoticRecord:
    """Exact full-disk gap against its sigma^2/(n(n+1)) leading term."""
    s = as_complex(s)
    sigma = s.real
    exact, _ = _gap_exact(n, s)
    leading = sigma**2 / (n * (n + 1.0)) / ((n + 1.0) ** sigma * (n + 2.0) ** sigma)
    return AsymptoticRecord(n, exact, leading)


def shrunk_gap_record(n: int, s, scale: float = 0.5) -> AsymptoticRecord:
    """Exact gap for disks shrunk by `scale` against its leading term.

    scale = 1/2 is the half-radius construction; the leading term grows
    as scale^2, so records at scales 1/2 and 1/4 have ratio 4.
    """
    if not (0.0 < scale <= 1.0):
        raise ValueError(f"scale must lie in (0, 1], got {scale}")
    s = as_complex(s)
    sigma = s.real
    gap, radius_diff_sq = _gap_exact(n, s)
    exact = gap - (1.0 - scale**2) * radius_diff_sq
    leading = scale**2 * sigma**2 / (n * (n + 1.0)) / (n + 2.0) ** (2.0 * sigma)
    return AsymptoticRecord(n, exact, leading)
