"""Grid scans over (alpha, t): ratio bounds, monotonicity, extrema.

The scanned quantity is |eta(1/2 + alpha + it) / eta(1/2 - alpha + it)|,
which equals |P(1/2 - alpha + it)| wherever the denominator is away
from zero.  Scans are embarrassingly parallel across grid points; rows
are always assembled in (t, alpha) order so output is deterministic
regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import functional
from . import oracle

PI_OVER_LN2 = math.pi / math.log(2.0)


@dataclass(frozen=True)
class ScanGrid:
    alpha_from: float = 0.0
    alpha_to: float = 0.45
    alpha_step: float = 0.05
    t_from: float = 2.0 * math.pi + 1.0
    t_to: float = 120.0
    t_step: float = 0.25

    def __post_init__(self):
        if not (0.0 <= self.alpha_from <= self.alpha_to < 0.5):
            raise ValueError("alpha range must satisfy 0 <= from <= to < 1/2")
        if not (0.0 < self.t_from <= self.t_to <= 200.0):
            raise ValueError("t range must satisfy 0 < from <= to <= 200")
        if self.alpha_step <= 0 or self.t_step <= 0:
            raise ValueError("steps must be positive")

    def alphas(self) -> np.ndarray:
        return _axis(self.alpha_from, self.alpha_to, self.alpha_step)

    def ts(self) -> np.ndarray:
        return _axis(self.t_from, self.t_to, self.t_step)

    @property
    def cardinality(self) -> int:
        return len(self.alphas()) * len(self.ts())


def _axis(lo: float, hi: float, step: float) -> np.ndarray:
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


@dataclass(frozen=True)
class BoundCheckRecord:
    alpha: float
    t: float
    ratio: float
    lower: float
    upper: float
    pass_lower: bool
    pass_upper: bool


@dataclass(frozen=True)
class SkippedPoint:
    alpha: float
    t: float
    reason: str


@dataclass(frozen=True)
class ConjectureScanResult:
    records: list[BoundCheckRecord]
    violations: list[BoundCheckRecord]
    skipped: list[SkippedPoint]
    informational: bool  # True when t_from is below the conjectured range


def _bound_check(alpha: float, t: float, target_error: float):
    num = oracle.eta(complex(0.5 + alpha, t), target_error)
    den = oracle.eta(complex(0.5 - alpha, t), target_error)
    if den.zero_indistinguishable:
        return SkippedPoint(alpha, t, f"denominator zero-indistinguishable (|eta| = {abs(den.value):.2e})")
    ratio = abs(num.value) / abs(den.value)
    bounds = functional.conjecture_bounds(alpha, t)
    return BoundCheckRecord(
        alpha=alpha,
        t=t,
        ratio=ratio,
        lower=bounds.lower,
        upper=bounds.upper,
        pass_lower=bounds.lower <= ratio,
        pass_upper=ratio <= bounds.upper,
    )


def scan_conjecture(
    grid: ScanGrid,
    target_error: float = oracle.TARGET_FLOOR,
    threads: int = 1,
) -> ConjectureScanResult:
    """One bound check per grid point, ordered by (t, alpha).

    Points where the denominator is zero-indistinguishable are skipped
    with a reason instead of producing a record.
    """
    alphas = grid.alphas()
    ts = grid.ts()
    points = [(float(t), float(a)) for t in ts for a in alphas]

    def row(point):
        t, a = point
        return _bound_check(a, t, target_error)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(row, points, chunksize=64))
    else:
        results = [row(p) for p in points]

    records = [r for r in results if isinstance(r, BoundCheckRecord)]
    skipped = [r for r in results if isinstance(r, SkippedPoint)]
    violations = [r for r in records if not (r.pass_lower and r.pass_upper)]
    return ConjectureScanResult(
        records=records,
        violations=violations,
        skipped=skipped,
        informational=grid.t_from < 2.0 * math.pi + 1.0,
    )


@dataclass(frozen=True)
class MonotonicityReport:
    t: float
    strictly_decreasing: bool
    first_violation: tuple[float, float] | None
    values: list[float]


def scan_monotonicity(t: float, alpha_grid) -> MonotonicityReport:
    """Strict decrease of |P(1/2 - alpha + it)| along an ascending grid."""
    alphas = [float(a) for a in alpha_grid]
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise ValueError("alpha grid must be strictly ascending")
    values = [functional.functional_ratio_modulus(complex(0.5 - a, t)) for a in alphas]
    for (a0, v0), (a1, v1) in zip(zip(alphas, values), zip(alphas[1:], values[1:])):
        if not v1 < v0:
            return MonotonicityReport(t, False, (a0, a1), values)
    return MonotonicityReport(t, True, None, values)


@dataclass(frozen=True)
class ExtremumRecord:
    t: float
    ratio: float
    nearest_multiple: int  # k with the extremum near k * pi / ln 2
    distance: float


@dataclass(frozen=True)
class ExtremaReport:
    alpha: float
    minima: list[ExtremumRecord]
    maxima: list[ExtremumRecord]
    window_width: float  # 2 pi / ln 2; expected one max and one min per window
    t_from: float
    t_to: float


def extrema_structure(
    alpha: float,
    t_from: float,
    t_to: float,
    t_step: float = 0.01,
    target_error: float = oracle.TARGET_FLOOR,
) -> ExtremaReport:
    """Local extrema of the eta-ratio modulus along t at fixed alpha.

    The curve is smoothed over a window of 3 samples before the
    three-point comparison, which suppresses spurious flat-region
    extrema at the oracle noise scale.  Minima sit near even multiples
    of pi/ln 2 and maxima are reported against odd multiples; distances
    are reported, not asserted.
    """
    if t_step > 0.01:
        raise ValueError(f"t_step must be <= 0.01 to resolve extrema, got {t_step}")
    ts = _axis(t_from, t_to, t_step)
    vals = np.array(
        [
            abs(oracle.eta(complex(0.5 + alpha, t), target_error).value)
            / abs(oracle.eta(complex(0.5 - alpha, t), target_error).value)
            for t in ts
        ]
    )
    if alpha == 0.0:
        return ExtremaReport(alpha, [], [], 2.0 * PI_OVER_LN2, t_from, t_to)
    smooth = np.convolve(vals, np.ones(3) / 3.0, mode="same")
    minima: list[ExtremumRecord] = []
    maxima: list[ExtremumRecord] = []
    for i in range(1, len(ts) - 1):
        t = float(ts[i])
        if smooth[i] < smooth[i - 1] and smooth[i] <= smooth[i + 1]:
            k = 2 * round(t / (2.0 * PI_OVER_LN2))
            minima.append(ExtremumRecord(t, float(vals[i]), k, abs(t - k * PI_OVER_LN2)))
        elif smooth[i] > smooth[i - 1] and smooth[i] >= smooth[i + 1]:
            k = 2 * round((t / PI_OVER_LN2 - 1.0) / 2.0) + 1
            maxima.append(ExtremumRecord(t, float(vals[i]), k, abs(t - k * PI_OVER_LN2)))
    return ExtremaReport(alpha, minima, maxima, 2.0 * PI_OVER_LN2, t_from, t_to)
