"""The ratio of partial sums at mirrored strip points and its limit.

For s in the open left half of the strip, the ratio of the n-th partial
sums at the mirror point (1 - sigma, same t) and at s converges; the
limit equals the functional-equation ratio unless eta(s) = 0, where it
drops to zero instead.  The mirror is taken with a common t: the series
has real coefficients, so every modulus-level quantity agrees with the
true reflection s -> 1-s, while complex-level outputs carry this
same-t convention.

Consecutive ratios jump from one side of the limit modulus to the other
(the denominator remainder flips direction with the alternating sign),
so the limit estimate averages the final odd/even pair, which converges
visibly faster than the raw sequence.

Partial sums vanish for at most finitely many indices, and beyond the
disk-nesting start for at most one; detection separates the machine
zero policy (default threshold 1e-9) from reproduction of printed
examples, whose coordinates are rounded to a few decimals and need a
looser threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import Counter

import numpy as np

from .errors import ZeroDenominator
from .points import as_complex
from . import functional
from . import orbit

ZERO_SUM_THRESHOLD = 1e-9

_BLOCK = 1 << 16


@dataclass(frozen=True)
class RatioSample:
    n: int
    value: complex
    denom_magnitude: float


@dataclass(frozen=True)
class ZeroSumEvent:
    """An index where |S_n(s)| fell below the detection threshold."""

    n: int
    magnitude: float
    beyond_nesting: bool


@dataclass(frozen=True)
class LimitEstimate:
    value: complex
    n_used: int
    residual: float
    zero_flag: bool


@dataclass(frozen=True)
class EnvelopeReport:
    """Side-of-limit statistics for |P_n| over a contiguous index range."""

    n_from: int
    n_to: int
    limit_modulus: float
    alternation_rate: float
    run_lengths: dict[int, int]


def _mirrored_sums(s: complex, n_max: int):
    """Lockstep partial sums at (1-sigma, t) and (sigma, t), one log pass."""
    sigma = s.real
    t_abs = abs(s.imag)
    num = np.empty(n_max, dtype=np.complex128)
    den = np.empty(n_max, dtype=np.complex128)
    base_num = 0.0 + 0.0j
    base_den = 0.0 + 0.0j
    carry_num = 0.0 + 0.0j
    carry_den = 0.0 + 0.0j
    for lo in range(1, n_max + 1, _BLOCK):
        hi = min(lo + _BLOCK, n_max + 1)
        n = np.arange(lo, hi, dtype=np.float64)
        ln = np.log(n)
        phase = np.exp(-1j * t_abs * ln)
        phase[lo % 2 :: 2] *= -1.0
        cn = np.cumsum(np.exp(-(1.0 - sigma) * ln) * phase)
        cd = np.cumsum(np.exp(-sigma * ln) * phase)
        num[lo - 1 : hi - 1] = base_num + cn
        den[lo - 1 : hi - 1] = base_den + cd
        # compensated base update
        v = complex(cn[-1]) + carry_num
        prev = base_num
        base_num = prev + v
        carry_num = v - (base_num - prev)
        v = complex(cd[-1]) + carry_den
        prev = base_den
        base_den = prev + v
        carry_den = v - (base_den - prev)
    if s.imag < 0:
        np.conjugate(num, out=num)
        np.conjugate(den, out=den)
    return num, den


def sum_ratio(n: int, s, threshold: float = ZERO_SUM_THRESHOLD) -> RatioSample:
    """P_n(s): ratio of the n-th partial sums at the mirror point and at s.

    Raises ZeroDenominator when |S_n(s)| <= threshold; that signals a
    zero-sum event at n, not a fault.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    s = as_complex(s)
    num, den = _mirrored_sums(s, n)
    mag = abs(den[-1])
    if mag <= threshold:
        raise ZeroDenominator(mag, n)
    return RatioSample(n, complex(num[-1] / den[-1]), mag)


def sum_ratio_path(s, n_max: int, threshold: float = ZERO_SUM_THRESHOLD):
    """Arrays (ratios, denominator magnitudes, skipped indices) for n <= n_max.

    Ratios at skipped indices (denominator below threshold) are NaN.
    """
    s = as_complex(s)
    num, den = _mirrored_sums(s, n_max)
    mag = np.abs(den)
    skipped = [int(i) + 1 for i in np.nonzero(mag <= threshold)[0]]
    with np.errstate(invalid="ignore", divide="ignore"):
        ratios = num / den
    if skipped:
        ratios[np.asarray(skipped) - 1] = np.nan
    return ratios, mag, skipped


def detect_zero_sums(
    s,
    n_max: int,
    threshold: float = ZERO_SUM_THRESHOLD,
    nesting_index: int | None = None,
) -> list[ZeroSumEvent]:
    """All indices n <= n_max with |S_n(s)| < threshold.

    Events beyond the disk-nesting start are flagged; at most one such
    event can be a true zero, so a flagged count above one at a tight
    threshold indicates the threshold is too loose for the point.
    """
    if n_max > orbit.DEFAULT_CEILING:
        raise ValueError(f"n_max must be <= {orbit.DEFAULT_CEILING:g}")
    s = as_complex(s)
    if nesting_index is None:
        nesting_index = orbit.nesting_start(s)
    events: list[ZeroSumEvent] = []
    base = 0.0 + 0.0j
    carry = 0.0 + 0.0j
    sigma, t_abs = s.real, abs(s.imag)
    for lo in range(1, n_max + 1, _BLOCK):
        hi = min(lo + _BLOCK, n_max + 1)
        n = np.arange(lo, hi, dtype=np.float64)
        ln = np.log(n)
        terms = np.exp(-sigma * ln) * np.exp(-1j * t_abs * ln)
        terms[lo % 2 :: 2] *= -1.0
        cum = np.cumsum(terms)
        mags = np.abs(base + cum)
        for i in np.nonzero(mags < threshold)[0]:
            idx = lo + int(i)
            events.append(ZeroSumEvent(idx, float(mags[i]), idx > nesting_index))
        v = complex(cum[-1]) + carry
        prev = base
        base = prev + v
        carry = v - (base - prev)
    return events


def limit_estimate(
    s,
    n_max: int,
    tol: float = 1e-9,
    threshold: float = ZERO_SUM_THRESHOLD,
) -> LimitEstimate:
    """Estimate of the ratio limit from the final odd/even ratio pair.

    The residual is the final odd-even gap; the zero flag marks an
    estimate indistinguishable from the eta(s) = 0 branch of the limit.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    s = as_complex(s)
    ratios, mag, skipped = sum_ratio_path(s, n_max, threshold)
    last = ratios[-1]
    prev = ratios[-2]
    if np.isnan(last) or np.isnan(prev):
        raise ZeroDenominator(float(min(mag[-1], mag[-2])), n_max)
    value = 0.5 * (complex(last) + complex(prev))
    residual = abs(complex(last) - complex(prev))
    zero_flag = abs(value) < 10.0 * max(residual, tol)
    return LimitEstimate(value, n_max, residual, zero_flag)


def envelope_diagnostics(
    s, n_from: int, n_to: int, limit_modulus: float | None = None
) -> EnvelopeReport:
    """Sign pattern of |P_n| - |P| on [n_from, n_to].

    Reports the rate at which the sign alternates between consecutive n
    and the histogram of same-sign run lengths (the cycle structure of
    the two-sided jumping).
    """
    if n_from < 1 or n_to < n_from:
        raise ValueError("need 1 <= n_from <= n_to")
    s = as_complex(s)
    if limit_modulus is None:
        limit_modulus = functional.functional_ratio_modulus(s)
    ratios, _, _ = sum_ratio_path(s, n_to)
    window = np.abs(ratios[n_from - 1 :])
    signs = np.sign(window - limit_modulus)
    changes = signs[1:] != signs[:-1]
    alternation = float(np.mean(changes)) if changes.size else 0.0
    runs: Counter[int] = Counter()
    length = 1
    for flip in changes:
        if flip:
            runs[length] += 1
            length = 1
        else:
            length += 1
    runs[length] += 1
    return EnvelopeReport(
        n_from=n_from,
        n_to=n_to,
        limit_modulus=float(limit_modulus),
        alternation_rate=alternation,
        run_lengths=dict(sorted(runs.items())),
    )


def alpha_sign_changes(n: int, m: int, t: float, alpha_grid) -> int:
    """Sign changes of |P_n| - |P_m| along an alpha grid at fixed t."""
    if n == m:
        raise ValueError("indices must differ")
    diffs = []
    for alpha in alpha_grid:
        s = complex(0.5 - alpha, t)
        hi = max(n, m)
        ratios, mag, _ = sum_ratio_path(s, hi)
        for idx in (n, m):
            if mag[idx - 1] <= ZERO_SUM_THRESHOLD:
                raise ZeroDenominator(float(mag[idx - 1]), idx)
        diffs.append(abs(ratios[n - 1]) - abs(ratios[m - 1]))
    signs = np.sign(diffs)
    live = signs[signs != 0]
    return int(np.count_nonzero(live[1:] != live[:-1]))


def alpha_fd_slope(n: int, t: float, alpha: float, step: float = 1e-4) -> float:
    """Finite-difference slope in alpha of |P_n(1/2 - alpha + it)|.

    Central difference in the interior; at alpha = 0 a one-sided
    difference anchored at the exact critical-line value 1.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if alpha + step >= 0.5 or alpha < 0.0:
        raise ValueError("alpha and alpha + step must stay inside [0, 1/2)")
    hi = sum_ratio(n, complex(0.5 - alpha - step, t))
    if alpha == 0.0:
        return (abs(hi.value) - 1.0) / step
    if alpha - step < 0.0:
        raise ValueError("alpha - step must stay inside [0, 1/2)")
    lo = sum_ratio(n, complex(0.5 - alpha + step, t))
    return (abs(hi.value) - abs(lo.value)) / (2.0 * step)


def vertex_distance(m: int, j: int, s) -> float:
    """|S_{m+j}(s) - S_m(s)|, the gap between two orbit vertexes.

    Tends to |R_m(s)| as j grows, at the O((m+j)^-sigma) rate of the
    discarded tail.
    """
    if m < 1 or j < 1:
        raise ValueError("need m >= 1 and j >= 1")
    from .series import partial_sum

    s = as_complex(s)
    return abs(partial_sum(m + j, s) - partial_sum(m, s))
