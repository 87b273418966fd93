"""Terms and partial sums of the alternating series sum (-1)^(n-1) n^(-s).

The n-th term is the plane vector (-1)^(n-1) n^(-sigma) e^(-i t ln n);
consecutive partial sums are joined by these segments.  Everything here
is exact double-precision work on the raw series: one log per index,
shared between the modulus and the phase, and error-compensated
accumulation so that million-term sweeps do not lose digits.

Negative t is evaluated at |t| and conjugated, which makes conjugate
symmetry of all outputs exact rather than approximate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .points import as_complex

_BLOCK = 1 << 16


@dataclass(frozen=True)
class SeriesState:
    """Streaming accumulator state after adding the n-th term."""

    n: int
    sum: complex
    last_term: complex


@dataclass(frozen=True)
class Segment:
    """The n-th segment of the partial-sum path, from S_{n-1} to S_n."""

    n: int
    start: complex
    end: complex
    length: float
    theta: float


class KahanSum:
    """Compensated running sum of complex values."""

    __slots__ = ("total", "carry")

    def __init__(self):
        self.total = 0.0 + 0.0j
        self.carry = 0.0 + 0.0j

    def add(self, value: complex) -> complex:
        value = value + self.carry
        previous = self.total
        self.total = previous + value
        self.carry = value - (self.total - previous)
        return self.total


def eta_term(n: int, s) -> complex:
    """The n-th series term (-1)^(n-1) n^(-sigma) e^(-i t ln n)."""
    if n < 1:
        raise ValueError(f"term index must be >= 1, got {n}")
    s = as_complex(s)
    ln = math.log(n)
    mag = math.exp(-s.real * ln)
    phase = cmath.exp(-1j * abs(s.imag) * ln)
    if s.imag < 0:
        phase = phase.conjugate()
    value = mag * phase
    return -value if n % 2 == 0 else value


def segment_angle(n: int, t: float) -> float:
    """Angle of segment n with the real axis: -t ln n, plus pi for even n."""
    if n < 1:
        raise ValueError(f"segment index must be >= 1, got {n}")
    base = -t * math.log(n)
    return math.pi + base if n % 2 == 0 else base


def turn_angle(n: int, t: float) -> float:
    """Angle t ln((n+1)/n) between segment n+1 and segment n, for t >= 0."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if t < 0:
        raise ValueError("turn_angle is defined for t >= 0; conjugate first")
    return t * math.log1p(1.0 / n)


def _term_block(sigma: float, t_abs: float, lo: int, hi: int) -> np.ndarray:
    """Terms for indices lo..hi-1 (t taken non-negative)."""
    n = np.arange(lo, hi, dtype=np.float64)
    ln = np.log(n)
    vals = np.exp(-sigma * ln) * np.exp(-1j * t_abs * ln)
    vals[lo % 2 :: 2] *= -1.0  # even n carries the alternating minus
    return vals


def partial_sum(n: int, s) -> complex:
    """S_n(s), accumulated blockwise with compensation."""
    if n < 0:
        raise ValueError(f"partial sum index must be >= 0, got {n}")
    if n == 0:
        return 0.0 + 0.0j
    s = as_complex(s)
    acc = KahanSum()
    for lo in range(1, n + 1, _BLOCK):
        hi = min(lo + _BLOCK, n + 1)
        block = _term_block(s.real, abs(s.imag), lo, hi)
        acc.add(np.cumsum(block)[-1])
    total = acc.total
    return total.conjugate() if s.imag < 0 else total


def partial_sum_path(s, n_max: int) -> np.ndarray:
    """Array of S_1 .. S_{n_max} (complex128, length n_max).

    Memory is 16 bytes per index; callers scanning beyond ~10^7 indices
    should stream with :func:`iter_partial_sums` instead.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    s = as_complex(s)
    out = np.empty(n_max, dtype=np.complex128)
    acc = KahanSum()
    base = 0.0 + 0.0j
    for lo in range(1, n_max + 1, _BLOCK):
        hi = min(lo + _BLOCK, n_max + 1)
        cum = np.cumsum(_term_block(s.real, abs(s.imag), lo, hi))
        out[lo - 1 : hi - 1] = base + cum
        base = acc.add(cum[-1])
    if s.imag < 0:
        np.conjugate(out, out=out)
    return out


def iter_partial_sums(s, n_from: int = 1) -> Iterator[SeriesState]:
    """Stream SeriesState(n, S_n, term_n) for n = n_from, n_from+1, ...

    O(1) work per step; the sum is carried with compensation.  The stream
    state is single-owner: share values, not the generator.
    """
    s = as_complex(s)
    conj = s.imag < 0
    t_abs = abs(s.imag)
    acc = KahanSum()
    if n_from > 1:
        acc.add(partial_sum(n_from - 1, complex(s.real, t_abs)))
    lo = n_from
    while True:
        hi = lo + _BLOCK
        block = _term_block(s.real, t_abs, lo, hi)
        for i, term in enumerate(block):
            term = complex(term)
            total = acc.add(term)
            if conj:
                yield SeriesState(lo + i, total.conjugate(), term.conjugate())
            else:
                yield SeriesState(lo + i, total, term)
        lo = hi


def segment(n: int, s) -> Segment:
    """Segment n of the path, with its exact length and axis angle."""
    s = as_complex(s)
    start = partial_sum(n - 1, s)
    term = eta_term(n, s)
    return Segment(
        n=n,
        start=start,
        end=start + term,
        length=math.exp(-s.real * math.log(n)),
        theta=segment_angle(n, s.imag),
    )
