"""Empirical distribution tools: ordered samples, percentiles, histograms,
league-average synthesis, qq-plots, correlation and the KS distance.

Percentiles use the mean-rank convention.  A value's percentile in a
sample of size n is ``100 * (#below + 0.5 * #equal) / n`` and the i-th
order statistic (1-based) sits at plotting position ``100 * (i - 0.5) / n``.
With that pairing ``percentile_of`` and ``value_at_percentile`` are exact
inverses at the sample points, which keeps self-equating an identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateCorrelation, EmptySample, InvalidBinWidth, InvalidPercentile


class OrderedSample:
    """An immutable, sorted sample of real values."""

    __slots__ = ("_values",)

    def __init__(self, values):
        arr = np.array(values, dtype=float).ravel()
        if arr.size > 1 and np.any(arr[1:] < arr[:-1]):
            raise ValueError("values must be nondecreasing; use OrderedSample.from_values")
        if not np.all(np.isfinite(arr)):
            raise ValueError("sample values must be finite")
        arr.setflags(write=False)
        self._values = arr

    @classmethod
    def from_values(cls, values) -> OrderedSample:
        return cls(np.sort(np.asarray(values, dtype=float).ravel()))

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n(self) -> int:
        return int(self._values.size)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self._values.tolist())

    def __getitem__(self, i):
        return self._values[i]

    def __array__(self, dtype=None, copy=None):
        return self._values if dtype is None else self._values.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, OrderedSample):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __repr__(self):
        return f"OrderedSample(n={self.n}, values={self._values.tolist()!r})"

    def mean(self) -> float:
        _require(self)
        return float(self._values.mean())

    def std(self, ddof: int = 1) -> float:
        _require(self)
        return float(self._values.std(ddof=ddof)) if self.n > ddof else 0.0


def _require(*samples):
    for s in samples:
        if len(s) == 0:
            raise EmptySample("operation needs a nonempty sample")


def _as_sample(s) -> OrderedSample:
    return s if isinstance(s, OrderedSample) else OrderedSample.from_values(s)


def plotting_positions(n: int) -> np.ndarray:
    """Percentile assigned to each order statistic of an n-sample."""
    return 100.0 * (np.arange(n) + 0.5) / n


def percentile_of(v: float, s) -> float:
    s = _as_sample(s)
    _require(s)
    lo = int(np.searchsorted(s.values, v, side="left"))
    hi = int(np.searchsorted(s.values, v, side="right"))
    return 100.0 * (lo + 0.5 * (hi - lo)) / s.n


def _interp(values: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Piecewise-linear read of sorted ``values`` at percentiles ``p``.

    Each segment is evaluated as ``a + t * (b - a)`` and clipped to
    ``[a, b]`` so the result is nondecreasing in ``p`` even under rounding.
    """
    n = values.size
    pos = plotting_positions(n)
    if n == 1:
        return np.full(p.shape, values[0])
    j = np.clip(np.searchsorted(pos, p, side="right") - 1, 0, n - 2)
    a, b = values[j], values[j + 1]
    t = (p - pos[j]) / (pos[j + 1] - pos[j])
    out = np.clip(a + t * (b - a), a, b)
    out = np.where(p <= pos[0], values[0], out)
    return np.where(p >= pos[-1], values[-1], out)


def value_at_percentile(s, p):
    """Inverse of :func:`percentile_of`: linear interpolation between
    plotting positions, clamped to the extreme order statistics.

    ``p`` may be a scalar or an array.
    """
    s = _as_sample(s)
    _require(s)
    p_arr = np.asarray(p, dtype=float)
    if np.any(~(p_arr >= 0.0) | ~(p_arr <= 100.0)):
        raise InvalidPercentile(f"percentile must lie in [0, 100], got {p!r}")
    out = _interp(s.values, p_arr)
    return float(out) if out.ndim == 0 else out


def interpolate_rows(rows: np.ndarray, p) -> np.ndarray:
    """``value_at_percentile`` applied to every row of a 2-D array of
    sorted samples at once."""
    rows = np.asarray(rows, dtype=float)
    p = np.atleast_1d(np.asarray(p, dtype=float))
    n = rows.shape[1]
    pos = plotting_positions(n)
    if n == 1:
        return np.repeat(rows[:, :1], p.size, axis=1)
    j = np.clip(np.searchsorted(pos, p, side="right") - 1, 0, n - 2)
    a, b = rows[:, j], rows[:, j + 1]
    t = (p - pos[j]) / (pos[j + 1] - pos[j])
    out = np.clip(a + t * (b - a), a, b)
    out = np.where(p <= pos[0], rows[:, :1], out)
    return np.where(p >= pos[-1], rows[:, -1:], out)


@dataclass
class HistogramBins:
    width: float = 0.5
    origin: float = 0.0
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def edges(self, index: int) -> tuple[float, float]:
        lo = self.origin + index * self.width
        return lo, lo + self.width

    def rows(self):
        """``(bin_lo, bin_hi, count)`` for every bin between the extremes,
        including empty interior bins."""
        if not self.counts:
            return []
        first, last = min(self.counts), max(self.counts)
        return [(*self.edges(i), self.counts.get(i, 0)) for i in range(first, last + 1)]


def histogram(s, width: float = 0.5, origin: float = 0.0) -> HistogramBins:
    if not width > 0:
        raise InvalidBinWidth(f"bin width must be positive, got {width!r}")
    s = _as_sample(s)
    _require(s)
    idx = np.floor((s.values - origin) / width).astype(int)
    keys, counts = np.unique(idx, return_counts=True)
    return HistogramBins(width, origin, {int(k): int(c) for k, c in zip(keys, counts)})


def league_average(teams, target_len: int = 162) -> OrderedSample:
    """Build the hypothetical league-average sample from all team samples.

    The pooled values are sorted and cut into ``target_len`` consecutive
    groups; the lower-middle element of each group is kept (the 15th of 30
    for a full 30-team season).  When the pool does not divide evenly the
    pool is read at ``target_len`` plotting positions instead.
    """
    teams = [_as_sample(t) for t in teams]
    if not teams:
        raise EmptySample("no team samples")
    _require(*teams)
    if target_len < 1:
        raise ValueError("target_len must be positive")
    pool = np.sort(np.concatenate([t.values for t in teams]))
    total = pool.size
    if total % target_len == 0:
        g = total // target_len
        ranks = g * np.arange(target_len) + (g + 1) // 2 - 1
        return OrderedSample(pool[ranks])
    return OrderedSample(_interp(pool, plotting_positions(target_len)))


@dataclass(frozen=True)
class QQPlot:
    x: np.ndarray
    y: np.ndarray

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def __len__(self):
        return int(self.x.size)


def qq_pairs(a, b) -> QQPlot:
    """Pair equal-percentile points of ``a`` (x) and ``b`` (y).

    Equal sizes pair order statistics directly; otherwise the larger sample
    is read at the smaller sample's plotting positions.
    """
    a, b = _as_sample(a), _as_sample(b)
    _require(a, b)
    if a.n == b.n:
        return QQPlot(a.values.copy(), b.values.copy())
    if a.n < b.n:
        return QQPlot(a.values.copy(), np.atleast_1d(value_at_percentile(b, plotting_positions(a.n))))
    return QQPlot(np.atleast_1d(value_at_percentile(a, plotting_positions(b.n))), b.values.copy())


def _moments(q: QQPlot):
    x = np.asarray(q.x, dtype=float)
    y = np.asarray(q.y, dtype=float)
    if x.size < 2:
        raise DegenerateCorrelation("need at least two points")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateCorrelation("zero variance in x or y")
    return x, y, sxx, syy, float(dx @ dy)


def pearson(q: QQPlot) -> float:
    _, _, sxx, syy, sxy = _moments(q)
    return max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    pearson_r: float

    def __call__(self, x):
        return self.slope * x + self.intercept


def linear_fit(q: QQPlot) -> LinearFit:
    """Ordinary least squares of y on x, with the point set's correlation."""
    x, y, sxx, syy, sxy = _moments(q)
    slope = sxy / sxx
    intercept = float(y.mean() - slope * x.mean())
    r = max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))
    return LinearFit(slope, intercept, r)


def ks_statistic(a, b) -> float:
    """Largest vertical gap between the two empirical CDFs."""
    a, b = _as_sample(a), _as_sample(b)
    _require(a, b)
    grid = np.concatenate([a.values, b.values])
    fa = np.searchsorted(a.values, grid, side="right") / a.n
    fb = np.searchsorted(b.values, grid, side="right") / b.n
    return float(np.max(np.abs(fa - fb)))
