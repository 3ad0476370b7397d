"""Home/away distribution check for a team's opponent-FIP sample.

If a team's offense were being artificially helped at home, the home and
away opponent-FIP samples would stop being affine copies of each other and
their qq-plot would bend.  The observed qq correlation is ranked against a
permutation null built by randomly re-splitting the pooled season into
halves of the same sizes, so the flag does not depend on a hand-picked
correlation cutoff alone.  A clean result only removes one indicator; it
proves nothing either way.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .empirics import (
    OrderedSample,
    interpolate_rows,
    ks_statistic,
    pearson,
    percentile_of,
    plotting_positions,
    qq_pairs,
)
from .errors import OneSidedSeason

DEFAULT_THRESHOLD = 0.98
NULL_ALPHA = 5.0


@dataclass(frozen=True)
class SplitReport:
    team_id: str
    n_home: int
    n_away: int
    pearson_r: float
    ks: float
    permutations: int
    null_percentile: float | None
    flagged: bool
    seed: int | None
    threshold: float = DEFAULT_THRESHOLD

    def to_json(self) -> str:
        d = asdict(self)
        d["team"] = d.pop("team_id")
        order = ["team", "n_home", "n_away", "pearson_r", "ks", "permutations",
                 "null_percentile", "flagged", "seed", "threshold"]
        return json.dumps({k: d[k] for k in order}, indent=2) + "\n"


def split_home_away(series) -> tuple[OrderedSample, OrderedSample]:
    """Partition an :class:`~afip.fip.OpponentSeries` (or any iterable of
    entries with ``is_home``/``value``) into sorted home and away samples."""
    entries = series.entries if hasattr(series, "entries") else list(series)
    home = [e.value for e in entries if e.is_home]
    away = [e.value for e in entries if not e.is_home]
    if not home or not away:
        raise OneSidedSeason(f"season has {len(home)} home and {len(away)} away games")
    return OrderedSample.from_values(home), OrderedSample.from_values(away)


def _rowwise_pearson(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    dx = x - x.mean(axis=1, keepdims=True)
    dy = y - y.mean(axis=1, keepdims=True)
    sxx = np.einsum("ij,ij->i", dx, dx)
    syy = np.einsum("ij,ij->i", dy, dy)
    sxy = np.einsum("ij,ij->i", dx, dy)
    with np.errstate(invalid="ignore", divide="ignore"):
        r = sxy / np.sqrt(sxx * syy)
    return np.clip(r, -1.0, 1.0)


def null_correlations(pooled, n_home: int, permutations: int, rng) -> np.ndarray:
    """qq correlations for ``permutations`` random home/away relabelings.

    Each row is shuffled independently; qq pairing mirrors :func:`qq_pairs`
    (interpolating the larger half when sizes differ).  Degenerate splits
    (a constant half) are dropped.
    """
    pooled = np.asarray(pooled, dtype=float)
    n_away = pooled.size - n_home
    shuffled = rng.permuted(np.broadcast_to(pooled, (permutations, pooled.size)), axis=1)
    home = np.sort(shuffled[:, :n_home], axis=1)
    away = np.sort(shuffled[:, n_home:], axis=1)
    if n_home < n_away:
        away = interpolate_rows(away, plotting_positions(n_home))
    elif n_away < n_home:
        home = interpolate_rows(home, plotting_positions(n_away))
    r = _rowwise_pearson(home, away)
    return r[np.isfinite(r)]


def tamper_check(home, away, permutations: int = 1000, threshold: float = DEFAULT_THRESHOLD,
                 seed: int | None = 0, team_id: str = "") -> SplitReport:
    if permutations < 0:
        raise ValueError("permutations must be >= 0")
    home = home if isinstance(home, OrderedSample) else OrderedSample.from_values(home)
    away = away if isinstance(away, OrderedSample) else OrderedSample.from_values(away)
    r = pearson(qq_pairs(home, away))
    ks = ks_statistic(home, away)
    null_pct = None
    if permutations > 0:
        rng = np.random.default_rng(seed)
        pooled = np.concatenate([home.values, away.values])
        null = null_correlations(pooled, home.n, permutations, rng)
        if null.size:
            null_pct = percentile_of(r, OrderedSample.from_values(null))
    flagged = r < threshold or (null_pct is not None and null_pct < NULL_ALPHA)
    return SplitReport(team_id, home.n, away.n, r, ks, permutations, null_pct, bool(flagged), seed, threshold)
