"""Synthetic seasons built to satisfy the universality hypothesis.

Every team's opponent-FIP distribution is a scaled and shifted copy of one
base shape.  ``Noise.NONE`` evaluates the transformed base at the shared
plotting positions (no randomness at all); ``Noise.IID_RESAMPLE`` draws
independent games from the transformed distribution.  All randomness comes
from per-team substreams of a single seed.
"""

from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .empirics import OrderedSample, linear_fit, plotting_positions, qq_pairs, value_at_percentile
from .errors import InvalidTransform
from .fip import PitcherGameLine
from .gamelog import DatasetRow

MLB_TEAMS = (
    "ARI", "ATL", "BAL", "BOS", "CHC", "CHW", "CIN", "CLE", "COL", "DET",
    "HOU", "KCR", "LAA", "LAD", "MIA", "MIL", "MIN", "NYM", "NYY", "OAK",
    "PHI", "PIT", "SDP", "SEA", "SFG", "STL", "TBR", "TEX", "TOR", "WSN",
)


class Noise(str, enum.Enum):
    NONE = "none"
    IID_RESAMPLE = "iid"


@dataclass(frozen=True)
class BaseShape:
    """Either a shifted gamma (``kind="gamma"``, params = loc, scale, shape)
    or an empirical sample (``kind="empirical"``, params = sorted values)."""

    kind: str
    params: tuple

    @classmethod
    def gamma(cls, mean: float = 5.0, sd: float = 2.6, shape: float = 6.0) -> BaseShape:
        # right skew 2/sqrt(shape); shape=6 puts the lower tail near -0.4
        scale = sd / np.sqrt(shape)
        return cls("gamma", (mean - shape * scale, scale, shape))

    @classmethod
    def empirical(cls, values) -> BaseShape:
        vals = tuple(float(v) for v in np.sort(np.asarray(values, dtype=float)))
        if not vals:
            raise ValueError("empirical base needs values")
        return cls("empirical", vals)

    def ppf(self, q):
        """Quantile function on probabilities in [0, 1]."""
        q = np.asarray(q, dtype=float)
        if self.kind == "gamma":
            loc, scale, shape = self.params
            return loc + scale * stats.gamma.ppf(q, shape)
        if self.kind == "empirical":
            return value_at_percentile(OrderedSample(self.params), 100.0 * q)
        raise ValueError(f"unknown base kind {self.kind!r}")

    def quantiles(self, n: int) -> np.ndarray:
        return np.atleast_1d(self.ppf(plotting_positions(n) / 100.0))

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if self.kind == "gamma":
            loc, scale, shape = self.params
            return loc + scale * rng.gamma(shape, 1.0, size=n)
        return np.atleast_1d(self.ppf(rng.random(n)))


@dataclass(frozen=True)
class TeamTransform:
    team_id: str
    scale: float
    shift: float

    def __post_init__(self):
        if not self.scale > 0:
            raise InvalidTransform(f"{self.team_id}: scale must be positive, got {self.scale!r}")

    def apply(self, x):
        return self.scale * np.asarray(x, dtype=float) + self.shift


def spread_transforms(team_ids=MLB_TEAMS, seed=0, scale_range=(0.8, 1.25), shift_range=(-0.5, 0.5)):
    rng = np.random.default_rng(seed)
    return [
        TeamTransform(t, float(rng.uniform(*scale_range)), float(rng.uniform(*shift_range)))
        for t in team_ids
    ]


def generate_season(base: BaseShape, transforms, games_per_team: int = 162,
                    noise=Noise.NONE, seed: int = 0) -> dict[str, OrderedSample]:
    if games_per_team < 1:
        raise ValueError("games_per_team must be >= 1")
    noise = Noise(noise)
    transforms = list(transforms)
    streams = np.random.SeedSequence(seed).spawn(len(transforms))
    grid = base.quantiles(games_per_team) if noise is Noise.NONE else None
    season = {}
    for tr, ss in zip(transforms, streams):
        if not isinstance(tr, TeamTransform):
            tr = TeamTransform(*tr)
        if noise is Noise.NONE:
            vals = tr.apply(grid)
        else:
            vals = tr.apply(base.sample(games_per_team, np.random.default_rng(ss)))
        season[tr.team_id] = OrderedSample.from_values(vals)
    return season


def recover_transform(team: OrderedSample, league: OrderedSample, team_id: str = "") -> TeamTransform:
    """Estimate the affine map league -> team by inverting the team-on-x
    least-squares line of their qq-plot."""
    fit = linear_fit(qq_pairs(team, league))
    return TeamTransform(team_id, 1.0 / fit.slope, -fit.intercept / fit.slope)


def dataset_rows(season_samples: dict[str, OrderedSample], season: int = 2019, seed: int = 0,
                 start=dt.date(2019, 3, 28)) -> list[DatasetRow]:
    """Attach placeholder schedule metadata so a synthetic season can be
    written in the dataset CSV layout.

    Games are put in a seeded random order, opponents cycle through the other
    teams, and home/away alternates (so 162 games split 81/81).
    """
    teams = sorted(season_samples)
    rng = np.random.default_rng(seed)
    rows = []
    for k, team in enumerate(teams):
        values = rng.permutation(season_samples[team].values)
        others = [t for t in teams if t != team] or ["OPP"]
        for i, v in enumerate(values):
            rows.append(DatasetRow(
                team, season, i + 1, start + dt.timedelta(days=i),
                others[(i + k) % len(others)], i % 2 == 0,
                None, None, None, None, float(v),
            ))
    return rows


def pitcher_lines(team_ids, n_pitchers: int, starts: int = 30, seed: int = 0,
                  start=dt.date(2019, 3, 28)) -> list[PitcherGameLine]:
    """Synthetic starting-pitcher lines with Poisson counting stats.

    Each pitcher gets his own talent multipliers around typical per-nine
    rates (1.3 HR, 3.5 BB+HBP, 8.8 SO) and a random schedule of opponents.
    """
    team_ids = list(team_ids)
    rng = np.random.default_rng(seed)
    out = []
    for k in range(n_pitchers):
        own = team_ids[k % len(team_ids)]
        opponents = [t for t in team_ids if t != own] or team_ids
        hr9, bb9, so9 = 1.3 * rng.uniform(0.6, 1.4), 3.5 * rng.uniform(0.6, 1.4), 8.8 * rng.uniform(0.7, 1.4)
        for s in range(starts):
            outs = int(rng.integers(12, 23))
            ip = outs / 27.0
            out.append(PitcherGameLine(
                pitcher_id=f"P{k + 1:03d}",
                date=start + dt.timedelta(days=5 * s),
                opponent_id=str(rng.choice(opponents)),
                hr=int(rng.poisson(hr9 * ip)),
                bb_hbp=int(rng.poisson(bb9 * ip)),
                so=int(rng.poisson(so9 * ip)),
                outs=outs,
                team_id=own,
                game_index=s + 1,
            ))
    return out
