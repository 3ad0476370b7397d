"""Schedule-adjusted FIP (aFIP).

Each start is re-expressed on the league-average scale, either by
equipercentile equating against the opponent's opponent-FIP sample or by
the least-squares line of the opponent-vs-league qq-plot.  Season values
are the outs-weighted mean of the per-game results, which for unadjusted
FIP reproduces the pooled-counts season FIP exactly.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .empirics import LinearFit, OrderedSample, linear_fit, percentile_of, qq_pairs, value_at_percentile
from .errors import EmptySample, UnknownOpponent
from .fip import FipConstant, fip_value


class Method(str, enum.Enum):
    EQP = "eqp"
    SI = "si"


def afip_game_eqp(raw_fip: float, team: OrderedSample, league: OrderedSample) -> float:
    """Map ``raw_fip`` to the league value holding the same percentile it
    holds in the opponent's sample."""
    return value_at_percentile(league, percentile_of(raw_fip, team))


def afip_game_si(raw_fip: float, fit: LinearFit) -> float:
    return fit.slope * raw_fip + fit.intercept


def team_fit(team: OrderedSample, league: OrderedSample) -> LinearFit:
    """Least-squares line with the team on x and the league average on y."""
    return linear_fit(qq_pairs(team, league))


@dataclass(frozen=True)
class AfipGame:
    pitcher_id: str
    date: object
    opponent_id: str
    raw_fip: float
    afip_eqp: float
    afip_si: float
    outs: int


def season_afip(games, method) -> float:
    games = list(games)
    if not games:
        raise EmptySample("no games to aggregate")
    method = Method(method)
    weights = np.array([g.outs for g in games], dtype=float)
    if np.any(weights <= 0):
        raise ValueError("every game needs outs > 0")
    vals = np.array([g.afip_eqp if method is Method.EQP else g.afip_si for g in games])
    return float(weights @ vals / weights.sum())


@dataclass(frozen=True)
class AfipRecord:
    pitcher_id: str
    season: int | None
    fip: float
    afip_si: float
    afip_eqp: float

    @property
    def si_diff(self) -> float:
        return self.afip_si - self.fip

    @property
    def eqp_diff(self) -> float:
        return self.afip_eqp - self.fip

    @property
    def eqp_minus_si(self) -> float:
        return self.afip_eqp - self.afip_si


@dataclass
class AfipTable:
    records: list[AfipRecord]
    games: dict[str, list[AfipGame]] = field(default_factory=dict)

    def summary(self) -> dict:
        if not self.records:
            return {"n_pitchers": 0}
        gap = np.array([abs(r.eqp_minus_si) for r in self.records])
        si = np.array([abs(r.si_diff) for r in self.records])
        eqp = np.array([abs(r.eqp_diff) for r in self.records])
        return {
            "n_pitchers": len(self.records),
            "mean_abs_eqp_minus_si": float(gap.mean()),
            "max_abs_eqp_minus_si": float(gap.max()),
            "n_eqp_minus_si_above_0.15": int((gap > 0.15).sum()),
            "n_eqp_minus_si_above_0.20": int((gap > 0.20).sum()),
            "mean_abs_si_diff": float(si.mean()),
            "mean_abs_eqp_diff": float(eqp.mean()),
            "n_si_diff_above_0.20": int((si > 0.20).sum()),
            "n_eqp_diff_above_0.20": int((eqp > 0.20).sum()),
            "n_both_diff_above_0.20": int(((si > 0.20) & (eqp > 0.20)).sum()),
        }


def afip_table(pitcher_logs, team_samples, league: OrderedSample, c) -> AfipTable:
    """One :class:`AfipRecord` per pitcher, sorted by season FIP.

    ``pitcher_logs`` is either a mapping ``pitcher -> lines`` or a flat
    iterable of :class:`PitcherGameLine`.  Lines with zero outs count toward
    the season FIP but carry no weight in the per-game aggregation.
    """
    if isinstance(pitcher_logs, dict):
        by_pitcher = {k: list(v) for k, v in pitcher_logs.items()}
    else:
        by_pitcher = defaultdict(list)
        for ln in pitcher_logs:
            by_pitcher[ln.pitcher_id].append(ln)

    fits: dict[str, LinearFit] = {}
    records, all_games = [], {}
    for pid, lines in by_pitcher.items():
        games = []
        for ln in lines:
            team = team_samples.get(ln.opponent_id)
            if team is None:
                raise UnknownOpponent(pid, ln.date, ln.opponent_id)
            if ln.outs <= 0:
                continue
            if ln.opponent_id not in fits:
                fits[ln.opponent_id] = team_fit(team, league)
            raw = fip_value(ln.hr, ln.bb_hbp, ln.so, ln.outs, c)
            games.append(AfipGame(
                pid, ln.date, ln.opponent_id, raw,
                afip_game_eqp(raw, team, league),
                afip_game_si(raw, fits[ln.opponent_id]),
                ln.outs,
            ))
        if not games:
            continue
        season_fip = fip_value(
            sum(ln.hr for ln in lines), sum(ln.bb_hbp for ln in lines),
            sum(ln.so for ln in lines), sum(ln.outs for ln in lines), c,
        )
        records.append(AfipRecord(
            pid, c.season if isinstance(c, FipConstant) else None, season_fip,
            season_afip(games, Method.SI), season_afip(games, Method.EQP),
        ))
        all_games[pid] = games
    records.sort(key=lambda r: (r.fip, r.pitcher_id))
    return AfipTable(records, all_games)

