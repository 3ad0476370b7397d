"""Fielding Independent Pitching from counting stats.

    FIP = (13*HR + 3*(BB+HBP) - 2*SO) / IP + constant

IP is carried as outs (three per inning) throughout so no fractional
innings are ever stored.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from .empirics import OrderedSample
from .errors import MissingFipConstant, ParseError, SchemaError, UndefinedFip

log = logging.getLogger(__name__)

CONSTANT_WINDOW = (2.5, 4.0)


@dataclass(frozen=True)
class FipConstant:
    season: int
    value: float

    def __post_init__(self):
        lo, hi = CONSTANT_WINDOW
        if not lo <= self.value <= hi:
            log.warning("FIP constant %.3f for %s is outside the usual [%.1f, %.1f] range",
                        self.value, self.season, lo, hi)


@dataclass(frozen=True)
class PitcherGameLine:
    pitcher_id: str
    date: object
    opponent_id: str
    hr: int
    bb_hbp: int
    so: int
    outs: int
    team_id: str = ""
    game_index: int = 0


def _const(c) -> float:
    return float(c.value) if isinstance(c, FipConstant) else float(c)


def fip_value(hr, bb_hbp, so, outs, c) -> float:
    """FIP for one line.  ``c`` is a :class:`FipConstant` or a plain number.

    Values below the constant (even negative) are legitimate for
    high-strikeout, homerless outings.
    """
    if outs <= 0:
        raise UndefinedFip(f"FIP undefined for {outs} outs")
    return (13 * hr + 3 * bb_hbp - 2 * so) / (outs / 3) + _const(c)


def load_fip_constants(path) -> dict[int, FipConstant]:
    """Read a ``season,fip_constant`` CSV."""
    path = Path(path)
    out = {}
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip().lower() for h in (reader.fieldnames or [])]
        for col in ("season", "fip_constant"):
            if col not in header:
                raise SchemaError(col, path)
        reader.fieldnames = header
        for row in reader:
            try:
                season = int(row["season"])
                value = float(row["fip_constant"])
            except (TypeError, ValueError):
                raise ParseError(f"bad constant row {row!r}", reader.line_num, path) from None
            if not math.isfinite(value):
                raise ParseError(f"non-finite constant {value!r}", reader.line_num, path)
            out[season] = FipConstant(season, value)
    return out


@dataclass(frozen=True)
class SeriesEntry:
    date: object
    opponent_id: str
    is_home: bool
    value: float
    game_index: int = 0


@dataclass
class OpponentSeries:
    """A team's per-game opponent FIP values.

    ``entries`` keeps schedule order and the (date, opponent, home) tags;
    ``sample`` is the same values sorted.  ``skipped`` lists games left out
    because the opponent recorded no outs.
    """

    team_id: str
    season: int
    entries: list[SeriesEntry]
    skipped: list[object] = field(default_factory=list)

    @property
    def sample(self) -> OrderedSample:
        return OrderedSample.from_values([e.value for e in self.entries])

    def __len__(self):
        return len(self.entries)


def opponent_fip_series(games, c) -> OpponentSeries:
    """Per-game FIP of the opposing staff, computed from what ``games``'
    team did at the plate."""
    games = list(games)
    if not games:
        raise ValueError("no games")
    keys = {(g.team_id, g.season) for g in games}
    if len(keys) != 1:
        raise ValueError(f"games span several team/seasons: {sorted(keys)}")
    team, season = keys.pop()
    entries, skipped = [], []
    for g in games:
        try:
            v = fip_value(g.hr, g.bb_hbp, g.so, g.opp_outs, c)
        except UndefinedFip:
            log.warning("%s %s vs %s: opponent recorded no outs, skipping", team, g.date, g.opponent_id)
            skipped.append(g)
            continue
        entries.append(SeriesEntry(g.date, g.opponent_id, g.is_home, v, g.game_index))
    return OpponentSeries(team, season, entries, skipped)


def series_from_rows(rows, constants=None) -> dict[str, OpponentSeries]:
    """Group dataset rows into per-team series.

    Rows carrying an ``opponent_fip`` value use it as is (synthetic data);
    rows with only counting stats need the season's constant.
    """
    by_team: dict[str, list] = {}
    for r in rows:
        by_team.setdefault(r.team_id, []).append(r)
    out = {}
    for team, team_rows in sorted(by_team.items()):
        seasons = {r.season for r in team_rows}
        if len(seasons) != 1:
            raise ValueError(f"{team}: rows span seasons {sorted(seasons)}")
        season = seasons.pop()
        entries, skipped = [], []
        for r in team_rows:
            if r.opponent_fip is not None:
                entries.append(SeriesEntry(r.date, r.opponent_id, r.is_home, r.opponent_fip, r.game_index))
                continue
            if constants is None or season not in constants:
                raise MissingFipConstant(f"{team}: no opponent_fip values and no FIP constant for {season}")
            try:
                v = fip_value(r.hr, r.bb_hbp, r.so, r.opp_outs, constants[season])
            except UndefinedFip:
                log.warning("%s %s vs %s: opponent recorded no outs, skipping", team, r.date, r.opponent_id)
                skipped.append(r)
                continue
            entries.append(SeriesEntry(r.date, r.opponent_id, r.is_home, v, r.game_index))
        out[team] = OpponentSeries(team, season, entries, skipped)
    return out
