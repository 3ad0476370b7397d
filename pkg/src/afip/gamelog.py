"""Game-log ingestion: batting/pitching CSV parsing and per-game matching.

Input schemas (UTF-8, comma separated, header required)::

    batting:  team,season,game_index,date,opponent,home,hr,bb,hbp,so
    pitching: team,season,game_index,date,opponent,pitcher,ip

``ip`` uses the usual thirds notation, so ``5.2`` is five innings and two
outs.  Matching a team's batting rows against the opponent's pitching rows
gives one :class:`MatchedGame` per batting row with the opponent's outs
summed over all of its pitchers, which handles walk-offs, skipped bottom
halves and extra innings without assuming 27 outs.
"""

from __future__ import annotations

import csv
import datetime as dt
import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .errors import AmbiguousMatch, MalformedInnings, ParseError, SchemaError, UnmatchedGame

BATTING_COLUMNS = ("team", "season", "game_index", "date", "opponent", "home", "hr", "bb", "hbp", "so")
PITCHING_COLUMNS = ("team", "season", "game_index", "date", "opponent", "pitcher", "ip")
DATASET_COLUMNS = (
    "team", "season", "game_index", "date", "opponent", "home",
    "hr", "bb_hbp", "so", "opp_outs", "opponent_fip",
)

_INNINGS_RE = re.compile(r"^(\d+)(?:\.(\d))?$")
_TRUE = {"1", "true", "t", "yes", "y", "h", "home"}
_FALSE = {"0", "false", "f", "no", "n", "a", "away", "@"}


@dataclass(frozen=True)
class BattingGameRow:
    team_id: str
    season: int
    game_index: int
    date: dt.date
    opponent_id: str
    is_home: bool
    hr: int
    bb: int
    hbp: int
    so: int


@dataclass(frozen=True)
class PitchingGameRow:
    team_id: str
    season: int
    game_index: int
    date: dt.date
    opponent_id: str
    pitcher_id: str
    outs: int


@dataclass(frozen=True)
class MatchedGame:
    """One team-game: the team's batting counts against the opponent's staff.

    ``game_index`` is carried along so doubleheaders stay distinguishable
    after a round trip through the dataset CSV.
    """

    team_id: str
    opponent_id: str
    season: int
    date: dt.date
    is_home: bool
    hr: int
    bb_hbp: int
    so: int
    opp_outs: int
    game_index: int = 0


def parse_innings(text) -> int:
    """Convert innings-pitched notation to outs: ``"5.2"`` -> 17."""
    s = str(text).strip()
    m = _INNINGS_RE.match(s)
    if not m:
        raise MalformedInnings(f"not an innings value: {text!r}")
    whole, frac = m.group(1), m.group(2)
    thirds = int(frac) if frac is not None else 0
    if thirds > 2:
        raise MalformedInnings(f"fractional part must be 0, 1 or 2: {text!r}")
    return int(whole) * 3 + thirds


def format_innings(outs: int) -> str:
    return f"{outs // 3}.{outs % 3}"


def _read_rows(path, required):
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip().lower() for h in (reader.fieldnames or [])]
        for col in required:
            if col not in header:
                raise SchemaError(col, path)
        reader.fieldnames = header
        for row in reader:
            # reader.line_num is the physical line just consumed
            yield reader.line_num, {k: (v.strip() if isinstance(v, str) else v) for k, v in row.items()}


def _int(row, key, line, path, minimum=0):
    raw = row.get(key)
    try:
        val = int(raw)
    except (TypeError, ValueError):
        raise ParseError(f"column {key!r}: expected integer, got {raw!r}", line, path) from None
    if minimum is not None and val < minimum:
        raise ParseError(f"column {key!r}: {val} is below {minimum}", line, path)
    return val


def _date(row, line, path):
    raw = row.get("date")
    try:
        return dt.date.fromisoformat(raw)
    except (TypeError, ValueError):
        raise ParseError(f"column 'date': expected ISO date, got {raw!r}", line, path) from None


def _flag(row, key, line, path):
    raw = (row.get(key) or "").lower()
    if raw in _TRUE:
        return True
    if raw in _FALSE:
        return False
    raise ParseError(f"column {key!r}: expected home/away flag, got {row.get(key)!r}", line, path)


def _keep(row, season, team_id, line, path):
    if team_id is not None and row["team"] != team_id:
        return False
    if season is not None and _int(row, "season", line, path) != int(season):
        return False
    return True


def _team(row, line, path):
    team, opp = row["team"], row["opponent"]
    if not team or not opp:
        raise ParseError("empty team or opponent code", line, path)
    if team == opp:
        raise ParseError(f"team and opponent are both {team!r}", line, path)
    return team, opp


def parse_batting_log(path, season=None, team_id=None) -> list[BattingGameRow]:
    """Read a batting game log.  ``season``/``team_id`` filter multi-team files."""
    rows = []
    last_index = {}
    for line, row in _read_rows(path, BATTING_COLUMNS):
        if not _keep(row, season, team_id, line, path):
            continue
        team, opp = _team(row, line, path)
        rec = BattingGameRow(
            team_id=team,
            season=_int(row, "season", line, path),
            game_index=_int(row, "game_index", line, path, minimum=1),
            date=_date(row, line, path),
            opponent_id=opp,
            is_home=_flag(row, "home", line, path),
            hr=_int(row, "hr", line, path),
            bb=_int(row, "bb", line, path),
            hbp=_int(row, "hbp", line, path),
            so=_int(row, "so", line, path),
        )
        key = (rec.team_id, rec.season)
        if key in last_index and rec.game_index <= last_index[key]:
            raise ParseError(f"game_index {rec.game_index} not increasing for {rec.team_id}", line, path)
        last_index[key] = rec.game_index
        rows.append(rec)
    return rows


def parse_pitching_log(path, season=None, team_id=None) -> list[PitchingGameRow]:
    """Read a pitching game log; one row per pitcher appearance."""
    rows = []
    for line, row in _read_rows(path, PITCHING_COLUMNS):
        if not _keep(row, season, team_id, line, path):
            continue
        team, opp = _team(row, line, path)
        try:
            outs = parse_innings(row["ip"])
        except MalformedInnings as exc:
            raise ParseError(str(exc), line, path) from None
        rows.append(PitchingGameRow(
            team_id=team,
            season=_int(row, "season", line, path),
            game_index=_int(row, "game_index", line, path, minimum=1),
            date=_date(row, line, path),
            opponent_id=opp,
            pitcher_id=row["pitcher"],
            outs=outs,
        ))
    return rows


def match_games(batting, pitching) -> list[MatchedGame]:
    """Join each batting row with the opponent's pitching lines for that game.

    Games between the same two teams on the same date (doubleheaders) are
    paired by their order within the date on each side.
    """
    # (team, opponent, season, date) -> {game_index: total outs}
    staff = defaultdict(lambda: defaultdict(int))
    for p in pitching:
        staff[(p.team_id, p.opponent_id, p.season, p.date)][p.game_index] += p.outs

    same_day = defaultdict(list)
    for b in batting:
        same_day[(b.team_id, b.opponent_id, b.season, b.date)].append(b)

    ordinal = {}
    for key, games in same_day.items():
        team, opp, season, date = key
        opp_games = staff.get((opp, team, season, date))
        if not opp_games:
            continue
        if len(opp_games) != len(games):
            raise AmbiguousMatch(
                f"{team} vs {opp} on {date}: {len(games)} batting game(s) but "
                f"{len(opp_games)} opposing pitching game(s)"
            )
        opp_sorted = sorted(opp_games)
        for k, b in enumerate(sorted(games, key=lambda g: g.game_index)):
            ordinal[id(b)] = opp_games[opp_sorted[k]]

    out = []
    for b in batting:
        if id(b) not in ordinal:
            raise UnmatchedGame(b.date.isoformat(), b.opponent_id, b.team_id)
        out.append(MatchedGame(
            team_id=b.team_id,
            opponent_id=b.opponent_id,
            season=b.season,
            date=b.date,
            is_home=b.is_home,
            hr=b.hr,
            bb_hbp=b.bb + b.hbp,
            so=b.so,
            opp_outs=ordinal[id(b)],
            game_index=b.game_index,
        ))
    return out


def write_dataset(games, path, opponent_fip=None):
    """Write matched games to the dataset CSV.

    ``opponent_fip`` is an optional sequence of per-game values aligned with
    ``games``; ``None`` entries (skipped games) are written as blanks.
    """
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(DATASET_COLUMNS)
        for i, g in enumerate(games):
            fip = "" if opponent_fip is None or opponent_fip[i] is None else repr(float(opponent_fip[i]))
            w.writerow([
                g.team_id, g.season, g.game_index, g.date.isoformat(), g.opponent_id,
                int(g.is_home), g.hr, g.bb_hbp, g.so, g.opp_outs, fip,
            ])


@dataclass(frozen=True)
class DatasetRow:
    """A dataset line.  Counts are ``None`` for synthetic rows that only
    carry an ``opponent_fip`` value."""

    team_id: str
    season: int
    game_index: int
    date: dt.date
    opponent_id: str
    is_home: bool
    hr: int | None
    bb_hbp: int | None
    so: int | None
    opp_outs: int | None
    opponent_fip: float | None

    def as_matched(self) -> MatchedGame:
        return MatchedGame(
            team_id=self.team_id, opponent_id=self.opponent_id, season=self.season,
            date=self.date, is_home=self.is_home, hr=self.hr, bb_hbp=self.bb_hbp,
            so=self.so, opp_outs=self.opp_outs, game_index=self.game_index,
        )


def write_dataset_rows(rows, path):
    """Write :class:`DatasetRow` records; missing counts become blanks."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(DATASET_COLUMNS)
        for r in rows:
            counts = ["" if v is None else v for v in (r.hr, r.bb_hbp, r.so, r.opp_outs)]
            fip = "" if r.opponent_fip is None else repr(float(r.opponent_fip))
            w.writerow([r.team_id, r.season, r.game_index, r.date.isoformat(), r.opponent_id,
                        int(r.is_home), *counts, fip])


def read_dataset_rows(path) -> list[DatasetRow]:
    required = DATASET_COLUMNS[:-1]
    out = []
    for line, row in _read_rows(path, required):
        def opt(key):
            return None if row.get(key, "") in ("", None) else _int(row, key, line, path)

        fip_raw = row.get("opponent_fip") or ""
        try:
            fip = float(fip_raw) if fip_raw else None
        except ValueError:
            raise ParseError(f"column 'opponent_fip': expected number, got {fip_raw!r}", line, path) from None
        counts = [opt(k) for k in ("hr", "bb_hbp", "so", "opp_outs")]
        if fip is None and any(c is None for c in counts):
            raise ParseError("row has neither counts nor opponent_fip", line, path)
        team, opp = _team(row, line, path)
        out.append(DatasetRow(
            team, _int(row, "season", line, path), _int(row, "game_index", line, path, minimum=1),
            _date(row, line, path), opp, _flag(row, "home", line, path), *counts, fip,
        ))
    return out


def read_dataset(path) -> list[MatchedGame]:
    """Read the dataset CSV back into :class:`MatchedGame` records."""
    rows = read_dataset_rows(path)
    for r in rows:
        if r.opp_outs is None:
            raise ParseError(f"{r.team_id} game {r.game_index} has no counting stats", None, path)
    return [r.as_matched() for r in rows]


PITCHER_LINE_COLUMNS = PITCHING_COLUMNS + ("hr", "so")


def parse_pitcher_lines(path, season=None, team_id=None):
    """Read individual pitcher game lines with their own counting stats.

    Same layout as the pitching log plus ``hr``, ``so`` and either a
    combined ``bb_hbp`` column or separate ``bb`` and ``hbp`` columns.
    """
    from .fip import PitcherGameLine

    out = []
    for line, row in _read_rows(path, PITCHER_LINE_COLUMNS):
        if not _keep(row, season, team_id, line, path):
            continue
        team, opp = _team(row, line, path)
        if row.get("bb_hbp") not in (None, ""):
            bb_hbp = _int(row, "bb_hbp", line, path)
        elif "bb" in row and "hbp" in row:
            bb_hbp = _int(row, "bb", line, path) + _int(row, "hbp", line, path)
        else:
            raise SchemaError("bb_hbp", path)
        try:
            outs = parse_innings(row["ip"])
        except MalformedInnings as exc:
            raise ParseError(str(exc), line, path) from None
        out.append(PitcherGameLine(
            pitcher_id=row["pitcher"],
            date=_date(row, line, path),
            opponent_id=opp,
            hr=_int(row, "hr", line, path),
            bb_hbp=bb_hbp,
            so=_int(row, "so", line, path),
            outs=outs,
            team_id=team,
            game_index=_int(row, "game_index", line, path, minimum=1),
        ))
    return out


def write_pitcher_lines(lines, path, season):
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PITCHING_COLUMNS + ("hr", "bb_hbp", "so"))
        for ln in lines:
            w.writerow([ln.team_id, season, ln.game_index, ln.date.isoformat(), ln.opponent_id,
                        ln.pitcher_id, format_innings(ln.outs), ln.hr, ln.bb_hbp, ln.so])
