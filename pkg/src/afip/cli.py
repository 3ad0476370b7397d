"""Command-line entry point.

    afip ingest         --batting B.csv... --pitching P.csv... --out dataset.csv
    afip team-dist      --dataset d.csv --team NYY --out hist.csv [--svg h.svg]
    afip league-avg     --dataset d.csv --out league.csv
    afip qq             --dataset d.csv --team BOS --out qq.csv [--svg qq.svg]
    afip pearson-table  --dataset d.csv --out table.csv
    afip afip           --dataset d.csv --pitchers p.csv --method both --out a.csv
    afip tamper-check   --dataset d.csv --team HOU [--permutations N --seed S]
    afip synth          --out d.csv [--noise iid --seed S --pitchers p.csv]

Exit status: 0 on success, 1 on a data error (the diagnostic names the
error class), 2 on a usage error.  If ``--fip-constants`` is omitted,
``$AFIP_CONFIG_DIR/fip_constants.csv`` is used when it exists.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import empirics, equate, gamelog, report, synth, tamper
from .errors import AfipError, MissingFipConstant
from .fip import load_fip_constants, opponent_fip_series, series_from_rows

CONFIG_ENV = "AFIP_CONFIG_DIR"


def _constants(args):
    path = args.fip_constants
    if path is None and os.environ.get(CONFIG_ENV):
        candidate = Path(os.environ[CONFIG_ENV]) / "fip_constants.csv"
        if candidate.exists():
            path = candidate
    return load_fip_constants(path) if path is not None else None


def _load_series(args):
    rows = gamelog.read_dataset_rows(args.dataset)
    if args.season is not None:
        rows = [r for r in rows if r.season == args.season]
    seasons = {r.season for r in rows}
    if len(seasons) > 1:
        raise AfipError(f"dataset spans seasons {sorted(seasons)}; pick one with --season")
    series = series_from_rows(rows, _constants(args))
    for s in series.values():
        for g in s.skipped:
            print(f"skip: {s.team_id} {g.date} vs {g.opponent_id}: opponent recorded 0 outs", file=sys.stderr)
    return series


def _team(series, team):
    if team not in series:
        raise AfipError(f"team {team!r} not in dataset (have {', '.join(sorted(series))})")
    return series[team]


def _league(series, target_len):
    return empirics.league_average([s.sample for s in series.values()], target_len)


def cmd_ingest(args):
    batting = [r for p in args.batting for r in gamelog.parse_batting_log(p, args.season)]
    pitching = [r for p in args.pitching for r in gamelog.parse_pitching_log(p, args.season)]
    games = gamelog.match_games(batting, pitching)
    constants = _constants(args)
    fips = None
    if constants is not None:
        fips = []
        by_team = {}
        for g in games:
            by_team.setdefault((g.team_id, g.season), []).append(g)
        value = {}
        for (team, season), team_games in by_team.items():
            if season not in constants:
                raise MissingFipConstant(f"no FIP constant for season {season}")
            s = opponent_fip_series(team_games, constants[season])
            for g in s.skipped:
                print(f"skip: {team} {g.date} vs {g.opponent_id}: opponent recorded 0 outs", file=sys.stderr)
            for e in s.entries:
                value[(team, season, e.game_index)] = e.value
        fips = [value.get((g.team_id, g.season, g.game_index)) for g in games]
    gamelog.write_dataset(games, args.out, fips)
    print(f"wrote {len(games)} games to {args.out}")


def cmd_team_dist(args):
    s = _team(_load_series(args), args.team)
    sample = s.sample
    bins = empirics.histogram(sample, args.width, args.origin)
    report.render_histogram_csv(bins, args.out)
    if args.svg:
        report.render_histogram_svg(bins, args.svg, title=f"{args.team} opponent FIP")
    print(report.write_json({
        "team": args.team, "n": sample.n, "mean": sample.mean(), "sd": sample.std(ddof=1),
        "skipped": len(s.skipped), "bin_width": args.width, "bin_origin": args.origin,
    }), end="")


def cmd_league_avg(args):
    league = _league(_load_series(args), args.target_len)
    report.render_sample_csv(league.values, args.out)
    print(f"wrote {league.n} league-average values to {args.out}")


def cmd_qq(args):
    series = _load_series(args)
    team = _team(series, args.team).sample
    league = _league(series, args.target_len)
    q = empirics.qq_pairs(team, league)
    fit = empirics.linear_fit(q)
    report.render_qq_csv(q, args.out)
    if args.svg:
        report.render_qq_svg(q, fit, args.svg, title=f"{args.team} vs league average")
    print(report.write_json({"team": args.team, "slope": fit.slope, "intercept": fit.intercept,
                             "pearson_r": fit.pearson_r}), end="")


def cmd_pearson_table(args):
    series = _load_series(args)
    league = _league(series, args.target_len)
    results = {t: empirics.pearson(empirics.qq_pairs(s.sample, league)) for t, s in series.items()}
    avg = report.render_pearson_table(results, args.out, args.full_precision)
    print(f"{len(results)} teams, average Pearson {avg:.4f}")


def cmd_afip(args):
    series = _load_series(args)
    season = next(iter(series.values())).season
    constants = _constants(args)
    if constants is None or season not in constants:
        raise MissingFipConstant(f"pitcher FIP needs the {season} FIP constant (--fip-constants)")
    league = _league(series, args.target_len)
    lines = gamelog.parse_pitcher_lines(args.pitchers, season)
    table = equate.afip_table(lines, {t: s.sample for t, s in series.items()}, league, constants[season])
    report.render_afip_table(table.records, args.out, args.method, args.full_precision)
    summary = {"season": season, "fip_constant": constants[season].value,
               "aggregation": "outs-weighted mean of per-game aFIP", **table.summary()}
    if args.summary:
        report.write_json(summary, args.summary)
    print(f"wrote {len(table.records)} pitchers to {args.out}")


def cmd_tamper_check(args):
    s = _team(_load_series(args), args.team)
    home, away = tamper.split_home_away(s)
    rep = tamper.tamper_check(home, away, args.permutations, args.threshold, args.seed, args.team)
    text = rep.to_json()
    if args.out:
        with report.open_out(args.out) as fh:
            fh.write(text)
    print(text, end="")


def cmd_synth(args):
    if args.teams > len(synth.MLB_TEAMS):
        teams = [f"T{i:02d}" for i in range(1, args.teams + 1)]
    else:
        teams = list(synth.MLB_TEAMS[: args.teams])
    transforms = synth.spread_transforms(teams, args.seed, (args.scale_min, args.scale_max),
                                         (args.shift_min, args.shift_max))
    base = synth.BaseShape.gamma(args.base_mean, args.base_sd, args.base_shape)
    season = synth.generate_season(base, transforms, args.games, args.noise, args.seed)
    rows = synth.dataset_rows(season, args.season, args.seed)
    gamelog.write_dataset_rows(rows, args.out)
    if args.transforms_out:
        with report.open_out(args.transforms_out) as fh:
            fh.write("team,scale,shift\n")
            for t in transforms:
                fh.write(f"{t.team_id},{t.scale!r},{t.shift!r}\n")
    if args.pitchers:
        lines = synth.pitcher_lines(teams, args.n_pitchers, args.starts, args.seed)
        gamelog.write_pitcher_lines(lines, args.pitchers, args.season)
    print(f"wrote {len(rows)} synthetic games for {len(teams)} teams to {args.out}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="afip", description="Opponent-FIP distributions and schedule-adjusted FIP.")
    sub = p.add_subparsers(dest="command", required=True)

    def data_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--dataset", required=True, help="dataset CSV from `ingest` or `synth`")
        sp.add_argument("--fip-constants", type=Path, help="season,fip_constant CSV")
        sp.add_argument("--season", type=int)
        sp.add_argument("--target-len", type=int, default=162, help="league-average sample length")
        sp.add_argument("--full-precision", action="store_true")
        return sp

    sp = sub.add_parser("ingest", help="match batting and pitching logs into a dataset CSV")
    sp.add_argument("--batting", nargs="+", required=True)
    sp.add_argument("--pitching", nargs="+", required=True)
    sp.add_argument("--fip-constants", type=Path)
    sp.add_argument("--season", type=int)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_ingest)

    sp = data_cmd("team-dist", "histogram and moments of one team's opponent FIP")
    sp.add_argument("--team", required=True)
    sp.add_argument("--width", type=float, default=0.5)
    sp.add_argument("--origin", type=float, default=0.0)
    sp.add_argument("--out", required=True)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_team_dist)

    sp = data_cmd("league-avg", "build the league-average sample")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_league_avg)

    sp = data_cmd("qq", "qq-plot of a team against the league average")
    sp.add_argument("--team", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--svg")
    sp.set_defaults(func=cmd_qq)

    sp = data_cmd("pearson-table", "qq Pearson constant for every team")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_pearson_table)

    sp = data_cmd("afip", "schedule-adjusted FIP for each pitcher")
    sp.add_argument("--pitchers", required=True, help="pitcher game lines CSV")
    sp.add_argument("--method", choices=["si", "eqp", "both"], default="both")
    sp.add_argument("--out", required=True)
    sp.add_argument("--summary", help="write summary statistics JSON here")
    sp.set_defaults(func=cmd_afip)

    sp = data_cmd("tamper-check", "home/away opponent-FIP distribution comparison")
    sp.add_argument("--team", required=True)
    sp.add_argument("--permutations", type=int, default=1000)
    sp.add_argument("--threshold", type=float, default=tamper.DEFAULT_THRESHOLD)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_tamper_check)

    sp = sub.add_parser("synth", help="write a synthetic season")
    sp.add_argument("--out", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--noise", choices=[n.value for n in synth.Noise], default="none")
    sp.add_argument("--games", type=int, default=162)
    sp.add_argument("--teams", type=int, default=30)
    sp.add_argument("--season", type=int, default=2019)
    sp.add_argument("--scale-min", type=float, default=0.8)
    sp.add_argument("--scale-max", type=float, default=1.25)
    sp.add_argument("--shift-min", type=float, default=-0.5)
    sp.add_argument("--shift-max", type=float, default=0.5)
    sp.add_argument("--base-mean", type=float, default=5.0)
    sp.add_argument("--base-sd", type=float, default=2.6)
    sp.add_argument("--base-shape", type=float, default=6.0)
    sp.add_argument("--transforms-out")
    sp.add_argument("--pitchers", help="also write synthetic pitcher lines here")
    sp.add_argument("--n-pitchers", type=int, default=30)
    sp.add_argument("--starts", type=int, default=30)
    sp.set_defaults(func=cmd_synth)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except AfipError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: FileNotFoundError: {exc.filename}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
