"""Real-season run: Pearson table, aFIP table and the Houston home/away scan.

Expects DATA_DIR to hold batting.csv, pitching.csv, pitcher_lines.csv and
fip_constants.csv in the documented layouts (no data ships with the
package).  Writes tables plus run_report.json, which records the FIP
constant, the season-aggregation convention and deltas against the
reference values below.

    python scripts/reproduce_2019.py DATA_DIR --out runs/2019
"""

import argparse
from pathlib import Path

import numpy as np

from afip.empirics import league_average, pearson, qq_pairs
from afip.equate import afip_table
from afip.fip import load_fip_constants, opponent_fip_series
from afip.gamelog import match_games, parse_batting_log, parse_pitcher_lines, parse_pitching_log, write_dataset
from afip.report import render_afip_table, render_pearson_table, write_json
from afip.tamper import split_home_away, tamper_check

REFERENCE = {
    "pearson": {
        "ARI": 0.9887, "ATL": 0.9889, "BAL": 0.9884, "BOS": 0.9889, "CHC": 0.9914, "CHW": 0.9915,
        "CIN": 0.9857, "CLE": 0.9889, "COL": 0.9895, "DET": 0.9836, "HOU": 0.9915, "KCR": 0.9903,
        "LAA": 0.9885, "LAD": 0.9877, "MIA": 0.9914, "MIL": 0.9878, "MIN": 0.9924, "NYM": 0.9895,
        "NYY": 0.9927, "OAK": 0.9908, "PHI": 0.9818, "PIT": 0.9893, "SDP": 0.9894, "SEA": 0.9896,
        "SFG": 0.9908, "STL": 0.9878, "TBR": 0.9900, "TEX": 0.9920, "TOR": 0.9844, "WSN": 0.9843,
    },
    "average": 0.9889,
    "cole": {"fip": 2.64, "afip_si": 2.65, "afip_eqp": 2.73},
    "hou_home_away_r": 0.9906,
    "hou_mean": 5.78,
    "hou_sd": 2.52,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("data_dir", type=Path)
    ap.add_argument("--out", type=Path, default=Path("runs/2019"))
    ap.add_argument("--season", type=int, default=2019)
    ap.add_argument("--pitcher", default="cole", help="substring identifying the spotlight pitcher")
    args = ap.parse_args()
    d, out = args.data_dir, args.out
    out.mkdir(parents=True, exist_ok=True)

    c = load_fip_constants(d / "fip_constants.csv")[args.season]
    games = match_games(parse_batting_log(d / "batting.csv", args.season),
                        parse_pitching_log(d / "pitching.csv", args.season))
    by_team = {}
    for g in games:
        by_team.setdefault(g.team_id, []).append(g)
    series = {t: opponent_fip_series(gs, c) for t, gs in sorted(by_team.items())}
    value = {(t, e.game_index): e.value for t, s in series.items() for e in s.entries}
    write_dataset(games, out / "dataset.csv", [value.get((g.team_id, g.game_index)) for g in games])

    samples = {t: s.sample for t, s in series.items()}
    league = league_average(list(samples.values()))
    rs = {t: pearson(qq_pairs(s, league)) for t, s in samples.items()}
    avg = render_pearson_table(rs, out / "pearson.csv")

    table = afip_table(parse_pitcher_lines(d / "pitcher_lines.csv", args.season), samples, league, c)
    render_afip_table(table.records, out / "afip.csv")
    spot = [r for r in table.records if args.pitcher.lower() in r.pitcher_id.lower()]

    report = {
        "season": args.season,
        "fip_constant": c.value,
        "aggregation": "season aFIP = outs-weighted mean of per-game aFIP (reproduces pooled FIP for raw values)",
        "skipped_zero_out_games": sum(len(s.skipped) for s in series.values()),
        "pearson_average": avg,
        "pearson_average_delta": avg - REFERENCE["average"],
        "pearson_team_deltas": {t: rs[t] - r for t, r in REFERENCE["pearson"].items() if t in rs},
        "missing_teams": sorted(set(REFERENCE["pearson"]) - set(rs)),
        "afip_summary": table.summary(),
    }
    if spot:
        r = spot[0]
        report["spotlight"] = {"pitcher": r.pitcher_id, "fip": r.fip, "afip_si": r.afip_si, "afip_eqp": r.afip_eqp,
                               "deltas": {"fip": r.fip - REFERENCE["cole"]["fip"],
                                          "afip_si": r.afip_si - REFERENCE["cole"]["afip_si"],
                                          "afip_eqp": r.afip_eqp - REFERENCE["cole"]["afip_eqp"]}}
    if "HOU" in series:
        home, away = split_home_away(series["HOU"])
        rep = tamper_check(home, away, 1000, seed=0, team_id="HOU")
        hou = samples["HOU"]
        report["hou"] = {"home_away_r": rep.pearson_r, "null_percentile": rep.null_percentile,
                         "flagged": rep.flagged, "mean": hou.mean(), "sd": hou.std(),
                         "r_delta": rep.pearson_r - REFERENCE["hou_home_away_r"],
                         "mean_delta": hou.mean() - REFERENCE["hou_mean"],
                         "sd_delta": hou.std() - REFERENCE["hou_sd"]}
    if report["pearson_team_deltas"]:
        report["max_abs_team_delta"] = float(np.max(np.abs(list(report["pearson_team_deltas"].values()))))
    print(write_json(report, out / "run_report.json"), end="")


if __name__ == "__main__":
    main()
