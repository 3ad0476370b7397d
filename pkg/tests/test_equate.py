import datetime as dt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afip.empirics import LinearFit, OrderedSample, plotting_positions
from afip.equate import (
    AfipGame,
    Method,
    afip_game_eqp,
    afip_game_si,
    afip_table,
    season_afip,
    team_fit,
)
from afip.errors import EmptySample, UnknownOpponent
from afip.fip import FipConstant, PitcherGameLine
from afip.synth import BaseShape, Noise, generate_season, pitcher_lines, spread_transforms
from afip.empirics import league_average

grid = st.lists(st.integers(-100, 1500), min_size=2, max_size=80).map(lambda v: [x / 100 for x in v])


def S(xs):
    return OrderedSample.from_values(xs)


def test_eqp_hand_trace():
    assert afip_game_eqp(4.0, S([2, 4, 6, 8]), S([1, 2, 3, 4])) == 2.0


def test_eqp_identity_at_positions():
    s = S([1.5, 2.0, 3.25, 4.0, 7.5])
    for v in s:
        assert afip_game_eqp(v, s, s) == v


def test_eqp_clamps():
    assert afip_game_eqp(-5.0, S([2, 4, 6, 8]), S([1, 2, 3, 4])) == 1.0
    assert afip_game_eqp(50.0, S([2, 4, 6, 8]), S([1, 2, 3, 4])) == 4.0


def test_eqp_empty():
    with pytest.raises(EmptySample):
        afip_game_eqp(1.0, S([]), S([1.0]))


def test_si_examples():
    assert afip_game_si(2.40, LinearFit(1.17, -0.35, 1.0)) == pytest.approx(2.458, abs=1e-12)
    assert round(afip_game_si(2.40, LinearFit(1.17, -0.35, 1.0)), 2) == 2.46
    assert afip_game_si(3.3, LinearFit(1.0, 0.0, 1.0)) == 3.3
    assert afip_game_si(3.0, LinearFit(2.0, 1.0, 1.0)) == 7.0


@given(grid, grid, st.lists(st.floats(-3, 18), min_size=2, max_size=30))
def test_eqp_monotone(team, league, probes):
    t, lg = S(team), S(league)
    out = [afip_game_eqp(x, t, lg) for x in sorted(probes)]
    assert all(a <= b for a, b in zip(out, out[1:]))


@given(grid)
def test_self_equating_identity(xs):
    s = S(xs)
    for p, v in zip(plotting_positions(s.n), s):
        assert afip_game_eqp(v, s, s) == pytest.approx(v, abs=1e-9)


@settings(max_examples=50)
@given(st.lists(st.integers(-100, 1500), min_size=3, max_size=80, unique=True).map(lambda v: [x / 100 for x in v]),
       st.floats(0.5, 2.0), st.floats(-2, 2))
def test_affine_exactness(league_vals, alpha, beta):
    """Team an exact affine image of the league: both methods give
    (x - beta) / alpha at every team value."""
    league = S(league_vals)
    team = S(alpha * league.values + beta)
    fit = team_fit(team, league)
    for x in team:
        want = (x - beta) / alpha
        assert afip_game_eqp(x, team, league) == pytest.approx(want, abs=1e-9)
        assert afip_game_si(x, fit) == pytest.approx(want, abs=1e-9)


def _g(v_eqp, v_si, outs):
    return AfipGame("p", None, "X", 0.0, v_eqp, v_si, outs)


def test_season_afip_weighting():
    assert season_afip([_g(3.0, 1.0, 18)], Method.EQP) == 3.0
    assert season_afip([_g(3.0, 0, 18), _g(5.0, 0, 9)], "eqp") == pytest.approx(11 / 3, abs=1e-12)
    assert season_afip([_g(4.2, 4.2, o) for o in (3, 17, 21)], Method.SI) == pytest.approx(4.2, abs=1e-12)
    with pytest.raises(EmptySample):
        season_afip([], Method.SI)


def _line(pid, opp, hr, bb, so, outs, day):
    return PitcherGameLine(pid, dt.date(2019, 4, day), opp, hr, bb, so, outs)


def test_table_identity_schedule():
    league = S(np.linspace(-0.5, 12, 162))
    c = FipConstant(2019, 3.2)
    lines = [_line("ace", "AAA", hr, bb, so, o, d + 1)
             for d, (hr, bb, so, o) in enumerate([(0, 1, 9, 21), (1, 2, 6, 18), (2, 3, 4, 15)])]
    tab = afip_table(lines, {"AAA": league}, league, c)
    (rec,) = tab.records
    # pooled season FIP equals the outs-weighted mean of per-game FIP
    raw = [g.raw_fip for g in tab.games["ace"]]
    w = [g.outs for g in tab.games["ace"]]
    assert rec.fip == pytest.approx(np.average(raw, weights=w), abs=1e-12)
    assert rec.afip_si == pytest.approx(rec.fip, abs=1e-9)
    assert abs(rec.eqp_diff) < 0.02
    assert rec.eqp_minus_si == rec.afip_eqp - rec.afip_si
    assert rec.season == 2019


def test_table_shifted_opponents_lower_afip():
    """Every opponent is the league shifted up by 0.5 (stronger offenses), so
    adjusted values land about 0.5 below raw FIP."""
    league = S(BaseShape.gamma().quantiles(162))
    strong = S(league.values + 0.5)
    rng = np.random.default_rng(7)
    lines = [_line("p", "STR", int(rng.poisson(1)), int(rng.poisson(2)), int(rng.poisson(6)), 18, d % 28 + 1)
             for d in range(30)]
    (rec,) = afip_table(lines, {"STR": strong}, league, 3.2).records
    assert rec.si_diff == pytest.approx(-0.5, abs=1e-9)
    assert -0.6 < rec.eqp_diff < -0.4


def test_table_sorted_and_consistent():
    base = BaseShape.gamma()
    tr = spread_transforms(seed=2)
    season = generate_season(base, tr, 162, Noise.IID_RESAMPLE, seed=2)
    league = league_average(list(season.values()))
    tab = afip_table(pitcher_lines(list(season), 12, 30, seed=2), season, league, FipConstant(2019, 3.2))
    fips = [r.fip for r in tab.records]
    assert fips == sorted(fips)
    for r in tab.records:
        assert r.si_diff == r.afip_si - r.fip
        assert r.eqp_diff == r.afip_eqp - r.fip
        assert r.eqp_minus_si == r.afip_eqp - r.afip_si
        assert all(np.isfinite([r.fip, r.afip_si, r.afip_eqp]))
    summ = tab.summary()
    assert summ["n_pitchers"] == 12
    assert 0 <= summ["mean_abs_eqp_minus_si"] <= summ["max_abs_eqp_minus_si"]


def test_table_unknown_opponent():
    league = S([1.0, 2.0, 3.0])
    with pytest.raises(UnknownOpponent):
        afip_table([_line("p", "ZZZ", 0, 0, 0, 18, 1)], {"AAA": league}, league, 3.2)


def test_table_zero_out_line_counts_toward_fip_only():
    league = S(np.linspace(1, 9, 50))
    lines = [_line("p", "AAA", 0, 1, 5, 18, 1), _line("p", "AAA", 1, 2, 0, 0, 2)]
    tab = afip_table(lines, {"AAA": league}, league, 3.2)
    assert len(tab.games["p"]) == 1
    assert tab.records[0].fip == pytest.approx((13 + 9 - 10) / 6 + 3.2)
