import datetime as dt
import json

import numpy as np
import pytest

from afip.empirics import OrderedSample, pearson, plotting_positions, qq_pairs
from afip.errors import OneSidedSeason
from afip.fip import OpponentSeries, SeriesEntry
from afip.synth import BaseShape
from afip.tamper import null_correlations, split_home_away, tamper_check


def series(values, home_flags):
    d0 = dt.date(2019, 4, 1)
    entries = [SeriesEntry(d0 + dt.timedelta(days=i), "OPP", h, v, i + 1)
               for i, (v, h) in enumerate(zip(values, home_flags))]
    return OpponentSeries("HOU", 2019, entries)


def test_split_counts():
    s = series(np.linspace(1, 9, 162), [i % 2 == 0 for i in range(162)])
    home, away = split_home_away(s)
    assert (home.n, away.n) == (81, 81)


def test_split_hand_example():
    home, away = split_home_away(series([1.0, 2.0, 3.0, 4.0], [True, False, True, False]))
    assert list(home) == [1.0, 3.0] and list(away) == [2.0, 4.0]


def test_split_one_sided():
    with pytest.raises(OneSidedSeason):
        split_home_away(series([1.0, 2.0], [True, True]))


def test_identical_halves():
    x = np.linspace(2, 10, 81)
    rep = tamper_check(x, x, permutations=200, seed=1)
    assert rep.pearson_r == pytest.approx(1.0, abs=1e-12)
    assert rep.ks == 0.0
    assert not rep.flagged


def test_affine_away_not_flagged():
    x = np.linspace(2, 10, 81)
    rep = tamper_check(x, 1.2 * x - 0.4, permutations=0)
    assert rep.pearson_r == pytest.approx(1.0, abs=1e-12)
    assert rep.null_percentile is None and not rep.flagged


def test_tampered_case_flagged():
    # one pinned seed; the flag rate over many seeds is an acceptance check
    base = BaseShape.gamma()
    rng = np.random.default_rng(7)
    home = base.sample(81, rng)
    away = np.sort(base.sample(81, rng))
    away[40:] += 2.0
    assert tamper_check(home, away, permutations=500, seed=7).flagged


def test_pearson_and_ks_symmetric():
    rng = np.random.default_rng(5)
    a, b = rng.gamma(6, 1, 81), rng.gamma(6, 1.1, 80)
    r1, r2 = tamper_check(a, b, 0), tamper_check(b, a, 0)
    assert r1.pearson_r == pytest.approx(r2.pearson_r, abs=1e-12)
    assert r1.ks == r2.ks


def test_deterministic_seed():
    rng = np.random.default_rng(2)
    a, b = rng.normal(5, 2, 81), rng.normal(5, 2, 81)
    assert tamper_check(a, b, 300, seed=4) == tamper_check(a, b, 300, seed=4)


def test_json_keys():
    d = json.loads(tamper_check([1, 2, 3, 5], [1, 2, 4, 5], 50, seed=0, team_id="HOU").to_json())
    assert list(d) == ["team", "n_home", "n_away", "pearson_r", "ks", "permutations",
                       "null_percentile", "flagged", "seed", "threshold"]
    assert d["team"] == "HOU" and d["permutations"] == 50


@pytest.mark.parametrize("n_home", [40, 81, 90])
def test_null_rows_match_scalar_path(n_home):
    """The vectorized null must agree with qq_pairs + pearson row by row."""
    pooled = np.random.default_rng(9).gamma(6, 1, 162)
    got = null_correlations(pooled, n_home, 20, np.random.default_rng(3))
    shuffled = np.random.default_rng(3).permuted(np.broadcast_to(pooled, (20, 162)), axis=1)
    want = [pearson(qq_pairs(OrderedSample.from_values(row[:n_home]),
                             OrderedSample.from_values(row[n_home:]))) for row in shuffled]
    assert got == pytest.approx(want, abs=1e-12)
    assert plotting_positions(2)[0] == 25.0
