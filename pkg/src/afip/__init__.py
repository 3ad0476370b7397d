"""Opponent-FIP distributions, league-average equating and aFIP."""

from .empirics import (
    HistogramBins,
    LinearFit,
    OrderedSample,
    QQPlot,
    histogram,
    ks_statistic,
    league_average,
    linear_fit,
    pearson,
    percentile_of,
    plotting_positions,
    qq_pairs,
    value_at_percentile,
)
from .equate import AfipGame, AfipRecord, Method, afip_game_eqp, afip_game_si, afip_table, season_afip
from .fip import FipConstant, PitcherGameLine, fip_value, opponent_fip_series
from .gamelog import MatchedGame, match_games, parse_batting_log, parse_innings, parse_pitching_log
from .synth import BaseShape, Noise, TeamTransform, generate_season, recover_transform
from .tamper import SplitReport, split_home_away, tamper_check

__version__ = "0.1.0"
