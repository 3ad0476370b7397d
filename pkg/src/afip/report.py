"""Rendering: CSV tables, standalone SVG plots and JSON summaries.

Display rounding lives here only (FIP-scale values to hundredths, Pearson
to four decimals); ``full_precision=True`` writes ``repr`` floats instead.
"""

from __future__ import annotations

import contextlib
import csv
import json
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .empirics import HistogramBins, LinearFit, QQPlot
from .errors import DegenerateCorrelation, EmptySample, IoError

AFIP_COLUMNS = ("player", "slopeIntercept", "equipercentile", "FIP",
                "SI difference", "EQP difference", "EQP - SI")

_W, _H, _M = 480, 480, 56


@contextlib.contextmanager
def open_out(path):
    try:
        fh = Path(path).open("w", newline="", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc
    with fh:
        yield fh


def _fmt(x: float, digits: int, full: bool) -> str:
    if full:
        return repr(float(x))
    out = f"{x:.{digits}f}"
    # avoid "-0.00"
    return out[1:] if out.startswith("-") and float(out) == 0 else out


def render_pearson_table(results: dict, path, full_precision: bool = False) -> float:
    """Team,Pearson CSV sorted by team code with a trailing Average row.

    Returns the (unrounded) average.
    """
    if not results:
        raise EmptySample("no Pearson results to render")
    avg = float(np.mean(list(results.values())))
    with open_out(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["team", "pearson"])
        for team in sorted(results):
            w.writerow([team, _fmt(results[team], 4, full_precision)])
        w.writerow(["Average", _fmt(avg, 4, full_precision)])
    return avg


def render_afip_table(records, path, method: str = "both", full_precision: bool = False):
    """Per-pitcher aFIP report.  ``method`` selects which aFIP columns appear."""
    cols = {
        "both": AFIP_COLUMNS,
        "si": ("player", "slopeIntercept", "FIP", "SI difference"),
        "eqp": ("player", "equipercentile", "FIP", "EQP difference"),
    }[method]
    with open_out(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(cols)
        for r in records:
            vals = {
                "player": r.pitcher_id,
                "slopeIntercept": r.afip_si,
                "equipercentile": r.afip_eqp,
                "FIP": r.fip,
                "SI difference": r.si_diff,
                "EQP difference": r.eqp_diff,
                "EQP - SI": r.eqp_minus_si,
            }
            w.writerow([vals[c] if c == "player" else _fmt(vals[c], 2, full_precision) for c in cols])


def render_histogram_csv(bins: HistogramBins, path):
    with open_out(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["bin_lo", "bin_hi", "count"])
        for lo, hi, n in bins.rows():
            w.writerow([f"{lo:.10g}", f"{hi:.10g}", n])


def render_qq_csv(q: QQPlot, path, full_precision: bool = True):
    with open_out(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y"])
        for x, y in q.points:
            w.writerow([_fmt(x, 4, full_precision), _fmt(y, 4, full_precision)])


def render_sample_csv(values, path):
    with open_out(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["rank", "value"])
        for i, v in enumerate(values, 1):
            w.writerow([i, repr(float(v))])


def write_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=False, default=str) + "\n"
    if path is not None:
        with open_out(path) as fh:
            fh.write(text)
    return text


class _Frame:
    """Linear map from a data box to the SVG plotting area (y grows up)."""

    def __init__(self, x0, x1, y0, y1):
        pad_x = (x1 - x0) * 0.04 or 1.0
        pad_y = (y1 - y0) * 0.04 or 1.0
        self.x0, self.x1 = x0 - pad_x, x1 + pad_x
        self.y0, self.y1 = y0 - pad_y, y1 + pad_y

    def px(self, x):
        return _M + (x - self.x0) / (self.x1 - self.x0) * (_W - 2 * _M)

    def py(self, y):
        return _H - _M - (y - self.y0) / (self.y1 - self.y0) * (_H - 2 * _M)


def _axes(frame, xlabel, ylabel, title):
    b = _H - _M
    parts = [
        f'<line class="axis" x1="{_M}" y1="{b}" x2="{_W - _M}" y2="{b}" stroke="black"/>',
        f'<line class="axis" x1="{_M}" y1="{_M}" x2="{_M}" y2="{b}" stroke="black"/>',
        f'<text x="{_W / 2}" y="{_H - 14}" text-anchor="middle" font-size="13">{escape(xlabel)}</text>',
        f'<text x="16" y="{_H / 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 16 {_H / 2})">{escape(ylabel)}</text>',
        f'<text x="{_W / 2}" y="24" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]
    for frac in (0.0, 0.5, 1.0):
        xv = frame.x0 + frac * (frame.x1 - frame.x0)
        yv = frame.y0 + frac * (frame.y1 - frame.y0)
        parts.append(f'<text x="{frame.px(xv):.2f}" y="{b + 16}" text-anchor="middle" font-size="10">{xv:.2f}</text>')
        parts.append(f'<text x="{_M - 4}" y="{frame.py(yv):.2f}" text-anchor="end" font-size="10">{yv:.2f}</text>')
    return parts


def _svg(parts):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
            f'viewBox="0 0 {_W} {_H}">')
    return "\n".join([head, f'<rect width="{_W}" height="{_H}" fill="white"/>', *parts, "</svg>", ""])


def render_qq_svg(q: QQPlot, fit: LinearFit, path, title: str = "QQ plot",
                  xlabel: str = "team (x)", ylabel: str = "league average (y)"):
    """Scatter of the qq points, the fitted line across the x range, and the
    correlation annotated to four decimals.

    The line carries its data-space endpoints as ``data-*`` attributes.
    """
    if len(q) < 2:
        raise DegenerateCorrelation("qq plot needs at least two points")
    x = np.asarray(q.x, dtype=float)
    y = np.asarray(q.y, dtype=float)
    lx0, lx1 = float(x.min()), float(x.max())
    ly0, ly1 = fit(lx0), fit(lx1)
    frame = _Frame(lx0, lx1, min(y.min(), ly0, ly1), max(y.max(), ly0, ly1))
    parts = _axes(frame, xlabel, ylabel, title)
    parts += [
        f'<circle cx="{frame.px(a):.3f}" cy="{frame.py(b):.3f}" r="2.5" fill="steelblue"/>'
        for a, b in zip(x, y)
    ]
    parts.append(
        f'<polyline points="{frame.px(lx0):.3f},{frame.py(ly0):.3f} {frame.px(lx1):.3f},{frame.py(ly1):.3f}" '
        f'fill="none" stroke="firebrick" stroke-width="1.5" '
        f'data-x0="{lx0!r}" data-y0="{ly0!r}" data-x1="{lx1!r}" data-y1="{ly1!r}"/>'
    )
    parts.append(
        f'<text class="annotation" x="{_M + 8}" y="{_M + 16}" font-size="13">'
        f'r={fit.pearson_r:.4f}  y={fit.slope:.4f}x{fit.intercept:+.4f}</text>'
    )
    with open_out(path) as fh:
        fh.write(_svg(parts))


def render_histogram_svg(bins: HistogramBins, path, title: str = "Opponent FIP"):
    rows = bins.rows()
    if not rows:
        raise EmptySample("empty histogram")
    top = max(n for _, _, n in rows)
    frame = _Frame(rows[0][0], rows[-1][1], 0.0, float(top))
    parts = _axes(frame, "opponent FIP", "games", title)
    base = frame.py(0.0)
    for lo, hi, n in rows:
        x0, x1, yt = frame.px(lo), frame.px(hi), frame.py(n)
        parts.append(f'<rect x="{x0:.3f}" y="{yt:.3f}" width="{x1 - x0:.3f}" height="{base - yt:.3f}" '
                     f'fill="steelblue" stroke="white" data-lo="{lo:.10g}" data-count="{n}"/>')
    with open_out(path) as fh:
        fh.write(_svg(parts))
