"""Price paths from simulated log returns, product series and quantile fans."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

log = logging.getLogger(__name__)

DEFAULT_FAN_LEVELS = tuple(round(0.1 * k, 1) for k in range(1, 10))
RETURN_CLAMP = 5.0


def returns_to_prices(returns_path, base_price: float, return_clamped: bool = False):
    """``P(t) = base_price * exp(cumsum(r)[t])`` along the last axis.

    Works on one path ``(horizon,)`` or a stack ``(n_paths, horizon)``.
    Returns beyond ``|r| <= 5`` are clamped and logged; with
    ``return_clamped=True`` the result is ``(prices, n_clamped)``.
    """
    if not base_price > 0:
        raise ValueError(f"base_price must be positive, got {base_price}")
    r = np.asarray(returns_path, dtype=float)
    if not np.all(np.isfinite(r)):
        raise ValueError("returns must be finite")
    n_clamped = int(np.count_nonzero(np.abs(r) > RETURN_CLAMP))
    if n_clamped:
        log.warning("clamped %d simulated returns to |r| <= %g", n_clamped, RETURN_CLAMP)
        r = np.clip(r, -RETURN_CLAMP, RETURN_CLAMP)
    prices = base_price * np.exp(np.cumsum(r, axis=-1))
    return (prices, n_clamped) if return_clamped else prices


def product_paths(paths_a, paths_b) -> np.ndarray:
    """Elementwise product, e.g. a USD price times a USD/local FX rate."""
    a = np.asarray(paths_a, dtype=float)
    b = np.asarray(paths_b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a * b


@dataclass(frozen=True, eq=False)
class QuantileFan:
    """Pointwise quantiles of simulated paths.

    Attributes
    ----------
    levels : probability levels, increasing
    horizon : number of steps
    values : ``(len(levels), horizon)`` quantiles in price units
    n_paths : number of paths the fan was computed from
    base_prices : starting price(s)
    """

    levels: tuple
    horizon: int
    values: np.ndarray
    n_paths: int
    base_prices: tuple = ()

    def band(self, lo: float, hi: float) -> np.ndarray:
        """Width ``q(hi) - q(lo)`` at each step."""
        return self.values[self.levels.index(hi)] - self.values[self.levels.index(lo)]

    def level(self, p: float) -> np.ndarray:
        return self.values[self.levels.index(p)]


def quantile_fan(paths, levels=DEFAULT_FAN_LEVELS, base_prices=()) -> QuantileFan:
    """Empirical quantiles across paths at every step.

    ``paths`` has shape ``(n_paths, horizon)``.  Quantiles interpolate
    linearly between order statistics at rank ``(n - 1) * level + 1``.
    """
    x = np.asarray(paths, dtype=float)
    if x.ndim != 2:
        raise ValueError("paths must be (n_paths, horizon)")
    n, horizon = x.shape
    if n < 100:
        raise ValueError(f"need at least 100 paths, got {n}")
    levels = tuple(float(v) for v in levels)
    if any(not 0.0 < v < 1.0 for v in levels) or any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly increasing inside (0, 1)")
    srt = np.sort(x, axis=0)
    h = (n - 1) * np.asarray(levels)
    lo = np.floor(h).astype(int)
    hi = np.minimum(lo + 1, n - 1)
    frac = (h - lo)[:, None]
    values = srt[lo] + frac * (srt[hi] - srt[lo])
    return QuantileFan(levels, horizon, values, n, tuple(np.atleast_1d(base_prices).tolist()))


def level_label(p: float) -> str:
    return f"q{int(round(100 * p)):02d}"


def write_fan_csv(fan: QuantileFan, path, dates=None, realized=None):
    """Columns ``step`` (or ``date``), ``q10..q90`` and optional ``realized``."""
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        head = ["step"] + ([] if dates is None else ["date"]) + [level_label(p) for p in fan.levels]
        if realized is not None:
            head.append("realized")
        w.writerow(head)
        for t in range(fan.horizon):
            row = [t + 1] + ([] if dates is None else [str(dates[t])])
            row += [f"{v:.10g}" for v in fan.values[:, t]]
            if realized is not None:
                row.append(f"{realized[t]:.10g}" if t < len(realized) else "")
            w.writerow(row)


def read_fan_csv(path) -> QuantileFan:
    with Path(path).open(newline="") as fh:
        rows = list(csv.reader(fh))
    head = rows[0]
    qcols = [i for i, h in enumerate(head) if h.startswith("q")]
    levels = tuple(int(head[i][1:]) / 100 for i in qcols)
    values = np.array([[float(r[i]) for i in qcols] for r in rows[1:]]).T
    return QuantileFan(levels, values.shape[1], values, 0)


def fan_svg(fan: QuantileFan, realized=None, title: str = "", width: int = 720, height: int = 400) -> str:
    """Plain SVG line chart of the fan, optionally with the realized path."""
    pad = 50
    series = [fan.values[i] for i in range(len(fan.levels))]
    real = None if realized is None else np.asarray(realized, dtype=float)[: fan.horizon]
    allv = np.concatenate(series + ([real] if real is not None else []))
    lo, hi = float(np.min(allv)), float(np.max(allv))
    if hi == lo:
        hi = lo + 1.0
    steps = max(fan.horizon - 1, 1)

    def pts(v):
        xs = pad + (width - 2 * pad) * np.arange(v.size) / steps
        ys = height - pad - (height - 2 * pad) * (v - lo) / (hi - lo)
        return " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(xs, ys))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{pad}" y="{pad / 2:.0f}" font-family="sans-serif" font-size="14">{title}</text>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{pad - 5}" y="{pad}" font-family="sans-serif" font-size="10" text-anchor="end">{hi:.4g}</text>',
        f'<text x="{pad - 5}" y="{height - pad}" font-family="sans-serif" font-size="10" text-anchor="end">{lo:.4g}</text>',
    ]
    for p, v in zip(fan.levels, series):
        dash = "" if abs(p - 0.5) < 1e-9 else ' stroke-dasharray="4,3"'
        out.append(f'<polyline fill="none" stroke="#333"{dash} stroke-width="1" points="{pts(v)}"><title>{level_label(p)}</title></polyline>')
    if real is not None and real.size:
        out.append(f'<polyline fill="none" stroke="#1f5fbf" stroke-width="2" points="{pts(real)}"><title>realized</title></polyline>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
