"""Correlation and covariation measures for heavy-tailed series.

Pearson, Spearman (Pearson on mid-ranks) and Kendall's tau-a, their
rolling-window versions, and the normalized covariation ratio estimator
that replaces covariance when the second moment does not exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .frame import SeriesFrame

# the covariation needs 1 < p < alpha; 1.5 is valid for every alpha above 1.5
DEFAULT_P = 1.5


@dataclass(frozen=True)
class DependenceReport:
    """Correlation coefficients for one window.

    ``date`` is the point the window is attributed to: its last date for
    trailing windows, its central date for symmetric ones.
    """

    date: np.datetime64
    window_start: np.datetime64
    window_end: np.datetime64
    pearson: float
    spearman: float
    kendall: float
    window_len: int


def _pair(x, y, min_len=3):
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    if x.size < min_len:
        raise ValueError(f"need at least {min_len} observations, got {x.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("non-finite input")
    return x, y


def _check_nonconstant(x, y):
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise ValueError("correlation undefined for constant input")


def pearson(x, y) -> float:
    """Sample Pearson correlation."""
    x, y = _pair(x, y)
    _check_nonconstant(x, y)
    xc = x - x.mean()
    yc = y - y.mean()
    r = np.dot(xc, yc) / np.sqrt(np.dot(xc, xc) * np.dot(yc, yc))
    return float(np.clip(r, -1.0, 1.0))


def spearman(x, y) -> float:
    """Spearman's rho: Pearson correlation of mid-ranks.

    Doubled mid-ranks are integers, so the centred moments are summed
    exactly and only the final square root and division round.
    """
    x, y = _pair(x, y)
    _check_nonconstant(x, y)
    n = x.size
    a = (2.0 * stats.rankdata(x)).astype(np.int64) - (n + 1)
    b = (2.0 * stats.rankdata(y)).astype(np.int64) - (n + 1)
    sxy = int(np.dot(a, b))
    sxx = int(np.dot(a, a))
    syy = int(np.dot(b, b))
    return float(min(max(sxy / math.sqrt(sxx * syy), -1.0), 1.0))


def _tau_a(x, y):
    n = x.size
    # row blocks keep memory at O(block * n)
    total = 0
    block = max(1, 2_000_000 // n)
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        dx = np.sign(x[i0:i1, None] - x[None, :])
        dy = np.sign(y[i0:i1, None] - y[None, :])
        total += int(np.sum(dx * dy))
    # every unordered pair was counted twice
    return total / (n * (n - 1))


def kendall(x, y) -> float:
    """Kendall's tau-a: (concordant - discordant) / (n(n-1)/2).

    Tied pairs count as neither concordant nor discordant and there is no
    tie correction in the denominator.
    """
    x, y = _pair(x, y)
    _check_nonconstant(x, y)
    return float(_tau_a(x, y))


def rolling_dependence(xy: SeriesFrame, window: int, symmetric: bool = False, exclude_mask=None) -> list:
    """Pearson, Spearman and Kendall over moving windows of two columns.

    Parameters
    ----------
    xy : SeriesFrame
        Frame whose first two columns are used.
    window : int
        Number of observations per window, at least 8.
    symmetric : bool
        Trailing windows ending at each date when False; windows centred
        on each date (``window // 2`` points before it) when True.
    exclude_mask : array of labels, optional
        Windows containing more than one distinct label are skipped,
        leaving gaps around label changes.

    Returns
    -------
    list of DependenceReport
    """
    if xy.values.shape[1] < 2:
        raise ValueError("rolling_dependence needs two columns")
    n = len(xy)
    if window < 8:
        raise ValueError(f"window {window} too small (minimum 8)")
    if window > n:
        raise ValueError(f"window {window} larger than series length {n}")
    vals = xy.values
    x, y = vals[:, 0], vals[:, 1]
    labels = None if exclude_mask is None else np.asarray(exclude_mask)
    if labels is not None and labels.shape != (n,):
        raise ValueError("exclude_mask must have one label per row")
    half = window // 2
    out = []
    for start in range(0, n - window + 1):
        stop = start + window
        if labels is not None and np.any(labels[start:stop] != labels[start]):
            continue
        xs, ys = x[start:stop], y[start:stop]
        if np.ptp(xs) == 0 or np.ptp(ys) == 0:
            continue
        anchor = start + half if symmetric else stop - 1
        out.append(
            DependenceReport(
                date=xy.dates[anchor],
                window_start=xy.dates[start],
                window_end=xy.dates[stop - 1],
                pearson=pearson(xs, ys),
                spearman=spearman(xs, ys),
                kendall=kendall(xs, ys),
                window_len=window,
            )
        )
    return out


def covariation_norm(x, y, p: float = DEFAULT_P) -> float:
    """Ratio estimator of the normalized covariation of ``x`` on ``y``.

    ``sum(x * sign(y) * |y|**(p-1)) / sum(|y|**p)``
    """
    x, y = _pair(x, y, min_len=30)
    if not 1.0 <= p < 2.0:
        raise ValueError(f"p must lie in [1, 2), got {p}")
    ay = np.abs(y)
    denom = np.sum(ay**p)
    if denom == 0.0:
        raise ValueError("covariation undefined: y is identically zero")
    weight = np.sign(y) if p == 1.0 else np.sign(y) * ay ** (p - 1.0)
    return float(np.dot(x, weight) / denom)


def auto_covariation(x, max_lag: int, p: float = DEFAULT_P) -> np.ndarray:
    """Normalized auto-covariation at lags ``0..max_lag``.

    Element ``h`` is ``covariation_norm(x[h:], x[:-h], p)``; element 0 is 1.
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.size < 30:
        raise ValueError(f"need at least 30 observations, got {x.size}")
    if not 0 <= max_lag < x.size / 4:
        raise ValueError(f"max_lag must be below length/4 = {x.size / 4:g}")
    out = np.empty(max_lag + 1)
    out[0] = 1.0
    for h in range(1, max_lag + 1):
        out[h] = covariation_norm(x[h:], x[:-h], p)
    return out
