"""ECDF-distance goodness-of-fit tests and coverage rates.

Five statistics are computed on the probability transform
``u(i) = F(x(i))`` of the sorted sample: Kolmogorov-Smirnov, Kuiper,
Watson, Cramer-von Mises and Anderson-Darling.  Because the null
parameters are estimated from the same sample, p-values come from a
parametric bootstrap that refits the null on every replicate.
"""

from __future__ import annotations

import csv
import logging
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import special

from . import stable
from .stable import StableParams

log = logging.getLogger(__name__)

TESTS = ("KS", "Kuiper", "Watson", "CvM", "AD")
TABLE_LABELS = ("T1", "T2", "T3", "T4", "T5")
FAMILIES = ("gaussian", "stable")
DEFAULT_LEVELS = (0.05, 0.1, 0.25, 0.75, 0.9, 0.95)
_U_CLAMP = 1e-12


@dataclass(frozen=True)
class GofReport:
    """One test of one sample against one null family."""

    test: str
    statistic: float
    p_value: float
    null_family: str
    fitted_null_params: StableParams
    n_boot: int
    n_failed: int = 0


@dataclass(frozen=True)
class CoverageReport:
    """Fraction of the sample at or below each model quantile."""

    levels: tuple
    rates: tuple
    n: int


def ecdf_statistics(sample, null_cdf) -> dict:
    """The five ECDF statistics of ``sample`` against ``null_cdf``.

    Parameters
    ----------
    sample : array_like
        At least 20 observations.
    null_cdf : callable
        Vectorized distribution function of the null law.

    Returns
    -------
    dict
        Keyed by ``"KS"``, ``"Kuiper"``, ``"Watson"``, ``"CvM"``, ``"AD"``.
    """
    x = np.sort(np.asarray(sample, dtype=float).ravel())
    n = x.size
    if n < 20:
        raise ValueError(f"need at least 20 observations, got {n}")
    u = np.asarray(null_cdf(x), dtype=float)
    return _statistics_from_u(u)


def _statistics_from_u(u):
    u = np.sort(u)
    n = u.size
    if np.any(u < _U_CLAMP) or np.any(u > 1.0 - _U_CLAMP):
        warnings.warn("probability transform hit 0 or 1; clamping", RuntimeWarning, stacklevel=3)
        u = np.clip(u, _U_CLAMP, 1.0 - _U_CLAMP)
    i = np.arange(1, n + 1)
    d_plus = max(float(np.max(i / n - u)), 0.0)
    d_minus = max(float(np.max(u - (i - 1) / n)), 0.0)
    cvm = float(np.sum((u - (2 * i - 1) / (2.0 * n)) ** 2) + 1.0 / (12.0 * n))
    watson = cvm - n * (float(np.mean(u)) - 0.5) ** 2
    ad = -n - float(np.sum((2 * i - 1) * (np.log(u) + np.log1p(-u[::-1])))) / n
    return {"KS": max(d_plus, d_minus), "Kuiper": d_plus + d_minus, "Watson": watson, "CvM": cvm, "AD": ad}


def fit_null(sample, null_family: str) -> StableParams:
    """Estimate the null law: mean/std for Gaussian, regression for stable."""
    x = np.asarray(sample, dtype=float)
    if null_family == "gaussian":
        return StableParams.gaussian(float(np.mean(x)), float(np.std(x, ddof=1)))
    if null_family == "stable":
        return stable.fit_regression(x)
    raise ValueError(f"null_family must be one of {FAMILIES}")


def null_cdf(params: StableParams):
    """Distribution function used for the tests (fast tier for stable laws)."""
    if params.is_gaussian:
        scale = params.sigma * np.sqrt(2.0)
        return lambda x: special.ndtr((np.asarray(x) - params.mu) / scale)
    return lambda x: stable.cdf(params, x, fast=True)


def _replicate(null_family, params, n, seed, b):
    """Statistics of one bootstrap replicate, or None if the refit failed."""
    rng = np.random.default_rng([seed, b])
    draw = stable.sample(params, n, rng)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            refit = fit_null(draw, null_family)
            return _statistics_from_u(null_cdf(refit)(draw))
    except (ValueError, ArithmeticError):
        return None


def mc_pvalue(sample, null_family: str, n_boot: int = 999, seed: int = 0) -> list:
    """Parametric-bootstrap p-values for the five tests.

    Parameters
    ----------
    sample : array_like
        At least 50 observations (200 for the stable null, which the
        regression estimator needs).
    null_family : {"gaussian", "stable"}
    n_boot : int
        Number of replicates, at least 100.
    seed : int
        Replicate ``b`` uses ``numpy.random.default_rng([seed, b])``.

    Returns
    -------
    list of GofReport
        One per test, in the order KS, Kuiper, Watson, CvM, AD.
    """
    x = np.asarray(sample, dtype=float).ravel()
    if x.size < 50:
        raise ValueError(f"need at least 50 observations, got {x.size}")
    if n_boot < 100:
        raise ValueError(f"n_boot must be at least 100, got {n_boot}")
    params = fit_null(x, null_family)
    observed = _statistics_from_u(null_cdf(params)(x))
    counts = dict.fromkeys(TESTS, 0)
    failed = 0
    for b in range(n_boot):
        stats_b = _replicate(null_family, params, x.size, seed, b)
        if stats_b is None:
            failed += 1
            continue
        for t in TESTS:
            counts[t] += stats_b[t] >= observed[t]
    if failed > 0.01 * n_boot:
        log.warning("%d of %d bootstrap refits failed", failed, n_boot)
    n_ok = n_boot - failed
    return [
        GofReport(t, float(observed[t]), (1 + counts[t]) / (n_ok + 1), null_family, params, n_boot, failed)
        for t in TESTS
    ]


def coverage_rates(sample, params: StableParams, levels=DEFAULT_LEVELS) -> CoverageReport:
    """Share of observations at or below each quantile of ``params``."""
    x = np.asarray(sample, dtype=float).ravel()
    if x.size < 50:
        raise ValueError(f"need at least 50 observations, got {x.size}")
    levels = tuple(float(v) for v in levels)
    if any(not 0.0 < v < 1.0 for v in levels) or list(levels) != sorted(levels):
        raise ValueError("levels must be increasing and inside (0, 1)")
    q = np.atleast_1d(stable.quantile(params, levels))
    rates = tuple(float(np.mean(x <= qi)) for qi in q)
    return CoverageReport(levels, rates, int(x.size))


def table_header(levels=DEFAULT_LEVELS) -> list:
    return ["regime", "constraint", "series", "model", *TABLE_LABELS, *(f"cov_{v:g}" for v in levels)]


def table_row(regime, constraint, series, reports, coverage: CoverageReport) -> list:
    """One row in the layout: model, T1..T5 p-values, coverage rates."""
    by_test = {r.test: r for r in reports}
    family = reports[0].null_family
    model = "Gaussian" if family == "gaussian" else "alpha-stable"
    return [regime, constraint, series, model, *(f"{by_test[t].p_value:.4f}" for t in TESTS), *(f"{r:.4f}" for r in coverage.rates)]


def write_table(rows, path, levels=DEFAULT_LEVELS):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(table_header(levels))
        w.writerows(rows)


def read_table(path) -> list:
    """Rows of a GoF table as dicts with float p-values and rates."""
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        for k in list(r):
            if k.startswith("T") or k.startswith("cov_"):
                r[k] = float(r[k])
    return rows
