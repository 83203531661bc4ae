import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy import stats

from stablerisk import stable
from stablerisk.dependence import (
    DEFAULT_P,
    auto_covariation,
    covariation_norm,
    kendall,
    pearson,
    rolling_dependence,
    spearman,
)
from stablerisk.frame import SeriesFrame
from stablerisk.stable import StableParams


def tau_oracle(x, y):
    """Pair enumeration in exact arithmetic."""
    n = len(x)
    s = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = (x[i] - x[j]) * (y[i] - y[j])
            s += int(d > 0) - int(d < 0)
    return float(Fraction(s, n * (n - 1) // 2))


def midrank_oracle(x):
    return np.array([np.sum(x < v) + (np.sum(x == v) + 1) / 2 for v in x])


def spearman_oracle(x, y):
    """Exact rational moments of the mid-ranks, one final square root."""
    rx = [Fraction(r) for r in midrank_oracle(x)]
    ry = [Fraction(r) for r in midrank_oracle(y)]
    mx, my = sum(rx) / len(rx), sum(ry) / len(ry)
    sxy = sum((a - mx) * (b - my) for a, b in zip(rx, ry))
    sxx = sum((a - mx) ** 2 for a in rx)
    syy = sum((b - my) ** 2 for b in ry)
    return float(sxy / math.sqrt(sxx * syy)) if sxy else 0.0


def _frame(x, y, start="2001-01-05"):
    dates = np.datetime64(start) + 7 * np.arange(len(x))
    return SeriesFrame(dates, {"a": x, "b": y}, kind="log_returns")


# --- point coefficients -------------------------------------------------------

def test_pearson_examples():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    assert pearson(x, x) == pytest.approx(1.0)
    assert pearson(x, -x) == pytest.approx(-1.0)
    assert pearson(x, [2, 1, 4, 3]) == pytest.approx(0.6, abs=1e-15)


def test_spearman_examples():
    x = np.array([0.3, -1.2, 2.5, 0.9, 4.0])
    assert spearman(x, np.exp(3 * x)) == 1.0
    assert spearman([1, 2, 3], [3, 1, 2]) == pytest.approx(-0.5, abs=1e-15)
    assert spearman([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8, abs=1e-15)


def test_kendall_examples():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    assert kendall(x, x**3) == 1.0
    assert kendall([1, 2, 3], [3, 2, 1]) == -1.0
    assert kendall(x, [2, 1, 4, 3]) == pytest.approx(1 / 3, abs=1e-15)


def test_kendall_ties_contribute_zero():
    x = [1, 1, 2, 3]
    y = [1, 2, 2, 3]
    # pairs: (0,1) tie in x, (1,2) tie in y, remaining 4 concordant
    assert kendall(x, y) == pytest.approx(4 / 6)


@pytest.mark.parametrize("func", [pearson, spearman, kendall])
def test_errors(func):
    with pytest.raises(ValueError, match="mismatch"):
        func([1, 2, 3], [1, 2])
    with pytest.raises(ValueError, match="constant"):
        func([1, 1, 1, 1], [1, 2, 3, 4])
    with pytest.raises(ValueError):
        func([1, 2], [2, 1])


def test_rank_measures_match_oracles():
    rng = np.random.default_rng(2024)
    for k in range(200):
        n = int(rng.integers(3, 201))
        x = rng.standard_normal(n)
        y = 0.5 * x + rng.standard_normal(n)
        if k % 4 == 0:  # force ties
            x, y = np.round(x, 1), np.round(y, 1)
        if np.ptp(x) == 0 or np.ptp(y) == 0:
            continue
        assert kendall(x, y) == tau_oracle(x, y)
        np.testing.assert_array_equal(stats.rankdata(x), midrank_oracle(x))
        assert spearman(x, y) == spearman_oracle(x, y)
        assert spearman(x, y) == pytest.approx(pearson(midrank_oracle(x), midrank_oracle(y)), abs=1e-14)


vec = arrays(np.float64, st.integers(5, 60), elements=st.floats(-1e3, 1e3).map(lambda v: round(v, 3)))


@settings(max_examples=60, deadline=None)
@given(vec, st.floats(0.1, 10), st.floats(-10, 10), st.integers(0, 2**31))
def test_invariances(x, a, b, seed):
    y = x + np.random.default_rng(seed).standard_normal(x.size) * (np.std(x) + 1)
    if np.ptp(x) == 0 or np.ptp(y) == 0 or np.unique(x).size < 3:
        return
    assert pearson(a * x + b, y) == pytest.approx(pearson(x, y), abs=1e-9)
    g = np.arctan(x / 50.0)  # strictly increasing
    if np.unique(g).size == np.unique(x).size:
        assert spearman(g, y) == pytest.approx(spearman(x, y), abs=1e-12)
        assert kendall(g, y) == kendall(x, y)
    for r in (pearson(x, y), spearman(x, y), kendall(x, y)):
        assert -1.0 <= r <= 1.0


# --- rolling windows ----------------------------------------------------------

def test_rolling_independent_pair_near_zero():
    rng = np.random.default_rng(0)
    fr = _frame(rng.standard_normal(600), rng.standard_normal(600))
    reps = rolling_dependence(fr, 104)
    assert len(reps) == 600 - 104 + 1
    for key in ("pearson", "spearman", "kendall"):
        vals = np.abs([getattr(r, key) for r in reps])
        assert np.mean(vals < 0.2) >= 0.95


def test_rolling_comonotone_pair_is_one():
    rng = np.random.default_rng(1)
    x = rng.standard_normal(200)
    reps = rolling_dependence(_frame(x, np.exp(x)), 30)
    assert all(r.spearman == 1.0 and r.kendall == 1.0 for r in reps)
    reps = rolling_dependence(_frame(x, 2 * x + 1), 30)
    assert all(r.pearson == pytest.approx(1.0) for r in reps)


def test_rolling_anchor_dates():
    rng = np.random.default_rng(2)
    fr = _frame(rng.standard_normal(50), rng.standard_normal(50))
    trailing = rolling_dependence(fr, 10)
    assert trailing[0].date == fr.dates[9] == trailing[0].window_end
    assert trailing[0].window_start == fr.dates[0]
    centred = rolling_dependence(fr, 10, symmetric=True)
    assert centred[0].date == fr.dates[5]
    assert [r.pearson for r in centred] == [r.pearson for r in trailing]


def test_rolling_mask_skips_mixed_windows():
    rng = np.random.default_rng(3)
    n, t_star = 300, 140
    fr = _frame(rng.standard_normal(n), rng.standard_normal(n))
    labels = np.where(np.arange(n) < t_star, 2, 1)
    reps = rolling_dependence(fr, 40, exclude_mask=labels)
    for r in reps:
        assert not (r.window_start <= fr.dates[t_star - 1] and fr.dates[t_star] <= r.window_end)
    assert len(reps) == (n - 40 + 1) - 39


def test_rolling_window_errors():
    fr = _frame(np.arange(20.0), np.arange(20.0) ** 2)
    with pytest.raises(ValueError, match="larger than series length"):
        rolling_dependence(fr, 21)
    with pytest.raises(ValueError, match="too small"):
        rolling_dependence(fr, 7)


# --- covariation --------------------------------------------------------------

def test_covariation_examples():
    rng = np.random.default_rng(4)
    y = rng.standard_normal(100)
    for p in (1.0, 1.3, DEFAULT_P, 1.9):
        assert covariation_norm(y, y, p) == pytest.approx(1.0, abs=1e-14)
        assert covariation_norm(2 * y, y, p) == pytest.approx(2.0, abs=1e-14)
    with pytest.raises(ValueError, match="zero"):
        covariation_norm(y, np.zeros(100))
    with pytest.raises(ValueError):
        covariation_norm(y, y, 2.0)
    with pytest.raises(ValueError):
        covariation_norm(y[:20], y[:20])


def test_covariation_gaussian_closed_form():
    # E[X sign Y] / E|Y| = rho * sigma_x / sigma_y for a Gaussian pair
    rng = np.random.default_rng(5)
    n, rho, sx, sy = 10**5, 0.6, 2.0, 0.5
    z1, z2 = rng.standard_normal((2, n))
    y = sy * z1
    x = sx * (rho * z1 + math.sqrt(1 - rho**2) * z2)
    est = covariation_norm(x, y, 1.0)
    # delta-method standard error of the ratio of means
    num, den = x * np.sign(y), np.abs(y)
    r = num.mean() / den.mean()
    se = np.std(num - r * den) / (den.mean() * math.sqrt(n))
    assert abs(est - rho * sx / sy) < 3 * se


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**31), st.floats(1.0, 1.95))
def test_covariation_additive_in_x(seed, p):
    rng = np.random.default_rng(seed)
    x1, x2, y = rng.standard_normal((3, 64))
    lhs = covariation_norm(x1 + x2, y, p)
    rhs = covariation_norm(x1, y, p) + covariation_norm(x2, y, p)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_auto_covariation_iid_band():
    x = stable.sample(StableParams(1.8, 1.0), 5000, seed=6)
    ac = auto_covariation(x, 20)
    assert ac[0] == 1.0
    assert np.all(np.abs(ac[1:]) < 0.08)


def test_auto_covariation_gaussian_ar1():
    rng = np.random.default_rng(7)
    e = rng.standard_normal(10**4)
    x = np.empty_like(e)
    x[0] = e[0]
    for t in range(1, e.size):
        x[t] = 0.5 * x[t - 1] + e[t]
    ac = auto_covariation(x, 3, p=1.0)
    assert ac[1] == pytest.approx(0.5, abs=0.05)
    assert ac[1] == covariation_norm(x[1:], x[:-1], 1.0)


def test_auto_covariation_lag_limit():
    with pytest.raises(ValueError, match="length/4"):
        auto_covariation(np.arange(100.0), 25)
