import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special, stats

from stablerisk import stable
from stablerisk.gof import (
    DEFAULT_LEVELS,
    TESTS,
    coverage_rates,
    ecdf_statistics,
    fit_null,
    mc_pvalue,
    read_table,
    table_header,
    table_row,
    write_table,
)
from stablerisk.stable import StableParams

# asymptotic 99% points of sqrt(n) D, sqrt(n) V, U^2, W^2 and A^2 for a fully
# specified null
CRIT_99 = {"KS": 1.628, "Kuiper": 2.001, "Watson": 0.267, "CvM": 0.743, "AD": 3.857}


def identity(u):
    return np.asarray(u, dtype=float)


@pytest.mark.parametrize("n", [20, 50])
def test_perfect_grid(n):
    u = (2 * np.arange(1, n + 1) - 1) / (2 * n)
    s = ecdf_statistics(u, identity)
    assert s["KS"] == pytest.approx(1 / (2 * n))
    assert s["Kuiper"] == pytest.approx(1 / n)
    assert s["CvM"] == pytest.approx(1 / (12 * n))
    assert s["Watson"] == pytest.approx(1 / (12 * n))


def test_statistics_against_scipy():
    rng = np.random.default_rng(0)
    x = rng.standard_normal(300)
    s = ecdf_statistics(x, special.ndtr)
    assert s["KS"] == pytest.approx(stats.kstest(x, "norm").statistic, rel=1e-12)
    assert s["CvM"] == pytest.approx(stats.cramervonmises(x, "norm").statistic, rel=1e-10)
    # scipy's anderson fits parameters, so compare with a direct sum
    u = np.sort(special.ndtr(x))
    i = np.arange(1, 301)
    a2 = -300 - np.mean((2 * i - 1) * (np.log(u) + np.log(1 - u[::-1])))
    assert s["AD"] == pytest.approx(a2, rel=1e-12)


def test_uniform_sample_below_critical_values():
    n = 500
    ok = 0
    for seed in range(100):
        s = ecdf_statistics(np.random.default_rng(seed).uniform(size=n), identity)
        scaled = {"KS": np.sqrt(n) * s["KS"], "Kuiper": np.sqrt(n) * s["Kuiper"],
                  "Watson": s["Watson"], "CvM": s["CvM"], "AD": s["AD"]}
        ok += all(scaled[t] < CRIT_99[t] for t in TESTS)
    assert ok >= 95


def test_clamping_warns():
    x = np.r_[np.linspace(-1, 1, 30), 50.0]
    with pytest.warns(RuntimeWarning, match="clamping"):
        s = ecdf_statistics(x, special.ndtr)
    assert np.isfinite(s["AD"])


def test_too_short():
    with pytest.raises(ValueError):
        ecdf_statistics(np.arange(10.0), identity)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31), st.integers(20, 400))
def test_statistic_orderings(seed, n):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n) * rng.uniform(0.5, 2) + rng.uniform(-1, 1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        s = ecdf_statistics(x, special.ndtr)
    assert s["KS"] <= s["Kuiper"] <= 2 * s["KS"] + 1e-15
    assert s["Watson"] <= s["CvM"] + 1e-15
    assert all(v >= 0 for v in s.values())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31), st.floats(0.1, 10), st.floats(-5, 5))
def test_affine_invariance(seed, a, b):
    p = StableParams(1.7, 1.0, 0.3, 0.0)
    x = stable.sample(p, 60, seed)
    q = StableParams(1.7, a, 0.3, b)
    s1 = ecdf_statistics(x, lambda v: stable.cdf(p, v))
    s2 = ecdf_statistics(a * x + b, lambda v: stable.cdf(q, v))
    for t in TESTS:
        assert s2[t] == pytest.approx(s1[t], rel=1e-7, abs=1e-9)


# --- bootstrap p-values -------------------------------------------------------

def test_fit_null_gaussian():
    x = np.random.default_rng(1).normal(3.0, 2.0, 400)
    g = fit_null(x, "gaussian")
    assert g.is_gaussian and g.mu == pytest.approx(np.mean(x))
    assert g.sigma * np.sqrt(2) == pytest.approx(np.std(x, ddof=1))
    with pytest.raises(ValueError):
        fit_null(x, "student")


def test_mc_pvalue_floor():
    x = stable.sample(StableParams(1.0, 1.0), 500, seed=2)  # Cauchy vs Gaussian
    with pytest.warns(RuntimeWarning):
        reps = mc_pvalue(x, "gaussian", n_boot=999, seed=0)
    assert [r.test for r in reps] == list(TESTS)
    for r in reps:
        assert r.p_value == pytest.approx(1 / 1000)
        assert r.n_boot == 999 and r.n_failed == 0 and r.null_family == "gaussian"


def test_mc_pvalue_reproducible_and_valid():
    x = stable.sample(StableParams(1.8, 0.01), 250, seed=3)
    a = mc_pvalue(x, "stable", n_boot=100, seed=7)
    b = mc_pvalue(x, "stable", n_boot=100, seed=7)
    assert [(r.statistic, r.p_value) for r in a] == [(r.statistic, r.p_value) for r in b]
    for r in a:
        assert 0.0 <= r.p_value <= 1.0 and r.statistic >= 0.0
        assert r.fitted_null_params == a[0].fitted_null_params


def test_mc_pvalue_gaussian_null_calibrated():
    pv = []
    for seed in range(200):
        x = np.random.default_rng(10_000 + seed).normal(0.5, 2.0, 100)
        pv.append(mc_pvalue(x, "gaussian", n_boot=199, seed=seed)[0].p_value)
    assert stats.kstest(pv, "uniform").pvalue > 0.01


def test_mc_pvalue_validation():
    with pytest.raises(ValueError):
        mc_pvalue(np.arange(40.0), "gaussian")
    with pytest.raises(ValueError):
        mc_pvalue(np.arange(100.0), "gaussian", n_boot=50)


# --- coverage -----------------------------------------------------------------

def test_coverage_on_own_quantiles():
    p = StableParams(1.8, 0.01, -0.3, 0.001)
    n = 999
    x = stable.quantile(p, (np.arange(n) + 0.5) / n)
    cov = coverage_rates(x, p)
    assert cov.levels == DEFAULT_LEVELS and len(cov.rates) == 6 and cov.n == n
    np.testing.assert_allclose(cov.rates, DEFAULT_LEVELS, atol=1 / n)


def test_coverage_on_draws():
    p = StableParams(1.9219, 0.0236, -0.5714, 0.0007)
    x = stable.sample(p, 10**4, seed=4)
    cov = coverage_rates(x, p)
    assert np.all(np.abs(np.array(cov.rates) - DEFAULT_LEVELS) < 0.015)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**31), st.lists(st.floats(0.01, 0.99), min_size=1, max_size=6, unique=True))
def test_coverage_monotone(seed, levels):
    levels = sorted(levels)
    p = StableParams.gaussian(0, 1)
    cov = coverage_rates(np.random.default_rng(seed).standard_normal(80), p, levels)
    assert all(0 <= r <= 1 for r in cov.rates)
    assert list(cov.rates) == sorted(cov.rates)


def test_coverage_validation():
    with pytest.raises(ValueError):
        coverage_rates(np.arange(10.0), StableParams.gaussian(0, 1))
    with pytest.raises(ValueError):
        coverage_rates(np.arange(100.0), StableParams.gaussian(0, 1), (0.9, 0.1))


# --- table layout -------------------------------------------------------------

def test_table_round_trip(tmp_path):
    x = np.random.default_rng(5).standard_normal(300)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        reps = mc_pvalue(x, "gaussian", n_boot=100, seed=1)
    cov = coverage_rates(x, reps[0].fitted_null_params)
    row = table_row("regime1", "full", "cu", reps, cov)
    path = tmp_path / "gof.csv"
    write_table([row], path)
    head = path.read_text().splitlines()[0].split(",")
    assert head == table_header() and head[4:9] == ["T1", "T2", "T3", "T4", "T5"]
    back = read_table(path)[0]
    assert back["model"] == "Gaussian" and back["series"] == "cu"
    assert back["T1"] == pytest.approx(reps[0].p_value, abs=5e-5)
    assert back["cov_0.05"] == pytest.approx(cov.rates[0], abs=5e-5)
