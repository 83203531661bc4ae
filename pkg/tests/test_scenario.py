import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from stablerisk.scenario import (
    DEFAULT_FAN_LEVELS,
    fan_svg,
    product_paths,
    quantile_fan,
    read_fan_csv,
    returns_to_prices,
    write_fan_csv,
)
from stablerisk.stable import StableParams
from stablerisk.var_model import VarModel, simulate


def test_returns_to_prices_examples():
    np.testing.assert_array_equal(returns_to_prices(np.zeros(5), 7.5), np.full(5, 7.5))
    np.testing.assert_allclose(returns_to_prices([np.log(2), np.log(2)], 100.0), [200.0, 400.0], rtol=1e-15)
    with pytest.raises(ValueError):
        returns_to_prices([0.1], 0.0)
    with pytest.raises(ValueError):
        returns_to_prices([np.nan], 1.0)


@settings(max_examples=50, deadline=None)
@given(arrays(np.float64, st.integers(1, 60), elements=st.floats(-0.5, 0.5)), st.floats(0.01, 1e4))
def test_returns_round_trip(r, base):
    p = returns_to_prices(r, base)
    assert np.all(p > 0)
    back = np.diff(np.log(np.r_[base, p]))
    np.testing.assert_allclose(back, r, atol=1e-12)


def test_returns_clamped_with_counter(caplog):
    with caplog.at_level(logging.WARNING, logger="stablerisk.scenario"):
        p, k = returns_to_prices([0.1, 9.0, -12.0], 1.0, return_clamped=True)
    assert k == 2 and "clamped 2" in caplog.text
    np.testing.assert_allclose(p, np.exp(np.cumsum([0.1, 5.0, -5.0])))


def test_returns_to_prices_stack():
    r = np.random.default_rng(0).normal(0, 0.02, (4, 10))
    p = returns_to_prices(r, 3.0)
    np.testing.assert_allclose(p[2], returns_to_prices(r[2], 3.0))


def test_product_paths():
    a = np.random.default_rng(1).uniform(1, 2, (5, 4))
    np.testing.assert_array_equal(product_paths(a, np.ones_like(a)), a)
    np.testing.assert_array_equal(product_paths(np.full((2, 3), 50.0), np.full((2, 3), 4.0)), np.full((2, 3), 200.0))
    b = np.random.default_rng(2).uniform(1, 2, (5, 4))
    np.testing.assert_allclose(np.log(product_paths(a, b)), np.log(a) + np.log(b), atol=1e-12)
    perm = np.random.default_rng(3).permutation(5)
    np.testing.assert_array_equal(product_paths(a[perm], b[perm]), product_paths(a, b)[perm])
    with pytest.raises(ValueError):
        product_paths(a, b[:, :3])


def test_fan_examples():
    path = np.linspace(10, 20, 8)
    fan = quantile_fan(np.tile(path, (200, 1)))
    for row in fan.values:
        np.testing.assert_array_equal(row, path)
    k = np.arange(1, 101, dtype=float)
    fan = quantile_fan(np.tile(k[:, None], (1, 6)), levels=(0.5,))
    np.testing.assert_array_equal(fan.level(0.5), np.full(6, 50.5))


def test_fan_matches_numpy_linear_quantile():
    x = np.random.default_rng(4).lognormal(size=(1000, 12))
    fan = quantile_fan(x)
    np.testing.assert_allclose(fan.values, np.quantile(x, DEFAULT_FAN_LEVELS, axis=0, method="linear"), rtol=1e-14)
    assert fan.n_paths == 1000 and fan.horizon == 12


def test_fan_validation():
    with pytest.raises(ValueError):
        quantile_fan(np.ones((50, 3)))
    with pytest.raises(ValueError):
        quantile_fan(np.ones((200, 3)), levels=(0.5, 0.4))
    with pytest.raises(ValueError):
        quantile_fan(np.ones((200, 3)), levels=(0.0, 0.5))


def _model(scale=1.0, theta=None):
    laws = (StableParams(1.92, 0.0236 * scale, 0.0, 0.0), StableParams(1.72, 0.0114 * scale, 0.0, 0.0))
    theta = np.array([[0.27, -0.06], [0.01, 0.21]]) if theta is None else theta
    return VarModel(theta, laws)


def test_simulated_fan_monotone():
    sims = simulate(_model(), 52, 5000, seed=1)
    fan = quantile_fan(returns_to_prices(sims[:, :, 0], 1800.0))
    assert np.all(np.diff(fan.values, axis=0) > 0)


def test_doubling_sigma_widens_band():
    narrow = simulate(_model(1.0), 52, 5000, seed=2)
    wide = simulate(_model(2.0), 52, 5000, seed=2)
    for i, base in enumerate((1800.0, 4.1)):
        f1 = quantile_fan(returns_to_prices(narrow[:, :, i], base))
        f2 = quantile_fan(returns_to_prices(wide[:, :, i], base))
        assert np.all(f2.band(0.1, 0.9) > f1.band(0.1, 0.9))


def test_median_line_driftless():
    sims = simulate(_model(theta=np.zeros((2, 2))), 52, 5000, seed=3)
    fan = quantile_fan(returns_to_prices(sims[:, :, 0], 100.0))
    assert np.all(np.abs(fan.level(0.5) / 100.0 - 1) < 0.02)


def test_fan_csv_and_svg(tmp_path):
    x = np.random.default_rng(5).lognormal(size=(500, 6))
    fan = quantile_fan(x, base_prices=(1.0,))
    realized = np.linspace(0.8, 1.2, 6)
    path = tmp_path / "fan.csv"
    write_fan_csv(fan, path, realized=realized)
    lines = path.read_text().splitlines()
    assert lines[0] == "step,q10,q20,q30,q40,q50,q60,q70,q80,q90,realized"
    assert len(lines) == 7
    back = read_fan_csv(path)
    assert back.levels == pytest.approx(DEFAULT_FAN_LEVELS)
    np.testing.assert_allclose(back.values, fan.values, rtol=1e-9)
    dated = tmp_path / "dated.csv"
    write_fan_csv(fan, dated, dates=np.datetime64("2013-01-04") + 7 * np.arange(6))
    assert dated.read_text().splitlines()[1].startswith("1,2013-01-04,")
    svg = fan_svg(fan, realized, title="cu")
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == 10 and "realized" in svg
