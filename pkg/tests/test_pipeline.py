import json
import logging

import numpy as np
import pytest

from stablerisk import fixture
from stablerisk.cli import main
from stablerisk.errors import ConfigError, InputError, NumericalError
from stablerisk.frame import SeriesFrame, ingest, log_returns, read_frame_csv, read_series_csv, write_frame_csv, write_series_csv
from stablerisk.gof import read_table
from stablerisk.pipeline import (
    PipelineConfig,
    StageError,
    exit_code_for,
    load_config,
    read_regime_labels,
    read_states_csv,
    run_pipeline,
)
from stablerisk.scenario import read_fan_csv, returns_to_prices
from stablerisk.var_model import VarModel

# desk-scale settings that keep one fixture run well under a minute
QUICK = {"n_boot": "100", "n_paths": "1000"}


def _write(path, text):
    path.write_text(text)
    return path


@pytest.fixture(scope="module")
def fixture_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("run")
    cfg = load_config(fixture.bundled_config(), {**QUICK, "output_dir": str(out)})
    run_pipeline(cfg)
    return out


# --- frames -------------------------------------------------------------------

def test_read_series_errors(tmp_path):
    bad = _write(tmp_path / "a.csv", "date,value\n2020-01-03,1.0\n2020-01-10,abc\n")
    with pytest.raises(InputError, match=":3:"):
        read_series_csv(bad)
    dup = _write(tmp_path / "b.csv", "date,value\n2020-01-03,1.0\n2020-01-03,2.0\n")
    with pytest.raises(InputError, match="duplicate date 2020-01-03"):
        read_series_csv(dup)
    neg = _write(tmp_path / "c.csv", "date,value\n2020-01-03,1.0\n2020-01-10,-2.0\n")
    with pytest.raises(InputError, match="nonpositive"):
        read_series_csv(neg)
    head = _write(tmp_path / "d.csv", "day,price\n2020-01-03,1.0\n")
    with pytest.raises(InputError, match="header"):
        read_series_csv(head)


def test_unsorted_input_sorted_with_warning(tmp_path, caplog):
    p = _write(tmp_path / "u.csv", "date,value\n2020-01-10,2.0\n2020-01-03,1.0\n")
    with caplog.at_level(logging.WARNING):
        d, v = read_series_csv(p)
    assert "not sorted" in caplog.text
    assert list(d.astype(str)) == ["2020-01-03", "2020-01-10"] and list(v) == [1.0, 2.0]


def test_ingest_join(tmp_path):
    a = _write(tmp_path / "a.csv", "date,value\n2020-01-03,1\n2020-01-10,2\n2020-01-17,3\n")
    b = _write(tmp_path / "b.csv", "date,value\n2020-01-10,5\n2020-01-17,6\n2020-01-24,7\n")
    fr = ingest([a, b])
    assert fr.names == ["a", "b"] and len(fr) == 2
    assert fr.meta["dropped_rows"] == {"a": 1, "b": 1}
    c = _write(tmp_path / "c.csv", "date,value\n2021-01-01,1\n")
    with pytest.raises(InputError, match="no dates"):
        ingest([a, c])


def test_ingest_bundled_fixture():
    d = fixture.bundled_dir()
    fr = ingest([d / "cu.csv", d / "usdpln.csv"], names=fixture.NAMES)
    assert len(fr) == fixture.N_PRICES == 1083
    assert fr.meta["dropped_rows"] == {"cu": 0, "usdpln": 0}


def test_bundled_fixture_is_regenerable(tmp_path):
    for p in fixture.write_fixture(tmp_path):
        assert p.read_bytes() == (fixture.bundled_dir() / p.name).read_bytes()


def test_log_returns_examples():
    dates = np.datetime64("2020-01-03") + 7 * np.arange(4)
    fr = SeriesFrame(dates, {"a": [5.0, 5.0, 5.0, 5.0]})
    np.testing.assert_array_equal(log_returns(fr).columns["a"], 0.0)
    r = log_returns(SeriesFrame(dates[:2], {"a": [100.0, 200.0]}))
    assert r.kind == "log_returns" and r.columns["a"] == pytest.approx([np.log(2)])
    with pytest.raises(ValueError):
        log_returns(r)


def test_log_returns_inverse_of_prices():
    d = fixture.bundled_dir()
    fr = ingest([d / "cu.csv", d / "usdpln.csv"], names=fixture.NAMES)
    r = log_returns(fr)
    for name in fr.names:
        back = returns_to_prices(r.columns[name], fr.columns[name][0])
        np.testing.assert_allclose(back, fr.columns[name][1:], rtol=1e-12)


def test_frame_invariants():
    d = np.datetime64("2020-01-03") + np.arange(3)
    with pytest.raises(ValueError):
        SeriesFrame(d[::-1], {"a": [1.0, 2.0, 3.0]})
    with pytest.raises(InputError):
        SeriesFrame(d, {"a": [1.0, np.nan, 3.0]})
    with pytest.raises(InputError):
        SeriesFrame(d, {"a": [1.0, 0.0, 3.0]})


def test_frame_csv_round_trip(tmp_path):
    x = np.random.default_rng(0).standard_normal((30, 2))
    fr = SeriesFrame(np.datetime64("2020-01-03") + 7 * np.arange(30), {"a": x[:, 0], "b": x[:, 1]}, kind="log_returns")
    write_frame_csv(fr, tmp_path / "r.csv", fmt="%.17g")
    back = read_frame_csv(tmp_path / "r.csv")
    np.testing.assert_array_equal(back.values, fr.values)
    np.testing.assert_array_equal(back.dates, fr.dates)


# --- config -------------------------------------------------------------------

def test_config_file_and_overrides(tmp_path):
    cfg_path = _write(tmp_path / "c.cfg", "# comment\ninput_a = a.csv\ninput_b = /abs/b.csv\nn_boot = 500  # inline\nfan_levels = 0.25,0.5,0.75\nsvg = no\n")
    cfg = load_config(cfg_path, {"n_boot": "200"})
    assert cfg.input_a == str(tmp_path / "a.csv") and cfg.input_b == "/abs/b.csv"
    assert cfg.n_boot == 200 and cfg.fan_levels == (0.25, 0.5, 0.75) and cfg.svg is False


@pytest.mark.parametrize("over", [{"n_boot": "10"}, {"p_covariation": "2.5"}, {"fan_levels": "0.5,0.2"},
                                  {"n_paths": "500"}, {"bogus": "1"}, {"horizon": "x"}, {"name_b": "cu"}])
def test_config_validation(over):
    with pytest.raises(ConfigError):
        load_config(fixture.bundled_config(), over)


def test_exit_codes():
    assert exit_code_for(ConfigError("x")) == 4
    assert exit_code_for(InputError("x")) == 2
    assert exit_code_for(NumericalError("x")) == 3
    assert exit_code_for(StageError("var_fit", np.linalg.LinAlgError("x"))) == 3
    assert exit_code_for(StageError("ingest", FileNotFoundError("x"))) == 2


# --- full pipeline on the fixture ---------------------------------------------

def _manifest(out):
    text = (out / "manifest.txt").read_text()
    results = dict(line.split(" = ", 1) for line in text.split("[results]")[1].split("[files]")[0].strip().splitlines())
    files = dict(line.split(" rows=") for line in text.split("[files]")[1].strip().splitlines())
    return text, results, files


def test_fixture_run_manifest(fixture_run):
    text, results, files = _manifest(fixture_run)
    assert "status = OK" in text
    assert results["regimes"] == "2" and results["var_fits"] == "4" and results["gof_groups"] == "8"
    assert str(fixture_run) not in text
    for name, rows in files.items():
        p = fixture_run / name
        assert p.exists()
        if rows != "-":
            assert int(rows) == len(p.read_text().splitlines()) - 1


def test_fixture_run_recovers_planted_regime(fixture_run):
    dates, labels = read_regime_labels(fixture_run / "regimes.csv")
    truth = fixture.regime_labels()
    assert np.mean(labels == truth) > 0.9
    # the copper-only burst does not become a joint regime
    b0, b1 = fixture.BURST
    assert np.all(labels[b0:b1 + 1] == 2)


def test_fixture_outputs_reingest(fixture_run):
    rets = read_frame_csv(fixture_run / "returns.csv")
    assert rets.names == ["cu", "usdpln"] and len(rets) == 1082
    prices = read_frame_csv(fixture_run / "prices.csv", kind="prices")
    assert len(prices) == 1083
    for name in ("cu", "usdpln"):
        d, sp = read_states_csv(fixture_run / f"states_{name}.csv")
        np.testing.assert_array_equal(d, rets.dates)
        np.testing.assert_array_equal(sp.labels, np.where(sp.posterior >= 0.5, 1, 2))
        hmm = json.loads((fixture_run / f"hmm_{name}.json").read_text())
        assert hmm["emission"][0]["sigma"] >= hmm["emission"][1]["sigma"]
    for tag in ("regime1", "regime2"):
        for c in ("full", "diagonal"):
            m = VarModel.load(fixture_run / f"model_{tag}_{c}.json")
            assert m.is_stationary and m.regime_tag == tag and m.constraint == c
            res = read_frame_csv(fixture_run / f"residuals_{tag}_{c}.csv")
            assert res.names == ["cu", "usdpln"]
            for s in ("cu", "usdpln", "cuxusdpln"):
                fan = read_fan_csv(fixture_run / f"fan_{tag}_{c}_{s}.csv")
                assert fan.values.shape == (9, 52)
                assert np.all(np.diff(fan.values, axis=0) > 0)
                assert (fixture_run / f"fan_{tag}_{c}_{s}.svg").exists()
    rows = read_table(fixture_run / "gof.csv")
    assert len(rows) == 16
    assert {r["model"] for r in rows} == {"Gaussian", "alpha-stable"}
    for r in rows:
        assert all(0 < r[f"T{i}"] <= 1 for i in range(1, 6))


def test_pipeline_window_too_large(tmp_path):
    cfg = load_config(fixture.bundled_config(), {**QUICK, "output_dir": str(tmp_path), "corr_window": "5000"})
    with pytest.raises(StageError) as err:
        run_pipeline(cfg)
    assert err.value.stage == "rolling_dependence"
    assert "larger than series length" in str(err.value)
    text = (tmp_path / "manifest.txt").read_text()
    assert "status = FAILED stage=rolling_dependence" in text
    assert (tmp_path / "returns.csv").exists()  # partial outputs kept


# --- command line -------------------------------------------------------------

def test_cli_run_exit_codes(tmp_path, capsys):
    assert main(["run", "--fixture", "--corr-window", "5000", "--n-boot", "100", "--n-paths", "1000",
                 "--output-dir", str(tmp_path / "a")]) == 2
    assert main(["run", "--fixture", "--n-boot", "5", "--output-dir", str(tmp_path / "b")]) == 4
    assert main(["run", "--config", str(tmp_path / "missing.cfg")]) == 4
    assert "error:" in capsys.readouterr().err


def test_cli_subcommands(tmp_path, capsys):
    d = fixture.bundled_dir()
    prices = tmp_path / "prices.csv"
    rets = tmp_path / "returns.csv"
    assert main(["ingest", "--input", str(d / "cu.csv"), "--input", str(d / "usdpln.csv"), "--names", "cu,usdpln", "--out", str(prices)]) == 0
    assert main(["returns", "--prices", str(prices), "--out", str(rets)]) == 0
    assert main(["corr", "--returns", str(rets), "--window", "104", "--out", str(tmp_path / "dep.csv")]) == 0
    assert len((tmp_path / "dep.csv").read_text().splitlines()) == 1082 - 104 + 2
    assert main(["regimes", "--returns", str(rets), "--out-dir", str(tmp_path / "reg")]) == 0
    assert "regime 1:" in capsys.readouterr().out
    regimes = tmp_path / "reg" / "regimes.csv"
    model = tmp_path / "m.json"
    assert main(["fit", "--returns", str(rets), "--regimes", str(regimes), "--regime", "1", "--out", str(model),
                 "--residuals", str(tmp_path / "res.csv")]) == 0
    assert VarModel.load(model).regime_tag == "regime1"
    assert main(["gof", "--residuals", str(tmp_path / "res.csv"), "--family", "gaussian", "--n-boot", "100",
                 "--out", str(tmp_path / "gof.csv")]) == 0
    assert len(read_table(tmp_path / "gof.csv")) == 2
    npz = tmp_path / "sims.npz"
    assert main(["simulate", "--model", str(model), "--n-paths", "1000", "--horizon", "10", "--out", str(npz)]) == 0
    assert main(["fan", "--paths", str(npz), "--base-prices", "1800,4.1", "--out-prefix", str(tmp_path / "fan"), "--svg"]) == 0
    for s in ("cu", "usdpln", "cuxusdpln"):
        assert read_fan_csv(tmp_path / f"fan_{s}.csv").values.shape == (9, 10)
    assert main(["corr", "--returns", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "x.csv")]) == 2
    bad = _write(tmp_path / "bad.csv", "date,value\n2020-01-03,1\n2020-01-03,2\n")
    assert main(["ingest", "--input", str(bad), "--out", str(tmp_path / "y.csv")]) == 2
