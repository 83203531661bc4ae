"""End-to-end batch pipeline and its configuration.

Stages run in order: ingest, log returns, rolling dependence, per-asset
HMM regimes, regime alignment, VAR(1) fits (full and diagonal) per
regime, residual diagnostics and goodness of fit, simulation and quantile
fans.  Every intermediate result is written to the output directory and
listed in ``manifest.txt``.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import logging
import platform
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .dependence import DEFAULT_P, auto_covariation, rolling_dependence
from .errors import ConfigError, InputError, NumericalError
from .frame import ingest, log_returns, write_frame_csv
from .gof import DEFAULT_LEVELS, FAMILIES, coverage_rates, mc_pvalue, table_row, write_table
from .regimes import StatePath, align_regimes, classify, em_fit, regime_mask, state_runs
from .scenario import DEFAULT_FAN_LEVELS, fan_svg, product_paths, quantile_fan, returns_to_prices, write_fan_csv
from .var_model import CONSTRAINTS, fit, residuals, simulate

log = logging.getLogger(__name__)


def _floats(text):
    return tuple(float(v) for v in str(text).replace(";", ",").split(",") if v.strip())


@dataclass
class PipelineConfig:
    """All knobs of :func:`run_pipeline`.

    Relative paths in a config file are resolved against the file's
    directory.
    """

    input_a: str = ""
    input_b: str = ""
    name_a: str = "a"
    name_b: str = "b"
    output_dir: str = "out"
    frequency: str = "weekly"
    corr_window: int = 104
    regime_corr_window: int = 208
    p_covariation: float = DEFAULT_P
    hmm_max_iter: int = 200
    hmm_tol: float = 1e-6
    min_len: int = 26
    max_lag: int = 52
    acov_max_lag: int = 20
    n_boot: int = 999
    n_paths: int = 100000
    horizon: int = 52
    seed: int = 12345
    fan_levels: tuple = DEFAULT_FAN_LEVELS
    coverage_levels: tuple = DEFAULT_LEVELS
    svg: bool = True

    def validate(self) -> "PipelineConfig":
        def need(cond, msg):
            if not cond:
                raise ConfigError(msg)

        need(self.input_a and self.input_b, "input_a and input_b are required")
        need(self.name_a and self.name_b and self.name_a != self.name_b, "name_a and name_b must be distinct and non-empty")
        need(self.corr_window >= 8 and self.regime_corr_window >= 8, "correlation windows must be at least 8")
        need(1.0 <= self.p_covariation < 2.0, "p_covariation must lie in [1, 2)")
        need(self.hmm_max_iter >= 1 and self.hmm_tol > 0, "hmm_max_iter >= 1 and hmm_tol > 0 required")
        need(self.min_len >= 1 and self.max_lag >= 0, "min_len >= 1 and max_lag >= 0 required")
        need(self.acov_max_lag >= 1, "acov_max_lag must be at least 1")
        need(self.n_boot >= 100, "n_boot must be at least 100")
        need(self.n_paths >= 1000, "n_paths must be at least 1000 for reported fans")
        need(self.horizon >= 1, "horizon must be at least 1")
        need(self.seed >= 0, "seed must be nonnegative")
        for name, lv in (("fan_levels", self.fan_levels), ("coverage_levels", self.coverage_levels)):
            need(len(lv) > 0 and all(0 < v < 1 for v in lv), f"{name} must lie inside (0, 1)")
            need(all(b > a for a, b in zip(lv, lv[1:])), f"{name} must be strictly increasing")
        return self

    @classmethod
    def field_types(cls) -> dict:
        return {f.name: f.type for f in dataclasses.fields(cls)}

    def updated(self, values: dict) -> "PipelineConfig":
        """Copy with string or typed ``values`` coerced to field types."""
        types = self.field_types()
        kwargs = {}
        for key, raw in values.items():
            if key not in types:
                raise ConfigError(f"unknown config key {key!r}")
            kwargs[key] = _coerce(key, types[key], raw)
        return dataclasses.replace(self, **kwargs)

    def to_lines(self, skip=("output_dir",)) -> list:
        """``key = value`` lines; the output directory is omitted so that
        identical runs into different directories produce identical files."""
        out = []
        for f in dataclasses.fields(self):
            if f.name in skip:
                continue
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                v = ",".join(f"{x:g}" for x in v)
            out.append(f"{f.name} = {v}")
        return out


def _coerce(key, typ, raw):
    if not isinstance(raw, str):
        return tuple(raw) if typ == "tuple" else raw
    text = raw.strip()
    try:
        if typ == "int":
            return int(text)
        if typ == "float":
            return float(text)
        if typ == "bool":
            low = text.lower()
            if low not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(text)
            return low in ("true", "1", "yes")
        if typ == "tuple":
            return _floats(text)
    except ValueError:
        raise ConfigError(f"bad value for {key}: {raw!r}") from None
    return text


def read_config_file(path) -> dict:
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    values = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key] = value
    for key in ("input_a", "input_b", "output_dir"):
        if key in values and not Path(values[key]).is_absolute():
            values[key] = str(path.parent / values[key])
    return values


def load_config(path=None, overrides: dict | None = None) -> PipelineConfig:
    """Defaults, then the config file, then ``overrides``."""
    cfg = PipelineConfig()
    if path is not None:
        cfg = cfg.updated(read_config_file(path))
    if overrides:
        cfg = cfg.updated(overrides)
    return cfg.validate()


class StageError(RuntimeError):
    """A pipeline stage failed; ``cause`` is the original exception."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause


def _csv_rows(path) -> int:
    with Path(path).open() as fh:
        return max(sum(1 for _ in fh) - 1, 0)


class _Bundle:
    """Tracks written files for the manifest."""

    def __init__(self, out: Path):
        self.out = out
        self.files = []
        self.facts = []

    def path(self, name):
        p = self.out / name
        self.files.append(name)
        return p

    def note(self, key, value):
        self.facts.append((key, value))

    def write_manifest(self, cfg: PipelineConfig, status: str):
        lines = [
            "# stablerisk run manifest",
            f"status = {status}",
            f"version = {__version__}",
            f"numpy = {np.__version__}",
            f"scipy = {scipy.__version__}",
            f"python = {platform.python_version()}",
            f"seed = {cfg.seed}",
            "",
            "[config]",
            *cfg.to_lines(),
            "",
            "[results]",
            *(f"{k} = {v}" for k, v in self.facts),
            "",
            "[files]",
        ]
        for name in self.files:
            p = self.out / name
            if not p.exists():
                continue
            rows = _csv_rows(p) if p.suffix == ".csv" else "-"
            lines.append(f"{name} rows={rows}")
        (self.out / "manifest.txt").write_text("\n".join(lines) + "\n")


def write_dependence_csv(reports, path):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", "pearson", "spearman", "kendall", "window_start", "window_end", "window_len"])
        for r in reports:
            w.writerow([str(r.date), f"{r.pearson:.10g}", f"{r.spearman:.10g}", f"{r.kendall:.10g}", str(r.window_start), str(r.window_end), r.window_len])


def write_states_csv(dates, path_: StatePath, path):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", "posterior", "label"])
        for d, p, lab in zip(dates, path_.posterior, path_.labels):
            w.writerow([str(d), f"{p:.10g}", int(lab)])


def read_states_csv(path) -> tuple:
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    dates = np.array([r["date"] for r in rows], dtype="datetime64[D]")
    post = np.array([float(r["posterior"]) for r in rows])
    return dates, StatePath(post, np.array([int(r["label"]) for r in rows]))


def write_regime_labels(dates, labels, path):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", "regime"])
        for d, lab in zip(dates, labels):
            w.writerow([str(d), int(lab)])


def read_regime_labels(path) -> tuple:
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    return np.array([r["date"] for r in rows], dtype="datetime64[D]"), np.array([int(r["regime"]) for r in rows])


def write_autocov_csv(lags, columns: dict, path):
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["lag", *columns])
        for h in lags:
            w.writerow([h, *(f"{columns[k][h]:.10g}" for k in columns)])


def _longest_run(mask):
    runs = state_runs(mask.astype(int), 1)
    return max(runs, key=lambda r: (r[1] - r[0], -r[0]))


def run_pipeline(config: PipelineConfig) -> Path:
    """Run every stage and write the artifact bundle.

    Returns the output directory.  On failure the manifest is still
    written, with ``status = FAILED``, and :class:`StageError` is raised.
    """
    cfg = config.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    bundle = _Bundle(out)
    stage = "ingest"
    try:
        names = (cfg.name_a, cfg.name_b)
        prices = ingest([cfg.input_a, cfg.input_b], names=names, frequency=cfg.frequency)
        write_frame_csv(prices, bundle.path("prices.csv"))
        bundle.note("price_rows", len(prices))

        stage = "log_returns"
        rets = log_returns(prices)
        write_frame_csv(rets, bundle.path("returns.csv"), fmt="%.17g")
        bundle.note("return_rows", len(rets))

        stage = "rolling_dependence"
        dep = rolling_dependence(rets, cfg.corr_window, symmetric=False)
        write_dependence_csv(dep, bundle.path("dependence.csv"))

        stage = "regimes"
        paths = {}
        for name in names:
            model = em_fit(rets.columns[name], max_iter=cfg.hmm_max_iter, tol=cfg.hmm_tol)
            paths[name] = classify(model, rets.columns[name])
            bundle.path(f"hmm_{name}.json").write_text(json.dumps(model.to_dict(), indent=2, sort_keys=True) + "\n")
            write_states_csv(rets.dates, paths[name], bundle.path(f"states_{name}.csv"))
            bundle.note(f"hmm_{name}", f"iterations={model.n_iter} loglik={model.loglik:.6f} converged={model.converged}")

        stage = "align_regimes"
        intervals = align_regimes(paths[cfg.name_a], paths[cfg.name_b], cfg.min_len, cfg.max_lag)
        if not intervals:
            raise NumericalError("no joint regime-1 interval found")
        in_r1 = regime_mask(len(rets), intervals)
        if in_r1.all():
            raise NumericalError("regime 1 covers the whole sample")
        labels = np.where(in_r1, 1, 2)
        write_regime_labels(rets.dates, labels, bundle.path("regimes.csv"))
        bundle.note("regimes", 2)
        for s, e in intervals:
            bundle.note("regime1_interval", f"{rets.dates[s]} {rets.dates[e]}")
        sym = rolling_dependence(rets, min(cfg.regime_corr_window, len(rets)), symmetric=True, exclude_mask=labels)
        write_dependence_csv(sym, bundle.path("dependence_regimes.csv"))

        stage = "var_fit"
        models = {}
        for regime in (1, 2):
            mask = labels == regime
            for constraint in CONSTRAINTS:
                tag = f"regime{regime}"
                m = fit(rets, constraint, cfg.p_covariation, regime_tag=tag, mask=mask)
                models[regime, constraint] = m
                m.save(bundle.path(f"model_{tag}_{constraint}.json"))
        bundle.note("var_fits", len(models))

        stage = "diagnostics"
        gof_rows = []
        groups = 0
        for gi, ((regime, constraint), m) in enumerate(sorted(models.items())):
            tag = f"regime{regime}"
            res = residuals(m, rets, mask=labels == regime)
            write_frame_csv(res, bundle.path(f"residuals_{tag}_{constraint}.csv"), fmt="%.17g")
            lags = range(cfg.acov_max_lag + 1)
            acov = {k: auto_covariation(res.columns[k], cfg.acov_max_lag, cfg.p_covariation) for k in res.names}
            write_autocov_csv(lags, acov, bundle.path(f"autocov_{tag}_{constraint}.csv"))
            for fi, family in enumerate(FAMILIES):
                for si, name in enumerate(res.names):
                    stage = f"gof[{tag},{constraint},{family},{name}]"
                    seed = cfg.seed * 100 + gi * 10 + fi * 2 + si
                    reports = mc_pvalue(res.columns[name], family, cfg.n_boot, seed)
                    cov = coverage_rates(res.columns[name], reports[0].fitted_null_params, cfg.coverage_levels)
                    gof_rows.append(table_row(tag, constraint, name, reports, cov))
                groups += 1
        write_table(gof_rows, bundle.path("gof.csv"), cfg.coverage_levels)
        bundle.note("gof_groups", groups)

        stage = "simulate"
        px = prices.values
        for gi, ((regime, constraint), m) in enumerate(sorted(models.items())):
            tag = f"regime{regime}"
            # fans start at the first observation of the regime's longest stretch
            s, e = _longest_run(labels == regime)
            base = px[s + 1]  # returns row t ends at price row t + 1
            sims = simulate(m, cfg.horizon, cfg.n_paths, seed=cfg.seed * 100 + 50 + gi)
            price_paths = {}
            clamped = 0
            for i, name in enumerate(names):
                price_paths[name], c = returns_to_prices(sims[:, :, i], float(base[i]), return_clamped=True)
                clamped += c
            price_paths[f"{cfg.name_a}x{cfg.name_b}"] = product_paths(price_paths[cfg.name_a], price_paths[cfg.name_b])
            stop = min(s + 1 + cfg.horizon, len(prices) - 1)
            realized_rows = slice(s + 2, stop + 1)
            bundle.note(f"fan_{tag}_{constraint}", f"base_date={prices.dates[s + 1]} clamped={clamped}")
            for series, pp in price_paths.items():
                fan = quantile_fan(pp, cfg.fan_levels, base_prices=base)
                if series in prices.columns:
                    realized = prices.columns[series][realized_rows]
                else:
                    realized = prices.columns[cfg.name_a][realized_rows] * prices.columns[cfg.name_b][realized_rows]
                fname = f"fan_{tag}_{constraint}_{series}"
                write_fan_csv(fan, bundle.path(fname + ".csv"), realized=realized)
                if cfg.svg:
                    title = f"{series} {tag} {constraint}"
                    bundle.path(fname + ".svg").write_text(fan_svg(fan, realized, title))
        stage = "done"
    except Exception as exc:
        bundle.write_manifest(cfg, f"FAILED stage={stage} error={type(exc).__name__}: {exc}")
        raise StageError(stage, exc) from exc
    bundle.write_manifest(cfg, "OK")
    return out


def exit_code_for(exc: BaseException) -> int:
    """0 success, 2 input error, 3 numerical failure, 4 config error."""
    if isinstance(exc, StageError):
        exc = exc.cause
    if isinstance(exc, ConfigError):
        return 4
    if isinstance(exc, (NumericalError, ArithmeticError, np.linalg.LinAlgError)):
        return 3
    if isinstance(exc, (InputError, ValueError, OSError)):
        return 2
    return 3
