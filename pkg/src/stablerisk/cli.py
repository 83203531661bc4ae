"""Command-line interface: ``stablerisk <subcommand> ...``.

Exit codes: 0 success, 2 input error, 3 numerical failure, 4 config error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__, fixture
from .dependence import DEFAULT_P, rolling_dependence
from .errors import InputError
from .frame import ingest, log_returns, read_frame_csv, write_frame_csv
from .gof import DEFAULT_LEVELS, FAMILIES, coverage_rates, mc_pvalue, table_row, write_table
from .pipeline import (
    PipelineConfig,
    _floats,
    exit_code_for,
    load_config,
    read_regime_labels,
    run_pipeline,
    write_dependence_csv,
    write_regime_labels,
    write_states_csv,
)
from .regimes import align_regimes, classify, em_fit, regime_mask
from .scenario import DEFAULT_FAN_LEVELS, fan_svg, product_paths, quantile_fan, returns_to_prices, write_fan_csv
from .var_model import CONSTRAINTS, VarModel, fit, residuals, simulate

log = logging.getLogger("stablerisk")


def _names(text, n):
    names = [s.strip() for s in text.split(",")] if text else None
    if names is not None and len(names) != n:
        raise InputError(f"expected {n} names, got {len(names)}")
    return names


def _labels_for(path, dates):
    ldates, labels = read_regime_labels(path)
    if ldates.shape != dates.shape or np.any(ldates != dates):
        raise InputError(f"{path}: regime dates do not match the returns file")
    return labels


def cmd_ingest(args):
    frame = ingest(args.input, names=_names(args.names, len(args.input)), frequency=args.frequency)
    write_frame_csv(frame, args.out)
    log.info("wrote %d rows to %s (dropped %s)", len(frame), args.out, frame.meta["dropped_rows"])


def cmd_returns(args):
    if args.prices:
        prices = read_frame_csv(args.prices, kind="prices")
    elif args.input:
        prices = ingest(args.input, names=_names(args.names, len(args.input)))
    else:
        raise InputError("give --prices or --input")
    write_frame_csv(log_returns(prices), args.out, fmt="%.17g")


def cmd_corr(args):
    rets = read_frame_csv(args.returns)
    labels = _labels_for(args.regimes, rets.dates) if args.regimes else None
    reports = rolling_dependence(rets, args.window, symmetric=args.symmetric, exclude_mask=labels)
    write_dependence_csv(reports, args.out)


def cmd_regimes(args):
    rets = read_frame_csv(args.returns)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in rets.names:
        model = em_fit(rets.columns[name], max_iter=args.max_iter, tol=args.tol)
        path_ = classify(model, rets.columns[name])
        paths.append(path_)
        (out / f"hmm_{name}.json").write_text(json.dumps(model.to_dict(), indent=2, sort_keys=True) + "\n")
        write_states_csv(rets.dates, path_, out / f"states_{name}.csv")
    if len(paths) == 2:
        intervals = align_regimes(paths[0], paths[1], args.min_len, args.max_lag)
        labels = np.where(regime_mask(len(rets), intervals), 1, 2)
        write_regime_labels(rets.dates, labels, out / "regimes.csv")
        for s, e in intervals:
            print(f"regime 1: {rets.dates[s]} .. {rets.dates[e]}")


def cmd_fit(args):
    rets = read_frame_csv(args.returns)
    mask = None
    if args.regimes:
        mask = _labels_for(args.regimes, rets.dates) == args.regime
    tag = args.regime_tag or (f"regime{args.regime}" if args.regimes else "")
    model = fit(rets, args.constraint, args.p, regime_tag=tag, mask=mask)
    model.save(args.out)
    if args.residuals:
        write_frame_csv(residuals(model, rets, mask=mask), args.residuals, fmt="%.17g")
    print(model.to_json(), end="")


def cmd_gof(args):
    res = read_frame_csv(args.residuals)
    families = FAMILIES if args.family == "both" else (args.family,)
    levels = _floats(args.levels)
    rows = []
    for fi, family in enumerate(families):
        for si, name in enumerate(res.names):
            reports = mc_pvalue(res.columns[name], family, args.n_boot, args.seed * 100 + fi * 2 + si)
            cov = coverage_rates(res.columns[name], reports[0].fitted_null_params, levels)
            rows.append(table_row(args.regime_tag, args.constraint, name, reports, cov))
    write_table(rows, args.out, levels)


def cmd_simulate(args):
    model = VarModel.load(args.model)
    paths = simulate(model, args.horizon, args.n_paths, seed=args.seed)
    np.savez_compressed(args.out, returns=paths, names=np.array(model.names))


def cmd_fan(args):
    with np.load(args.paths) as data:
        sims = data["returns"]
        names = [str(n) for n in data["names"]]
    base = _floats(args.base_prices)
    if len(base) != sims.shape[2]:
        raise InputError(f"need {sims.shape[2]} base prices, got {len(base)}")
    levels = _floats(args.levels)
    prices = {n: returns_to_prices(sims[:, :, i], base[i]) for i, n in enumerate(names)}
    if len(names) == 2:
        prices["x".join(names)] = product_paths(prices[names[0]], prices[names[1]])
    for name, pp in prices.items():
        fan = quantile_fan(pp, levels, base_prices=base)
        write_fan_csv(fan, f"{args.out_prefix}_{name}.csv")
        if args.svg:
            Path(f"{args.out_prefix}_{name}.svg").write_text(fan_svg(fan, title=name))


def cmd_run(args):
    overrides = {}
    for f in dataclasses.fields(PipelineConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            overrides[f.name] = v
    config_path = args.config
    if args.fixture:
        config_path = config_path or fixture.bundled_config()
    cfg = load_config(config_path, overrides)
    out = run_pipeline(cfg)
    print(f"wrote {out}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stablerisk", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ingest", help="join date,value price files on common dates")
    s.add_argument("--input", action="append", required=True, help="date,value CSV (repeat)")
    s.add_argument("--names", help="comma-separated column names")
    s.add_argument("--frequency", default="weekly")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("returns", help="log returns of a price frame")
    s.add_argument("--prices", help="frame CSV written by 'ingest'")
    s.add_argument("--input", action="append", help="date,value CSV (repeat) instead of --prices")
    s.add_argument("--names")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_returns)

    s = sub.add_parser("corr", help="rolling Pearson/Spearman/Kendall")
    s.add_argument("--returns", required=True)
    s.add_argument("--window", type=int, default=104)
    s.add_argument("--symmetric", action="store_true", help="centred instead of trailing windows")
    s.add_argument("--regimes", help="regimes.csv; windows spanning two regimes are skipped")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_corr)

    s = sub.add_parser("regimes", help="HMM regimes per column and their alignment")
    s.add_argument("--returns", required=True)
    s.add_argument("--out-dir", required=True)
    s.add_argument("--max-iter", type=int, default=200)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--min-len", type=int, default=26)
    s.add_argument("--max-lag", type=int, default=52)
    s.set_defaults(func=cmd_regimes)

    s = sub.add_parser("fit", help="fit a VAR(1) model")
    s.add_argument("--returns", required=True)
    s.add_argument("--regimes", help="regimes.csv to select rows")
    s.add_argument("--regime", type=int, default=1)
    s.add_argument("--regime-tag", default="")
    s.add_argument("--constraint", choices=CONSTRAINTS, default="full")
    s.add_argument("--p", type=float, default=DEFAULT_P, help="covariation exponent")
    s.add_argument("--out", required=True, help="model JSON")
    s.add_argument("--residuals", help="also write residuals CSV")
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("gof", help="goodness-of-fit p-values and coverage rates")
    s.add_argument("--residuals", required=True)
    s.add_argument("--family", choices=(*FAMILIES, "both"), default="both")
    s.add_argument("--n-boot", type=int, default=999)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--levels", default=",".join(f"{v:g}" for v in DEFAULT_LEVELS))
    s.add_argument("--regime-tag", default="")
    s.add_argument("--constraint", default="")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gof)

    s = sub.add_parser("simulate", help="simulate return paths from a model JSON")
    s.add_argument("--model", required=True)
    s.add_argument("--horizon", type=int, default=52)
    s.add_argument("--n-paths", type=int, default=100000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True, help=".npz output")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("fan", help="quantile fans of simulated prices")
    s.add_argument("--paths", required=True, help=".npz from 'simulate'")
    s.add_argument("--base-prices", required=True, help="comma-separated starting prices")
    s.add_argument("--levels", default=",".join(f"{v:g}" for v in DEFAULT_FAN_LEVELS))
    s.add_argument("--out-prefix", required=True)
    s.add_argument("--svg", action="store_true")
    s.set_defaults(func=cmd_fan)

    s = sub.add_parser("run", help="full pipeline")
    s.add_argument("--config", help="flat key = value config file")
    s.add_argument("--fixture", action="store_true", help="use the bundled synthetic fixture")
    for f in dataclasses.fields(PipelineConfig):
        flag = "--" + f.name.replace("_", "-")
        # values stay strings and are coerced by PipelineConfig
        s.add_argument(flag, dest=f.name, default=None, metavar=f.type.upper())
    s.set_defaults(func=cmd_run)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
