"""Regime-switching alpha-stable VAR(1) risk modelling for two assets."""

from importlib import metadata as _metadata

try:
    __version__ = _metadata.version("artifact")
except _metadata.PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

from .errors import ConfigError, InputError, NumericalError
from .frame import SeriesFrame, ingest, log_returns
from .stable import (
    StableFitWarning,
    StableParams,
    cdf,
    char_fn,
    fit_quantile,
    fit_regression,
    logpdf,
    pdf,
    quantile,
    sample,
    sf,
)

__all__ = [
    "ConfigError",
    "InputError",
    "NumericalError",
    "SeriesFrame",
    "StableFitWarning",
    "StableParams",
    "cdf",
    "char_fn",
    "fit_quantile",
    "fit_regression",
    "ingest",
    "log_returns",
    "logpdf",
    "pdf",
    "quantile",
    "sample",
    "sf",
]
