"""Synthetic two-asset weekly price fixture.

Log returns follow a regime-switching stable VAR(1): a high-variation
regime 1 in the middle of the sample and a calmer regime 2 around it,
with coefficient matrices and innovation laws set to values typical of
weekly copper (USD) and USD/PLN data.  A short copper-only burst of high
variation is planted before regime 1; it should not survive regime
alignment.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

from .frame import write_series_csv
from .stable import StableParams, from_uniform_exponential

N_PRICES = 1083
START_DATE = "2000-01-07"
BASE_PRICES = (1800.0, 4.10)
NAMES = ("cu", "usdpln")

THETA = {
    1: np.array([[0.2706, -0.0569], [0.0063, 0.2134]]),
    2: np.array([[0.3119, 0.1403], [0.0010, 0.1472]]),
}
INNOVATIONS = {
    1: (StableParams(1.9219, 0.0236, -0.5714, 0.0007), StableParams(1.7229, 0.0114, 1.0, 0.0016)),
    2: (StableParams(1.8243, 0.0119, -0.3416, -0.0004), StableParams(1.8424, 0.0074, -0.0160, 0.0)),
}
# return rows (0-based) of the planted regime 1 and the copper-only burst
REGIME1 = (320, 660)
BURST = (220, 235)

SEED = 20201002


def regime_labels(n_returns: int = N_PRICES - 1) -> np.ndarray:
    """Generating regime (1 or 2) of each return row."""
    lab = np.full(n_returns, 2)
    lab[REGIME1[0]:REGIME1[1] + 1] = 1
    return lab


def simulate_returns(seed: int = SEED) -> np.ndarray:
    """``(N_PRICES - 1, 2)`` log returns from the regime-switching model."""
    n = N_PRICES - 1
    rng = np.random.default_rng(seed)
    v = rng.uniform(-np.pi / 2.0, np.pi / 2.0, size=(n, 2))
    w = rng.standard_exponential(size=(n, 2))
    labels = regime_labels(n)
    z = np.empty((n, 2))
    for k in (1, 2):
        rows = labels == k
        for i in range(2):
            z[rows, i] = from_uniform_exponential(INNOVATIONS[k][i], v[rows, i], w[rows, i])
    burst = slice(BURST[0], BURST[1] + 1)
    z[burst, 0] = from_uniform_exponential(INNOVATIONS[1][0], v[burst, 0], w[burst, 0])
    x = np.zeros(2)
    out = np.empty((n, 2))
    for t in range(n):
        x = THETA[labels[t]] @ x + z[t]
        out[t] = x
    return out


def write_fixture(directory, seed: int = SEED) -> list:
    """Write ``cu.csv`` and ``usdpln.csv`` price files; returns their paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    r = simulate_returns(seed)
    dates = np.datetime64(START_DATE) + 7 * np.arange(N_PRICES)
    paths = []
    for i, (name, base) in enumerate(zip(NAMES, BASE_PRICES)):
        prices = base * np.exp(np.concatenate([[0.0], np.cumsum(r[:, i])]))
        path = directory / f"{name}.csv"
        write_series_csv(dates, prices, path, fmt="%.6f")
        paths.append(path)
    return paths


def bundled_dir() -> Path:
    """Directory holding the bundled fixture files and ``fixture.cfg``."""
    return Path(str(resources.files("stablerisk") / "data"))


def bundled_config() -> Path:
    return bundled_dir() / "fixture.cfg"
