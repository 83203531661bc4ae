"""Two-dimensional VAR(1) with independent alpha-stable innovations.

    X(t) = Theta X(t-1) + Z(t)

``X`` is the median-centred return vector.  Theta is estimated by the
covariation analogue of Yule-Walker,

    Theta = Lambda(1) Lambda(0)^{-1},
    Lambda(h)_ij = covariation_norm(X_i(t), X_j(t-h), p),

which stays meaningful without second moments.  With the ``diagonal``
constraint each component is an AR(1) whose coefficient is the lag-1
normalized auto-covariation of that component alone.  Residual laws are
fitted by the characteristic-function regression estimator.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dependence import DEFAULT_P, covariation_norm
from .errors import InputError, NumericalError
from .frame import SeriesFrame
from .stable import StableParams, fit_regression, from_uniform_exponential

log = logging.getLogger(__name__)

CONSTRAINTS = ("full", "diagonal")
FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class VarModel:
    """Fitted VAR(1).

    Attributes
    ----------
    theta : (m, m) coefficient matrix
    residual_params : per-component innovation laws
    constraint : ``"full"`` or ``"diagonal"``
    p_covariation : covariation exponent used by the estimator
    regime_tag : free-form label, e.g. ``"regime1"``
    center : per-component location subtracted before fitting; returns
        are ``center + X``
    names : component names
    meta : fit metadata (``n``, ``start``, ``end``)
    """

    theta: np.ndarray
    residual_params: tuple
    constraint: str = "full"
    p_covariation: float = DEFAULT_P
    regime_tag: str = ""
    center: np.ndarray | None = None
    names: tuple = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        theta = np.array(self.theta, dtype=float)
        m = theta.shape[0]
        if theta.shape != (m, m):
            raise ValueError(f"theta must be square, got shape {theta.shape}")
        if len(self.residual_params) != m:
            raise ValueError("need one residual law per component")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"constraint must be one of {CONSTRAINTS}")
        if self.constraint == "diagonal" and np.any(theta[~np.eye(m, dtype=bool)] != 0):
            raise ValueError("diagonal model has nonzero off-diagonal coefficients")
        center = np.zeros(m) if self.center is None else np.array(self.center, dtype=float).reshape(m)
        theta.setflags(write=False)
        center.setflags(write=False)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "residual_params", tuple(self.residual_params))
        names = tuple(self.names) if self.names else tuple(f"x{i + 1}" for i in range(m))
        object.__setattr__(self, "names", names)

    @property
    def dim(self) -> int:
        return self.theta.shape[0]

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(np.linalg.eigvals(self.theta))))

    @property
    def is_stationary(self) -> bool:
        return self.spectral_radius < 1.0

    def to_dict(self) -> dict:
        return {
            "format": "stablerisk.var_model",
            "version": FORMAT_VERSION,
            "order": 1,
            "names": list(self.names),
            "theta": [float(v) for v in self.theta.ravel()],
            "theta_shape": list(self.theta.shape),
            "residual_params": [p.to_dict() for p in self.residual_params],
            "constraint": self.constraint,
            "p_covariation": self.p_covariation,
            "regime_tag": self.regime_tag,
            "center": [float(v) for v in self.center],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VarModel":
        shape = tuple(d.get("theta_shape", (2, 2)))
        return cls(
            theta=np.asarray(d["theta"], dtype=float).reshape(shape),
            residual_params=tuple(StableParams.from_dict(p) for p in d["residual_params"]),
            constraint=d["constraint"],
            p_covariation=float(d["p_covariation"]),
            regime_tag=d.get("regime_tag", ""),
            center=d.get("center"),
            names=tuple(d.get("names", ())),
            meta=dict(d.get("meta", {})),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VarModel":
        return cls.from_dict(json.loads(text))

    def save(self, path):
        Path(path).write_text(self.to_json())

    @classmethod
    def load(cls, path) -> "VarModel":
        return cls.from_json(Path(path).read_text())


def _lag_pairs(n, mask):
    """Indices t with rows t and t-1 both selected."""
    if mask is None:
        return np.arange(1, n)
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != (n,):
        raise ValueError("mask must have one entry per row")
    return np.flatnonzero(mask[1:] & mask[:-1]) + 1


def _lambda(x_now, x_lag, p):
    m = x_now.shape[1]
    return np.array([[covariation_norm(x_now[:, i], x_lag[:, j], p) for j in range(m)] for i in range(m)])


def fit(returns: SeriesFrame, constraint: str = "full", p: float = DEFAULT_P, regime_tag: str = "", mask=None) -> VarModel:
    """Estimate a VAR(1) by covariation Yule-Walker.

    Parameters
    ----------
    returns : SeriesFrame
        Log returns, one column per component.
    constraint : {"full", "diagonal"}
    p : float
        Covariation exponent in [1, 2).
    regime_tag : str
        Stored on the model.
    mask : boolean array, optional
        Rows to use.  Lag pairs are formed only between consecutive selected
        rows, so a regime made of several stretches never pairs across a gap.

    Raises
    ------
    NumericalError
        Singular ``Lambda(0)`` or a nonstationary estimate.
    """
    if constraint not in CONSTRAINTS:
        raise ValueError(f"constraint must be one of {CONSTRAINTS}")
    vals = returns.values
    n, m = vals.shape
    if m < 1:
        raise InputError("no columns to fit")
    t_idx = _lag_pairs(n, mask)
    rows = np.union1d(t_idx, t_idx - 1)
    if t_idx.size < 100:
        raise InputError(f"need at least 100 lagged pairs, got {t_idx.size}")
    center = np.median(vals[rows], axis=0)
    x = vals - center
    x_now, x_lag = x[t_idx], x[t_idx - 1]
    if constraint == "full":
        lam0 = _lambda(x[rows], x[rows], p)
        if np.linalg.cond(lam0) > 1e12:
            raise NumericalError("singular covariation matrix Lambda(0)")
        lam1 = _lambda(x_now, x_lag, p)
        theta = lam1 @ np.linalg.inv(lam0)
    else:
        theta = np.diag([covariation_norm(x_now[:, i], x_lag[:, i], p) for i in range(m)])
    rho = float(np.max(np.abs(np.linalg.eigvals(theta))))
    if rho >= 1.0:
        raise NumericalError(f"nonstationary estimate: spectral radius {rho:.4f} >= 1")
    resid = x_now - x_lag @ theta.T
    params = tuple(fit_regression(resid[:, i]) for i in range(m))
    for name, par in zip(returns.names, params):
        if par.alpha <= p:
            log.warning("%s: residual alpha %.3f <= covariation exponent p=%g", name, par.alpha, p)
    meta = {
        "n": int(rows.size),
        "n_pairs": int(t_idx.size),
        "start": str(returns.dates[rows[0]]),
        "end": str(returns.dates[rows[-1]]),
    }
    return VarModel(theta, params, constraint, float(p), regime_tag, center, tuple(returns.names), meta)


def residuals(model: VarModel, returns: SeriesFrame, mask=None) -> SeriesFrame:
    """``Z(t) = X(t) - Theta X(t-1)`` with ``X = returns - center``.

    One row per lag pair, dated at ``t``; without a mask that is one row
    fewer than the input.
    """
    vals = returns.values
    if vals.shape[1] != model.dim:
        raise ValueError(f"model has {model.dim} components, data has {vals.shape[1]}")
    t_idx = _lag_pairs(vals.shape[0], mask)
    x = vals - model.center if np.any(model.center != 0) else vals
    z = x[t_idx] - x[t_idx - 1] @ model.theta.T
    cols = {name: z[:, i] for i, name in enumerate(returns.names)}
    return SeriesFrame(returns.dates[t_idx], cols, "log_returns", returns.frequency, {"model": model.regime_tag})


def path_innovations(model: VarModel, horizon: int, seed: int, k: int) -> np.ndarray:
    """Innovations ``(horizon, m)`` for path ``k`` from substream ``(seed, k)``."""
    rng = np.random.default_rng([seed, k])
    v = rng.uniform(-np.pi / 2.0, np.pi / 2.0, size=(model.dim, horizon))
    w = rng.standard_exponential(size=(model.dim, horizon))
    return np.column_stack([from_uniform_exponential(p, v[i], w[i]) for i, p in enumerate(model.residual_params)])


def simulate(model: VarModel, horizon: int, n_paths: int, x0=None, seed: int = 0) -> np.ndarray:
    """Simulate return paths of shape ``(n_paths, horizon, m)``.

    Each path follows ``X(t) = Theta X(t-1) + Z(t)`` from ``X(0) = x0``
    (default 0, i.e. returns at the centre) and is reported as
    ``center + X``.  Path ``k`` draws its innovations from
    ``numpy.random.default_rng([seed, k])``, so any subset of paths can be
    regenerated independently.
    """
    if not model.is_stationary:
        raise NumericalError(f"model is not stationary (spectral radius {model.spectral_radius:.4f})")
    if horizon < 1 or n_paths < 1:
        raise ValueError("horizon and n_paths must be at least 1")
    m = model.dim
    x = np.zeros((n_paths, m)) if x0 is None else np.broadcast_to(np.asarray(x0, dtype=float), (n_paths, m)).copy()
    z = np.empty((n_paths, horizon, m))
    for k in range(n_paths):
        z[k] = path_innovations(model, horizon, seed, k)
    out = np.empty((n_paths, horizon, m))
    theta_t = model.theta.T
    for t in range(horizon):
        x = x @ theta_t + z[:, t]
        out[:, t] = x
    if np.any(model.center != 0):
        out += model.center
    return out
