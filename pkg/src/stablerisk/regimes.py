"""Two-state hidden Markov segmentation with symmetric stable emissions.

State ``k`` emits ``S(alpha_k, sigma_k, 0, 0)``.  Parameters are estimated
by EM: a scaled forward-backward pass gives the state posteriors, the
transition matrix and initial law have closed-form updates, and each
state's ``(alpha, sigma)`` maximizes the posterior-weighted log-density by
a bounded Nelder-Mead search.

The emission log-density is a cubic spline in ``asinh(s)`` of the
standard symmetric log-density from :func:`stablerisk.stable.pdf`, built
lazily on an alpha grid of step 1e-3 and interpolated linearly in alpha;
``alpha = 2`` uses the exact Gaussian form.  The same
function is used in the E and M steps, so EM stays monotone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np
from scipy import interpolate, optimize

from .errors import InputError, NumericalError
from .stable import ALPHA_FIT_BOUNDS, StableParams, _std_pdf, fit_quantile

log = logging.getLogger(__name__)

_ALPHA_STEP = 1e-3
_ALPHA_LO = ALPHA_FIT_BOUNDS[0]
_N_ALPHA = int(round((2.0 - _ALPHA_LO) / _ALPHA_STEP))
_U_NODES = np.linspace(0.0, np.arcsinh(1e4), 300)
_S_MAX = float(np.sinh(_U_NODES[-1]))
_LOG_GAUSS0 = -0.5 * np.log(4.0 * np.pi)
SIGMA_FLOOR = 1e-10


@lru_cache(maxsize=None)
def _alpha_node(j):
    """Spline of the standard symmetric log-density at alpha node ``j``.

    Returns (alpha, spline coefficients, log f at the last grid point).
    """
    alpha = round(_ALPHA_LO + j * _ALPHA_STEP, 6)
    s = np.sinh(_U_NODES)
    if j >= _N_ALPHA:
        logf = _LOG_GAUSS0 - s**2 / 4.0
    else:
        logf = np.log(_std_pdf(np.full(s.size, alpha), np.zeros(s.size), s))
    spline = interpolate.CubicSpline(_U_NODES, logf, bc_type=((1, 0.0), "not-a-knot"))
    return alpha, spline.c, float(logf[-1])


def _node_logpdf(j, s):
    """Standard log-density at alpha node ``j`` for s >= 0."""
    alpha, coef, tail = _alpha_node(j)
    inside = s <= _S_MAX
    out = np.empty_like(s)
    if np.any(inside):
        u = np.arcsinh(s[inside])
        i = np.clip(np.searchsorted(_U_NODES, u, side="right") - 1, 0, _U_NODES.size - 2)
        d = u - _U_NODES[i]
        c = coef[:, i]
        out[inside] = ((c[0] * d + c[1]) * d + c[2]) * d + c[3]
    if not np.all(inside):
        so = s[~inside]
        if alpha >= 2.0:
            out[~inside] = _LOG_GAUSS0 - so**2 / 4.0
        else:
            # power-law tail beyond the grid
            out[~inside] = tail - (1.0 + alpha) * (np.log(so) - np.log(_S_MAX))
    return out


def emission_logpdf(alpha: float, sigma: float, x) -> np.ndarray:
    """Log-density of ``S(alpha, sigma, 0, 0)`` at ``x``.

    Interpolated linearly between memoized splines on an alpha grid of
    step 1e-3; exact at ``alpha = 2``.  Accurate to about 1e-5 in the log
    for alpha up to 1.999.
    """
    x = np.asarray(x, dtype=float)
    s = np.abs(x) / sigma
    if alpha >= 2.0:
        return _LOG_GAUSS0 - s**2 / 4.0 - np.log(sigma)
    if not _ALPHA_LO <= alpha <= 2.0:
        raise ValueError(f"alpha {alpha} outside [{_ALPHA_LO}, 2]")
    pos = (alpha - _ALPHA_LO) / _ALPHA_STEP
    j = min(int(np.floor(pos + 1e-9)), _N_ALPHA - 1)
    w = min(max(pos - j, 0.0), 1.0)
    flat = s.ravel()
    val = _node_logpdf(j, flat)
    if w > 1e-9:
        val = (1.0 - w) * val + w * _node_logpdf(j + 1, flat)
    return val.reshape(s.shape) - np.log(sigma)


@dataclass(frozen=True, eq=False)
class HmmModel:
    """Fitted two-state HMM.

    Attributes
    ----------
    emission : tuple of two StableParams with ``beta = mu = 0``
    transition : (2, 2) row-stochastic matrix
    initial : length-2 initial state law
    loglik : observed-data log-likelihood at these parameters
    n_iter : EM iterations performed
    converged : whether the tolerance was met before ``max_iter``
    history : log-likelihood after each E-step, starting at the initial model
    """

    emission: tuple
    transition: np.ndarray
    initial: np.ndarray
    loglik: float = float("nan")
    n_iter: int = 0
    converged: bool = False
    history: tuple = field(default=(), repr=False)

    n_states = 2

    def __post_init__(self):
        if len(self.emission) != 2:
            raise ValueError("exactly two emission laws are required")
        em = tuple(StableParams(e.alpha, e.sigma, 0.0, 0.0) for e in self.emission)
        object.__setattr__(self, "emission", em)
        trans = np.array(self.transition, dtype=float).reshape(2, 2)
        init = np.array(self.initial, dtype=float).reshape(2)
        if np.any(trans < 0) or np.any(np.abs(trans.sum(axis=1) - 1.0) > 1e-12):
            raise ValueError("transition rows must be probability vectors")
        if np.any(init < 0) or abs(init.sum() - 1.0) > 1e-12:
            raise ValueError("initial must be a probability vector")
        trans.setflags(write=False)
        init.setflags(write=False)
        object.__setattr__(self, "transition", trans)
        object.__setattr__(self, "initial", init)

    def permuted(self) -> "HmmModel":
        """The same model with the two state labels exchanged."""
        perm = [1, 0]
        return replace(
            self,
            emission=(self.emission[1], self.emission[0]),
            transition=self.transition[np.ix_(perm, perm)],
            initial=self.initial[perm],
        )

    def normalized(self) -> "HmmModel":
        """State 1 is the high-variation state (``sigma_1 >= sigma_2``)."""
        return self.permuted() if self.emission[0].sigma < self.emission[1].sigma else self

    def log_emissions(self, x) -> np.ndarray:
        """``(n, 2)`` matrix of per-state log-densities."""
        return np.column_stack([emission_logpdf(e.alpha, e.sigma, x) for e in self.emission])

    def to_dict(self) -> dict:
        return {
            "emission": [e.to_dict() for e in self.emission],
            "transition": self.transition.tolist(),
            "initial": self.initial.tolist(),
            "loglik": self.loglik,
            "n_iter": self.n_iter,
            "converged": self.converged,
        }


@dataclass(frozen=True, eq=False)
class StatePath:
    """Smoothed probability of state 1 and the hard labels in {1, 2}."""

    posterior: np.ndarray
    labels: np.ndarray

    @classmethod
    def from_posterior(cls, posterior) -> "StatePath":
        post = np.clip(np.asarray(posterior, dtype=float), 0.0, 1.0)
        # ties go to the high-variation state
        return cls(post, np.where(post >= 0.5, 1, 2))


def _forward_backward(log_b, transition, initial):
    """Scaled forward-backward; returns (gamma, xi_sum, loglik)."""
    n = log_b.shape[0]
    shift = log_b.max(axis=1, keepdims=True)
    b = np.exp(log_b - shift)
    alpha = np.empty((n, 2))
    scale = np.empty(n)
    a = initial * b[0]
    scale[0] = a.sum()
    alpha[0] = a / scale[0]
    for t in range(1, n):
        a = (alpha[t - 1] @ transition) * b[t]
        scale[t] = a.sum()
        alpha[t] = a / scale[t]
    if not np.all(scale > 0):
        raise NumericalError("forward pass underflow: zero likelihood")
    beta = np.empty((n, 2))
    beta[-1] = 1.0
    for t in range(n - 2, -1, -1):
        beta[t] = transition @ (b[t + 1] * beta[t + 1]) / scale[t + 1]
    gamma = alpha * beta
    gamma /= gamma.sum(axis=1, keepdims=True)
    # expected transition counts summed over time
    xi = (alpha[:-1, :, None] * transition[None]) * (b[1:] * beta[1:])[:, None, :] / scale[1:, None, None]
    loglik = float(np.sum(np.log(scale)) + np.sum(shift))
    return gamma, xi.sum(axis=0), loglik


def _weighted_objective(x, w, alpha, log_sigma):
    return float(np.dot(w, emission_logpdf(alpha, np.exp(log_sigma), x)))


def _m_step_emission(x, w, current: StableParams, fix_alpha):
    lo, hi = ALPHA_FIT_BOUNDS
    ls0 = np.log(current.sigma)
    if fix_alpha is not None:
        a = float(fix_alpha)
        if a >= 2.0:
            # weighted zero-mean Gaussian: variance 2 sigma^2
            sigma = np.sqrt(np.dot(w, x * x) / (2.0 * w.sum()))
            return StableParams(2.0, max(sigma, SIGMA_FLOOR * 0.1), 0.0, 0.0)
        res = optimize.minimize_scalar(
            lambda ls: -_weighted_objective(x, w, a, ls), bounds=(ls0 - 3.0, ls0 + 3.0), method="bounded",
            options={"xatol": 1e-9},
        )
        cand = StableParams(a, float(np.exp(res.x)), 0.0, 0.0)
    else:
        start = np.array([min(max(current.alpha, lo), hi), ls0])
        res = optimize.minimize(
            lambda p: -_weighted_objective(x, w, p[0], p[1]),
            start,
            method="Nelder-Mead",
            bounds=[(lo, hi), (None, None)],
            options={"xatol": 1e-7, "fatol": 1e-10, "maxiter": 400,
                     "initial_simplex": [start, start + [0.05 if start[0] + 0.05 <= hi else -0.05, 0.0], start + [0.0, 0.1]]},
        )
        cand = StableParams(float(min(max(res.x[0], lo), hi)), float(np.exp(res.x[1])), 0.0, 0.0)
    old = _weighted_objective(x, w, current.alpha, ls0)
    new = _weighted_objective(x, w, cand.alpha, np.log(cand.sigma))
    return cand if new >= old else current


def _rolling_median(a, window):
    n = a.size
    half = window // 2
    out = np.empty(n)
    for t in range(n):
        out[t] = np.median(a[max(0, t - half):min(n, t - half + window)])
    return out


def initial_model(returns, window: int = 26, persistence: float = 0.95, fix_alpha=None) -> HmmModel:
    """Deterministic starting point for :func:`em_fit`.

    Observations whose rolling median absolute deviation is in the top half
    seed state 1, the rest state 2; each half is fitted by quantile matching.
    """
    x = np.asarray(returns, dtype=float)
    spread = _rolling_median(np.abs(x - np.median(x)), window)
    order = np.argsort(-spread, kind="stable")
    top = np.zeros(x.size, dtype=bool)
    top[order[: x.size // 2]] = True
    lo, hi = ALPHA_FIT_BOUNDS
    em = []
    for part in (x[top], x[~top]):
        fq = fit_quantile(part)
        a = float(fix_alpha) if fix_alpha is not None else min(max(fq.alpha, lo), hi)
        em.append(StableParams(a, fq.sigma, 0.0, 0.0))
    trans = np.array([[persistence, 1 - persistence], [1 - persistence, persistence]])
    return HmmModel(tuple(em), trans, np.array([0.5, 0.5])).normalized()


def _check_returns(returns, min_len=200):
    x = np.asarray(returns, dtype=float).ravel()
    if x.size < min_len:
        raise InputError(f"need at least {min_len} returns, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise InputError("returns contain non-finite values")
    return x


def em_fit(returns, init: HmmModel | None = None, max_iter: int = 200, tol: float = 1e-6, fix_alpha=None) -> HmmModel:
    """Fit the two-state stable HMM by EM.

    Parameters
    ----------
    returns : array_like
        At least 200 finite observations.
    init : HmmModel, optional
        Starting model.  By default EM runs from :func:`initial_model` and
        from the same split with a common stability index, and the fit with
        the higher log-likelihood is returned.
    max_iter : int
        Maximum number of EM iterations.
    tol : float
        Stop when the log-likelihood improves by less than this.
    fix_alpha : float, optional
        Hold both stability indices at this value (``2`` gives a zero-mean
        Gaussian HMM).

    Returns
    -------
    HmmModel
        Ordered so that state 1 has the larger scale.
    """
    x = _check_returns(returns)
    if max_iter < 1 or tol <= 0:
        raise ValueError("max_iter must be >= 1 and tol > 0")
    if init is None:
        starts = [initial_model(x, fix_alpha=fix_alpha)]
        if fix_alpha is None:
            # second start with a common index, which escapes optima where
            # one state trades a heavier tail for a larger scale
            a = min(max(fit_quantile(x).alpha, ALPHA_FIT_BOUNDS[0]), ALPHA_FIT_BOUNDS[1])
            starts.append(replace(starts[0], emission=tuple(StableParams(a, e.sigma, 0.0, 0.0) for e in starts[0].emission)))
        fits = [_em_from(x, m, max_iter, tol, fix_alpha) for m in starts]
        return max(fits, key=lambda m: m.loglik)
    return _em_from(x, init, max_iter, tol, fix_alpha)


def _em_from(x, model, max_iter, tol, fix_alpha):
    if fix_alpha is not None:
        model = replace(model, emission=tuple(StableParams(float(fix_alpha), e.sigma, 0.0, 0.0) for e in model.emission))
    gamma, xi, ll = _forward_backward(model.log_emissions(x), model.transition, model.initial)
    history = [ll]
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        trans = xi / xi.sum(axis=1, keepdims=True)
        init_p = gamma[0] / gamma[0].sum()
        em = tuple(_m_step_emission(x, gamma[:, k], model.emission[k], fix_alpha) for k in range(2))
        for e in em:
            if e.sigma < SIGMA_FLOOR:
                raise NumericalError(f"likelihood degeneracy: sigma collapsed to {e.sigma:.3g}")
        # renormalize rows exactly
        trans = trans / trans.sum(axis=1, keepdims=True)
        model = HmmModel(em, trans, init_p / init_p.sum())
        gamma, xi, ll_new = _forward_backward(model.log_emissions(x), model.transition, model.initial)
        history.append(ll_new)
        if ll_new < ll - 1e-8:
            log.warning("EM log-likelihood decreased by %.3g at iteration %d", ll - ll_new, it)
        done = ll_new - ll < tol
        ll = ll_new
        if done:
            converged = True
            break
    if not converged:
        log.warning("EM stopped at max_iter=%d without meeting tol=%g", max_iter, tol)
    return replace(model, loglik=ll, n_iter=it, converged=converged, history=tuple(history)).normalized()


def classify(model: HmmModel, returns) -> StatePath:
    """Smoothed posterior of the high-variation state and hard labels."""
    x = _check_returns(returns, min_len=2)
    model = model.normalized()
    gamma, _, _ = _forward_backward(model.log_emissions(x), model.transition, model.initial)
    return StatePath.from_posterior(gamma[:, 0])


def state_runs(labels, state: int = 1) -> list:
    """Inclusive ``(start, end)`` index runs where ``labels == state``."""
    on = np.concatenate([[False], np.asarray(labels) == state, [False]])
    edges = np.flatnonzero(np.diff(on.astype(int)))
    return [(int(s), int(e) - 1) for s, e in zip(edges[::2], edges[1::2])]


def align_regimes(path_a: StatePath, path_b: StatePath, min_len: int = 26, max_lag: int = 52) -> list:
    """Joint regime-1 intervals shared by two state paths.

    State-1 runs shorter than ``min_len`` are dropped.  Each remaining run
    of ``path_a`` is paired with the unused run of ``path_b`` whose start is
    closest, provided the starts differ by at most ``max_lag``.  A pair
    yields the interval from the earlier start to the later end (both
    inclusive); unpaired runs are discarded and overlapping intervals merged.
    """
    la, lb = np.asarray(path_a.labels), np.asarray(path_b.labels)
    if la.shape != lb.shape:
        raise ValueError(f"length mismatch: {la.size} vs {lb.size}")
    runs_a = [r for r in state_runs(la) if r[1] - r[0] + 1 >= min_len]
    runs_b = [r for r in state_runs(lb) if r[1] - r[0] + 1 >= min_len]
    used = set()
    intervals = []
    for sa, ea in runs_a:
        best = None
        for j, (sb, eb) in enumerate(runs_b):
            lag = abs(sa - sb)
            if j in used or lag > max_lag:
                continue
            if best is None or lag < best[0]:
                best = (lag, j)
        if best is None:
            continue
        used.add(best[1])
        sb, eb = runs_b[best[1]]
        intervals.append((min(sa, sb), max(ea, eb)))
    intervals.sort()
    merged = []
    for s, e in intervals:
        if merged and s <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    return merged


def regime_mask(n: int, intervals) -> np.ndarray:
    """Boolean mask of rows covered by the inclusive intervals."""
    mask = np.zeros(n, dtype=bool)
    for s, e in intervals:
        mask[s:e + 1] = True
    return mask
