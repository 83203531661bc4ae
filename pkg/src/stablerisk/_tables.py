"""Quantile-ratio lookups behind :func:`stablerisk.stable.fit_quantile`."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy import interpolate, optimize

from . import _table_data


@lru_cache(maxsize=1)
def _splines():
    alphas = np.asarray(_table_data.ALPHAS)
    betas = np.asarray(_table_data.BETAS)
    q = np.asarray(_table_data.QUANTILES)
    q05, q25, q50, q75, q95 = (q[..., k] for k in range(5))
    nu_alpha = (q95 - q05) / (q75 - q25)
    nu_beta = (q95 + q05 - 2.0 * q50) / (q95 - q05)
    fit = lambda z: interpolate.RectBivariateSpline(alphas, betas, z, kx=3, ky=3)  # noqa: E731
    return fit(nu_alpha), fit(nu_beta), fit(q75 - q25), fit(q50)


def shape_ratios(alpha, beta):
    """McCulloch's (nu_alpha, nu_beta) for the law with these shape parameters."""
    s_na, s_nb, _, _ = _splines()
    b = abs(beta)
    sign = 1.0 if beta >= 0 else -1.0
    return float(s_na(alpha, b)[0, 0]), sign * float(s_nb(alpha, b)[0, 0])


def std_spread_median(alpha, beta):
    """Interquartile range and median of the standard S1 law."""
    _, _, s_iqr, s_med = _splines()
    b = abs(beta)
    sign = 1.0 if beta >= 0 else -1.0
    return float(s_iqr(alpha, b)[0, 0]), sign * float(s_med(alpha, b)[0, 0])


def invert_shape(nu_alpha, nu_beta):
    """Solve for (alpha, beta) reproducing the sample quantile ratios.

    alpha is confined to the tabulated range [1.05, 2]; values of
    ``nu_alpha`` lighter-tailed than the Gaussian give alpha = 2.
    """
    a_lo, a_hi = _table_data.ALPHAS[0], _table_data.ALPHAS[-1]
    gauss_nu, _ = shape_ratios(a_hi, 0.0)
    if nu_alpha <= gauss_nu:
        return a_hi, 0.0
    nu_beta = float(np.clip(nu_beta, -1.0, 1.0))

    def resid(p):
        na, nb = shape_ratios(p[0], p[1])
        return [na - nu_alpha, nb - nu_beta]

    # symmetric solution as a starting point
    f = lambda a: shape_ratios(a, 0.0)[0] - nu_alpha  # noqa: E731
    if f(a_lo) <= 0.0:
        a0 = a_lo
    else:
        a0 = optimize.brentq(f, a_lo, a_hi)
    a0 = min(max(a0, a_lo + 1e-6), a_hi - 1e-6)
    sol = optimize.least_squares(resid, [a0, np.clip(nu_beta * 2.0, -0.99, 0.99)], bounds=([a_lo, -1.0], [a_hi, 1.0]))
    alpha, beta = float(sol.x[0]), float(sol.x[1])
    if alpha >= a_hi - 1e-9:
        beta = 0.0
    return alpha, beta
