"""Brute-force numerical routes used to cross-check the closed forms.

Nothing here knows about the analytic results; each routine only sees a
black-box function.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar


def grid_argmax(f, lo: float, hi: float, n: int = 2001) -> tuple[float, float]:
    """Dense-grid maximum of a vectorized ``f``; NaNs are ignored."""
    z = np.linspace(lo, hi, n)
    vals = np.asarray(f(z), dtype=float)
    k = int(np.nanargmax(vals))
    return float(z[k]), float(vals[k])


def refined_max(f, lo: float, hi: float, n: int = 2001, xtol: float = 1e-12) -> tuple[float, float]:
    """Grid search followed by golden-section refinement around the best node.

    ``f`` must accept numpy arrays for the grid stage and floats afterwards.
    Returns ``(argmax, max)``.
    """
    z = np.linspace(lo, hi, n)
    vals = np.asarray(f(z), dtype=float)
    k = int(np.nanargmax(vals))
    if k == 0 or k == n - 1 or not (np.isfinite(vals[k - 1]) and np.isfinite(vals[k + 1])):
        return float(z[k]), float(vals[k])
    res = minimize_scalar(lambda x: -float(f(x)), bracket=(z[k - 1], z[k], z[k + 1]),
                          method="golden", tol=xtol)
    if -res.fun < vals[k]:
        return float(z[k]), float(vals[k])
    return float(res.x), float(-res.fun)


def series_coefficients(f, order: int = 3, h0: float = 0.05, levels: int = 6) -> np.ndarray:
    """Leading Taylor coefficients at 0 of a function with ``f(0) = 0``.

    Samples ``f`` at ``h0 / 2**k`` and extrapolates the polynomial through
    them (Richardson extrapolation in Neville/Vandermonde form).  Returns the
    first ``order`` coefficients of ``f(h) = c1 h + c2 h^2 + ...``.
    """
    if levels < order:
        raise ValueError("need at least as many levels as coefficients")
    t = 0.5 ** np.arange(levels)
    vals = np.array([f(h0 * tk) for tk in t])
    powers = np.arange(1, levels + 1)
    vander = t[:, None] ** powers[None, :]
    scaled = np.linalg.solve(vander, vals)
    return scaled[:order] / h0 ** powers[:order]


def leading_coefficient(f, h: float = 1e-4, levels: int = 3) -> float:
    """``f'(0)`` for ``f(0) = 0`` from difference quotients at ``h, h/2, ...``.

    The quotients ``f(h)/h`` are Richardson-extrapolated to ``h -> 0``.
    """
    table = [f(h / 2 ** k) / (h / 2 ** k) for k in range(levels)]
    for m in range(1, levels):
        table = [(2 ** m * table[k + 1] - table[k]) / (2 ** m - 1) for k in range(len(table) - 1)]
    return table[0]


def sign_change_crossing(x: np.ndarray, diff: np.ndarray) -> float:
    """Linear-interpolated location of the first sign change of ``diff``."""
    s = np.sign(diff)
    idx = np.nonzero(s[:-1] * s[1:] <= 0)[0]
    if idx.size == 0:
        raise ValueError("no sign change")
    k = int(idx[0])
    if diff[k] == diff[k + 1]:
        return float(x[k])
    return float(x[k] - diff[k] * (x[k + 1] - x[k]) / (diff[k + 1] - diff[k]))


def relative_error(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), math.ulp(0.0))
