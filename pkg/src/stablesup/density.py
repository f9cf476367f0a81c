"""Hybrid density and distribution of the supremum.

The power series is cheap and exact near the origin but loses digits
quickly as ``x`` grows; the integral representation works everywhere but
costs a quadrature per point. ``x_trust(alpha)`` is the switchover: the
largest ``x`` at which the series loses at most ``defaults.TRUST_DIGITS``
digits, a budget calibrated by ``scripts/calibrate_xtrust.py`` so that the
two methods agree to better than 1e-6 up to that point.

Integrals of the density (normalisation, Laplace transform, distribution
function beyond ``x_trust``) use one fixed set of nodes per ``alpha``:

* on ``[0, x_trust]`` the substitution ``x = x_trust v**(1/(alpha-1))``
  removes the ``x**(alpha-2)`` singularity of the density at the origin;
* on ``[x_trust, X]`` log-spaced Gauss-Legendre panels of the integral
  representation;
* beyond ``X`` the tail law ``P(S_1 > X) ~ (c/alpha) X**-alpha``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import roots_legendre

from . import defaults
from .errors import ParameterDomainError
from .oscint import DEFAULT_CONFIG, density_integral
from .results import EvalResult
from .series import cancellation_digits, cdf_series, density_series
from .special import canonical_c, check_alpha

METHODS = ("auto", "series", "integral")


@lru_cache(maxsize=256)
def x_trust(alpha, digits=defaults.TRUST_DIGITS):
    """Largest ``x`` where the series loses no more than ``digits`` digits."""
    alpha = check_alpha(alpha)

    def excess(x):
        return cancellation_digits(alpha, x) - digits

    lo, hi = 0.05, 0.1
    while excess(hi) < 0:
        lo, hi = hi, 2 * hi
    return brentq(excess, lo, hi, xtol=1e-6)


def density(alpha, x, method="auto", cfg=DEFAULT_CONFIG, tol=defaults.SERIES_TOL):
    """Canonical density by the requested method.

    ``method="auto"`` uses the series up to ``x_trust(alpha)`` and the
    integral representation beyond.
    """
    alpha = check_alpha(alpha)
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    if method not in METHODS:
        raise ParameterDomainError("method", method)
    if method == "auto":
        method = "series" if x <= x_trust(alpha) else "integral"
    if method == "series":
        value, diag = density_series(alpha, x, tol)
        err = abs(value) * 10.0 ** (diag.cancellation_digits - defaults.WORKING_DIGITS)
        return EvalResult(value, "series", err, {"n_terms": diag.n_terms,
                                                  "cancellation_digits": diag.cancellation_digits})
    return density_integral(alpha, x, cfg)


@dataclass(frozen=True)
class DensityNodes:
    """Quadrature nodes ``x``, weights ``w`` and density values ``s`` on ``[0, upper]``."""

    alpha: float
    x: np.ndarray
    w: np.ndarray
    s: np.ndarray
    split: float
    upper: float

    def tail_mass(self):
        return canonical_c(self.alpha) / self.alpha * self.upper ** (-self.alpha)


def _origin_nodes(alpha, x1, n=32, panels=2):
    q = 1.0 / (alpha - 1.0)
    xl, wl = roots_legendre(n)
    v_edges = np.linspace(0.0, 1.0, panels + 1)
    xs, ws = [], []
    for lo, hi in zip(v_edges[:-1], v_edges[1:]):
        v = lo + 0.5 * (hi - lo) * (xl + 1.0)
        xs.append(x1 * v ** q)
        ws.append(0.5 * (hi - lo) * wl * x1 * q * v ** (q - 1.0))
    return np.concatenate(xs), np.concatenate(ws)


def _log_panels(x1, x2, n=16):
    decades = math.log10(x2 / x1)
    count = max(1, math.ceil(decades * defaults.PANELS_PER_DECADE))
    edges = np.geomspace(x1, x2, count + 1)
    xl, wl = roots_legendre(n)
    half = 0.5 * np.diff(edges)
    x = edges[:-1, None] + half[:, None] * (xl + 1.0)
    return x.ravel(), (half[:, None] * wl).ravel()


@lru_cache(maxsize=32)
def density_nodes(alpha, upper=defaults.TAIL_START, cfg=DEFAULT_CONFIG):
    """Cached nodes and density values covering ``[0, upper]``."""
    alpha = check_alpha(alpha)
    x1 = x_trust(alpha)
    upper = max(float(upper), x1)
    x0, w0 = _origin_nodes(alpha, x1)
    s0 = np.array([density_series(alpha, x)[0] for x in x0])
    if upper > x1:
        xp, wp = _log_panels(x1, upper)
        sp = np.array([density_integral(alpha, x, cfg).value for x in xp])
    else:
        xp = wp = sp = np.empty(0)
    return DensityNodes(alpha, np.concatenate([x0, xp]), np.concatenate([w0, wp]),
                        np.concatenate([s0, sp]), x1, upper)


def total_mass(alpha, upper=defaults.TAIL_START, cfg=DEFAULT_CONFIG):
    """``int_0^upper s(x) dx`` plus the tail-law correction ``(c/alpha) upper**-alpha``."""
    nodes = density_nodes(alpha, upper, cfg)
    body = float(np.dot(nodes.w, nodes.s))
    return EvalResult(body + nodes.tail_mass(), "quadrature", 0.0,
                      {"body": body, "tail": nodes.tail_mass(), "upper": nodes.upper})


def cdf(alpha, x, cfg=DEFAULT_CONFIG):
    """``P(S_1 <= x)``: series below ``x_trust``, series plus integral above."""
    alpha = check_alpha(alpha)
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    x1 = x_trust(alpha)
    if x <= x1:
        value, diag = cdf_series(alpha, x)
        return EvalResult(value, "series", abs(value) * 10.0 ** (diag.cancellation_digits - 15))
    base, diag = cdf_series(alpha, x1)
    xp, wp = _log_panels(x1, x)
    body = sum(w * density_integral(alpha, xi, cfg).value for xi, w in zip(xp, wp))
    return EvalResult(base + body, "series+integral", 0.0, {"x_trust": x1, "series_part": base})


def survival(alpha, x, cfg=DEFAULT_CONFIG):
    """``P(S_1 > x) = 1 - cdf``."""
    r = cdf(alpha, x, cfg)
    return EvalResult(1.0 - r.value, r.method, r.abs_err, r.diagnostics)
