"""Tail laws of the supremum and numerical checks of Fourier-tail asymptotics.

If ``h`` is C^3 on ``(0, inf)`` with ``h'''(t) ~ t**(alpha-3)`` as ``t -> 0``
(plus mild conditions at 0 and infinity), then

    int_0^inf h(t) cos(tx) dt ~ l1 x**-(alpha+1),
    int_0^inf h(t) sin(tx) dt ~ l2 x**-(alpha+1),

with the closed forms of :func:`~stablesup.special.asymptote_constants`.
Applied to ``h1/k1`` and ``h2/k2`` this gives
``s(x) ~ (k1 l1 + k2 l2) / pi * x**-(alpha+1)``, and the constant equals
``1/Gamma(-alpha)``. This module evaluates both sides of every such
statement; it does not check the hypotheses on ``h``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FitError, ParameterDomainError
from .oscint import DEFAULT_CONFIG, density_integral, fourier_integral
from .special import asymptote_constants, canonical_c, check_alpha


@dataclass(frozen=True)
class AsymptoteFit:
    """Power-law fit ``T(x) ~ constant_hat * x**exponent_hat`` on a grid.

    ``values`` holds ``T`` on ``x_grid``. ``exponent_hat`` comes from a
    least-squares fit of ``log T`` against ``log x`` on the last half of the
    grid. ``constant_hat`` is the geometric mean of ``T(x) x**-target_exponent``
    over the same points, i.e. the limit constant estimated with the
    exponent held at its theoretical value; ``constant_free`` is the
    intercept of the unconstrained fit. ``residuals`` are the per-point
    relative deviations ``T(x) / (constant_hat x**target_exponent) - 1``.
    """

    exponent_hat: float
    constant_hat: float
    constant_free: float
    target_exponent: float
    x_grid: np.ndarray
    values: np.ndarray
    residuals: np.ndarray
    extra: dict = field(default_factory=dict)


def tail_density_law(alpha, x):
    """``c x**-(alpha+1)`` with the canonical ``c``."""
    alpha = check_alpha(alpha)
    x = _positive(x)
    return canonical_c(alpha) * x ** (-(alpha + 1.0))


def tail_prob_law(alpha, x):
    """``(c/alpha) x**-alpha``, the tail law of ``P(S_1 > x)``."""
    alpha = check_alpha(alpha)
    x = _positive(x)
    return canonical_c(alpha) / alpha * x ** (-alpha)


def _positive(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ParameterDomainError("x", x)
    return float(x) if x.ndim == 0 else x


def _check_grid(x_grid, minimum):
    x = np.asarray(x_grid, dtype=float)
    if x.ndim != 1 or x.size < minimum:
        raise ParameterDomainError("x_grid", x_grid, f"need at least {minimum} points")
    if np.any(x <= 0) or np.any(np.diff(x) <= 0):
        raise ParameterDomainError("x_grid", x_grid, "grid must be positive and strictly increasing")
    return x


def fit_power_law(x_grid, values, target_exponent):
    """Fit ``values ~ C x**p`` on the last ``ceil(n/2)`` points of the grid."""
    x = _check_grid(x_grid, 3)
    v = np.asarray(values, dtype=float)
    if np.any(v <= 0) and np.any(v >= 0):
        raise FitError("values change sign on the grid; no power law fits")
    sign = 1.0 if v[0] > 0 else -1.0
    v = sign * v
    k = math.ceil(x.size / 2)
    lx, lv = np.log(x[-k:]), np.log(v[-k:])
    slope, intercept = np.polyfit(lx, lv, 1)
    constant = math.exp(float(np.mean(lv - target_exponent * lx)))
    residuals = v / (constant * x ** target_exponent) - 1.0
    return AsymptoteFit(float(slope), sign * constant, sign * math.exp(intercept),
                        float(target_exponent), x, sign * v, residuals)


def fourier_tail_estimate(h, kind, alpha, x_grid, cfg=DEFAULT_CONFIG):
    """Fit the large-``x`` power law of ``int_0^inf h(t) {cos|sin}(tx) dt``.

    ``h`` is a vectorised real function on ``(0, inf)``; the target exponent
    is ``-(alpha + 1)``. Each transform is computed with the same
    half-period machinery as the density.
    """
    alpha = check_alpha(alpha)
    if kind not in ("cosine", "sine"):
        raise ParameterDomainError("kind", kind)
    x = _check_grid(x_grid, 4)
    vals, errs = [], []
    for xi in x:
        z, err, _ = fourier_integral(lambda t: np.asarray(h(t), dtype=float) + 0j, xi, cfg)
        vals.append(z.real if kind == "cosine" else z.imag)
        errs.append(err)
    fit = fit_power_law(x, vals, -(alpha + 1.0))
    fit.extra["errors"] = np.array(errs)
    return fit


def certify_identity(alpha):
    """``(k1 l1 + k2 l2)/pi - 1/Gamma(-alpha)``, zero up to rounding."""
    k = asymptote_constants(alpha)
    return (k.k1 * k.l1 + k.k2 * k.l2) / math.pi - k.c_canonical


def density_tail_ratio(alpha, x_grid, cfg=DEFAULT_CONFIG):
    """``s(x) / (c x**-(alpha+1))`` on a grid, with a fitted convergence rate.

    The ratios are stored in ``values``; ``exponent_hat`` is the fitted
    exponent of ``|ratio - 1|`` (the rate at which the ratio approaches 1)
    and ``constant_hat`` its prefactor.
    """
    alpha = check_alpha(alpha)
    x = _check_grid(x_grid, 3)
    s = np.array([density_integral(alpha, xi, cfg).value for xi in x])
    ratios = s / tail_density_law(alpha, x)
    dev = np.abs(ratios - 1.0)
    k = math.ceil(x.size / 2)
    slope, intercept = np.polyfit(np.log(x[-k:]), np.log(dev[-k:]), 1)
    return AsymptoteFit(float(slope), math.exp(intercept), math.exp(intercept), float("nan"),
                        x, ratios, ratios - 1.0, {"density": s})


def i1_cubic_bound(alpha, x_grid, cfg=DEFAULT_CONFIG):
    """``x**3 |I1(x)|`` on a grid."""
    from .oscint import I1

    x = _check_grid(x_grid, 2)
    return np.array([xi ** 3 * abs(I1(alpha, xi, cfg).value) for xi in x])
