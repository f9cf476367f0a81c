"""Gamma-type special functions and the closed-form constants of the tail law.

Everything here is scalar and pure. ``gamma_fn`` and the log-gamma used by
the series coefficients come from the C library (``math.gamma``,
``math.lgamma``); the reciprocal gamma and the incomplete gamma functions
are implemented here because the series and Laplace modules need their
behaviour on the negative axis and in the large-argument regime to be
explicit.
"""

import math
from dataclasses import dataclass

from .errors import ParameterDomainError

_EPS = 2.220446049250313e-16
_TINY = 1e-300


def _is_pole(z):
    return z <= 0 and z == math.floor(z)


def gamma_fn(z):
    """Gamma function for real ``z``.

    Raises
    ------
    ParameterDomainError
        If ``z`` is zero or a negative integer.
    """
    z = float(z)
    if _is_pole(z):
        raise ParameterDomainError("z", z, f"gamma has a pole at z={z}")
    return math.gamma(z)


def recip_gamma(z):
    """Reciprocal gamma function ``1/Gamma(z)``, an entire function.

    Returns an exact zero at the non-positive integers. For ``z < 0.5`` the
    reflection formula ``Gamma(1 - z) sin(pi z) / pi`` is used so that the
    result stays finite and accurate along the negative axis.
    """
    z = float(z)
    if _is_pole(z):
        return 0.0
    if z >= 0.5:
        if z > 171.5:
            return 0.0
        return 1.0 / math.gamma(z)
    return math.gamma(1.0 - z) * _sinpi(z) / math.pi


def log_abs_recip_gamma(z):
    """``(log|1/Gamma(z)|, sign)``; the log is ``-inf`` at poles of Gamma."""
    z = float(z)
    if _is_pole(z):
        return -math.inf, 0.0
    if z >= 0.5:
        return -math.lgamma(z), 1.0
    s = _sinpi(z)
    return math.lgamma(1.0 - z) + math.log(abs(s) / math.pi), math.copysign(1.0, s)


def _sinpi(z):
    # sin(pi z) with the argument reduced first, exact zeros at integers
    r = math.fmod(z, 2.0)
    if r == math.floor(r):
        return 0.0
    return math.sin(math.pi * r)


def lower_inc_gamma(eta, u):
    """Lower incomplete gamma ``int_0^u y**(eta-1) exp(-y) dy``.

    Uses the power series for ``u < eta + 1`` and the Lentz continued
    fraction for the complement otherwise.
    """
    eta, u = _check_inc_args(eta, u)
    if u == 0.0:
        return 0.0
    if u < eta + 1.0:
        return math.exp(-u + eta * math.log(u)) * _inc_series(eta, u)
    return math.gamma(eta) - math.exp(-u + eta * math.log(u)) * _inc_cf(eta, u)


def upper_inc_gamma_scaled(eta, u):
    """``exp(u) * Gamma(eta, u) / Gamma(eta)`` without overflow.

    This is the quantity ``exp(u) * (1 - gamma(eta, u) / Gamma(eta))``; for
    large ``u`` the exponential is cancelled analytically inside the
    continued fraction.
    """
    eta, u = _check_inc_args(eta, u)
    if u == 0.0:
        return 1.0
    if u < eta + 1.0:
        p = math.exp(-u + eta * math.log(u) - math.lgamma(eta)) * _inc_series(eta, u)
        return math.exp(u) * (1.0 - p)
    return math.exp(eta * math.log(u) - math.lgamma(eta)) * _inc_cf(eta, u)


def _check_inc_args(eta, u):
    eta, u = float(eta), float(u)
    if not eta > 0:
        raise ParameterDomainError("eta", eta)
    if not u >= 0:
        raise ParameterDomainError("u", u)
    return eta, u


def _inc_series(eta, u):
    # sum_k u**k / (eta (eta+1) ... (eta+k))
    term = 1.0 / eta
    total = term
    k = 0
    while True:
        k += 1
        term *= u / (eta + k)
        total += term
        if abs(term) < abs(total) * _EPS:
            return total
        if k > 10_000:
            raise ArithmeticError("incomplete gamma series did not converge")


def _inc_cf(eta, u):
    # Gamma(eta, u) * exp(u) * u**-eta by modified Lentz
    b = u + 1.0 - eta
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - eta)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise ArithmeticError("incomplete gamma continued fraction did not converge")


def check_alpha(alpha):
    alpha = float(alpha)
    if not 1.0 < alpha < 2.0:
        raise ParameterDomainError("alpha", alpha, f"alpha={alpha!r} must lie in the open interval (1, 2)")
    return alpha


def gamma_neg_alpha(alpha):
    """``Gamma(-alpha)`` for ``1 < alpha < 2`` via reflection from ``Gamma(1 + alpha)``."""
    alpha = check_alpha(alpha)
    return -math.pi / (math.sin(math.pi * alpha) * math.gamma(1.0 + alpha))


def canonical_c(alpha):
    """The Levy constant ``1/Gamma(-alpha)`` that makes the Laplace exponent ``lambda**alpha``."""
    alpha = check_alpha(alpha)
    return -math.sin(math.pi * alpha) * math.gamma(1.0 + alpha) / math.pi


@dataclass(frozen=True)
class TrigConstants:
    a: float
    b: float
    beta: float


@dataclass(frozen=True)
class AsymptoteConstants:
    k1: float
    k2: float
    l1: float
    l2: float
    c_canonical: float


def trig_constants(alpha):
    """``a = -cos(alpha pi/2)``, ``b = sin(alpha pi/2)``, ``beta = 1 - 1/alpha``."""
    alpha = check_alpha(alpha)
    half = 0.5 * math.pi * alpha
    return TrigConstants(a=-math.cos(half), b=math.sin(half), beta=1.0 - 1.0 / alpha)


def asymptote_constants(alpha):
    """Constants of the small-t laws of h1''', h2''' and of the Fourier tail limits."""
    tc = trig_constants(alpha)
    poly = alpha * (alpha - 1.0) * (2.0 - alpha)
    g3 = math.gamma(3.0 - alpha)
    return AsymptoteConstants(
        k1=tc.a * poly,
        k2=tc.b * poly,
        l1=math.pi / (2.0 * g3 * tc.a),
        l2=math.pi / (2.0 * g3 * tc.b),
        c_canonical=canonical_c(alpha),
    )
