"""Power series for the density and distribution function of the supremum.

The canonical density is

    s(x) = sum_{n>=1} a_n x**(alpha n - 2),
    a_n  = 1 / (Gamma(alpha n - 1) Gamma(1/alpha + 1 - n)),

and the distribution function follows by term-wise integration,
``F(x) = sum a_n x**(alpha n - 1) / (alpha n - 1)``.

This expansion is not what one gets by expanding the Laplace transform in
negative powers of lambda; it is taken as given. It is entire in
``x**alpha`` but alternates with terms of factorial size, so in double
precision it is only usable on a bounded range of ``x``. Every evaluation
records the number of digits lost to cancellation and refuses to return a
value once that loss exceeds ``defaults.SERIES_GATE_DIGITS``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import defaults
from .errors import ParameterDomainError, PrecisionLossError
from .special import check_alpha, log_abs_recip_gamma

_TINY = 1e-300


@dataclass(frozen=True)
class SeriesDiag:
    n_terms: int
    max_term: float
    cancellation_digits: float
    converged: bool


def series_coeff(alpha, n):
    """Coefficient ``a_n``.

    Both reciprocal-gamma factors are combined in log space, so the value is
    finite even when ``Gamma(1/alpha + 1 - n)`` on its own would overflow.
    """
    alpha = check_alpha(alpha)
    log_mag, sign = _log_coeff(alpha, int(n))
    return sign * math.exp(log_mag)


def _log_coeff(alpha, n):
    if n < 1:
        raise ParameterDomainError("n", n, "series index starts at n=1")
    l1, s1 = log_abs_recip_gamma(alpha * n - 1.0)
    l2, s2 = log_abs_recip_gamma(1.0 / alpha + 1.0 - n)
    return l1 + l2, s1 * s2


@lru_cache(maxsize=64)
def _log_coeffs(alpha, count):
    return tuple(_log_coeff(alpha, n) for n in range(1, count + 1))


def _check(alpha, x, tol):
    alpha = check_alpha(alpha)
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    tol = float(tol)
    if not 0 < tol < 1e-3:
        raise ParameterDomainError("tol", tol, "tol must lie in (0, 1e-3)")
    return alpha, x, tol


def _sum(alpha, x, tol, power_shift, divide):
    """Sum ``a_n x**(alpha n + power_shift) [/ (alpha n - 1)]`` with diagnostics."""
    logx = math.log(x)
    total = 0.0
    max_term = 0.0
    below = 0
    prev = math.inf
    count = 64
    coeffs = _log_coeffs(alpha, count)
    n = 0
    while n < defaults.SERIES_MAX_TERMS:
        if n == count:
            count *= 2
            coeffs = _log_coeffs(alpha, count)
        log_mag, sign = coeffs[n]
        n += 1
        expo = alpha * n + power_shift
        log_term = log_mag + expo * logx
        if divide:
            log_term -= math.log(alpha * n - 1.0)
        if log_term > 700.0:
            diag = SeriesDiag(n, math.inf, math.inf, False)
            raise PrecisionLossError(f"series term overflow at x={x}", diag)
        mag = math.exp(log_term)
        total += sign * mag
        max_term = max(max_term, mag)
        if mag < tol * abs(total) and mag < prev:
            below += 1
        else:
            below = 0
        prev = mag
        if below >= 3:
            break
    converged = below >= 3
    digits = math.log10(max_term / max(abs(total), _TINY))
    diag = SeriesDiag(n, max_term, digits, converged)
    if not converged:
        raise PrecisionLossError(f"series did not converge within {n} terms at x={x}", diag)
    if digits > defaults.SERIES_GATE_DIGITS:
        raise PrecisionLossError(
            f"series at x={x} loses {digits:.1f} digits to cancellation "
            f"(limit {defaults.SERIES_GATE_DIGITS})",
            diag,
        )
    return total, diag


def density_series(alpha, x, tol=defaults.SERIES_TOL):
    """Canonical density ``s(x)`` from the power series.

    Returns
    -------
    value : float
    diag : SeriesDiag

    Raises
    ------
    PrecisionLossError
        When cancellation exceeds the precision budget or the series fails
        to settle; the diagnostics are attached to the exception.
    """
    alpha, x, tol = _check(alpha, x, tol)
    return _sum(alpha, x, tol, -2.0, False)


def cdf_series(alpha, x, tol=defaults.SERIES_TOL):
    """Distribution function ``P(S_1 <= x)`` from the term-wise antiderivative."""
    alpha, x, tol = _check(alpha, x, tol)
    return _sum(alpha, x, tol, -1.0, True)


def cancellation_digits(alpha, x, tol=defaults.SERIES_TOL):
    """Digits lost by the density series at ``x``, computed without the gate."""
    alpha, x, tol = _check(alpha, x, tol)
    try:
        _, diag = _sum(alpha, x, tol, -2.0, False)
    except PrecisionLossError as exc:
        return exc.diag.cancellation_digits
    return diag.cancellation_digits


def density_series_mp(alpha, x, dps=60, tol=None, max_terms=100_000):
    """High-precision evaluation of the density series (test oracle).

    ``dps`` is the working precision in decimal digits; the result is
    returned as a float. Requires :mod:`mpmath`.
    """
    return _sum_mp(alpha, x, dps, tol, max_terms, -2, False)


def cdf_series_mp(alpha, x, dps=60, tol=None, max_terms=100_000):
    """High-precision evaluation of the distribution series (test oracle)."""
    return _sum_mp(alpha, x, dps, tol, max_terms, -1, True)


def _sum_mp(alpha, x, dps, tol, max_terms, shift, divide):
    import mpmath

    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        xm = mpmath.mpf(x)
        tol = mpmath.mpf(10) ** (-dps + 5) if tol is None else mpmath.mpf(tol)
        total = mpmath.mpf(0)
        below = 0
        for n in range(1, max_terms):
            term = mpmath.rgamma(a * n - 1) * mpmath.rgamma(1 / a + 1 - n) * xm ** (a * n + shift)
            if divide:
                term /= a * n - 1
            total += term
            below = below + 1 if abs(term) < tol * abs(total) else 0
            if below >= 3:
                return float(total)
    raise PrecisionLossError(f"high-precision series did not converge at x={x}")
