"""Laplace transform of the supremum.

The exact transform is

    E exp(-lam S_1) = alpha / Gamma(1/alpha) * exp(lam**alpha) * int_lam^inf exp(-y**alpha) dy
                    = exp(u) * (1 - gamma(eta, u) / Gamma(eta)),   u = lam**alpha, eta = 1/alpha,

and it is always evaluated in the second form through
:func:`~stablesup.special.upper_inc_gamma_scaled`, which never forms
``exp(u)`` separately. Near the origin

    E exp(-lam S_1) = 1 - alpha lam / Gamma(1/alpha) + lam**alpha + O(lam**2),

where the linear coefficient is the mean ``E S_1 = alpha / Gamma(1/alpha)``
obtained by differentiating the exact transform at zero.
"""

import math
from dataclasses import dataclass

import numpy as np

from .density import density_nodes
from .errors import ParameterDomainError
from .oscint import DEFAULT_CONFIG
from .special import _inc_cf, canonical_c, check_alpha, upper_inc_gamma_scaled

#: lam**alpha beyond which the transform is refused
OVERFLOW_EXPONENT = 700.0


@dataclass(frozen=True)
class LaplaceEval:
    lam: float
    exact: float
    from_density: float
    expansion: float
    abs_gap: float


def mean_supremum(alpha):
    """``E S_1 = alpha / Gamma(1/alpha)``."""
    alpha = check_alpha(alpha)
    return alpha / math.gamma(1.0 / alpha)


def laplace_exact(alpha, lam):
    """``E exp(-lam S_1)`` in closed form."""
    alpha = check_alpha(alpha)
    lam = float(lam)
    if not lam >= 0:
        raise ParameterDomainError("lam", lam)
    if lam == 0.0:
        return 1.0
    u = lam ** alpha
    if u > OVERFLOW_EXPONENT:
        raise ParameterDomainError("lam", lam, f"lam**alpha={u:.3g} exceeds {OVERFLOW_EXPONENT}")
    return upper_inc_gamma_scaled(1.0 / alpha, u)


def laplace_from_density(alpha, lam, cfg=DEFAULT_CONFIG):
    """``int_0^inf exp(-lam x) s(x) dx`` by quadrature of the hybrid density.

    Beyond the quadrature range ``X`` the density is replaced by its tail
    law, whose transform is ``c lam**alpha Gamma(-alpha, lam X)``.
    """
    alpha = check_alpha(alpha)
    lam = float(lam)
    if not lam > 0:
        raise ParameterDomainError("lam", lam)
    nodes = density_nodes(alpha, cfg=cfg)
    body = float(np.dot(nodes.w, np.exp(-lam * nodes.x) * nodes.s))
    return body + _tail_transform(alpha, lam, nodes.upper)


def _tail_transform(alpha, lam, upper):
    """``c int_upper^inf exp(-lam x) x**-(alpha+1) dx``."""
    z = lam * upper
    if z >= 1.0:
        # exp(z) Gamma(-alpha, z); the continued fraction holds for negative order
        g = z ** -alpha * _inc_cf(-alpha, z)
    else:
        # two steps down from Gamma(2 - alpha, z): Gamma(s, z) = (Gamma(s+1, z) - z**s e^-z) / s
        a = 2.0 - alpha
        g = upper_inc_gamma_scaled(a, z) * math.gamma(a)
        g = (g - z ** (1.0 - alpha)) / (1.0 - alpha)
        g = (g - z ** -alpha) / -alpha
    return canonical_c(alpha) * lam ** alpha * math.exp(-z) * g


def small_lambda_expansion(alpha, lam):
    """``1 - alpha lam / Gamma(1/alpha) + lam**alpha`` for ``0 <= lam <= 0.5``."""
    alpha = check_alpha(alpha)
    lam = float(lam)
    if not 0.0 <= lam <= 0.5:
        raise ParameterDomainError("lam", lam, "expansion is only offered on [0, 0.5]")
    return 1.0 - mean_supremum(alpha) * lam + lam ** alpha


def laplace_eval(alpha, lam, cfg=DEFAULT_CONFIG):
    """All three routes at one ``lam``; the expansion is NaN outside its range."""
    exact = laplace_exact(alpha, lam)
    numeric = laplace_from_density(alpha, lam, cfg) if lam > 0 else 1.0
    expansion = small_lambda_expansion(alpha, lam) if lam <= 0.5 else math.nan
    return LaplaceEval(lam, exact, numeric, expansion, abs(numeric - exact))


def remainder_slope(alpha, lams=(0.2, 0.1, 0.05, 0.025)):
    """Least-squares slope of ``log|exact - expansion|`` against ``log lam``."""
    lams = np.asarray(lams, dtype=float)
    gaps = np.array([abs(laplace_exact(alpha, l) - small_lambda_expansion(alpha, l)) for l in lams])
    slope, _ = np.polyfit(np.log(lams), np.log(gaps), 1)
    return float(slope)
