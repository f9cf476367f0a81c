"""Process parameters and the reduction of a general Levy constant to the canonical one.

A spectrally positive stable process with Levy density ``c x**-(alpha+1)``
is, up to a spatial dilation, the canonical process with
``c = 1/Gamma(-alpha)``. If ``gamma_scale = (c Gamma(-alpha))**(1/alpha)``
then ``S_1`` for constant ``c`` has the law of ``gamma_scale * S_1`` for the
canonical process, so densities transfer as
``s_c(x) = s(x / gamma_scale) / gamma_scale``.
"""

import math
from dataclasses import dataclass

from .errors import ParameterDomainError
from .special import canonical_c, check_alpha, gamma_neg_alpha


@dataclass(frozen=True)
class StableSpec:
    alpha: float
    c: float
    gamma_scale: float

    @property
    def is_canonical(self):
        return self.gamma_scale == 1.0


def make_spec(alpha, c=None):
    """Validate ``(alpha, c)`` and compute the spatial scale factor.

    ``c=None`` selects the canonical constant ``1/Gamma(-alpha)``.
    """
    alpha = check_alpha(alpha)
    if c is None:
        return StableSpec(alpha=alpha, c=canonical_c(alpha), gamma_scale=1.0)
    c = float(c)
    if not (c > 0 and math.isfinite(c)):
        raise ParameterDomainError("c", c, f"c={c!r} must be a positive finite number")
    ratio = c * gamma_neg_alpha(alpha)
    # keep the canonical case exact despite rounding in c
    if abs(ratio - 1.0) < 4e-16:
        ratio = 1.0
    return StableSpec(alpha=alpha, c=c, gamma_scale=ratio ** (1.0 / alpha))


def canonical_density_transfer(spec, x, s_canonical):
    """Density at ``x`` for ``spec.c`` given a canonical density evaluator."""
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    g = spec.gamma_scale
    return float(s_canonical(x / g)) / g
