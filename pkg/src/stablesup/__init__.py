"""Law of the supremum of a spectrally positive stable process.

For a stable process of index ``alpha in (1, 2)`` with no negative jumps
and Levy density ``c x**-(alpha+1)``, the package evaluates the density,
distribution function and Laplace transform of ``S_1 = sup_{t<=1} X_t`` by
a power series, by an oscillatory integral representation and by Monte
Carlo, and checks numerically that ``s(x) ~ c x**-(alpha+1)``.
"""

from .asymptotics import (AsymptoteFit, certify_identity, density_tail_ratio,
                          fourier_tail_estimate, tail_density_law, tail_prob_law)
from .density import cdf, density, survival, total_mass, x_trust
from .errors import (FitError, ParameterDomainError, PrecisionLossError, QuadratureError,
                     StableSupError)
from .laplace import laplace_exact, laplace_from_density, small_lambda_expansion
from .montecarlo import McRun, SupremumSample, empirical_tail, sample_stable, simulate_supremum
from .oscint import I1, I2, QuadConfig, density_integral, g_funcs, h_funcs
from .params import StableSpec, canonical_density_transfer, make_spec
from .results import EvalResult
from .series import SeriesDiag, cdf_series, density_series, series_coeff
from .special import (asymptote_constants, gamma_fn, lower_inc_gamma, recip_gamma,
                      trig_constants)

__version__ = "0.1.0"
