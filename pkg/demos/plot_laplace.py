"""
Laplace transform
=================

The closed form, quadrature of the computed density, and the small-lambda
expansion side by side.
"""

import numpy as np

from stablesup import laplace_exact, laplace_from_density, small_lambda_expansion
from stablesup.laplace import mean_supremum, remainder_slope

alpha = 1.5
print(f"E S_1 = {mean_supremum(alpha):.6f}")
print("\n  lambda     exact          from density   expansion")
for lam in (0.025, 0.1, 0.5, 1.0, 2.0, 10.0):
    exact = laplace_exact(alpha, lam)
    numeric = laplace_from_density(alpha, lam)
    approx = small_lambda_expansion(alpha, lam) if lam <= 0.5 else np.nan
    print(f"{lam:8.3f}  {exact:.10f}  {numeric:.10f}  {approx:.6f}")

# the remainder is of order lam**(1+alpha), but the lam**(2 alpha) term
# is only lam**(alpha-1) smaller, so the fitted slope creeps up slowly
for lams in ((0.2, 0.1, 0.05, 0.025), (0.02, 0.01, 0.005, 0.0025)):
    print(f"remainder slope on {lams}: {remainder_slope(alpha, lams):.3f}")
