"""
Two routes to the density
=========================

The power series is exact near the origin but cancels catastrophically as
x grows; the oscillatory integral works everywhere. This script walks the
density across the switchover point.
"""

import numpy as np

from stablesup import density_integral, density_series, x_trust
from stablesup.errors import PrecisionLossError
from stablesup.series import cancellation_digits

alpha = 1.5
x1 = x_trust(alpha)
print(f"alpha = {alpha}, series trusted up to x = {x1:.3f}")

# digits lost to cancellation grow quickly with x
for x in (0.5, 1, 2, 3, x1):
    print(f"  x = {x:6.3f}: {cancellation_digits(alpha, x):5.2f} digits lost")

print("\n     x        series          integral        rel. diff")
for x in np.geomspace(0.1, x1, 8):
    s, _ = density_series(alpha, x)
    i = density_integral(alpha, x).value
    print(f"{x:7.3f}  {s:.12e}  {i:.12e}  {abs(s / i - 1):.1e}")

# past the gate the series refuses instead of returning noise
try:
    density_series(alpha, 15.0)
except PrecisionLossError as exc:
    print(f"\nseries at x = 15: {exc}")
print(f"integral at x = 15: {density_integral(alpha, 15.0).value:.12e}")
