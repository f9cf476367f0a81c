"""Calibrate the cancellation budget that defines x_trust.

For each candidate budget and each alpha on a grid, find the x at which the
density series loses exactly that many digits and compare the series with
the integral representation there. The budget in ``defaults.TRUST_DIGITS``
must keep the worst relative disagreement below 1e-6.

    python scripts/calibrate_xtrust.py
"""

import numpy as np

from stablesup.density import x_trust
from stablesup.oscint import density_integral
from stablesup.series import density_series

ALPHAS = np.round(np.arange(1.1, 2.0, 0.1), 2)

for digits in (5.0, 6.0, 7.0, 8.0):
    worst = 0.0
    for alpha in ALPHAS:
        x = x_trust(alpha, digits)
        s = density_series(alpha, x)[0]
        r = density_integral(alpha, x).value
        gap = abs(s - r) / r
        worst = max(worst, gap)
        print(f"digits={digits:.0f} alpha={alpha:.2f} x_trust={x:8.4f} rel_gap={gap:.2e}")
    print(f"digits={digits:.0f} worst={worst:.2e}\n")
