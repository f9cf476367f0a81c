"""
Constants of the tail law
=========================

k1, k2 describe h1, h2 near the origin, l1, l2 the matching Fourier
integrals; together they reproduce 1/Gamma(-alpha).
"""

import math

import numpy as np

from stablesup import asymptote_constants, make_spec, trig_constants

print(" alpha    a        b        k1       k2       l1       l2       c")
for alpha in np.arange(1.1, 2.0, 0.1):
    t = trig_constants(alpha)
    k = asymptote_constants(alpha)
    print(f"{alpha:5.2f}  {t.a:.5f}  {t.b:.5f}  {k.k1:.5f}  {k.k2:.5f}  {k.l1:.5f}  {k.l2:.5f}"
          f"  {k.c_canonical:.5f}")

# a general Levy constant only rescales space
spec = make_spec(1.5, 1.0)
print(f"\nc = 1 at alpha = 1.5: spatial scale {spec.gamma_scale:.7f}"
      f" = Gamma(-1.5)^(2/3) = {(4 * math.sqrt(math.pi) / 3) ** (2 / 3):.7f}")
