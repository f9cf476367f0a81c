"""
Tail of the density
===================

The density decays like c x**-(alpha+1). The ratio to that law is printed
for three indices; for alpha = 1.2 the approach to 1 is not monotone,
because a correction of order x**-alpha competes with one of order 1/x.
"""

from stablesup import certify_identity, density_tail_ratio, h_funcs
from stablesup.asymptotics import fourier_tail_estimate
from stablesup.special import asymptote_constants

grid = (25, 50, 100, 200)
for alpha in (1.2, 1.5, 1.8):
    fit = density_tail_ratio(alpha, grid)
    cells = "  ".join(f"{r:.5f}" for r in fit.values)
    print(f"alpha = {alpha}: s / (c x^-(alpha+1)) = {cells}")

# the constant identity behind the tail law
for alpha in (1.2, 1.5, 1.8):
    print(f"alpha = {alpha}: identity residual {certify_identity(alpha):+.1e}")

# cosine transform of h1 / k1 against its limit constant l1
alpha = 1.5
k = asymptote_constants(alpha)
fit = fourier_tail_estimate(lambda t: h_funcs(alpha, t)[0] / k.k1, "cosine", alpha, (8, 16, 32, 64))
print(f"\nfitted exponent {fit.exponent_hat:.4f} (target {-(alpha + 1)})")
print(f"fitted constant {fit.constant_hat:.5f} (l1 = {k.l1:.5f})")
