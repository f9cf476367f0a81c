"""
Monte Carlo suprema
===================

Simulated grid suprema against the analytic tail. The grid supremum is
biased low, and refining the grid raises every path's estimate.
"""

from stablesup import McRun, empirical_tail, simulate_supremum, survival
from stablesup.montecarlo import paired_suprema

alpha = 1.5
run = McRun(n_paths=20_000, n_steps=1_000, seed=1)
sample = simulate_supremum(alpha, run)
for x in (1, 2, 5):
    p, se = empirical_tail(sample, x)
    q = survival(alpha, x).value
    print(f"P(S_1 > {x}): simulated {p:.4f} +- {se:.4f}, analytic {q:.4f}")

coarse, fine = paired_suprema(alpha, McRun(n_paths=5_000, n_steps=1_000, seed=2), factor=10)
print(f"\nmean supremum on 100 steps {coarse.mean():.4f}, on 1000 steps {fine.mean():.4f}")
print(f"paths with supremum exactly 0: {(coarse == 0).sum()} vs {(fine == 0).sum()}")
