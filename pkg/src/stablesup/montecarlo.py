"""Monte Carlo oracle: grid suprema of simulated spectrally positive stable paths.

Increments come from the Chambers-Mallows-Stuck transform for a totally
right-skewed stable law. In the (alpha, beta=1, sigma, 0) parameterisation
with ``alpha in (1, 2)``,

    E exp(-lam X) = exp(-sigma**alpha lam**alpha / cos(pi alpha / 2)),

and ``cos(pi alpha / 2) < 0``, so ``sigma = (dt |cos(pi alpha / 2)|)**(1/alpha)``
gives ``E exp(-lam X_dt) = exp(dt lam**alpha)``, the canonical process.
The Laplace check in the test-suite is the authority on this mapping.

Suprema are maxima of partial sums on a uniform grid of ``n_steps`` points
in ``(0, 1]`` together with ``X_0 = 0``. That estimate is biased low and is
never corrected.

Random streams: chunk ``i`` of a run draws from
``numpy.random.Generator(PCG64(SeedSequence(seed, spawn_key=(i,))))``, so
the sample depends only on ``(seed, n_paths, n_steps, chunk_size)`` and not
on how many threads process the chunks.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import defaults
from .errors import ParameterDomainError
from .special import check_alpha


@dataclass(frozen=True)
class McRun:
    n_paths: int = defaults.MC_PATHS
    n_steps: int = defaults.MC_STEPS
    seed: int = defaults.MC_SEED
    chunk_size: int = defaults.MC_CHUNK

    def __post_init__(self):
        for name in ("n_paths", "n_steps", "chunk_size"):
            if getattr(self, name) < 1:
                raise ParameterDomainError(name, getattr(self, name))
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterDomainError("seed", self.seed)

    def chunks(self):
        """``(index, size)`` for every chunk, in order."""
        full, rest = divmod(self.n_paths, self.chunk_size)
        sizes = [self.chunk_size] * full + ([rest] if rest else [])
        return list(enumerate(sizes))


@dataclass(frozen=True)
class SupremumSample:
    """Simulated suprema sorted ascending, with the matching path endpoints."""

    values: np.ndarray
    endpoints: np.ndarray
    discretization: int

    def __len__(self):
        return self.values.size


def stream(seed, index):
    """Generator for chunk ``index`` of a run seeded with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def stable_scale(alpha, dt):
    """``sigma = (dt |cos(pi alpha/2)|)**(1/alpha)``."""
    return (dt * abs(math.cos(0.5 * math.pi * alpha))) ** (1.0 / alpha)


def sample_stable(alpha, dt, rng, size=None):
    """Increments ``X_dt`` of the canonical spectrally positive process."""
    alpha = check_alpha(alpha)
    dt = float(dt)
    if not dt > 0:
        raise ParameterDomainError("dt", dt)
    half = 0.5 * math.pi * alpha
    tan_half = math.tan(half)
    shift = math.atan(tan_half) / alpha
    skew_scale = (1.0 + tan_half * tan_half) ** (0.5 / alpha)
    v = rng.uniform(-0.5 * math.pi, 0.5 * math.pi, size)
    w = rng.standard_exponential(size)
    av = alpha * (v + shift)
    x = (skew_scale * np.sin(av) / np.cos(v) ** (1.0 / alpha)
         * (np.cos(v - av) / w) ** ((1.0 - alpha) / alpha))
    return stable_scale(alpha, dt) * x


def _chunk_suprema(alpha, n_paths, n_steps, rng, coarse_factor=None):
    inc = sample_stable(alpha, 1.0 / n_steps, rng, (n_paths, n_steps))
    paths = np.cumsum(inc, axis=1)
    sup = np.maximum(paths.max(axis=1), 0.0)
    # copy, or the view keeps the whole chunk of paths alive
    end = paths[:, -1].copy()
    if coarse_factor is None:
        return sup, end
    coarse = np.maximum(paths[:, coarse_factor - 1::coarse_factor].max(axis=1), 0.0)
    return sup, end, coarse


def _run_chunks(fn, run, threads):
    threads = defaults.max_threads() if threads is None else max(1, int(threads))
    jobs = run.chunks()
    if threads == 1:
        return [fn(i, n) for i, n in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))


def simulate_supremum(alpha, run=McRun(), threads=None):
    """Grid suprema for ``run.n_paths`` independent paths on ``[0, 1]``."""
    alpha = check_alpha(alpha)
    parts = _run_chunks(
        lambda i, n: _chunk_suprema(alpha, n, run.n_steps, stream(run.seed, i)), run, threads)
    sup = np.concatenate([p[0] for p in parts])
    end = np.concatenate([p[1] for p in parts])
    order = np.argsort(sup, kind="stable")
    return SupremumSample(sup[order], end[order], run.n_steps)


def paired_suprema(alpha, run, factor=2, threads=None):
    """Suprema on a grid of ``run.n_steps`` and on the sub-grid ``n_steps/factor``.

    Both come from the same increments (summing ``factor`` consecutive
    increments is exact by stability), so the pairs are comparable path by
    path. Returns ``(coarse, fine)`` in path order.
    """
    alpha = check_alpha(alpha)
    if run.n_steps % factor:
        raise ParameterDomainError("factor", factor, "n_steps must be a multiple of factor")
    parts = _run_chunks(
        lambda i, n: _chunk_suprema(alpha, n, run.n_steps, stream(run.seed, i), factor), run, threads)
    fine = np.concatenate([p[0] for p in parts])
    coarse = np.concatenate([p[2] for p in parts])
    return coarse, fine


def empirical_tail(sample, x):
    """``(fraction of suprema > x, binomial standard error)``."""
    n = len(sample)
    if n == 0:
        raise ParameterDomainError("sample", n, "empty sample")
    above = n - np.searchsorted(sample.values, x, side="right")
    p = above / n
    return float(p), float(math.sqrt(p * (1.0 - p) / n))


def laplace_check(alpha, lam, n=1_000_000, dt=1.0, seed=defaults.MC_SEED):
    """Monte Carlo ``E exp(-lam X_dt)`` and its standard error."""
    rng = stream(seed, 2 ** 32 - 1)
    y = np.exp(-lam * sample_stable(alpha, dt, rng, n))
    return float(y.mean()), float(y.std(ddof=1) / math.sqrt(n))
