"""Density of the supremum from its oscillatory integral representation.

The canonical density is

    s(x) = I1(x) / (pi Gamma(1/alpha)) + I2(x) / pi,

    I1(x) = int_0^inf g1(t) cos(tx) + g2(t) sin(tx) dt,
    I2(x) = int_0^inf h1(t) cos(tx) + h2(t) sin(tx) dt,

with ``h1(t) = exp(-a t**alpha) cos(b t**alpha)`` and
``h2(t) = -exp(-a t**alpha) sin(b t**alpha)``, so that
``h1 cos(tx) + h2 sin(tx) = exp(-a t**alpha) cos(b t**alpha + tx)``, and

    g2(t) + i g1(t) = t int_0^1 exp(omega t**alpha z) (1 - z)**(-beta) dz,
    omega = exp(i pi alpha / 2) = -a + i b.

The inner integral carries the endpoint singularity ``(1 - z)**(-beta)``
at a fixed location for every ``t``; it is absorbed into Gauss-Jacobi
weights on the panel touching ``z = 1``. For large ``t`` the factor
``exp(-a t**alpha z)`` confines the integrand to small ``z`` and the
interval is cut where it drops below ``exp(-INNER_DECAY)``.

The outer integrals are written as ``int F(t) exp(itx) dt`` with complex
``F``. A head covering whole half-periods of ``exp(itx)`` is integrated by
composite Gauss-Legendre (with a power substitution on the panel touching
``t = 0``, where ``F`` has a ``t**alpha`` branch point); the remainder is a
series of half-period integrals that alternates in sign and is summed by
repeated averaging of its partial sums (Euler's transformation). ``g1`` and
``g2`` decay only like ``t**(1 - alpha)``, so this is what makes ``I1``
computable at all.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from . import defaults
from .errors import ParameterDomainError, QuadratureError
from .results import EvalResult
from .special import check_alpha, trig_constants

_T_CHUNK = 256


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and node counts for every quadrature in the package.

    ``outer_cutoff`` bounds the head of absolutely convergent outer
    integrals; ``None`` lets the envelope ``exp(-a t**alpha)`` decide.
    """

    abs_tol: float = defaults.ABS_TOL
    rel_tol: float = defaults.REL_TOL
    jacobi_nodes: int = defaults.JACOBI_NODES
    max_half_periods: int = defaults.MAX_HALF_PERIODS
    accel_depth: int = defaults.ACCEL_DEPTH
    outer_cutoff: float = None

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ParameterDomainError("tolerance", (self.abs_tol, self.rel_tol))
        if self.jacobi_nodes < 8:
            raise ParameterDomainError("jacobi_nodes", self.jacobi_nodes)
        if not self.max_half_periods >= self.accel_depth >= 2:
            raise ParameterDomainError("accel_depth", self.accel_depth,
                                       "need max_half_periods >= accel_depth >= 2")
        if self.outer_cutoff is not None and not self.outer_cutoff > 0:
            raise ParameterDomainError("outer_cutoff", self.outer_cutoff)

    def halved(self):
        """Same configuration with both tolerances halved."""
        return QuadConfig(self.abs_tol / 2, self.rel_tol / 2, self.jacobi_nodes,
                          self.max_half_periods, self.accel_depth, self.outer_cutoff)


DEFAULT_CONFIG = QuadConfig()


@lru_cache(maxsize=None)
def _legendre(n):
    x, w = roots_legendre(n)
    return x, w


@lru_cache(maxsize=None)
def _jacobi(n, beta):
    # weight (1 - v)**(-beta) on [-1, 1]
    x, w = roots_jacobi(n, -beta, 0.0)
    return x, w


# ---------------------------------------------------------------------------
# inner integrals g1, g2

def _g_complex(alpha, t, nodes, decay=defaults.INNER_DECAY):
    """``g2(t) + i g1(t)`` for a 1-d array ``t >= 0``."""
    t = np.asarray(t, dtype=float)
    out = np.empty(t.shape, dtype=complex)
    for start in range(0, t.size, _T_CHUNK):
        sl = slice(start, start + _T_CHUNK)
        out[sl] = _g_block(alpha, t[sl], nodes, decay)
    return out


def _g_block(alpha, t, nodes, decay):
    tc = trig_constants(alpha)
    omega = complex(-tc.a, tc.b)
    # interior panels span at most pi radians of oscillation and of decay,
    # so half the Jacobi order is ample there
    xl, wl = _legendre(max(8, nodes // 2))
    xj, wj = _jacobi(nodes, tc.beta)
    T = t ** alpha
    zmax = np.minimum(1.0, decay / np.maximum(tc.a * T, 1e-300))
    spread = max(tc.a, tc.b) * np.max(T * zmax, initial=0.0)
    panels = int(np.ceil(spread / np.pi)) + 1
    frac = np.linspace(0.0, 1.0, panels + 1)
    lo = zmax[:, None] * frac[None, :-1]
    half = zmax[:, None] * 0.5 / panels
    z = lo[..., None] + half[..., None] * (xl + 1.0)
    f = np.exp(omega * T[:, None, None] * z) * (1.0 - z) ** (-tc.beta)
    legendre = (f @ wl) * half
    # panel ending at z = 1 carries the singular weight
    z0 = lo[:, -1]
    span = 1.0 - z0
    zj = z0[:, None] + span[:, None] * 0.5 * (xj + 1.0)
    jac = (np.exp(omega * T[:, None] * zj) @ wj) * (0.5 * span) ** (1.0 - tc.beta)
    last = np.where(zmax >= 1.0, jac, legendre[:, -1])
    return t * (legendre[:, :-1].sum(axis=1) + last)


def g_funcs(alpha, t, cfg=DEFAULT_CONFIG):
    """``(g1(t), g2(t))`` by Gauss-Jacobi quadrature with node doubling.

    The node count starts at ``cfg.jacobi_nodes`` and is doubled (at most
    twice) until successive results agree to ``cfg.rel_tol``.
    """
    alpha = check_alpha(alpha)
    t = float(t)
    if not t >= 0:
        raise ParameterDomainError("t", t)
    if t == 0.0:
        return 0.0, 0.0
    n = cfg.jacobi_nodes
    prev = _g_complex(alpha, np.array([t]), n)[0]
    err = math.inf
    for _ in range(2):
        n *= 2
        cur = _g_complex(alpha, np.array([t]), n)[0]
        err = abs(cur - prev)
        if err <= cfg.rel_tol * abs(cur) + cfg.abs_tol:
            return cur.imag, cur.real
        prev = cur
    raise QuadratureError(f"g1, g2 at t={t} not converged under node doubling", err)


def h_funcs(alpha, t):
    """``(h1(t), h2(t)) = (exp(-a t**alpha) cos(b t**alpha), -exp(-a t**alpha) sin(b t**alpha))``."""
    alpha = check_alpha(alpha)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ParameterDomainError("t", t)
    tc = trig_constants(alpha)
    T = t ** alpha
    env = np.exp(-tc.a * T)
    h1, h2 = env * np.cos(tc.b * T), -env * np.sin(tc.b * T)
    if h1.ndim == 0:
        return float(h1), float(h2)
    return h1, h2


def _h_complex(alpha, t):
    # h1 - i h2 = exp(omega t**alpha); Re(F e^{itx}) = h1 cos + h2 sin
    tc = trig_constants(alpha)
    return np.exp(complex(-tc.a, tc.b) * t ** alpha)


# ---------------------------------------------------------------------------
# outer Fourier-type integrals

def _panel_nodes(lo, hi, n):
    xl, wl = _legendre(n)
    half = 0.5 * (hi - lo)
    t = lo[:, None] + half[:, None] * (xl + 1.0)
    return t, half[:, None] * wl


def _euler(partial, depth):
    """Repeated averaging of partial sums; returns (value, change at the last level)."""
    p = np.asarray(partial)
    depth = min(depth, p.size - 2)
    for _ in range(depth):
        p = 0.5 * (p[:-1] + p[1:])
    return p[-1], abs(p[-1] - p[-2])


def fourier_integral(F, x, cfg=DEFAULT_CONFIG, head_length=None, spot_check=None):
    """``int_0^inf F(t) exp(i t x) dt`` for a vectorised complex ``F``.

    ``F`` may have an algebraic branch point at ``t = 0`` and must be smooth
    and slowly varying beyond ``head_length``; it may decay arbitrarily
    slowly provided the half-period series alternates, which Euler's
    transformation then sums.

    Returns
    -------
    value : complex
    error : float
        Sum of the head estimate (difference against an ``n - 6`` point rule),
        the Euler change at the deepest level, and any ``spot_check`` error.
    info : dict
    """
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    n = defaults.LEGENDRE_NODES
    hp = math.pi / x
    head_length = defaults.HEAD_LENGTH if head_length is None else head_length
    n_head = max(1, math.ceil(head_length / hp))
    sub = max(1, math.ceil(hp / defaults.PANEL_WIDTH))
    edges = np.linspace(0.0, n_head * hp, n_head * sub + 1)

    # panel touching t = 0: t = h v**q
    q = defaults.ORIGIN_POWER
    xl, wl = _legendre(n)
    v = 0.5 * (xl + 1.0)
    h0 = edges[1]
    t0 = h0 * v ** q
    w0 = 0.5 * h0 * q * v ** (q - 1) * wl
    tp, wp = _panel_nodes(edges[1:-1], edges[2:], n)
    t_head = np.concatenate([t0, tp.ravel()])
    w_head = np.concatenate([w0, wp.ravel()])
    f_head = F(t_head) * np.exp(1j * x * t_head)
    head = np.dot(w_head, f_head)

    # same panels with a lower-order rule, for the error estimate
    m = n - 6
    xm, wm = _legendre(m)
    vm = 0.5 * (xm + 1.0)
    tm0 = h0 * vm ** q
    wm0 = 0.5 * h0 * q * vm ** (q - 1) * wm
    tq, wq = _panel_nodes(edges[1:-1], edges[2:], m)
    t_low = np.concatenate([tm0, tq.ravel()])
    w_low = np.concatenate([wm0, wq.ravel()])
    head_low = np.dot(w_low, F(t_low) * np.exp(1j * x * t_low))
    head_err = abs(head - head_low)

    # tail: half-period terms, Euler-summed
    k0 = n_head
    count = 2 * cfg.accel_depth + 2
    terms = np.empty(0, dtype=complex)
    tail, tail_err = 0.0, math.inf
    while True:
        k = np.arange(k0 + terms.size, k0 + count)
        tk, wk = _panel_nodes(k * hp, (k + 1) * hp, n)
        fk = F(tk.ravel()).reshape(tk.shape) * np.exp(1j * x * tk)
        terms = np.concatenate([terms, (fk * wk).sum(axis=1)])
        tail, tail_err = _euler(np.cumsum(terms), cfg.accel_depth)
        if tail_err <= max(cfg.abs_tol, cfg.rel_tol * abs(head + tail)):
            break
        if count >= cfg.max_half_periods:
            raise QuadratureError(
                f"Euler acceleration did not converge at x={x} within "
                f"{cfg.max_half_periods} half-periods", tail_err)
        count = min(2 * count, cfg.max_half_periods)

    err = head_err + tail_err
    if spot_check is not None:
        err += spot_check(t_head)
    info = {"half_periods": int(n_head + terms.size), "head_error": float(head_err),
            "tail_error": float(tail_err), "t_end": float((k0 + terms.size) * hp)}
    return head + tail, float(err), info


def _inner_spot_check(alpha, cfg):
    # compare a subsample of inner quadratures against doubled node counts
    def check(t):
        ts = t[:: max(1, t.size // 16)]
        base = _g_complex(alpha, ts, cfg.jacobi_nodes)
        fine = _g_complex(alpha, ts, 2 * cfg.jacobi_nodes)
        diff = np.max(np.abs(fine - base))
        scale = np.max(np.abs(fine))
        if diff > cfg.rel_tol * scale + cfg.abs_tol:
            raise QuadratureError("inner Gauss-Jacobi quadrature not converged", float(diff))
        return float(diff) * float(np.max(t)) if t.size else 0.0

    return lambda t: 0.0 if t.size == 0 else check(t)


def I1(alpha, x, cfg=DEFAULT_CONFIG):
    """``int_0^inf g1(t) cos(tx) + g2(t) sin(tx) dt``."""
    alpha = check_alpha(alpha)
    value, err, info = fourier_integral(
        lambda t: _g_complex(alpha, t, cfg.jacobi_nodes), x, cfg,
        spot_check=_inner_spot_check(alpha, cfg))
    return EvalResult(float(value.imag), "integral:I1", err, info)


def _i2_head_length(alpha, cfg):
    if cfg.outer_cutoff is not None:
        return cfg.outer_cutoff
    a = trig_constants(alpha).a
    # exp(-a t**alpha) < abs_tol beyond this point
    return min(defaults.HEAD_LENGTH, (math.log(1.0 / cfg.abs_tol) / a) ** (1.0 / alpha))


def I2(alpha, x, cfg=DEFAULT_CONFIG):
    """``int_0^inf exp(-a t**alpha) cos(b t**alpha + tx) dt``."""
    alpha = check_alpha(alpha)
    head = _i2_head_length(alpha, cfg)
    value, err, info = fourier_integral(lambda t: _h_complex(alpha, t), x, cfg, head_length=head)
    return EvalResult(float(value.real), "integral:I2", err, info)


def density_integral(alpha, x, cfg=DEFAULT_CONFIG):
    """Canonical density from the integral representation."""
    alpha = check_alpha(alpha)
    x = float(x)
    if not x > 0:
        raise ParameterDomainError("x", x)
    r1 = I1(alpha, x, cfg)
    r2 = I2(alpha, x, cfg)
    w1 = 1.0 / (math.pi * math.gamma(1.0 / alpha))
    w2 = 1.0 / math.pi
    value = w1 * r1.value + w2 * r2.value
    err = w1 * r1.abs_err + w2 * r2.abs_err
    return EvalResult(value, "integral", err,
                      {"I1": r1.value, "I2": r2.value, "I1_err": r1.abs_err, "I2_err": r2.abs_err})
