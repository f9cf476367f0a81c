import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from stablesup.errors import ParameterDomainError
from stablesup.special import (asymptote_constants, canonical_c, gamma_fn, gamma_neg_alpha,
                               lower_inc_gamma, recip_gamma, trig_constants,
                               upper_inc_gamma_scaled)

ALPHA_GRID = np.round(np.arange(1.01, 1.995, 0.04), 2)


def test_gamma_values():
    assert gamma_fn(1) == 1.0
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    # Gamma(-3/2) = Gamma(1/2) / ((-3/2)(-1/2))
    assert gamma_fn(-1.5) == pytest.approx(math.sqrt(math.pi) / 0.75, rel=1e-14)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_pole(z):
    with pytest.raises(ParameterDomainError):
        gamma_fn(z)


@pytest.mark.parametrize("z", np.linspace(-49.7, 49.3, 37))
def test_gamma_matches_mpmath(z):
    assert gamma_fn(z) == pytest.approx(float(mpmath.gamma(z)), rel=1e-13)


def test_recip_gamma_values():
    assert recip_gamma(0) == 0.0
    assert recip_gamma(-3) == 0.0
    assert recip_gamma(2) == 1.0
    # Gamma(-1/3) = -3 Gamma(2/3)
    oracle = -1.0 / (3.0 * float(mpmath.gamma(mpmath.mpf(2) / 3)))
    assert recip_gamma(-1 / 3) == pytest.approx(oracle, rel=1e-14)
    assert recip_gamma(-1 / 3) == pytest.approx(-0.246163, abs=1e-6)


@given(st.floats(min_value=-30, max_value=30).filter(lambda z: abs(z - round(z)) > 1e-6))
def test_recip_gamma_times_gamma(z):
    g = gamma_fn(z)
    if 1e-8 < abs(g) < 1e8:
        assert recip_gamma(z) * g == pytest.approx(1.0, abs=1e-12)


def test_lower_inc_gamma_examples():
    assert lower_inc_gamma(0.7, 0.0) == 0.0
    for u in (0.1, 1.0, 5.0, 30.0):
        assert lower_inc_gamma(1.0, u) == pytest.approx(-math.expm1(-u), rel=1e-13)
    # y = v**3 removes the y**(-1/3) singularity
    oracle = quad(lambda v: 3.0 * v * math.exp(-v ** 3), 0.0, 1.0, epsabs=0, epsrel=1e-13)[0]
    assert lower_inc_gamma(2 / 3, 1.0) == pytest.approx(oracle, rel=1e-12)


@pytest.mark.parametrize("eta", [0.5, 2 / 3, 0.9, 1.7])
@pytest.mark.parametrize("u", [1e-6, 0.3, 1.2, 2.5, 8.0, 60.0])
def test_lower_inc_gamma_matches_mpmath(eta, u):
    assert lower_inc_gamma(eta, u) == pytest.approx(float(mpmath.gammainc(eta, 0, u)), rel=1e-12)


@pytest.mark.parametrize("eta", [0.5, 2 / 3, 0.9])
@pytest.mark.parametrize("u", [1e-4, 0.7, 1.9, 10.0, 300.0, 690.0])
def test_upper_scaled_matches_mpmath(eta, u):
    with mpmath.workdps(40):
        oracle = mpmath.exp(u) * mpmath.gammainc(eta, u) / mpmath.gamma(eta)
    assert upper_inc_gamma_scaled(eta, u) == pytest.approx(float(oracle), rel=1e-12)


@given(st.floats(0.05, 3.0), st.floats(0.0, 40.0), st.floats(0.0, 5.0))
def test_lower_inc_gamma_monotone(eta, u, du):
    assert lower_inc_gamma(eta, u + du) >= lower_inc_gamma(eta, u) - 1e-15
    assert lower_inc_gamma(eta, u + du) <= gamma_fn(eta) * (1 + 1e-12)


@pytest.mark.parametrize("args", [(0.0, 1.0), (-1.0, 1.0), (0.5, -0.1)])
def test_lower_inc_gamma_domain(args):
    with pytest.raises(ParameterDomainError):
        lower_inc_gamma(*args)


def test_trig_constants_examples():
    t = trig_constants(1.5)
    assert t.a == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert t.b == pytest.approx(math.sqrt(0.5), abs=1e-15)
    assert t.beta == pytest.approx(1 / 3, abs=1e-15)
    t = trig_constants(4 / 3)
    assert (t.a, t.b, t.beta) == pytest.approx((0.5, math.sqrt(3) / 2, 0.25), abs=1e-15)
    t = trig_constants(1.999)
    assert abs(t.a - 1) < 1e-2 and abs(t.b) < 1e-2 and abs(t.beta - 0.5) < 1e-2


@given(st.floats(1.0001, 1.9999))
def test_trig_invariants(alpha):
    t = trig_constants(alpha)
    assert t.a ** 2 + t.b ** 2 == pytest.approx(1.0, abs=1e-14)
    assert t.a > 0 and t.b > 0 and 0 < t.beta < 0.5


@pytest.mark.parametrize("alpha", [1.0, 2.0, 0.5, 2.5])
def test_alpha_out_of_range(alpha):
    with pytest.raises(ParameterDomainError) as exc:
        trig_constants(alpha)
    assert exc.value.field == "alpha"


def test_asymptote_constants_alpha_three_halves():
    k = asymptote_constants(1.5)
    assert k.k1 == pytest.approx(3 * math.sqrt(2) / 16, rel=1e-14)
    assert k.k2 == pytest.approx(3 * math.sqrt(2) / 16, rel=1e-14)
    assert k.l1 == pytest.approx(math.sqrt(2 * math.pi), rel=1e-14)
    assert k.l2 == pytest.approx(math.sqrt(2 * math.pi), rel=1e-14)
    assert k.c_canonical == pytest.approx(3 / (4 * math.sqrt(math.pi)), rel=1e-14)


def test_asymptote_constants_alpha_four_thirds():
    k = asymptote_constants(4 / 3)
    assert k.k1 == pytest.approx(4 / 27, rel=1e-14)
    assert k.k2 == pytest.approx(4 * math.sqrt(3) / 27, rel=1e-14)


@pytest.mark.parametrize("alpha", ALPHA_GRID)
def test_constants_against_mpmath(alpha):
    k = asymptote_constants(alpha)
    with mpmath.workdps(30):
        a = mpmath.mpf(alpha)
        assert k.c_canonical == pytest.approx(float(1 / mpmath.gamma(-a)), rel=1e-13)
        l1 = -mpmath.pi / (2 * mpmath.gamma(3 - a) * mpmath.cos(a * mpmath.pi / 2))
        assert k.l1 == pytest.approx(float(l1), rel=1e-13)
    assert min(k.k1, k.k2, k.l1, k.l2, k.c_canonical) > 0
    assert gamma_neg_alpha(alpha) * canonical_c(alpha) == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
def test_l1_l2_against_defining_integrals(alpha):
    # conditionally convergent; the y**(alpha-2) singularity at 0 is integrated by hand
    with mpmath.workdps(30):
        a = mpmath.mpf(alpha)
        f = lambda y: y ** (a - 3) * mpmath.sin(y)
        g = lambda y: y ** (a - 2) * mpmath.sin(y)
        i1 = (1 / (a - 1) + mpmath.quad(lambda y: y ** (a - 3) * (mpmath.sin(y) - y), [0, 1])
              + mpmath.quadosc(f, [1, mpmath.inf], omega=1))
        i2 = (mpmath.quad(g, [0, 1]) + mpmath.quadosc(g, [1, mpmath.inf], omega=1)) / (2 - a)
    k = asymptote_constants(alpha)
    assert k.l1 == pytest.approx(float(i1), abs=1e-8)
    assert k.l2 == pytest.approx(float(i2), abs=1e-8)
