import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablesup import (certify_identity, density_tail_ratio, fourier_tail_estimate, h_funcs,
                       survival, tail_density_law, tail_prob_law)
from stablesup.asymptotics import fit_power_law
from stablesup.errors import FitError, ParameterDomainError
from stablesup.oscint import fourier_integral
from stablesup.special import asymptote_constants

ALPHAS = (1.2, 1.5, 1.8)
GRID = (8, 16, 32, 64)


def abelian_series(alpha, x, terms, kind):
    """Termwise transform of exp(omega t**alpha): cosine of h1 or sine of h2."""
    total = 0.0
    for k in range(1, terms + 1):
        nu = alpha * k
        g = math.gamma(nu + 1) / math.factorial(k) * x ** (-nu - 1)
        if kind == "cosine":
            total += math.cos(k * math.pi * alpha / 2) * math.cos(math.pi * (nu + 1) / 2) * g
        else:
            total -= math.sin(k * math.pi * alpha / 2) * math.sin(math.pi * (nu + 1) / 2) * g
    return total


def test_density_law_examples():
    c = 3 / (4 * math.sqrt(math.pi))
    assert tail_density_law(1.5, 1.0) == pytest.approx(c, rel=1e-14)
    assert tail_density_law(1.5, 1.0) == pytest.approx(0.4231422, abs=1e-7)
    assert tail_density_law(1.5, 10.0) == pytest.approx(c * 10 ** -2.5, rel=1e-14)
    assert tail_density_law(1.5, 10.0) == pytest.approx(1.33803e-3, abs=1e-7)


def test_prob_law_examples():
    assert tail_prob_law(1.5, 1.0) == pytest.approx(0.2820948, abs=1e-7)
    assert tail_prob_law(1.5, 100.0) == pytest.approx(2.820948e-4, rel=1e-6)


@given(st.floats(1.01, 1.99), st.floats(1e-2, 1e4))
def test_law_scaling(alpha, x):
    assert tail_density_law(alpha, 2 * x) / tail_density_law(alpha, x) == pytest.approx(
        2 ** -(alpha + 1), rel=1e-13)


@given(st.floats(1.01, 1.99), st.floats(0.5, 100.0))
def test_law_derivative(alpha, x):
    h = 1e-5 * x
    d = -(tail_prob_law(alpha, x + h) - tail_prob_law(alpha, x - h)) / (2 * h)
    assert d == pytest.approx(tail_density_law(alpha, x), rel=1e-8)


def test_laws_vectorised_and_domain():
    v = tail_density_law(1.5, np.array([1.0, 10.0]))
    assert v[1] == tail_density_law(1.5, 10.0)
    with pytest.raises(ParameterDomainError):
        tail_prob_law(1.5, 0.0)


@pytest.mark.parametrize("alpha", np.round(np.arange(1.01, 1.995, 0.04), 2))
def test_identity(alpha):
    assert abs(certify_identity(alpha)) < 1e-12


def test_fit_power_law_exact():
    x = np.array([2.0, 4.0, 8.0, 16.0])
    fit = fit_power_law(x, 3 * x ** -2.5, -2.5)
    assert fit.exponent_hat == pytest.approx(-2.5, abs=1e-12)
    assert fit.constant_hat == pytest.approx(3.0, rel=1e-12)
    assert np.allclose(fit.residuals, 0, atol=1e-12)
    neg = fit_power_law(x, -3 * x ** -2.5, -2.5)
    assert neg.constant_hat == pytest.approx(-3.0, rel=1e-12)


def test_fit_errors():
    with pytest.raises(FitError):
        fit_power_law([1.0, 2.0, 3.0], [1.0, -1.0, 1.0], -2)
    with pytest.raises(ParameterDomainError):
        fit_power_law([1.0, 1.0, 3.0], [1.0, 1.0, 1.0], -2)
    with pytest.raises(ParameterDomainError):
        fit_power_law([1.0, 2.0], [1.0, 1.0], -2)


def test_exponential_transform():
    fit = fourier_tail_estimate(lambda t: np.exp(-t), "cosine", 1.5, GRID)
    assert fit.values == pytest.approx(1 / (1 + np.asarray(GRID, float) ** 2), rel=1e-10)
    assert fit.exponent_hat == pytest.approx(-2.0, abs=0.02)


def test_kind_validation():
    with pytest.raises(ParameterDomainError):
        fourier_tail_estimate(lambda t: np.exp(-t), "tangent", 1.5, GRID)
    with pytest.raises(ParameterDomainError):
        fourier_tail_estimate(lambda t: np.exp(-t), "cosine", 1.5, (8, 16, 32))


def test_harness_alpha_three_halves():
    k = asymptote_constants(1.5)
    c = fourier_tail_estimate(lambda t: h_funcs(1.5, t)[0] / k.k1, "cosine", 1.5, GRID)
    s = fourier_tail_estimate(lambda t: h_funcs(1.5, t)[1] / k.k2, "sine", 1.5, GRID)
    assert c.exponent_hat == pytest.approx(-2.5, abs=0.02)
    assert c.constant_hat == pytest.approx(k.l1, rel=0.01)
    assert k.l1 == pytest.approx(2.5066, abs=1e-4)
    assert s.constant_hat == pytest.approx(k.l2, rel=0.01)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("x", [32.0, 64.0])
def test_transforms_follow_abelian_expansion(alpha, x):
    h1 = fourier_integral(lambda t: h_funcs(alpha, t)[0] + 0j, x)[0].real
    h2 = fourier_integral(lambda t: h_funcs(alpha, t)[1] + 0j, x)[0].imag
    assert h1 == pytest.approx(abelian_series(alpha, x, 3, "cosine"), rel=2e-5)
    assert h2 == pytest.approx(abelian_series(alpha, x, 3, "sine"), rel=2e-5)


def test_second_order_term_at_alpha_six_fifths():
    # relative size of the x**-alpha correction in both transforms of h1, h2
    alpha = 1.2
    rel = abelian_series(alpha, 64, 2, "cosine") / abelian_series(alpha, 64, 1, "cosine") - 1
    pred = -math.sin(2 * math.pi * alpha) * math.gamma(2 * alpha + 1) / 2 / (
        -math.sin(math.pi * alpha) * math.gamma(alpha + 1)) * 64 ** -alpha
    assert rel == pytest.approx(pred, rel=1e-12)
    assert rel == pytest.approx(-0.0148, abs=5e-4)


def test_density_tail_ratio_three_halves():
    fit = density_tail_ratio(1.5, [25, 50, 100, 200])
    dev = np.abs(fit.values - 1)
    assert np.all(np.diff(dev) < 0)
    assert dev[-1] < 0.1
    assert np.all(fit.values > 0)
    # the deviation decays like 1/x
    assert fit.exponent_hat == pytest.approx(-1.0, abs=0.05)


@pytest.mark.parametrize("alpha", [1.5, 1.8])
def test_survival_approaches_prob_law(alpha):
    dev = [abs(survival(alpha, x).value / tail_prob_law(alpha, x) - 1) for x in (4, 8, 16, 32)]
    assert np.all(np.diff(dev) < 0)


def test_survival_deviation_changes_sign_at_alpha_six_fifths():
    dev = [survival(1.2, x).value / tail_prob_law(1.2, x) - 1 for x in (4, 8, 16, 32)]
    assert dev[0] < dev[1] < 0 < dev[2]
    assert max(abs(d) for d in dev[1:]) < 0.01
