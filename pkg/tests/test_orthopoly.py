import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_genlaguerre, eval_jacobi, gamma

from osphahn.errors import PoleInDenominator, SingularPoint
from osphahn.orthopoly import (PolyEval, gen_hermite, gen_hermite_derivative, hyp3f2_terminating, jacobi,
                               jacobi_derivative, jacobi_mixed_derivative, laguerre, laguerre_derivative,
                               log_gamma_ratio, log_pochhammer, mu_number, pochhammer)

H = 1e-5


def _fd(f, x):
    return (f(x + H) - f(x - H)) / (2 * H)


@pytest.mark.parametrize("n,mu,expected", [(0, 1.0, 0.0), (1, 1.0, 3.0), (2, 0.5, 2.0), (5, 0.25, 5.5)])
def test_mu_number(n, mu, expected):
    assert mu_number(n, mu) == expected


@pytest.mark.parametrize("c,k", [(0.5, 0), (0.5, 4), (2.0, 3), (-3.5, 5), (1.25, 7)])
def test_pochhammer_against_gamma_ratio(c, k):
    assert pochhammer(c, k) == pytest.approx(gamma(c + k) / gamma(c), rel=1e-12)


def test_pochhammer_hits_zero_for_nonpositive_integer():
    assert pochhammer(-3.0, 5) == 0.0
    assert float(log_pochhammer(-3.0, 5)) == 0.0


@given(st.floats(-20, 20).filter(lambda c: abs(c - round(c)) > 1e-3), st.integers(0, 30))
def test_log_pochhammer_matches_direct_product(c, k):
    ref = pochhammer(c, k)
    got = log_pochhammer(c, k)
    assert got.sign == np.sign(ref) or ref == 0
    assert float(got) == pytest.approx(ref, rel=1e-11)


def test_log_pochhammer_survives_overflow():
    big = log_pochhammer(0.5, 400)
    assert math.isinf(pochhammer(0.5, 400))
    assert big.log_scale == pytest.approx(math.lgamma(400.5) - math.lgamma(0.5), rel=1e-12)


def test_polyeval_arithmetic():
    a, b = PolyEval(-2.0, 1.0), PolyEval(4.0, -0.5)
    assert float(a * b) == pytest.approx(-8 * math.exp(0.5))
    assert float(a / b) == pytest.approx(-0.5 * math.exp(1.5))
    with pytest.raises(ZeroDivisionError):
        a / PolyEval(0.0)
    with pytest.raises(ValueError):
        PolyEval(float("nan"))


def test_log_gamma_ratio():
    assert log_gamma_ratio([5.0, 2.5], [3.0]) == pytest.approx(math.log(24 * gamma(2.5) / 2), rel=1e-13)


def _hyp_exact(n, a2, a3, b1, b2):
    total, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        total += term
        term = term * (-n + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + 1))
    return total


@pytest.mark.parametrize("n,a2,a3,b1,b2", [
    (0, Fraction(1, 3), Fraction(2), Fraction(5, 2), Fraction(7, 4)),
    (3, Fraction(1, 3), Fraction(-2, 5), Fraction(5, 2), Fraction(7, 4)),
    (6, Fraction(9, 4), Fraction(-1, 4), Fraction(-13, 2), Fraction(3, 2)),
])
def test_hyp3f2_against_exact_rational_sum(n, a2, a3, b1, b2):
    ref = float(_hyp_exact(n, a2, a3, b1, b2))
    assert hyp3f2_terminating(n, float(a2), float(a3), float(b1), float(b2)) == pytest.approx(ref, rel=1e-13)


def test_hyp3f2_saalschutz():
    # balanced case: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
    n, a, b, c = 5, 0.3, 1.7, 2.2
    ref = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n))
    assert hyp3f2_terminating(n, a, b, c, 1 + a + b - c - n) == pytest.approx(ref, rel=1e-12)


def test_hyp3f2_pole():
    with pytest.raises(PoleInDenominator):
        hyp3f2_terminating(4, 1.0, 1.0, -2.0, 1.0)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
@pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.5, 4.0])
def test_laguerre_matches_scipy_and_explicit_sum(n, alpha):
    x = np.linspace(0, 12, 17)
    explicit = sum((-1) ** j * gamma(n + alpha + 1) / (gamma(alpha + j + 1) * math.factorial(n - j)
                                                       * math.factorial(j)) * x ** j for j in range(n + 1))
    np.testing.assert_allclose(laguerre(n, alpha, x), eval_genlaguerre(n, alpha, x), rtol=1e-11, atol=1e-11)
    np.testing.assert_allclose(laguerre(n, alpha, x), explicit, rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize("n", [0, 1, 3, 7])
@pytest.mark.parametrize("alpha,beta", [(0.5, -0.5), (1.5, 2.5), (-0.5, 3.5), (3.0, 0.0)])
def test_jacobi_matches_scipy(n, alpha, beta):
    x = np.linspace(-1, 1, 21)
    np.testing.assert_allclose(jacobi(n, alpha, beta, x), eval_jacobi(n, alpha, beta, x), rtol=1e-11, atol=1e-11)


def test_scalar_in_float_out():
    assert isinstance(laguerre(3, 0.5, 1.2), float)
    assert isinstance(jacobi(3, 0.5, 1.5, 0.2), float)
    assert isinstance(gen_hermite(3, 1, 0.7), float)


@pytest.mark.parametrize("n,alpha", [(0, 1.0), (3, 0.5), (6, 2.5)])
def test_laguerre_derivative_fd(n, alpha):
    x = np.linspace(0.1, 6, 9)
    np.testing.assert_allclose(laguerre_derivative(n, alpha, x), _fd(lambda t: laguerre(n, alpha, t), x),
                               rtol=1e-6, atol=1e-6)


@pytest.mark.parametrize("n,alpha,beta", [(0, 1.0, 2.0), (2, 0.5, -0.5), (5, 2.5, 1.5), (4, -0.5, 3.5)])
def test_jacobi_derivatives_agree(n, alpha, beta):
    x = np.linspace(-0.95, 0.95, 11)
    d1 = jacobi_derivative(n, alpha, beta, x)
    np.testing.assert_allclose(d1, _fd(lambda t: jacobi(n, alpha, beta, t), x), rtol=1e-6, atol=1e-6)
    np.testing.assert_allclose(jacobi_mixed_derivative(n, alpha, beta, x), d1, rtol=1e-9, atol=1e-9)


def test_jacobi_mixed_derivative_singular():
    with pytest.raises(SingularPoint):
        jacobi_mixed_derivative(2, 1.0, 1.0, np.array([0.0, 1.0]))


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("k", [0, 1, 2.5])
def test_gen_hermite_structure(m, k):
    n, p = divmod(m, 2)
    x = np.linspace(-2, 2, 9)
    ref = ((-1) ** n * math.sqrt(math.factorial(n) / gamma(n + p + k + 0.5)) * x ** p
           * eval_genlaguerre(n, k - 0.5 + p, x * x))
    np.testing.assert_allclose(gen_hermite(m, k, x), ref, rtol=1e-11, atol=1e-12)
    np.testing.assert_allclose(gen_hermite_derivative(m, k, x), _fd(lambda t: gen_hermite(m, k, t), x),
                               rtol=1e-6, atol=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.floats(0.0, 4.0))
def test_gen_hermite_parity(m, k):
    x = np.linspace(0.1, 2.0, 5)
    np.testing.assert_allclose(gen_hermite(m, k, -x), (-1) ** m * gen_hermite(m, k, x), rtol=1e-12, atol=1e-14)
