import math

import pytest
from hypothesis import given, settings, strategies as st

from shearlift.errors import DomainError, UnsupportedDomainError
from shearlift.special import (F1Params, appell_f1, appell_f1_integral,
                               appell_f1_series, gauss_2f1, pochhammer)


def f1_brute(p, x, y, orders=80):
    """Independent oracle: the raw double sum with each term built from
    scratch as a product of bounded factors (no shared recurrences, no
    overflowing factorial ratios)."""
    total = 0j
    for k in range(orders):
        for l in range(orders - k):
            term = 1.0 + 0j
            for j in range(k + l):
                term *= (p.alpha + j) / (p.gamma + j)
            for j in range(k):
                term *= (p.beta1 + j) * x / (j + 1)
            for j in range(l):
                term *= (p.beta2 + j) * y / (j + 1)
            total += term
    return total


def test_pochhammer_values():
    assert pochhammer(7.3, 0) == 1.0
    assert pochhammer(2, 3) == 24
    assert pochhammer(0.5, 2) == 0.75


def test_pochhammer_integer_exactness():
    # (1)_k = k! exactly, no rounding
    for k in range(12):
        assert pochhammer(1, k) == math.factorial(k)
    assert pochhammer(-3, 4) == 0  # terminates past the zero factor


def test_pochhammer_rejects_bad_k():
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)
    with pytest.raises(ValueError):
        pochhammer(1.0, 0.5)


def test_2f1_empty_series():
    assert gauss_2f1(0.3, 0.7, 1.1, 0.0) == 1.0


def test_2f1_geometric():
    # 2F1(1, b; b; x) = 1/(1-x)
    assert abs(gauss_2f1(1.0, 2.0, 2.0, 0.3) - 1.0 / 0.7) < 1e-14


def test_2f1_against_brute_force():
    a, b, c, x = 0.5, 0.4, 1.2, 0.3
    brute = 0.0
    for k in range(120):
        term = 1.0
        for j in range(k):
            term *= (a + j) * (b + j) / (c + j) * x / (j + 1)
        brute += term
    assert abs(gauss_2f1(a, b, c, x) - brute) < 1e-12


def test_2f1_domain_errors():
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, -1.0, 0.3)
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, 1.5, 1.2)


def test_f1_at_origin():
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    assert appell_f1_series(p, 0.0, 0.0) == 1.0
    assert abs(appell_f1_integral(p, 0.0, 0.0) - 1.0) < 1e-12


def test_f1_gamma_validation():
    with pytest.raises(ValueError):
        F1Params(0.5, 0.3, 0.7, 0.0)
    with pytest.raises(ValueError):
        F1Params(0.5, 0.3, 0.7, -2.0)


def test_f1_reduction_equal_arguments():
    # F1(a; b1, b2; g; x, x) = 2F1(a, b1+b2; g; x)
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    assert abs(appell_f1(p, 0.2, 0.2)
               - gauss_2f1(0.5, 1.0, 1.5, 0.2)) < 1e-10


def test_f1_reduction_beta2_zero():
    p = F1Params(0.5, 0.4, 0.0, 1.2)
    assert abs(appell_f1(p, 0.3, 0.9)
               - gauss_2f1(0.5, 0.4, 1.2, 0.3)) < 1e-10


def test_f1_reduction_y_zero():
    p = F1Params(0.6, 0.4, 0.9, 1.7)
    assert abs(appell_f1(p, 0.35, 0.0)
               - gauss_2f1(0.6, 0.4, 1.7, 0.35)) < 1e-10


def test_f1_terminating_alpha():
    # F1(-1; b1, b2; g; x, y) = 1 - (b1*x + b2*y)/g
    p = F1Params(-1.0, 0.3, 0.7, 1.5)
    val = appell_f1(p, 0.4, 2.3)  # valid outside the bi-disk
    assert abs(val - (1.0 - (0.3 * 0.4 + 0.7 * 2.3) / 1.5)) < 1e-14


def test_f1_series_against_brute_force():
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    for x, y in ((0.2, 0.2), (0.3, -0.4), (0.1 + 0.2j, -0.3j)):
        assert abs(appell_f1_series(p, x, y) - f1_brute(p, x, y)) < 1e-12


def test_f1_series_integral_overlap():
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    x, y = 0.4, 0.4j
    assert abs(appell_f1_series(p, x, y)
               - appell_f1_integral(p, x, y)) < 1e-10


def test_f1_integral_outside_series_domain():
    # |y| > 1: series inapplicable; integral must still give a finite value
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    val = appell_f1(p, 0.2, 1.8j)
    # refined-quadrature oracle: t = s^2 removes the t^(alpha-1) endpoint
    # singularity (gamma - alpha - 1 = 0, so t = 1 is already smooth),
    # then fixed-order composite Gauss on 400 panels
    import numpy as np
    nodes, weights = np.polynomial.legendre.leggauss(12)
    total = 0.0j
    edges = np.linspace(0.0, 1.0, 401)
    for s0, s1 in zip(edges[:-1], edges[1:]):
        s = 0.5 * (s1 - s0) * nodes + 0.5 * (s0 + s1)
        t = s * s
        f = (2.0 * s ** (2.0 * p.alpha - 1.0)
             * (1.0 - t) ** (p.gamma - p.alpha - 1.0)
             * (1.0 - 0.2 * t) ** -p.beta1 * (1.0 - 1.8j * t) ** -p.beta2)
        total += 0.5 * (s1 - s0) * np.sum(weights * f)
    total *= (math.gamma(p.gamma)
              / (math.gamma(p.alpha) * math.gamma(p.gamma - p.alpha)))
    assert abs(val - total) < 1e-8


def test_f1_refuses_uncovered_domain():
    # alpha <= 0 non-terminating kills the integral; |x| > 1 kills the series
    p = F1Params(-0.5, 0.3, 0.7, 1.5)
    with pytest.raises(UnsupportedDomainError):
        appell_f1(p, 1.4, 0.2)


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 0.9), st.floats(-0.8, 0.8), st.floats(-0.8, 0.8),
       st.floats(-0.5, 0.5), st.floats(-0.5, 0.5))
def test_f1_series_matches_brute_force_property(alpha, b1, b2, x, y):
    p = F1Params(alpha, b1, b2, alpha + 1.1)
    assert abs(appell_f1_series(p, x, y) - f1_brute(p, x, y)) < 1e-10
