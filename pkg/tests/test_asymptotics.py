import math

import numpy as np
import pytest

from eginoe.asymptotics import (airy_alpha, c0_alpha, c_alpha, c_alpha_integral,
                                edge_strong, edge_weak, expected_count_strong,
                                expected_count_weak, global_strong, global_weak,
                                goe_bulk, goe_edge, normalised_strong,
                                normalised_weak)
from eginoe.specfun import airy, erf

SQRT_PI = math.sqrt(math.pi)

# frozen 50-digit constants (tests/_oracles.py and mpmath)
C_1 = 0.80145607363402176525
C_23 = 0.90017475937275965807
AI_A_1_0 = 0.31646728105604800629
AIP_A_1_0 = -0.11247297759240857595
R0S_0 = 0.34051853608765541071
EDGEWEAK_LEAD_23_0 = 0.18343561073792802678
EDGEWEAK_CORR_23_0 = -0.018673263686707054673
EDGEWEAK_LEAD_23_1 = 0.081191091386215808548
EDGEWEAK_CORR_23_1 = -0.037823196349201186249


# ----------------------------------------------------------------------
# global regime
# ----------------------------------------------------------------------

def test_global_strong_values():
    e = global_strong(0.0, 0.0, 100)
    assert e.leading == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-15)
    assert e.correction == 0.0
    assert e.error_order == "exp_small"
    assert e.composite == pytest.approx(10 * e.leading)
    e = global_strong(5.0 / 7.0, 0.3, 80)
    assert e.leading == pytest.approx(math.sqrt(49.0 / (48.0 * math.pi)), rel=1e-14)


def test_global_strong_x_independent():
    vals = {global_strong(0.5, x, 64).leading for x in (-1.2, 0.0, 0.7, 1.4)}
    assert len(vals) == 1


def test_global_strong_domain():
    with pytest.raises(ValueError):
        global_strong(0.5, 1.6, 10)
    with pytest.raises(ValueError):
        global_strong(1.0, 0.0, 10)


def test_global_weak_leading():
    # alpha -> 0 limit at x = 0 recovers the semicircle value 1/pi
    assert global_weak(0.0, 0.0, 50).leading == pytest.approx(1 / math.pi, rel=1e-12)
    # direct substitution at alpha = 2/3
    ref = 3.0 / (4.0 * SQRT_PI) * erf(2.0 / 3.0)
    assert global_weak(2.0 / 3.0, 0.0, 40).leading == pytest.approx(ref, rel=1e-14)


def test_normalised_weak_large_alpha_uniform_limit():
    # the 1/4 interpolation limit lives in the normalized density
    assert normalised_weak(50.0, 0.0, 10000).leading == pytest.approx(0.25, rel=1e-3)


def test_global_weak_small_alpha_branch_is_smooth():
    lead_lo = global_weak(9e-5, 0.5, 50)
    lead_hi = global_weak(1.1e-4, 0.5, 50)
    assert lead_lo.leading == pytest.approx(lead_hi.leading, rel=1e-8)
    assert lead_lo.correction == pytest.approx(lead_hi.correction, rel=1e-6)


def test_global_weak_domain():
    with pytest.raises(ValueError):
        global_weak(0.5, 2.0, 10)


def test_normalised_strong_values():
    e = normalised_strong(0.0, 0.0, 100)
    assert e.leading == pytest.approx(0.5)
    assert e.correction == pytest.approx(-math.sqrt(math.pi / 32.0), rel=1e-14)
    e = normalised_strong(5.0 / 7.0, 0.5, 2560)
    assert e.leading == pytest.approx(7.0 / 24.0, rel=1e-14)
    ref = -math.sqrt(math.pi * (2.0 / 7.0) / (32.0 * (12.0 / 7.0) ** 3))
    assert e.correction == pytest.approx(ref, rel=1e-14)
    # tau -> 1: correction vanishes, leading -> 1/4
    e = normalised_strong(1 - 1e-12, 0.0, 100)
    assert e.leading == pytest.approx(0.25, rel=1e-9)
    assert abs(e.correction) <= 1e-6


def test_normalised_weak_goe_limit():
    for x in (0.0, 1.0, 1.9):
        e = normalised_weak(0.0, x, 64)
        assert e.leading == pytest.approx(math.sqrt(4 - x * x) / (2 * math.pi),
                                          rel=1e-13, abs=1e-13)
        assert e.correction == pytest.approx(-1.0 / (2 * math.pi * math.sqrt(4 - x * x)),
                                             rel=1e-13)


def test_normalised_weak_integrates_to_one():
    # int rho0 over (-2, 2) = 1: the c(alpha) integral representation at work
    from eginoe.specfun import quad_adaptive
    alpha = 2.0 / 3.0
    val, _ = quad_adaptive(
        lambda xs: np.array([normalised_weak(alpha, float(x), 50).leading for x in xs]),
        0.0, 2.0 - 1e-12, tol=1e-10, vectorized=True)
    assert 2 * val == pytest.approx(1.0, abs=1e-8)


def test_normalised_weak_bessel_value():
    e = normalised_weak(2.0 / 3.0, 1.0, 100)
    lead_ref = erf((1.0 / 3.0) * math.sqrt(3.0)) / (2 * (2.0 / 3.0) * SQRT_PI) / C_23
    assert e.leading == pytest.approx(lead_ref, rel=1e-12)


# ----------------------------------------------------------------------
# edge regime
# ----------------------------------------------------------------------

def test_edge_strong_leading_closed_form():
    e = edge_strong(5.0 / 7.0, 0.0, 160)
    assert e.leading == pytest.approx(R0S_0, rel=1e-14)
    # bulk limit on the left
    assert edge_strong(0.5, -6.0, 100).leading == pytest.approx(
        1 / math.sqrt(2 * math.pi), abs=1e-8)
    # decay on the right
    assert edge_strong(0.5, 6.0, 100).leading <= 1e-8


def test_edge_strong_correction_structure():
    tau = 5.0 / 7.0
    xi = 1.0
    ref = (math.sqrt(1 - tau**2) / (12 * math.pi * (1 - tau) ** 2)
           * math.exp(-2 * xi * xi) * ((1 + tau) * xi * xi - 3)
           * (1 + math.exp(xi * xi) * SQRT_PI * xi * (1 + erf(xi))))
    assert edge_strong(tau, xi, 2560).correction == pytest.approx(ref, rel=1e-13)


def test_airy_alpha_reductions():
    ai, aip = airy(0.7)
    v, d = airy_alpha(0.0, 0.7)
    assert v == pytest.approx(ai, rel=1e-14)
    assert d == pytest.approx(aip, rel=1e-14)


def test_airy_alpha_oracle_value():
    v, d = airy_alpha(1.0, 0.0)
    assert v == pytest.approx(AI_A_1_0, rel=1e-12)
    assert d == pytest.approx(AIP_A_1_0, rel=1e-12)


def test_airy_alpha_zero_scaling():
    # x + alpha^4/4 at the first Airy zero makes the value vanish
    alpha = 1.2
    x = -2.338107410459767 - alpha**4 / 4.0
    v, _ = airy_alpha(alpha, x)
    assert abs(v) <= 1e-9


def test_edge_weak_frozen_values():
    e0 = edge_weak(2.0 / 3.0, 0.0, 40)
    assert e0.leading == pytest.approx(EDGEWEAK_LEAD_23_0, rel=1e-9)
    assert e0.correction == pytest.approx(EDGEWEAK_CORR_23_0, rel=1e-8)
    e1 = edge_weak(2.0 / 3.0, 1.0, 40)
    assert e1.leading == pytest.approx(EDGEWEAK_LEAD_23_1, rel=1e-9)
    assert e1.correction == pytest.approx(EDGEWEAK_CORR_23_1, rel=1e-8)
    assert e0.error_order == "N^{-2/3+eps}"
    assert e0.composite == pytest.approx(e0.leading + e0.correction * 40 ** (-1 / 3))


def test_edge_weak_alpha_zero_matches_goe_closed_form():
    # leading: Ai'(xi)^2 - xi Ai(xi)^2 + (1/2) Ai (1 - int Ai) via the
    # closed-form Airy-square identity; correction: (1/4)[Ai'(1-int Ai)-Ai^2]
    for xi in (-1.0, 0.0, 1.5):
        e = edge_weak(0.0, xi, 64)
        g = goe_edge(xi, 64)
        assert e.leading == pytest.approx(g.leading, rel=1e-9, abs=1e-12)
        assert e.correction == pytest.approx(g.correction, rel=1e-8, abs=1e-12)


def test_edge_weak_decays():
    # super-exponential falloff; the exact value at xi = 8, alpha = 0 is
    # ~2.3e-8, crossing 1e-8 only near xi = 8.6
    assert edge_weak(0.0, 8.0, 64).leading <= 1e-7
    assert edge_weak(0.0, 10.0, 64).leading <= 1e-8
    assert edge_weak(2.0 / 3.0, 8.0, 64).leading <= 1e-6


# ----------------------------------------------------------------------
# GOE specializations
# ----------------------------------------------------------------------

def test_goe_bulk_values():
    e = goe_bulk(0.0, 100)
    assert e.leading == pytest.approx(1 / math.pi, rel=1e-15)
    assert e.correction == pytest.approx(-1 / (4 * math.pi), rel=1e-15)
    e = goe_bulk(1.9, 100)
    assert e.leading == pytest.approx(math.sqrt(4 - 3.61) / (2 * math.pi), rel=1e-14)
    assert e.composite == pytest.approx(e.leading + e.correction / 100)


def test_goe_edge_derivative_identity():
    # correction equals half the centered finite difference of the leading term
    h = 1e-5
    for xi in np.linspace(-4.0, 4.0, 9):
        fd = (goe_edge(xi + h, 64).leading - goe_edge(xi - h, 64).leading) / (2 * h)
        assert goe_edge(xi, 64).correction == pytest.approx(0.5 * fd, abs=1e-8)


# ----------------------------------------------------------------------
# weak-regime constants
# ----------------------------------------------------------------------

def test_c_alpha_trivials():
    assert c_alpha(0.0) == 1.0
    assert c0_alpha(0.0) == -0.5


def test_c_alpha_oracle():
    assert c_alpha(1.0) == pytest.approx(C_1, rel=1e-13)


def test_c_alpha_integral_agrees_with_bessel():
    for alpha in (0.1, 0.5, 1.0, 2.0, 5.0):
        assert abs(c_alpha(alpha) - c_alpha_integral(alpha)) <= 1e-10
    # alpha -> 0 limit of the integral form
    assert c_alpha_integral(1e-6) == pytest.approx(1.0, abs=1e-9)


# ----------------------------------------------------------------------
# expected-count expansions
# ----------------------------------------------------------------------

def test_expected_count_strong_formula():
    assert expected_count_strong(0.0, 100) == pytest.approx(
        math.sqrt(200 / math.pi) + 0.5, rel=1e-15)
    assert expected_count_strong(0.5, 50) == pytest.approx(
        math.sqrt(2 / math.pi * 3 * 50) + 0.5, rel=1e-15)
    with pytest.raises(ValueError):
        expected_count_strong(1.0, 100)


def test_expected_count_weak_goe_is_n():
    # alpha = 0: N c(0) + c0(0) + 1/2 = N
    assert expected_count_weak(0.0, 64) == pytest.approx(64.0, rel=1e-15)
