"""Finite-size-correction expansions of the real-eigenvalue densities.

Each operation returns a DensityExpansion holding the unscaled leading term
and first correction together with the composite value at the given N, so
tests can check each order separately.  Four regimes are covered: global and
edge scaling, each at strong (tau fixed) and weak (tau -> 1) non-Hermiticity,
plus the GOE specializations and the expected-count expansions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import airy, bessel_i_scaled, erf, erfc, quad_adaptive

__all__ = [
    "DensityExpansion",
    "global_strong",
    "global_weak",
    "normalised_strong",
    "normalised_weak",
    "edge_strong",
    "edge_weak",
    "airy_alpha",
    "goe_bulk",
    "goe_edge",
    "c_alpha",
    "c0_alpha",
    "c_alpha_integral",
    "expected_count_strong",
    "expected_count_weak",
]

_SQRT_PI = math.sqrt(math.pi)

# alpha below this is handled by the small-alpha series of erf
_ALPHA_SERIES_CUT = 1e-4


@dataclass(frozen=True)
class DensityExpansion:
    """Leading term, first correction, and their combination at finite N.

    composite applies the regime's N powers to leading and correction;
    error_order tags the size of the neglected remainder.
    """

    leading: float
    correction: float
    error_order: str
    composite: float


def _expansion(leading, correction, order, lead_pow, corr_pow, n):
    composite = leading * n**lead_pow + correction * n**corr_pow
    return DensityExpansion(leading, correction, order, composite)


# ----------------------------------------------------------------------
# weak-regime constants c(alpha), c0(alpha)
# ----------------------------------------------------------------------

def c_alpha(alpha: float) -> float:
    """c(alpha) = e^{-alpha^2/2} [I_0(alpha^2/2) + I_1(alpha^2/2)]."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    z = alpha * alpha / 2.0
    return bessel_i_scaled(0, z) + bessel_i_scaled(1, z)


def c0_alpha(alpha: float) -> float:
    """c0(alpha) = -(1/2) e^{-alpha^2/2} [I_0(alpha^2/2) + alpha^2 I_1(alpha^2/2)]."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    z = alpha * alpha / 2.0
    return -0.5 * (bessel_i_scaled(0, z) + alpha * alpha * bessel_i_scaled(1, z))


def c_alpha_integral(alpha: float) -> float:
    """c(alpha) through its integral form (2/(alpha sqrt(pi))) int_0^1 erf(alpha sqrt(1-s^2)) ds.

    Cross-validates the Bessel form; s = sin(theta) removes the endpoint
    derivative singularity.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if alpha < _ALPHA_SERIES_CUT:
        # erf(z) ~ (2/sqrt(pi)) (z - z^3/3): c = (4/pi) int cos^2 (1 - a^2 cos^2 /3 ...)
        return 1.0 - alpha * alpha / 4.0

    def f(theta):
        return np.vectorize(erf)(alpha * np.cos(theta)) * np.cos(theta)

    val, _ = quad_adaptive(f, 0.0, math.pi / 2.0, tol=1e-13, vectorized=True)
    return 2.0 / (alpha * _SQRT_PI) * val


# ----------------------------------------------------------------------
# global regime
# ----------------------------------------------------------------------

def global_strong(tau: float, x: float, n: int) -> DensityExpansion:
    """R_N expansion at fixed tau: constant bulk height, exponentially small rest."""
    if not 0.0 <= tau < 1.0:
        raise ValueError("global_strong requires tau in [0, 1)")
    if not abs(x) < 1.0 + tau:
        raise ValueError("x outside the open support (-1-tau, 1+tau)")
    leading = math.sqrt(1.0 / (2.0 * math.pi * (1.0 - tau * tau)))
    return _expansion(leading, 0.0, "exp_small", 0.5, 0.0, n)


def _erf_bulk(alpha: float, x: float) -> float:
    """erf((alpha/2) sqrt(4 - x^2)) / (2 alpha sqrt(pi)), with its alpha -> 0 limit."""
    w2 = 4.0 - x * x
    if alpha < _ALPHA_SERIES_CUT:
        # three-term Maclaurin of erf keeps 1e-12 accuracy through the 0/0
        z2 = alpha * alpha / 4.0 * w2
        return math.sqrt(w2) / (2.0 * math.pi) * (1.0 - z2 / 3.0 + z2 * z2 / 10.0)
    return erf(alpha / 2.0 * math.sqrt(w2)) / (2.0 * alpha * _SQRT_PI)


def global_weak(alpha: float, x: float, n: int) -> DensityExpansion:
    """R_N expansion at tau = 1 - alpha^2/N for x in (-2, 2)."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if not abs(x) < 2.0:
        raise ValueError("x outside the open support (-2, 2)")
    w2 = 4.0 - x * x
    leading = _erf_bulk(alpha, x)
    correction = (alpha * alpha * leading / 4.0
                  - (3.0 * alpha**2 * x**2 + 4.0 - 4.0 * alpha**2)
                  / (8.0 * math.pi * math.sqrt(w2))
                  * math.exp(alpha * alpha / 4.0 * (x * x - 4.0)))
    return _expansion(leading, correction, "N^{-1}", 1.0, 0.0, n)


def normalised_strong(tau: float, x: float, n: int) -> DensityExpansion:
    """rho_N expansion at fixed tau: uniform leading term, constant correction."""
    if not 0.0 <= tau < 1.0:
        raise ValueError("normalised_strong requires tau in [0, 1)")
    if not abs(x) < 1.0 + tau:
        raise ValueError("x outside the open support (-1-tau, 1+tau)")
    leading = 1.0 / (2.0 * (1.0 + tau))
    correction = -math.sqrt(math.pi * (1.0 - tau) / (32.0 * (1.0 + tau) ** 3))
    return _expansion(leading, correction, "N^{-1}", 0.0, -0.5, n)


def normalised_weak(alpha: float, x: float, n: int) -> DensityExpansion:
    """rho_N expansion at tau = 1 - alpha^2/N; alpha = 0 is the GOE bulk."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if not abs(x) < 2.0:
        raise ValueError("x outside the open support (-2, 2)")
    if alpha < _ALPHA_SERIES_CUT:
        g = goe_bulk(x, n)
        return _expansion(g.leading, g.correction, "N^{-2}", 0.0, -1.0, n)
    c = c_alpha(alpha)
    c0 = c0_alpha(alpha)
    erf_part = _erf_bulk(alpha, x)
    leading = erf_part / c
    w2 = 4.0 - x * x
    correction = ((c * alpha**2 - 4.0 * c0 - 2.0) / (4.0 * c * c) * erf_part
                  - (3.0 * alpha**2 * x**2 + 4.0 - 4.0 * alpha**2)
                  / (8.0 * math.pi * math.sqrt(w2) * c)
                  * math.exp(alpha * alpha / 4.0 * (x * x - 4.0)))
    return _expansion(leading, correction, "N^{-2}", 0.0, -1.0, n)


# ----------------------------------------------------------------------
# edge regime
# ----------------------------------------------------------------------

def edge_strong(tau: float, xi: float, n: int) -> DensityExpansion:
    """Edge-rescaled expansion at fixed tau; the leading term is tau-free."""
    if not 0.0 <= tau < 1.0:
        raise ValueError("edge_strong requires tau in [0, 1)")
    leading = (erfc(math.sqrt(2.0) * xi)
               + math.exp(-xi * xi) / math.sqrt(2.0) * erfc(-xi)) \
        / (2.0 * math.sqrt(2.0 * math.pi))
    correction = (math.sqrt(1.0 - tau * tau) / (12.0 * math.pi * (1.0 - tau) ** 2)
                  * math.exp(-2.0 * xi * xi) * ((1.0 + tau) * xi * xi - 3.0)
                  * (1.0 + math.exp(xi * xi) * _SQRT_PI * xi * erfc(-xi)))
    return _expansion(leading, correction, "N^{-1}", 0.0, -0.5, n)


def airy_alpha(alpha: float, x: float) -> tuple[float, float]:
    """Tilted shifted Airy function and its derivative.

    Ai_a(x) = e^{alpha^6/12 + alpha^2 x/2} Ai(x + alpha^4/4);
    Ai_a'(x) = (alpha^2/2) Ai_a(x) + e^{...} Ai'(x + alpha^4/4).
    Assembled in log space: the tilt alone can overflow where the product is
    still tame, and once Ai has underflowed the product is an exact zero
    (the Airy decay always outruns the tilt).
    """
    ai, aip = airy(x + alpha**4 / 4.0)
    log_tilt = alpha**6 / 12.0 + alpha * alpha * x / 2.0

    def scaled(v: float) -> float:
        if v == 0.0:
            return 0.0
        log_mag = log_tilt + math.log(abs(v))
        if log_mag > 709.0:
            raise OverflowError("airy_alpha overflows for these arguments")
        return math.copysign(math.exp(log_mag), v)

    val = scaled(ai)
    return val, alpha * alpha / 2.0 * val + scaled(aip)


def _airy_alpha_vec(alpha: float):
    def f(t: np.ndarray) -> np.ndarray:
        return np.array([airy_alpha(alpha, float(v))[0] for v in t])
    return f


def _edge_weak_integrals(alpha: float, xi: float):
    """(int Ai_a, int Ai_a^2, int t Ai_a, int ((a^4 t + a^2)/2) Ai_a^2) over [xi, inf)."""
    aa = _airy_alpha_vec(alpha)

    def sq(t):
        v = aa(t)
        return v * v

    def t_lin(t):
        return t * aa(t)

    def weighted_sq(t):
        v = aa(t)
        return (alpha**4 * t + alpha * alpha) / 2.0 * v * v

    kw = dict(tol=1e-12, vectorized=True)
    i1, _ = quad_adaptive(aa, xi, math.inf, **kw)
    i2, _ = quad_adaptive(sq, xi, math.inf, **kw)
    it, _ = quad_adaptive(t_lin, xi, math.inf, **kw)
    iw, _ = quad_adaptive(weighted_sq, xi, math.inf, **kw)
    return i1, i2, it, iw


def edge_weak(alpha: float, xi: float, n: int) -> DensityExpansion:
    """Edge-rescaled expansion at tau = 1 - alpha^2/N^{1/3}.

    Leading term: int_xi^inf Ai_a^2 + (1/2) Ai_a(xi) (1 - int_xi^inf Ai_a);
    correction: the Ai_a^2 boundary term, the weighted t-integrals, and the
    Ai_a/Ai_a' boundary combination, all with semi-infinite integrals cut
    where the integrand has decayed away.
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    a_val, a_der = airy_alpha(alpha, xi)
    i1, i2, it, iw = _edge_weak_integrals(alpha, xi)
    one_minus = 1.0 - i1
    leading = i2 + 0.5 * a_val * one_minus
    correction = (-(alpha**6 + 2.0 * alpha**2 * xi + 2.0) / 8.0 * a_val * a_val
                  + iw - alpha**4 / 8.0 * a_val * it
                  + ((alpha**4 * xi + 2.0 * alpha**2) / 8.0 * a_val
                     + (2.0 * alpha**2 * xi + alpha**6 + 2.0) / 8.0 * a_der)
                  * one_minus)
    return _expansion(leading, correction, "N^{-2/3+eps}", 0.0, -1.0 / 3.0, n)


# ----------------------------------------------------------------------
# GOE specializations
# ----------------------------------------------------------------------

def goe_bulk(x: float, n: int) -> DensityExpansion:
    """GOE normalized density: semicircle with its 1/N correction."""
    if not abs(x) < 2.0:
        raise ValueError("x outside the open support (-2, 2)")
    w = math.sqrt(4.0 - x * x)
    return _expansion(w / (2.0 * math.pi), -1.0 / (2.0 * math.pi * w),
                      "N^{-2}", 0.0, -1.0, n)


def goe_edge(xi: float, n: int) -> DensityExpansion:
    """GOE edge-rescaled density with its N^{-1/3} correction.

    The Ai^2 tail integral is taken in closed form,
    int_xi^inf Ai^2 = Ai'(xi)^2 - xi Ai(xi)^2, and the correction equals half
    the derivative of the leading term, the structure that re-centers xi.
    """
    ai, aip = airy(xi)
    one_minus = 1.0 - quad_adaptive(lambda t: np.array([airy(float(v))[0] for v in t]),
                                    xi, math.inf, tol=1e-12, vectorized=True)[0]
    leading = aip * aip - xi * ai * ai + 0.5 * ai * one_minus
    correction = 0.25 * (aip * one_minus - ai * ai)
    return _expansion(leading, correction, "N^{-2/3+eps}", 0.0, -1.0 / 3.0, n)


# ----------------------------------------------------------------------
# expected-count expansions
# ----------------------------------------------------------------------

def expected_count_strong(tau: float, n: int) -> float:
    """Two-term count expansion sqrt((2/pi)((1+tau)/(1-tau)) N) + 1/2."""
    if not 0.0 <= tau < 1.0:
        raise ValueError("expected_count_strong requires tau in [0, 1)")
    return math.sqrt(2.0 / math.pi * (1.0 + tau) / (1.0 - tau) * n) + 0.5


def expected_count_weak(alpha: float, n: int) -> float:
    """Three-term count expansion N c(alpha) + c0(alpha) + 1/2."""
    return n * c_alpha(alpha) + c0_alpha(alpha) + 0.5
