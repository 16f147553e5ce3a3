"""Plancherel-Rotach asymptotics for Hermite polynomials.

Evaluators for the oscillatory, critical (Airy), and exponential regimes,
their weak-non-Hermiticity reformulations, and the first-order stationary
phase approximation.  Every evaluator separates an exactly-known log-space
prefactor from an O(1) shape function, so the shapes are unit-testable
against extended-range Hermite values without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .extended import ExtendedReal
from .specfun import airy
from .asymptotics import airy_alpha

__all__ = [
    "PhaseData",
    "phi",
    "phi_prime",
    "theta_m",
    "sigma",
    "theta_tilde_m",
    "big_theta",
    "coeff_a",
    "coeff_b",
    "coeff_c",
    "coeff_d",
    "coeff_cal_a",
    "coeff_cal_b",
    "pr_oscillatory",
    "pr_critical",
    "pr_critical_prefactor_log",
    "pr_exponential",
    "pr_oscillatory_weak",
    "pr_oscillatory_weak_prefactor_log",
    "pr_exponential_edge",
    "pr_exponential_edge_prefactor_log",
    "pr_critical_weak",
    "pr_critical_weak_prefactor_log",
    "stationary_phase_first_order",
]

_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)


# ----------------------------------------------------------------------
# phase functions and expansion coefficients
# ----------------------------------------------------------------------

def phi(x: float) -> float:
    """phi(x) = x sqrt(1-x^2) - arccos(x) on [-1, 1]."""
    return x * math.sqrt(1.0 - x * x) - math.acos(x)


def phi_prime(x: float) -> float:
    """phi'(x) = 2 sqrt(1-x^2)."""
    return 2.0 * math.sqrt(1.0 - x * x)


def theta_m(m: int, x: float) -> float:
    """theta_m(x) = (m + 1/2) arccos(x) - pi/4."""
    return (m + 0.5) * math.acos(x) - math.pi / 4.0


def sigma(x: float) -> float:
    """sigma(x) = x + sqrt(x^2 - 1) for |x| >= 1."""
    return x + math.sqrt(x * x - 1.0)


def theta_tilde_m(m: int, x: float, alpha: float) -> float:
    """theta_m(x) - (alpha^2 x / 2) phi'(x)."""
    return theta_m(m, x) - alpha * alpha * x * math.sqrt(1.0 - x * x)


def big_theta(x: float, alpha: float) -> float:
    """Theta(x) = theta~_{-1}(x) + theta~_{-2}(x)."""
    return theta_tilde_m(-1, x, alpha) + theta_tilde_m(-2, x, alpha)


@dataclass(frozen=True)
class PhaseData:
    """Phase quantities at one point; entries outside their domain are nan."""

    phi: float
    theta_m: float
    sigma: float
    theta_tilde_m: float
    big_theta: float

    @classmethod
    def at(cls, x: float, m: int = 0, alpha: float = 0.0) -> "PhaseData":
        inside = abs(x) <= 1.0
        return cls(
            phi=phi(x) if inside else math.nan,
            theta_m=theta_m(m, x) if inside else math.nan,
            sigma=sigma(x) if abs(x) >= 1.0 else math.nan,
            theta_tilde_m=theta_tilde_m(m, x, alpha) if inside else math.nan,
            big_theta=big_theta(x, alpha) if inside else math.nan,
        )


def coeff_a(m: int, x: float) -> float:
    """Cosine coefficient of the oscillatory N^{-1} correction."""
    return (((6 * m * m + 6 * m + 1) * x * x - 6 * m * m - 12 * m - 4)
            / (24.0 * (1.0 - x * x)))


def coeff_b(m: int, x: float) -> float:
    """Sine coefficient of the oscillatory N^{-1} correction."""
    return -(((12 * m * m + 12 * m + 2) * x**3 - (12 * m * m + 12 * m - 3) * x)
             / (48.0 * (1.0 - x * x) ** 1.5))


def coeff_c(m: int, x: float, alpha: float) -> float:
    """Weak-regime cosine coefficient; reduces to coeff_a at alpha = 0.

    The (3 alpha^2 + 1) factor is fixed against exact Hermite values: the
    amplitude expansion contributes + alpha^2 x^2 / (4 (1-x^2)), and only
    this sign makes the corrected form O(N^{-2}).
    """
    a2 = alpha * alpha
    return coeff_a(m, x) + ((3.0 * a2 + 1.0) * a2 * x * x - 3.0 * a2 * a2 * x**4) \
        / (4.0 * (1.0 - x * x))


def coeff_d(m: int, x: float, alpha: float) -> float:
    """Weak-regime sine coefficient; reduces to coeff_b at alpha = 0."""
    a2 = alpha * alpha
    return coeff_b(m, x) - ((3.0 * a2 + 2 * m + 1) * a2 * x - 4.0 * a2 * a2 * x**3) \
        / (4.0 * math.sqrt(1.0 - x * x))


def coeff_cal_a(m: int, t: float, alpha: float) -> float:
    """Airy-part coefficient of the weak critical N^{-1/3} correction."""
    a2 = alpha * alpha
    return (2.0 * a2 * a2 * t + a2**4 + (4 * m + 2) * a2) / 8.0


def coeff_cal_b(m: int, t: float, alpha: float) -> float:
    """Airy-derivative coefficient of the weak critical N^{-1/3} correction."""
    a2 = alpha * alpha
    return (2.0 * a2 * t + a2**3 - 4 * m - 2) / 4.0


# ----------------------------------------------------------------------
# Plancherel-Rotach evaluators
# ----------------------------------------------------------------------

def pr_oscillatory(n: int, m: int, x: float) -> tuple[ExtendedReal, ExtendedReal]:
    """H_{N+m}(sqrt(2N) x) inside the turning points, |x| <= 0.995.

    Returns the leading-only and leading-plus-N^{-1} approximations as
    extended-range values.
    """
    if abs(x) > 0.995:
        raise ValueError("pr_oscillatory requires |x| <= 0.995")
    log_pref = (-0.5 * _LNPI - 0.25 * math.log1p(-x * x)
                + math.lgamma(n + m + 1) + n / 2.0 + (n + m) / 2.0 * _LN2
                - (n + m + 1) / 2.0 * math.log(n) + n * x * x)
    phase = n * phi(x) - theta_m(m, x)
    shape0 = math.cos(phase)
    shape1 = shape0 + (coeff_a(m, x) * math.cos(phase)
                       + coeff_b(m, x) * math.sin(phase)) / n

    def build(shape):
        if shape == 0.0:
            return ExtendedReal.zero()
        return ExtendedReal.from_log10(
            (log_pref + math.log(abs(shape))) / math.log(10.0),
            sign=1 if shape > 0 else -1)

    return build(shape0), build(shape1)


def pr_critical_prefactor_log(n: int, m: int) -> float:
    """log of pi^{1/4} 2^{N/2+1/4} (N!)^{1/2} N^{-1/12} (2N)^{m/2}."""
    return (0.25 * _LNPI + (n / 2.0 + 0.25) * _LN2 + 0.5 * math.lgamma(n + 1)
            - math.log(n) / 12.0 + m / 2.0 * math.log(2.0 * n))


def pr_critical(n: int, m: int, xi: float) -> tuple[float, float]:
    """Scaled Hermite value near the turning point, x = 1 + xi/(2 N^{2/3}).

    Returns (leading, corrected) = (Ai(xi), Ai(xi) - (m+1/2) Ai'(xi) N^{-1/3});
    the exact prefactor dividing e^{-Nx^2} H_{N+m}(sqrt(2N)x) is exposed by
    pr_critical_prefactor_log.
    """
    if abs(xi) > n ** (1.0 / 6.0):
        raise ValueError("pr_critical requires |xi| <= N^{1/6}")
    ai, aip = airy(xi)
    return ai, ai - (m + 0.5) * aip * n ** (-1.0 / 3.0)


def pr_exponential(n: int, m: int, x: float) -> ExtendedReal:
    """H_{N+m}(sqrt(2N) x) beyond the turning point, x >= 1.02.

    (1/(sqrt(2) (x^2-1)^{1/4})) e^{-N/2} (2N)^{(N+m)/2} sigma(x)^{N+m+1/2}
    e^{Nx/sigma(x)} (1 + O(N^{-1})); this normalization is the one consistent
    with the edge reformulation and with exact Hermite values.
    """
    if x < 1.02:
        raise ValueError("pr_exponential requires x >= 1.02")
    s = sigma(x)
    log_val = (-0.5 * _LN2 - 0.25 * math.log(x * x - 1.0)
               - n / 2.0 + (n + m) / 2.0 * math.log(2.0 * n)
               + (n + m + 0.5) * math.log(s) + n * x / s)
    return ExtendedReal.from_log10(log_val / math.log(10.0), sign=1)


def pr_oscillatory_weak_prefactor_log(n: int, m: int, alpha: float, x: float) -> float:
    """log of e^{a^2 x^2/8} / (sqrt(pi) (1-x^2/4)^{1/4}) e^{N/2} (N+m)! 2^{(N+m)/2} N^{-(N+m+1)/2}."""
    return (alpha * alpha * x * x / 8.0 - 0.5 * _LNPI
            - 0.25 * math.log1p(-x * x / 4.0)
            + n / 2.0 + math.lgamma(n + m + 1) + (n + m) / 2.0 * _LN2
            - (n + m + 1) / 2.0 * math.log(n))


def pr_oscillatory_weak(n: int, m: int, alpha: float, x: float) -> tuple[float, float]:
    """Scaled e^{-Nx^2/(2(1+tau))} H_{N+m}(sqrt(N/2tau) x) at tau = 1 - alpha^2/N.

    Returns the (leading, corrected) shape functions
    cos(N phi(x/2) - theta~_m(x/2)) and its N^{-1} refinement with the
    C_m, D_m coefficients.
    """
    if abs(x) > 1.99:
        raise ValueError("pr_oscillatory_weak requires |x| <= 1.99")
    h = x / 2.0
    phase = n * phi(h) - theta_tilde_m(m, h, alpha)
    shape0 = math.cos(phase)
    shape1 = shape0 + (coeff_c(m, h, alpha) * math.cos(phase)
                       + coeff_d(m, h, alpha) * math.sin(phase)) / n
    return shape0, shape1


def pr_exponential_edge_prefactor_log(n: int, m: int, tau: float) -> float:
    """log of (e^{m/2}/sqrt(1-tau)) (2N/(e tau))^{(N+m)/2}."""
    return m / 2.0 - 0.5 * math.log1p(-tau) \
        + (n + m) / 2.0 * (math.log(2.0 * n / tau) - 1.0)


def pr_exponential_edge(n: int, m: int, tau: float, xi: float) -> tuple[float, float]:
    """Scaled Hermite value at the strong edge, x = 1 + tau + sqrt((1-tau^2)/N) xi.

    Returns (e^{-xi^2}, (1 + h1 N^{-1/2}) e^{-xi^2}) with
    h1 = (1/3)((1+tau)/(1-tau))^{3/2} xi^3 + ((1-tau)m - tau)/(1-tau)
         ((1+tau)/(1-tau))^{1/2} xi.
    """
    if not 0.0 < tau < 1.0:
        raise ValueError("pr_exponential_edge requires tau in (0, 1)")
    ratio = (1.0 + tau) / (1.0 - tau)
    h1 = (ratio**1.5 * xi**3 / 3.0
          + ((1.0 - tau) * m - tau) / (1.0 - tau) * math.sqrt(ratio) * xi)
    leading = math.exp(-xi * xi)
    return leading, (1.0 + h1 / math.sqrt(n)) * leading


def pr_critical_weak_prefactor_log(n: int, m: int, alpha: float) -> float:
    """log of exp(a^2 N^{2/3}/2 + a^4 N^{1/3}/4 + a^6/6) (2N)^{m/2}
    pi^{1/4} 2^{N/2+1/4} (N!)^{1/2} N^{-1/12}."""
    return (alpha**2 * n ** (2.0 / 3.0) / 2.0 + alpha**4 * n ** (1.0 / 3.0) / 4.0
            + alpha**6 / 6.0 + m / 2.0 * math.log(2.0 * n)
            + 0.25 * _LNPI + (n / 2.0 + 0.25) * _LN2
            + 0.5 * math.lgamma(n + 1) - math.log(n) / 12.0)


def pr_critical_weak(n: int, m: int, alpha: float, xi: float) -> tuple[float, float]:
    """Scaled Hermite value at the weak edge, tau = 1 - alpha^2/N^{1/3}.

    Returns (Ai_a(xi), Ai_a(xi) + (A_m Ai_a + B_m Ai_a') N^{-1/3}) with the
    polynomial coefficients of the weak critical regime; reduces to
    pr_critical at alpha = 0.
    """
    if abs(xi) > n ** 0.6:
        raise ValueError("pr_critical_weak requires |xi| within the critical window")
    val, der = airy_alpha(alpha, xi)
    corrected = val + (coeff_cal_a(m, xi, alpha) * val
                       + coeff_cal_b(m, xi, alpha) * der) * n ** (-1.0 / 3.0)
    return val, corrected


# ----------------------------------------------------------------------
# stationary phase
# ----------------------------------------------------------------------

def stationary_phase_first_order(f, psi, psi_prime, a: float, b: float,
                                 n: float) -> complex:
    """First-order boundary-term approximation of int_a^b f(u) e^{iN psi(u)} du.

    Valid when psi has no critical point on [a, b]; this is checked by a
    64-point sign-and-magnitude sample of psi', and violations are rejected.
    """
    if a == b:
        return 0.0 + 0.0j
    samples = np.linspace(a, b, 64)
    dvals = np.array([psi_prime(float(u)) for u in samples])
    if np.any(dvals == 0.0) or np.sign(dvals).min() != np.sign(dvals).max():
        raise ValueError("psi has a critical point in [a, b]")
    term_a = f(a) / psi_prime(a) * complex(math.cos(n * psi(a)), math.sin(n * psi(a)))
    term_b = f(b) / psi_prime(b) * complex(math.cos(n * psi(b)), math.sin(n * psi(b)))
    return 1j * (term_a - term_b) / n
