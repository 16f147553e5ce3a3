"""Exact finite-N real-eigenvalue density of the elliptic GinOE.

The 1-point intensity splits into a Gaussian-weighted Hermite square sum and
a boundary term built from one Hermite value times a Hermite integral.  Both
pieces are assembled from normalized oscillator wave functions, with the
mismatch between the model's Gaussian weight and the oscillator weight carried
exactly as a log-space exponent, so every intermediate stays O(1) while the
raw Hermite factors span thousands of decades.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import quad_adaptive, reg_lower_gamma

__all__ = [
    "EnsembleParams",
    "WeakRegimeParams",
    "rn1_sum",
    "rn1_integral",
    "rn2",
    "rn",
    "rn_grid",
    "rn_ginoe",
    "expected_count_exact",
    "density_normalised",
    "edge_rescaled_exact",
]

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class EnsembleParams:
    """Matrix size N (even) and Hermiticity parameter tau in [0, 1]."""

    n: int
    tau: float

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("matrix dimension n must be a positive even integer")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError("tau must lie in [0, 1]")


@dataclass(frozen=True)
class WeakRegimeParams:
    """Weak non-Hermiticity point: alpha with its scaling law for tau.

    bulk scaling induces tau = 1 - alpha^2/N, edge scaling
    tau = 1 - alpha^2/N^{1/3}; the induced tau must land in [0, 1].
    """

    n: int
    alpha: float
    scaling: str = "bulk"

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("matrix dimension n must be a positive even integer")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if self.scaling not in ("bulk", "edge"):
            raise ValueError("scaling must be 'bulk' or 'edge'")
        if self.tau < 0.0:
            limit = "N" if self.scaling == "bulk" else "N^(1/3)"
            raise ValueError(f"alpha^2 exceeds {limit}; induced tau falls below 0")

    @property
    def tau(self) -> float:
        if self.scaling == "bulk":
            return 1.0 - self.alpha**2 / self.n
        return 1.0 - self.alpha**2 / self.n ** (1.0 / 3.0)

    def ensemble(self) -> EnsembleParams:
        return EnsembleParams(self.n, self.tau)


def _as_ensemble(p) -> EnsembleParams:
    if isinstance(p, WeakRegimeParams):
        return p.ensemble()
    return p


# ----------------------------------------------------------------------
# scaled oscillator-wave ladders (vectorized over evaluation points)
# ----------------------------------------------------------------------

def _psi_seed(t: np.ndarray):
    """psi_0, psi_1 as mantissa arrays sharing a per-point base-2 exponent.

    Arguments so extreme that no rung of the ladder could ever matter
    (log psi_0 below ~-1e9) are pinned to exact zero; the float arithmetic
    on the exponent split would otherwise lose integer precision.
    """
    log_psi0 = -0.5 * t * t - 0.25 * math.log(math.pi)
    dead = log_psi0 < -1e9
    safe = np.where(dead, 0.0, log_psi0)
    exp2 = np.floor(safe / _LN2)
    p0 = np.where(dead, 0.0, np.exp(safe - exp2 * _LN2))
    return p0, math.sqrt(2.0) * t * p0, np.where(dead, 0.0, exp2)


def _rescale(p_prev, p_cur, exp2):
    mag = np.maximum(np.abs(p_prev), np.abs(p_cur))
    up = mag > 1e270
    down = (mag > 0.0) & (mag < 1e-270)
    if up.any():
        p_prev[up] = np.ldexp(p_prev[up], -512)
        p_cur[up] = np.ldexp(p_cur[up], -512)
        exp2[up] += 512
    if down.any():
        p_prev[down] = np.ldexp(p_prev[down], 512)
        p_cur[down] = np.ldexp(p_cur[down], 512)
        exp2[down] -= 512


def _psi_pair(nmax: int, t: np.ndarray):
    """(psi_{nmax-1}, psi_{nmax}, exp2): top two rungs of the psi ladder."""
    p_prev, p_cur, exp2 = _psi_seed(t)
    for k in range(1, nmax):
        p_prev, p_cur = p_cur, (t * math.sqrt(2.0 / (k + 1)) * p_cur
                                - math.sqrt(k / (k + 1.0)) * p_prev)
        _rescale(p_prev, p_cur, exp2)
    return p_prev, p_cur, exp2


def _log_weighted_sq_sum(n: int, tau: float, t: np.ndarray) -> np.ndarray:
    """log( sum_{k=0}^{n-2} tau^k psi_k(t)^2 ), online log-sum-exp."""
    ln_tau = math.log(tau) if tau < 1.0 else 0.0
    p_prev, p_cur, exp2 = _psi_seed(t)
    with np.errstate(divide="ignore"):
        big = 2.0 * (np.log(np.abs(p_prev)) + exp2 * _LN2)
    acc = np.ones_like(t)
    for k in range(1, n - 1):
        with np.errstate(divide="ignore"):
            term = k * ln_tau + 2.0 * (np.log(np.abs(p_cur)) + exp2 * _LN2)
        new_big = np.maximum(big, term)
        acc = acc * np.exp(big - new_big) + np.exp(term - new_big)
        big = new_big
        p_prev, p_cur = p_cur, (t * math.sqrt(2.0 / (k + 1)) * p_cur
                                - math.sqrt(k / (k + 1.0)) * p_prev)
        _rescale(p_prev, p_cur, exp2)
    return big + np.log(acc)


# ----------------------------------------------------------------------
# shared log-space prefactors
# ----------------------------------------------------------------------

def _delta(p: EnsembleParams, u):
    """Exponent gap between the model Gaussian and the oscillator weight."""
    return p.n * u * u * (1.0 - p.tau) / (2.0 * p.tau * (1.0 + p.tau))

def _log_pair_coef(p: EnsembleParams) -> float:
    """log of sqrt(2) N sqrt(N-1) tau^{N-3/2} / (1+tau)."""
    n, tau = p.n, p.tau
    return (0.5 * math.log(2.0) + math.log(n) + 0.5 * math.log(n - 1.0)
            - math.log1p(tau) + (n - 1.5) * math.log(tau))


def _hermite_arg_scale(p: EnsembleParams) -> float:
    return math.sqrt(p.n / (2.0 * p.tau))


# ----------------------------------------------------------------------
# the two halves of the exact density
# ----------------------------------------------------------------------

def rn1_sum(p: EnsembleParams, x: float) -> float:
    """Hermite-square-sum half of the density, by direct summation.

    sqrt(N/2pi) e^{-Nx^2/(1+tau)} sum_k (tau/2)^k/k! H_k(sqrt(N/2tau) x)^2,
    rewritten as sqrt(N/2) e^{Delta} sum_k tau^k psi_k(t)^2 with every factor
    in log space.
    """
    p = _as_ensemble(p)
    if p.tau == 0.0:
        raise ValueError("tau = 0 has no Hermite sum form; use rn_ginoe")
    t = np.array([_hermite_arg_scale(p) * x])
    log_s = _log_weighted_sq_sum(p.n, p.tau, t)[0]
    return math.exp(0.5 * math.log(p.n / 2.0) + _delta(p, x) + log_s)


def _pair_integrand(p: EnsembleParams, log_shift: float):
    """e^{Delta(u) - shift} psi_{N-2} psi_{N-1} at the model's Hermite argument."""
    scale = _hermite_arg_scale(p)

    def f(u: np.ndarray) -> np.ndarray:
        pa, pb, exp2 = _psi_pair(p.n - 1, scale * u)
        with np.errstate(divide="ignore"):
            log_mag = (np.log(np.abs(pa)) + np.log(np.abs(pb)) + 2.0 * exp2 * _LN2)
        out = np.sign(pa) * np.sign(pb) * np.exp(_delta(p, u) + log_mag - log_shift)
        return out

    return f


def rn1_integral(p: EnsembleParams, x: float, x0: float = 0.0) -> float:
    """Integral representation of the Hermite-sum half, anchored at x0.

    R1(x) = R1(x0) - C int_{x0}^x e^{-Nu^2/(1+tau)} H_{N-2} H_{N-1} du; the
    anchor value comes from rn1_sum for finite x0 and is 0 for x0 = +inf.
    The coefficient C is folded into the integrand's log shift so the
    quadrature sees density-scale values.
    """
    p = _as_ensemble(p)
    if not 0.0 < p.tau < 1.0:
        raise ValueError("rn1_integral requires 0 < tau < 1")
    anchor = 0.0 if math.isinf(x0) else rn1_sum(p, x0)
    if x == x0:
        return anchor
    f = _pair_integrand(p, log_shift=-_log_pair_coef(p))
    turning = 2.0 * math.sqrt(p.tau)
    if math.isinf(x0):
        val, _ = quad_adaptive(f, x, math.inf, tol=1e-13, rtol=1e-10,
                               vectorized=True,
                               breakpoints=[t for t in (turning, -turning) if t > x])
        return anchor + val
    lo, hi, sgn = (x0, x, -1.0) if x0 < x else (x, x0, 1.0)
    val, _ = quad_adaptive(f, lo, hi, tol=1e-13, rtol=1e-10, vectorized=True,
                           breakpoints=[t for t in (turning, -turning) if lo < t < hi])
    return anchor + sgn * val


def _single_integrand(p: EnsembleParams, log_shift):
    """e^{Delta(u)/2 - shift} psi_{N-2} at the model's Hermite argument."""
    scale = _hermite_arg_scale(p)

    def f(u: np.ndarray) -> np.ndarray:
        pa, _, exp2 = _psi_pair(p.n - 1, scale * u)
        with np.errstate(divide="ignore"):
            log_mag = np.log(np.abs(pa)) + exp2 * _LN2
        return np.sign(pa) * np.exp(0.5 * _delta(p, u) + log_mag - log_shift)

    return f


def _log_gr_halfline(p: EnsembleParams) -> float:
    """log of the closed-form half-line Hermite integral, psi-normalized.

    int_0^inf e^{-Nu^2/(2(1+tau))} H_{N-2}(sqrt(N/2tau) u) du equals
    sqrt(pi(1+tau)/2N) (N-2)!/(N/2-1)! tau^{1-N/2}; dividing by the psi
    normalization pi^{1/4} 2^{N/2-1} sqrt((N-2)!) keeps it on the integrand
    scale used here.
    """
    n, tau = p.n, p.tau
    return (0.5 * math.log(math.pi * (1.0 + tau) / (2.0 * n))
            + math.lgamma(n - 1.0) - math.lgamma(n / 2.0)
            + (1.0 - n / 2.0) * math.log(tau)
            - 0.25 * math.log(math.pi) - (n / 2.0 - 1.0) * _LN2
            - 0.5 * math.lgamma(n - 1.0))


def rn2(p: EnsembleParams, x: float, form: str = "direct") -> float:
    """Boundary half of the density: H_{N-1}(x) times a Hermite integral.

    direct evaluates int_0^x; tail replaces it by the closed-form half-line
    integral minus int_x^inf, which is the stable route outside the turning
    point.  Both agree to ~1e-8 relative on the overlap.
    """
    p = _as_ensemble(p)
    if form not in ("direct", "tail"):
        raise ValueError("form must be 'direct' or 'tail'")
    if p.tau == 0.0:
        raise ValueError("tau = 0 has no Hermite form; use rn_ginoe")
    if x == 0.0:
        return 0.0
    ax = abs(x)
    scale = _hermite_arg_scale(p)
    pa, pb, exp2 = _psi_pair(p.n - 1, np.array([scale * ax]))
    with np.errstate(divide="ignore"):
        log_outer = float((np.log(np.abs(pb)) + exp2 * _LN2)[0])
    sign_outer = float(np.sign(pb[0]))
    shift = 0.5 * _delta(p, ax)
    f = _single_integrand(p, log_shift=shift)
    turning = 2.0 * math.sqrt(p.tau)
    if form == "direct":
        raw, _ = quad_adaptive(f, 0.0, ax, tol=1e-14, rtol=1e-10,
                               vectorized=True,
                               breakpoints=[turning] if turning < ax else [])
    else:
        tail, _ = quad_adaptive(f, ax, math.inf, tol=1e-14, rtol=1e-10,
                                vectorized=True,
                                breakpoints=[turning] if turning > ax else [])
        raw = math.exp(_log_gr_halfline(p) - shift) - tail
    if raw == 0.0:
        return 0.0
    sign_int = math.copysign(1.0, raw)
    integral = abs(raw)
    log_val = (_log_pair_coef(p) - _LN2 + 0.5 * _delta(p, ax) + log_outer
               + shift + math.log(integral))
    return sign_outer * sign_int * math.exp(log_val)


# ----------------------------------------------------------------------
# assembled density
# ----------------------------------------------------------------------

def rn_ginoe(n: int, x: float) -> float:
    """Exact GinOE (tau = 0) real-eigenvalue density, any n >= 1."""
    if n < 1:
        raise ValueError("rn_ginoe requires n >= 1")
    front = math.sqrt(n / (2.0 * math.pi))
    if n == 1:
        # single eigenvalue, standard normal at this scaling
        return front * math.exp(-x * x / 2.0)
    bulk = 1.0 - reg_lower_gamma(n - 1.0, n * x * x)
    if x == 0.0:
        return front * bulk
    log_mid = (0.5 * (n - 1.0) * math.log(2.0 * n) + (n - 1.0) * math.log(abs(x))
               - 0.5 * n * x * x - math.lgamma(n - 1.0) - _LN2
               + math.lgamma(0.5 * (n - 1.0)))
    mid = math.exp(log_mid) * reg_lower_gamma(0.5 * (n - 1.0), 0.5 * n * x * x)
    return front * (bulk + mid)


def rn(p, x: float) -> float:
    """Exact 1-point function R_N(x) = R_N^1(x) + R_N^2(x)."""
    p = _as_ensemble(p)
    if p.tau == 0.0:
        return rn_ginoe(p.n, x)
    ax = abs(x)
    form = "direct" if ax <= 2.0 * math.sqrt(p.tau) else "tail"
    val = rn1_sum(p, ax) + rn2(p, ax, form=form)
    return max(val, 0.0) if val > -1e-10 else val


def rn_grid(p, xs) -> np.ndarray:
    """R_N on a batch of points; one ladder pass for the sum half.

    The boundary half still needs one cumulative quadrature per |x| segment,
    done incrementally over the sorted unique |x| values.
    """
    p = _as_ensemble(p)
    xs = np.asarray(xs, dtype=float)
    if p.tau == 0.0:
        return np.array([rn_ginoe(p.n, float(x)) for x in xs])
    ax = np.abs(xs)
    uniq, inverse = np.unique(ax, return_inverse=True)

    # sum half, all points in one ladder pass
    t = _hermite_arg_scale(p) * uniq
    log_s = _log_weighted_sq_sum(p.n, p.tau, t)
    r1 = np.exp(0.5 * math.log(p.n / 2.0) + _delta(p, uniq) + log_s)

    # boundary half, cumulative over segments
    turning = 2.0 * math.sqrt(p.tau)
    scale = _hermite_arg_scale(p)
    pa, pb, exp2 = _psi_pair(p.n - 1, scale * uniq)
    with np.errstate(divide="ignore"):
        log_outer = np.where(pb == 0.0, -np.inf, np.log(np.abs(pb)) + exp2 * _LN2)
    sign_outer = np.sign(pb)

    r2 = np.empty_like(uniq)
    running = 0.0  # int_0^{x_i} e^{Delta/2} psi_{N-2}, in log-shift frame
    log_run_shift = -math.inf  # running is stored times e^{-log_run_shift}
    prev = 0.0
    for i, u in enumerate(uniq):
        if u > prev:
            seg_shift = 0.5 * _delta(p, u)
            g = _single_integrand(p, log_shift=seg_shift)
            seg, _ = quad_adaptive(
                g, prev, float(u), tol=1e-14, rtol=1e-9, vectorized=True,
                breakpoints=[turning] if prev < turning < u else [])
            # rebase the running total onto this segment's shift
            if math.isinf(log_run_shift):
                running = seg
            else:
                running = running * math.exp(log_run_shift - seg_shift) + seg
            log_run_shift = seg_shift
            prev = float(u)
        if u == 0.0 or running == 0.0:
            r2[i] = 0.0
            continue
        log_val = (_log_pair_coef(p) - _LN2 + 0.5 * _delta(p, u) + log_outer[i]
                   + log_run_shift + math.log(abs(running)))
        r2[i] = sign_outer[i] * math.copysign(1.0, running) * math.exp(log_val)

    vals = (r1 + r2)[inverse]
    return np.where(vals > -1e-10, np.maximum(vals, 0.0), vals)


def expected_count_exact(p) -> float:
    """E_{N,tau}: the integral of R_N over the real line, by quadrature.

    The integration window covers the support plus six edge spacings plus one,
    extended by ten Gaussian tail widths sqrt(2(1+tau)/N); the latter matters
    at small N near tau = 1 where the edge-spacing term degenerates but the
    finite-N Gaussian tails still carry mass far above 1e-8.
    """
    p = _as_ensemble(p)
    edge = 1.0 + p.tau
    spread = 6.0 * math.sqrt((1.0 - p.tau**2) / p.n) + 1.0
    hi = edge + spread + 10.0 * math.sqrt(2.0 * (1.0 + p.tau) / p.n)
    if p.tau == 0.0:
        f = lambda u: np.array([rn_ginoe(p.n, float(x)) for x in u])
    else:
        f = lambda u: rn_grid(p, u)
    # even integrand: integrate the right half and double
    turning = 2.0 * math.sqrt(p.tau)
    val, _ = quad_adaptive(f, 0.0, hi, tol=2e-9, vectorized=True,
                           breakpoints=[t for t in (turning, edge) if 0 < t < hi])
    return 2.0 * val


def density_normalised(p, x: float) -> float:
    """rho_N(x) = R_N(x) / E_{N,tau}; integrates to one."""
    return rn(p, x) / expected_count_exact(p)


def edge_rescaled_exact(p, xi: float) -> float:
    """Edge-rescaled exact density at the right spectral edge 1 + tau.

    Strong regime (EnsembleParams or fixed tau): spacing sqrt((1-tau^2)/N);
    weak edge regime (WeakRegimeParams with edge scaling): spacing N^{-2/3}.
    Both use the +inf anchor for the sum half and the tail form for the
    boundary half, which keeps the evaluation free of oscillatory-bulk
    cancellation.
    """
    if isinstance(p, WeakRegimeParams):
        if p.scaling != "edge":
            raise ValueError("edge_rescaled_exact needs edge scaling for weak regime")
        ens = p.ensemble()
        spacing = ens.n ** (-2.0 / 3.0)
    else:
        ens = p
        if not 0.0 < ens.tau < 1.0:
            raise ValueError("strong-regime edge rescaling requires 0 < tau < 1")
        spacing = math.sqrt((1.0 - ens.tau**2) / ens.n)
    x = 1.0 + ens.tau + spacing * xi
    val = rn1_integral(ens, x, x0=math.inf) + rn2(ens, x, form="tail")
    return spacing * val
