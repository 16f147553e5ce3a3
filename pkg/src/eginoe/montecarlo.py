"""Monte Carlo sampling of elliptic GinOE matrices and their real spectra.

Ground truth independent of every analytic formula in the package: sample
matrices, pull out the real eigenvalues via the real Schur form, and
accumulate histogram/count statistics.  Each trial draws its generator from
(seed, trial index), so results are reproducible bit-for-bit regardless of
execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

__all__ = [
    "SampleConfig",
    "Histogram",
    "trial_rng",
    "sample_elliptic_ginoe",
    "real_eigenvalues",
    "density_histogram",
    "expected_count_mc",
]


@dataclass(frozen=True)
class SampleConfig:
    """Parameters of one Monte Carlo run."""

    n: int
    tau: float
    trials: int
    seed: int
    real_tol: float | None = None

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("matrix dimension n must be a positive even integer")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError("tau must lie in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def imag_threshold(self) -> float:
        # backward-error scaling of dense eigensolvers
        return self.real_tol if self.real_tol is not None else 1e-9 * math.sqrt(self.n)


@dataclass
class Histogram:
    """Bin counts of real eigenvalues over a fixed set of edges."""

    edges: np.ndarray
    counts: np.ndarray = field(default=None)
    trials: int = 0

    def __post_init__(self):
        self.edges = np.asarray(self.edges, dtype=float)
        if len(self.edges) < 2 or np.any(np.diff(self.edges) <= 0):
            raise ValueError("edges must be strictly increasing with >= 2 entries")
        if self.counts is None:
            self.counts = np.zeros(len(self.edges) - 1, dtype=np.int64)
        else:
            self.counts = np.asarray(self.counts, dtype=np.int64)
            if len(self.counts) != len(self.edges) - 1:
                raise ValueError("counts must have one entry per bin")

    def add(self, values: np.ndarray) -> None:
        self.counts += np.histogram(values, bins=self.edges)[0]

    def merge(self, other: "Histogram") -> "Histogram":
        """Combine two histograms over identical edges (exact integer sum)."""
        if not np.array_equal(self.edges, other.edges):
            raise ValueError("histogram merge requires identical edges")
        return Histogram(self.edges, self.counts + other.counts,
                         self.trials + other.trials)

    def density(self) -> np.ndarray:
        """Per-trial density estimate counts / (trials * bin width)."""
        widths = np.diff(self.edges)
        return self.counts / (self.trials * widths)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator for one trial, independent of thread or execution order."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, trial))))


def sample_elliptic_ginoe(n: int, tau: float, rng: np.random.Generator) -> np.ndarray:
    """One elliptic GinOE matrix: sqrt((1+tau)/2) S+ + sqrt((1-tau)/2) S-.

    S+ = (X + X^T)/sqrt(2) and S- = (X - X^T)/sqrt(2) for X with iid real
    N(0, 1/N) entries; the antisymmetrization in S- is the standard one (a
    symmetric S- would make the model symmetric for every tau).
    """
    x = rng.normal(0.0, 1.0 / math.sqrt(n), size=(n, n))
    s_plus = (x + x.T) / math.sqrt(2.0)
    s_minus = (x - x.T) / math.sqrt(2.0)
    return (math.sqrt((1.0 + tau) / 2.0) * s_plus
            + math.sqrt((1.0 - tau) / 2.0) * s_minus)


def real_eigenvalues(matrix: np.ndarray, real_tol: float | None = None) -> np.ndarray:
    """Sorted real eigenvalues of a real square matrix.

    Primary path: real Schur form, whose 1x1 diagonal blocks are exactly the
    real eigenvalues (2x2 blocks hold the conjugate pairs), so no imaginary
    threshold enters.  If the Schur decomposition fails to converge, falls
    back to a dense eigensolve keeping |Im| < real_tol.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("real_eigenvalues requires a square matrix")
    n = a.shape[0]
    try:
        t, _ = scipy.linalg.schur(a, output="real")
    except scipy.linalg.LinAlgError:
        tol = real_tol if real_tol is not None else 1e-9 * math.sqrt(n)
        lam = np.linalg.eigvals(a)
        return np.sort(lam[np.abs(lam.imag) < tol].real)
    sub = np.abs(np.diag(t, -1))
    vals = []
    i = 0
    while i < n:
        if i + 1 < n and sub[i] > 0.0:
            i += 2  # 2x2 block: complex conjugate pair
        else:
            vals.append(t[i, i])
            i += 1
    return np.sort(np.array(vals))


def _iter_real_spectra(cfg: SampleConfig):
    for trial in range(cfg.trials):
        rng = trial_rng(cfg.seed, trial)
        m = sample_elliptic_ginoe(cfg.n, cfg.tau, rng)
        yield real_eigenvalues(m, cfg.real_tol)


def density_histogram(cfg: SampleConfig, edges) -> Histogram:
    """Histogram of real eigenvalues over cfg.trials independent matrices."""
    hist = Histogram(np.asarray(edges, dtype=float))
    for spectrum in _iter_real_spectra(cfg):
        hist.add(spectrum)
    hist.trials = cfg.trials
    return hist


def expected_count_mc(cfg: SampleConfig) -> tuple[float, float]:
    """Sampled mean real-eigenvalue count and its standard error."""
    counts = np.fromiter((len(s) for s in _iter_real_spectra(cfg)),
                         dtype=float, count=cfg.trials)
    mean = float(counts.mean())
    stderr = float(counts.std(ddof=1) / math.sqrt(cfg.trials)) if cfg.trials > 1 else math.inf
    return mean, stderr
