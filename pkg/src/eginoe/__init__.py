"""Elliptic Ginibre orthogonal ensemble: exact real-eigenvalue densities,
finite-size-correction expansions, and Monte Carlo validation."""

from .extended import ExtendedReal
from .specfun import (
    QuadratureError,
    UnderflowWarning,
    airy,
    bessel_i,
    bessel_i_scaled,
    erf,
    erfc,
    hermite_extended,
    hyp2f1_regularized,
    lower_incomplete_gamma,
    oscillator_wave,
    quad_adaptive,
    reg_lower_gamma,
)
from .density import (
    EnsembleParams,
    WeakRegimeParams,
    density_normalised,
    edge_rescaled_exact,
    expected_count_exact,
    rn,
    rn1_integral,
    rn1_sum,
    rn2,
    rn_ginoe,
    rn_grid,
)
from .asymptotics import (
    DensityExpansion,
    airy_alpha,
    c0_alpha,
    c_alpha,
    c_alpha_integral,
    edge_strong,
    edge_weak,
    expected_count_strong,
    expected_count_weak,
    global_strong,
    global_weak,
    goe_bulk,
    goe_edge,
    normalised_strong,
    normalised_weak,
)
from .montecarlo import (
    Histogram,
    SampleConfig,
    density_histogram,
    expected_count_mc,
    real_eigenvalues,
    sample_elliptic_ginoe,
    trial_rng,
)

__version__ = "0.1.0"
