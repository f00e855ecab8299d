"""Worst-case L2 approximation on weighted Korobov spaces, made computable.

Eigenvalue spectra, exact information complexity, the optimal linear
algorithm, and tractability classification for product-weighted Korobov
spaces with nonincreasing weights and nondecreasing smoothness.
"""

__version__ = "0.1.0"

from .approximator import (
    FourierPoly,
    KorobovApproximator,
    approximate,
    h_norm,
    l2_error,
    optimal_index_set,
    worst_case_witness,
)
from .complexity import (
    ComplexityQuery,
    ComplexityResult,
    C_tau_q,
    count_box_oracle,
    info_complexity,
    info_complexity_upper_bound,
)
from .exceptions import (
    DimensionMismatch,
    DomainError,
    InsufficientBox,
    KorobovError,
    MonotonicityViolation,
    NotApplicable,
    RangeViolation,
    ResourceLimit,
    ValidationError,
)
from .params import DeltaEstimate, KorobovParams, SmoothnessSpec, WeightSpec, alpha, delta, gamma, validate
from .spectrum import (
    EigenEntry,
    SpectrumIterator,
    brute_force_spectrum,
    eigen_sum_tau,
    enumerate_top,
    nth_eigenvalue,
    product_r,
    univariate_r,
    worst_case_error,
)
from .tractability import (
    ExponentFit,
    TractabilityReport,
    Trivalent,
    classify,
    curse_witness,
    fit_exponent,
    spt_exponent,
)
from .zeta import ZetaValue, riemann_zeta
