"""Exact propagation of probability distributions through the quadratic
interval map x -> r*x*(1-x), with closed-form checks and Monte Carlo
verification."""

__version__ = "0.1.0"

from .analysis import (
    ConvergenceReport,
    ConvergenceRow,
    cdf_violation,
    convergence_table,
    fixed_point_residual,
    ks_band,
    ks_statistic,
    sup_distance,
)
from .distributions import (
    Cdf,
    DistSpec,
    cdf_arcsine,
    cdf_beta,
    cdf_kumaraswamy,
    cdf_uniform,
    quantile_kumaraswamy,
    sample,
)
from .errors import (
    ConvergenceError,
    DegenerateOrbitError,
    DomainError,
    MonotonicityError,
    NumericsError,
    ParameterError,
    ResourceLimitError,
)
from .pushforward import (
    DEFAULT_GRID_SIZE,
    EXACT_ITERATION_LIMIT,
    GridCdf,
    IterateCdf,
    grid_coordinate,
    iterate_pushforward,
    preimage_pair,
    pushforward_cdf,
    q_r,
    standard_grid,
    tabulate,
    validate_map_param,
)
from .simulate import (
    EmpiricalCdf,
    ErgodicRun,
    Trajectory,
    ensemble_push,
    ergodic_empirical,
    logistic_step,
    trajectory,
)
from .verify import CheckResult, run_verification

__all__ = [
    "Cdf",
    "CheckResult",
    "ConvergenceError",
    "ConvergenceReport",
    "ConvergenceRow",
    "DEFAULT_GRID_SIZE",
    "DegenerateOrbitError",
    "DistSpec",
    "DomainError",
    "EXACT_ITERATION_LIMIT",
    "EmpiricalCdf",
    "ErgodicRun",
    "GridCdf",
    "IterateCdf",
    "MonotonicityError",
    "NumericsError",
    "ParameterError",
    "ResourceLimitError",
    "Trajectory",
    "cdf_arcsine",
    "cdf_beta",
    "cdf_kumaraswamy",
    "cdf_uniform",
    "cdf_violation",
    "convergence_table",
    "ensemble_push",
    "ergodic_empirical",
    "fixed_point_residual",
    "grid_coordinate",
    "iterate_pushforward",
    "ks_band",
    "ks_statistic",
    "logistic_step",
    "preimage_pair",
    "pushforward_cdf",
    "q_r",
    "quantile_kumaraswamy",
    "run_verification",
    "sample",
    "standard_grid",
    "sup_distance",
    "tabulate",
    "trajectory",
    "validate_map_param",
]
