"""Asymptotic optimal designs for regression with long-range dependent errors."""

from ._lrdesign import (
    BasisSet,
    ConvergenceReport,
    CorrelationModel,
    Criterion,
    DesignDensity,
    Family,
    FiniteDesign,
    FixedPointSolution,
    Grid,
    LimitKernel,
    MaximinResult,
    ModelContext,
    OptimizeResult,
    OptimizerOptions,
    ShortRangeContext,
    convergence_report,
    criterion_value,
    d_norm,
    design_points_from_density,
    efficiency,
    exact_lse_covariance,
    limit_kernel,
    maximin_design,
    mittag_leffler,
    optimize_density,
    q_partial_sum,
    rho,
    solve_one_param,
    solve_shortrange,
)

__all__ = [
    "BasisSet",
    "ConvergenceReport",
    "CorrelationModel",
    "Criterion",
    "DesignDensity",
    "Family",
    "FiniteDesign",
    "FixedPointSolution",
    "Grid",
    "LimitKernel",
    "MaximinResult",
    "ModelContext",
    "OptimizeResult",
    "OptimizerOptions",
    "ShortRangeContext",
    "convergence_report",
    "criterion_value",
    "d_norm",
    "design_points_from_density",
    "efficiency",
    "exact_lse_covariance",
    "limit_kernel",
    "maximin_design",
    "mittag_leffler",
    "optimize_density",
    "q_partial_sum",
    "rho",
    "solve_one_param",
    "solve_shortrange",
]
