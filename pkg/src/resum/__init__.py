"""Optimized Borel-type summation of divergent truncated series with
self-similar iterated root approximants and lasso/ridge selection of
control parameters."""

from ._backend import backend_name
from .approximant import (
    IteratedRootApproximant,
    MarginalAmplitude,
    evaluate_root,
    fit_iterated_root,
    marginal_amplitude,
    reexpand,
)
from .benchmarks import (
    BenchmarkProblem,
    TableRow,
    generate_gaussian_polymer,
    generate_wilson_loop,
    get_problem,
    registry,
    run_table,
)
from .difflog import estimate_index, index_pool, index_ridge, index_series
from .numerics import DEFAULT_GRID, ScanGrid
from .optimizer import (
    AmplitudeCurve,
    Condition,
    OptimizationSolution,
    borel_solution,
    ridge_minimize,
    solution_pool,
    solve_min_difference,
    solve_min_derivative,
    window_grid,
)
from .selector import Criterion, SelectionResult, criterion_scores, select_solution
from .series import (
    TargetAsymptotics,
    TruncatedSeries,
    cauchy_product,
    diff_log,
    mobius_substitute,
    reciprocal,
)
from .transforms import TransformKind, borel_point, transform_coefficients

__all__ = [
    "AmplitudeCurve",
    "BenchmarkProblem",
    "Condition",
    "Criterion",
    "DEFAULT_GRID",
    "IteratedRootApproximant",
    "MarginalAmplitude",
    "OptimizationSolution",
    "ScanGrid",
    "SelectionResult",
    "TableRow",
    "TargetAsymptotics",
    "TransformKind",
    "TruncatedSeries",
    "backend_name",
    "borel_point",
    "borel_solution",
    "cauchy_product",
    "criterion_scores",
    "diff_log",
    "estimate_index",
    "evaluate_root",
    "fit_iterated_root",
    "generate_gaussian_polymer",
    "generate_wilson_loop",
    "get_problem",
    "index_pool",
    "index_ridge",
    "index_series",
    "marginal_amplitude",
    "mobius_substitute",
    "reciprocal",
    "reexpand",
    "registry",
    "ridge_minimize",
    "run_table",
    "select_solution",
    "solution_pool",
    "solve_min_difference",
    "solve_min_derivative",
    "transform_coefficients",
    "window_grid",
]

__version__ = "0.1.0"
