"""Shared fixtures: session-level caching of the expensive scans.

Solution pools and ridge minima are pure functions of (problem, kind);
computing them all costs over a minute, so they are cached per process
and shared between the acceptance tests, the property suites, and the
table reproductions (benchmarks.run_table goes through the cached
helpers as well)."""

import functools

import pytest

from resum import benchmarks

_orig_pool = benchmarks.problem_pool
_orig_ridge = benchmarks.problem_ridge


@functools.lru_cache(maxsize=None)
def _cached_pool(problem_id, kind):
    return tuple(_orig_pool(benchmarks.get_problem(problem_id), kind))


@functools.lru_cache(maxsize=None)
def _cached_ridge(problem_id, kind):
    return _orig_ridge(benchmarks.get_problem(problem_id), kind)


def _pool(problem, kind, grid=None):
    if grid is not None:
        return _orig_pool(problem, kind, grid)
    return list(_cached_pool(problem.id, kind))


def _ridge(problem, kind, grid=None):
    if grid is not None:
        return _orig_ridge(problem, kind, grid)
    return _cached_ridge(problem.id, kind)


benchmarks.problem_pool = _pool
benchmarks.problem_ridge = _ridge


@functools.lru_cache(maxsize=None)
def table_rows(table):
    problem = benchmarks.problem_for_table(table)
    kinds = [k for k in benchmarks.KIND_ROWS
             if k in benchmarks.REFERENCE_CELLS[table]]
    return tuple(benchmarks.run_table(problem, kinds=kinds))


@pytest.fixture(scope="session")
def pool():
    """pool(problem_id, kind) -> cached tuple of OptimizationSolution."""
    return _cached_pool


@pytest.fixture(scope="session")
def ridge():
    """ridge(problem_id, kind) -> cached ridge OptimizationSolution."""
    return _cached_ridge


@pytest.fixture(scope="session")
def rows_for():
    """rows_for(table) -> cached tuple of TableRow."""
    return table_rows


def cell_map(table):
    """{(kind, criterion): TableRow} for one reproduced table."""
    return {(r.kind, r.criterion): r for r in table_rows(table)}
