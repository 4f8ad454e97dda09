"""Registry invariants and table-reproduction plumbing."""

import pytest

from resum.benchmarks import (
    CRITERION_COLUMNS,
    GATED_CELLS,
    KIND_ROWS,
    KNOWN_DEVIATIONS,
    REFERENCE_CELLS,
    TABLES,
    UNREPRODUCIBLE_TABLES,
    generate_gaussian_polymer,
    generate_wilson_loop,
    get_problem,
    problem_for_table,
    registry,
    run_table,
)
from resum.transforms import TransformKind


def test_registry_shape():
    problems = registry()
    assert len(problems) == 17
    ids = [p.id for p in problems]
    assert len(set(ids)) == 17
    assert sorted(p.table for p in problems) == list(range(1, 18))
    for p in problems:
        assert problem_for_table(p.table) is p
        assert get_problem(p.id) is p


def test_coefficient_strings_parse_to_series():
    for p in registry():
        assert len(p.coefficients) == p.series.order + 1
        for text, value in zip(p.coefficients, p.series.coeffs):
            assert float(text) == value


def test_usable_orders():
    for p in registry():
        assert 1 <= p.usable_order <= p.series.order


def test_tables_and_references_consistent():
    assert set(TABLES) == set(range(1, 18))
    assert set(REFERENCE_CELLS) == set(range(1, 18))
    for table, rows in REFERENCE_CELLS.items():
        for kind, cells in rows.items():
            assert kind in KIND_ROWS
            assert set(cells) <= set(CRITERION_COLUMNS)


def test_gates_are_well_formed():
    for (table, kind, crit), (tol, mode) in GATED_CELLS.items():
        assert mode in ("abs", "rel") and tol > 0.0
        assert table not in UNREPRODUCIBLE_TABLES
        assert (table, kind, crit) not in KNOWN_DEVIATIONS
        assert REFERENCE_CELLS[table][kind][crit] is not None
    for table, kind, crit in KNOWN_DEVIATIONS:
        assert REFERENCE_CELLS[table][kind][crit] is not None


def test_generators_respect_order():
    assert generate_gaussian_polymer(4).order == 4
    assert generate_wilson_loop(6).order == 6
    with pytest.raises(ValueError):
        generate_gaussian_polymer(-1)


def test_run_table_deterministic():
    p = problem_for_table(4)
    kinds = (TransformKind.FRACTIONAL_INTEGRAL,)
    rows1 = run_table(p, kinds=kinds)
    rows2 = run_table(p, kinds=kinds)
    assert rows1 == rows2
    assert [r.criterion for r in rows1] == list(CRITERION_COLUMNS)
    for r in rows1:
        assert r.problem_id == p.id
        assert r.status in ("exact-root", "approximate", "undefined")
