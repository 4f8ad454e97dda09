"""Posing rules, amplitude curves, scan windows, and the selectors."""

import pytest

from resum.errors import EmptySolutionSetError
from resum.benchmarks import get_problem
from resum.optimizer import (
    AmplitudeCurve,
    Condition,
    borel_solution,
    kind_window,
    pose,
    ridge_minimize,
    window_grid,
)
from resum.selector import Criterion, select_solution
from resum.series import TruncatedSeries
from resum.transforms import TransformKind

ML = TransformKind.MITTAG_LEFFLER
BL = TransformKind.BOREL_LEROY
FD = TransformKind.FRACTIONAL_DERIVATIVE
FI = TransformKind.FRACTIONAL_INTEGRAL

_S = TruncatedSeries([2.0, -1.0, 0.5, -0.25, 0.125])


def test_pose_direct():
    p = pose(_S, BL, 0.5, scale=3.0)
    assert not p.reciprocal
    assert p.beta_root == 0.5 and p.factor_beta == 0.5 and p.offset == 0
    assert p.prefactor == 6.0
    assert p.working[0] == 1.0
    assert p.working[1] == -0.5


def test_pose_reciprocal_for_steep_decay_fractional():
    p = pose(_S, FI, -1.5)
    assert p.reciprocal
    assert p.beta_root == 1.5 and p.factor_beta == 1.5
    # reciprocal of the normalized series: r_1 = -c_1
    assert abs(p.working[1] - 0.5) < 1e-14
    # the classical kinds stay direct at the same exponent
    assert not pose(_S, BL, -1.5).reciprocal
    assert not pose(_S, ML, -1.5).reciprocal
    # and the fractional kinds stay direct above the threshold
    assert not pose(_S, FI, -0.5).reciprocal


def test_pose_power_shift():
    p = pose(_S, FI, 1.5, power_shift=1)
    assert not p.reciprocal
    assert p.offset == 1
    assert p.beta_root == 0.5 and p.factor_beta == 1.5
    assert p.prefactor == -1.0  # a_1
    assert p.working[0] == 1.0 and p.working[1] == -0.5
    with pytest.raises(ValueError):
        pose(_S, FI, 1.5, power_shift=9)


def test_windows():
    assert kind_window(BL) == (-8.0, 12.0)
    assert kind_window(ML) == (-0.4995, 3.0)
    assert kind_window(FD) == (0.0, 8.0)
    assert kind_window(FI) == (-8.0, 0.0)
    g = window_grid(FI)
    assert (g.lo, g.hi, g.points) == (-8.0, 0.0, 2201)
    g = window_grid(BL, points=11, window=(-8.0, 2.5))
    assert (g.lo, g.hi, g.points) == (-8.0, 2.5, 11)


def test_borel_solution_is_kind_independent():
    p = get_problem("schwinger-energy-padded")
    vals = []
    for kind in TransformKind:
        sol = borel_solution(p.series, kind, p.target.beta, p.usable_order)
        assert sol.condition is Condition.BOREL_POINT
        vals.append(sol.amplitude)
    assert max(vals) - min(vals) <= 1e-12 * abs(vals[0])
    assert abs(vals[0] - 0.65616920955) < 1e-9


def test_curve_pair_consistency():
    p = get_problem("anomalous-dimension")
    s, beta, k = p.series, p.target.beta, p.usable_order
    hi = AmplitudeCurve(s, FI, beta, order=k)
    lo = AmplitudeCurve(s, FI, beta, order=k - 1)
    for u in (-2.5, -1.0, -0.2):
        a, b = hi.pair(u)
        assert abs(a - hi(u)) < 1e-12 * abs(a)
        assert abs(b - lo(u)) < 1e-12 * abs(b)


def test_curve_order_validation():
    with pytest.raises(ValueError):
        AmplitudeCurve(_S, BL, 0.5, order=0)
    with pytest.raises(ValueError):
        AmplitudeCurve(_S, BL, 0.5, order=_S.order + 1)


def test_ridge_validates_lambda():
    with pytest.raises(ValueError):
        ridge_minimize(_S, BL, 0.5, 2, lam=1.5)


def test_select_solution_empty_pool():
    with pytest.raises(EmptySolutionSetError):
        select_solution(_S, BL, 0.5, _S.order, [], Criterion.LASSO1)
