"""Compiled/pure-Python kernel parity and kernel-level error paths."""

import math

import pytest

from resum import _backend, _kernel_py
from resum.benchmarks import get_problem
from resum.errors import (
    ComplexValueError,
    DegenerateOrderError,
    ZeroLeadingCoefficientError,
)

_kernel = pytest.importorskip(
    "resum._kernel", reason="compiled kernel not built")

_BOTH = (_kernel, _kernel_py)


def test_backend_identifiers():
    assert _kernel.BACKEND == "compiled"
    assert _kernel_py.BACKEND == "python"
    assert _backend.backend_name() in ("compiled", "python")


@pytest.mark.parametrize("code,u", [(0, 0.7), (0, -0.3), (1, 0.4), (1, 1.6),
                                    (2, 1.3), (3, -2.6)])
def test_weights_parity(code, u):
    wc = _kernel.transform_weights(code, 8, u)
    wp = _kernel_py.transform_weights(code, 8, u)
    for a, b in zip(wc, wp):
        assert abs(a - b) <= 1e-13 * max(1.0, abs(b))


def test_weights_unusable_at_poles():
    # at u = -2 the Borel-Leroy weights hit gamma poles for n = 0, 1;
    # both backends must mark those indices unusable (nan, inf, or an
    # exact zero -- the scan layer treats all three as undefined points)
    for mod in _BOTH:
        w = mod.transform_weights(0, 3, -2.0)
        for n in (0, 1):
            assert not (math.isfinite(w[n]) and w[n] != 0.0)
        assert w[2] == 1.0 and w[3] == 1.0


def test_transform_marginal_parity():
    p = get_problem("anomalous-dimension")
    a = list(p.series.coeffs)
    beta = p.target.beta
    k = p.usable_order
    for code, u in ((0, 0.66), (1, 0.32), (2, 0.31), (3, -1.56)):
        cc = _kernel.transform_marginal(a, beta, code, u, [k - 1, k])
        cp = _kernel_py.transform_marginal(a, beta, code, u, [k - 1, k])
        for x, y in zip(cc, cp):
            assert abs(x - y) <= 1e-11 * max(1.0, abs(y))


def test_fit_expand_roundtrip_both_backends():
    c = [1.0, -0.5, 0.3, -0.2, 0.15, -0.11, 0.09]
    for mod in _BOTH:
        A = mod.fit_root(c, 0.37)
        back = mod.root_expand(A, 0.37, len(c) - 1)
        for x, y in zip(c, back):
            assert abs(x - y) < 1e-12


def test_marginal_matches_large_x():
    c = [1.0, 0.5, 0.3, 0.2]
    for mod in _BOTH:
        A = mod.fit_root(c, 0.5)
        cm = mod.marginal(A, 0.5, 2.0)
        x = 1e10
        est = mod.eval_root(A, 0.5, 2.0, x) / x ** 0.5
        assert abs(est - cm) <= 1e-5 * abs(cm)


def test_eval_root_at_zero_is_scale():
    for mod in _BOTH:
        A = mod.fit_root([1.0, 0.4, 0.1], 0.75)
        assert abs(mod.eval_root(A, 0.75, 3.0, 0.0) - 3.0) < 1e-12


def test_error_paths():
    for mod in _BOTH:
        with pytest.raises(DegenerateOrderError):
            mod.fit_root([1.0, 0.5, 0.2], 0.0)  # beta = 0
        with pytest.raises(ValueError):
            mod.fit_root([1.0], 0.5)  # order < 1
        with pytest.raises(ComplexValueError):
            # (1 + A1)^2 + A2 < 0 under a fractional outer exponent
            mod.marginal([1.0, -5.0], 0.5, 1.0)
        with pytest.raises(ZeroLeadingCoefficientError):
            mod.transform_marginal([0.0, 1.0, 1.0], 0.5, 0, 0.0, [2])
        with pytest.raises(ValueError):
            mod.transform_marginal([1.0, 1.0], 0.5, 0, 0.0, [5])
        with pytest.raises(ValueError):
            mod.transform_weights(0, -1, 0.0)


def test_transform_marginal_shares_one_fit():
    # the multi-order result equals single-order calls
    p = get_problem("trap-3d")
    a = list(p.series.coeffs)
    beta = p.target.beta
    for mod in _BOTH:
        multi = mod.transform_marginal(a, beta, 3, -0.5, [2, 3, 4])
        for i, K in enumerate((2, 3, 4)):
            single = mod.transform_marginal(a, beta, 3, -0.5, [K])[0]
            assert abs(multi[i] - single) <= 1e-12 * max(1.0, abs(single))
