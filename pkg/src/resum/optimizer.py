"""Amplitude-as-a-function-of-u pipeline, multi-root solution of the two
optimization conditions, assembly of physically admissible solution
pools, and the ridge cost-functional minimizer."""

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from . import _backend
from .errors import (
    ComplexValueError,
    DegenerateOrderError,
    DomainError,
    PoleError,
    UndefinedError,
    ZeroLeadingCoefficientError,
)
from .numerics import DEFAULT_GRID, ScanGrid, derivative, minimize_scalar
from .series import reciprocal
from .transforms import TransformKind, amplitude_factor, borel_point

__all__ = [
    "Condition",
    "OptimizationSolution",
    "PosedSeries",
    "pose",
    "AmplitudeCurve",
    "amplitude_at",
    "kind_window",
    "window_grid",
    "solve_min_difference",
    "solve_min_derivative",
    "solution_pool",
    "ridge_minimize",
    "borel_solution",
]


_KIND_CODE = {
    TransformKind.BOREL_LEROY: 0,
    TransformKind.MITTAG_LEFFLER: 1,
    TransformKind.FRACTIONAL_DERIVATIVE: 2,
    TransformKind.FRACTIONAL_INTEGRAL: 3,
}

# Control-parameter search windows per transform kind.  Each covers the
# region where the transform stays numerically meaningful: the
# Mittag-Leffler weights blow up for u <= -1/2, the fractional
# derivative needs u >= 0 and the fractional integral u <= 0 to damp the
# factorial growth.
_KIND_WINDOWS = {
    TransformKind.BOREL_LEROY: (-8.0, 12.0),
    TransformKind.MITTAG_LEFFLER: (-0.4995, 3.0),
    TransformKind.FRACTIONAL_DERIVATIVE: (0.0, 8.0),
    TransformKind.FRACTIONAL_INTEGRAL: (-8.0, 0.0),
}

# An approximate (non-crossing) condition minimum is accepted only when
# the residual is below this fraction of the amplitude there.
_APPROX_RESID = 5e-3

# Spacing of the two interior probes that a non-crossing minimum must
# rise above, as a fraction of the window width; rejects shallow dips at
# the numerical noise floor of the curve.
_DIP_PROBE = 0.02


class Condition(enum.Enum):
    MIN_DIFFERENCE = "min-difference"
    MIN_DERIVATIVE = "min-derivative"
    BOREL_POINT = "borel-point"
    RIDGE_MINIMUM = "ridge-minimum"


@dataclass(frozen=True)
class OptimizationSolution:
    u: float
    amplitude: float
    condition: Condition
    order: int
    status: str = "exact-root"  # or "approximate"
    width: Optional[float] = None


@dataclass(frozen=True)
class PosedSeries:
    """Normalized series actually fed to the transform.

    A steep-decay function (beta <= -1) has no finite large-x amplitude
    under the fractional kinds' reconstruction factor, so those are posed
    on the reciprocal series, whose amplitude grows with exponent -beta,
    and inverted afterwards.
    """

    working: Tuple[float, ...]
    beta_root: float  # exponent used for the iterated-root fit
    factor_beta: float  # exponent fed to the amplitude factor
    offset: int  # power-index shift of the transform weights
    prefactor: float  # a_0 * scale of the original series
    reciprocal: bool


_RECIP_KINDS = (
    TransformKind.FRACTIONAL_DERIVATIVE,
    TransformKind.FRACTIONAL_INTEGRAL,
)


def pose(source, kind, beta, scale=1.0, power_shift=0):
    """Pose the summation problem for one transform kind.

    power_shift p > 0 means the stored series is the bracket of
    x^p * (series): transform weights use the natural power index n + p,
    the root is fitted with exponent beta - p, and the amplitude factor
    is evaluated at the exponent beta of the full function.  Reciprocal
    posing applies only to the plain (p = 0) case.
    """
    p = int(power_shift)
    if p < 0 or p > source.order:
        raise ValueError("invalid power_shift")
    beta = float(beta)
    a0 = source[p]
    if a0 == 0.0:
        raise ZeroLeadingCoefficientError("leading bracket coefficient is zero")
    norm = tuple(source[p + m] / a0 for m in range(source.order - p + 1))
    if p > 0:
        return PosedSeries(norm, beta - p, beta, p, a0 * scale, False)
    if beta <= -1.0 and kind in _RECIP_KINDS:
        r = reciprocal(_SeriesView(norm))
        return PosedSeries(tuple(r.coeffs), -beta, -beta, 0, a0 * scale, True)
    return PosedSeries(norm, beta, beta, 0, a0 * scale, False)


class _SeriesView:
    """Minimal series adapter for tuples of coefficients."""

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        self.order = len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]


class AmplitudeCurve:
    """B_k(u): transform -> iterated-root fit -> marginal amplitude ->
    amplitude factor, as a callable of the control parameter."""

    def __init__(self, source, kind, beta, order=None, power_shift=0, scale=1.0):
        posed = pose(source, kind, beta, scale=scale, power_shift=power_shift)
        avail = len(posed.working) - 1
        k = avail if order is None else int(order)
        if not 1 <= k <= avail:
            raise ValueError("curve order out of range")
        self.kind = kind
        self.beta = float(beta)
        self.order = k
        self.posed = posed
        self._code = _KIND_CODE[kind]
        self._cache = {}

    def _raw(self, u, orders):
        """Physical amplitudes B_K(u) for each K in `orders`."""
        p = self.posed
        cs = _backend.transform_marginal(
            p.working, p.beta_root, self._code, u, orders, p.offset
        )
        f = amplitude_factor(self.kind, p.factor_beta, u)
        out = []
        for c in cs:
            w = c * f
            out.append(p.prefactor / w if p.reciprocal else p.prefactor * w)
        return out

    def _classified(self, u):
        u = float(u)
        hit = self._cache.get(u)
        if hit is None:
            try:
                val = self._raw(u, [self.order])[0]
                if math.isfinite(val):
                    hit = ("ok", val)
                else:
                    hit = ("undefined", "non-finite amplitude")
            except ComplexValueError as exc:
                hit = ("complex", str(exc))
            except (
                PoleError,
                DomainError,
                DegenerateOrderError,
                ZeroLeadingCoefficientError,
                OverflowError,
                ZeroDivisionError,
            ) as exc:
                hit = ("undefined", str(exc))
            self._cache[u] = hit
        return hit

    def __call__(self, u):
        status, payload = self._classified(u)
        if status == "ok":
            return payload
        raise UndefinedError(payload)

    def is_complex_at(self, u):
        """True when the fit is complex-valued at u (a branch boundary,
        as opposed to an isolated pole or overflow)."""
        return self._classified(u)[0] == "complex"

    def pair(self, u):
        """(B_k(u), B_{k-1}(u)) sharing a single fit; raises
        UndefinedError on gaps."""
        if self.order < 2:
            raise ValueError("pair needs order >= 2")
        try:
            hi, lo = self._raw(float(u), [self.order, self.order - 1])
        except (
            ComplexValueError,
            PoleError,
            DomainError,
            DegenerateOrderError,
            ZeroLeadingCoefficientError,
            OverflowError,
            ZeroDivisionError,
        ) as exc:
            raise UndefinedError(str(exc)) from exc
        if not (math.isfinite(hi) and math.isfinite(lo)):
            raise UndefinedError("non-finite amplitude")
        return hi, lo

    def working_amplitude(self, u):
        """Amplitude of the posed (working) problem: the quantity whose
        flatness in u the ridge functional penalizes."""
        p = self.posed
        try:
            c = _backend.transform_marginal(
                p.working, p.beta_root, self._code, float(u), [self.order], p.offset
            )[0]
            w = c * amplitude_factor(self.kind, p.factor_beta, u)
        except (
            ComplexValueError,
            PoleError,
            DomainError,
            DegenerateOrderError,
            ZeroLeadingCoefficientError,
            OverflowError,
            ZeroDivisionError,
        ) as exc:
            raise UndefinedError(str(exc)) from exc
        if not math.isfinite(w):
            raise UndefinedError("non-finite working amplitude")
        return w if p.reciprocal else p.prefactor * w


def amplitude_at(curve, u):
    """B_k(u); raises UndefinedError at poles / complex-valued fits."""
    return curve(u)


def kind_window(kind):
    """Default control-parameter window (lo, hi) for a transform kind."""
    return _KIND_WINDOWS[kind]


def window_grid(kind, points=2201, window=None):
    """Default scan grid for a transform kind, optionally overriding the
    window bounds."""
    lo, hi = window if window is not None else _KIND_WINDOWS[kind]
    return ScanGrid(float(lo), float(hi), points)


def _safe(g, u):
    try:
        v = g(u)
    except (UndefinedError, OverflowError, ZeroDivisionError):
        return None
    return v if math.isfinite(v) else None


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _scan_condition(g, grid):
    """Exact roots and approximate (non-crossing) |g| minima on the grid.

    Returns [(u, exact, i)] with i the grid index of the originating
    cell.  Exact roots are bisected and rejected when the midpoint
    residual exceeds both bracket-end values (pole crossings masquerading
    as sign changes).  Non-crossing interior minima must stay the lowest
    point of a neighbourhood a few percent of the window wide, then are
    refined by golden-section search.
    """
    xs = [float(x) for x in grid.values()]
    lo, hi = xs[0], xs[-1]
    wide = _DIP_PROBE * (hi - lo)
    ys = [_safe(g, x) for x in xs]
    out = []
    n = len(xs)
    for i in range(n - 1):
        y0, y1 = ys[i], ys[i + 1]
        if y0 is None or y1 is None:
            continue
        if y0 * y1 < 0.0:
            a, b, fa = xs[i], xs[i + 1], y0
            for _ in range(60):
                m = 0.5 * (a + b)
                fm = _safe(g, m)
                if fm is None:
                    break
                if fa * fm <= 0.0:
                    b = m
                else:
                    a, fa = m, fm
            mid = 0.5 * (a + b)
            gm = _safe(g, mid)
            if gm is None:
                continue
            if not (abs(gm) < abs(y0) and abs(gm) < abs(y1)):
                continue
            out.append((mid, True, i))
    for i in range(1, n - 1):
        if ys[i - 1] is None or ys[i] is None or ys[i + 1] is None:
            continue
        if ys[i - 1] * ys[i] < 0.0 or ys[i] * ys[i + 1] < 0.0:
            continue
        if not (abs(ys[i]) < abs(ys[i - 1]) and abs(ys[i]) < abs(ys[i + 1])):
            continue
        wl = _safe(g, max(xs[i] - wide, lo))
        wr = _safe(g, min(xs[i] + wide, hi))
        if wl is None or wr is None:
            continue
        if not (abs(wl) > 1.01 * abs(ys[i]) and abs(wr) > 1.01 * abs(ys[i])):
            continue
        a, b = xs[i - 1], xs[i + 1]
        c = b - _INVPHI * (b - a)
        d = a + _INVPHI * (b - a)
        fc, fd = _safe(g, c), _safe(g, d)
        if fc is None or fd is None:
            continue
        fc, fd = abs(fc), abs(fd)
        ok = True
        for _ in range(60):
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - _INVPHI * (b - a)
                v = _safe(g, c)
                if v is None:
                    ok = False
                    break
                fc = abs(v)
            else:
                a, c, fc = c, d, fd
                d = a + _INVPHI * (b - a)
                v = _safe(g, d)
                if v is None:
                    ok = False
                    break
                fd = abs(v)
        if ok:
            out.append((0.5 * (a + b), False, i))
    return out


def _approx_width(g, amp, grid, i, g_min):
    """Half-range of the amplitude over the contiguous grid cells around
    index i where |g| stays within twice the minimal residual."""
    xs = [float(x) for x in grid.values()]
    thresh = 2.0 * abs(g_min)
    b_vals = []
    for step in (-1, 1):
        j = i if step == 1 else i - 1
        while 0 <= j < len(xs):
            y = _safe(g, xs[j])
            if y is None or abs(y) > thresh:
                break
            v = _safe(amp, xs[j])
            if v is not None:
                b_vals.append(v)
            j += step
    if len(b_vals) < 2:
        return 0.0
    return 0.5 * (max(b_vals) - min(b_vals))


def _collect(g, amp, grid, condition, order):
    sols = []
    for u, exact, i in _scan_condition(g, grid):
        b = _safe(amp, u)
        if b is None:
            continue
        if exact:
            sols.append(
                OptimizationSolution(
                    u=u, amplitude=b, condition=condition, order=order
                )
            )
            continue
        res = _safe(g, u)
        if res is None or abs(res) > _APPROX_RESID * abs(b):
            continue
        sols.append(
            OptimizationSolution(
                u=u,
                amplitude=b,
                condition=condition,
                order=order,
                status="approximate",
                width=_approx_width(g, amp, grid, i, res),
            )
        )
    sols.sort(key=lambda s: s.u)
    return sols


def solve_min_difference(s, kind, beta, k, grid=DEFAULT_GRID, power_shift=0,
                         scale=1.0):
    """Solutions of the minimal-difference condition
    B_{k+1}(u) = B_k(u), reported with the higher-order amplitude
    B_{k+1}(u_j).  Exact sign-change roots come first-class; non-crossing
    near-tangencies with a residual below 0.5% of the amplitude are
    reported with status 'approximate' and an uncertainty width."""
    hi = AmplitudeCurve(s, kind, beta, order=k + 1, power_shift=power_shift,
                        scale=scale)

    def diff(u):
        a, b = hi.pair(u)
        return a - b

    return _collect(diff, hi, grid, Condition.MIN_DIFFERENCE, k + 1)


def solve_min_derivative(s, kind, beta, k, grid=DEFAULT_GRID, power_shift=0,
                         scale=1.0):
    """Solutions of the minimal-sensitivity condition dB_k/du = 0, each
    with B_k(u_j); same approximate near-tangency handling as the
    minimal-difference condition."""
    curve = AmplitudeCurve(s, kind, beta, order=k, power_shift=power_shift,
                           scale=scale)
    h = 1e-5 * grid.width

    def deriv(u):
        return derivative(curve, u, h)

    return _collect(deriv, curve, grid, Condition.MIN_DERIVATIVE, k)


def _root_reference(s, beta, scale):
    """Amplitude of the plain (untransformed) iterated root; used as the
    physical-magnitude reference for pool filtering."""
    try:
        a0 = s[0]
        if a0 == 0.0:
            return None
        A = _backend.fit_root([c / a0 for c in s.coeffs], float(beta))
        v = a0 * scale * _backend.marginal(A, float(beta), 1.0)
    except Exception:
        return None
    return v if math.isfinite(v) and v > 0.0 else None


def _connected(curve, u, u0, lo, hi, steps=80):
    """True when the straight path from u to the (clamped) Borel point
    never crosses a complex-valued region of the amplitude curve;
    isolated poles and overflows do not break the branch."""
    target = min(max(u0, lo), hi)
    for i in range(steps + 1):
        x = u + (target - u) * i / steps
        if curve.is_complex_at(x):
            return False
    return True


def solution_pool(s, kind, beta, k, grid=None, scale=1.0):
    """Physically admissible optimization solutions of both conditions.

    Runs the minimal-difference condition between orders k and k-1 and
    the minimal-sensitivity condition at order k over the kind's scan
    window, then drops candidates that are unphysical: non-positive
    amplitudes, amplitudes outside (0.01, 2) times the untransformed
    root amplitude, and roots not real-branch-connected to the Borel
    point.  For the Mittag-Leffler kind, derivative roots at the
    identity transform (|u| < 1e-3) or beyond the Borel point (u > 1)
    are excluded, and when solutions with u > 0 exist only those are
    kept."""
    if grid is None:
        grid = window_grid(kind)
    diff = solve_min_difference(s, kind, beta, k - 1, grid=grid, scale=scale)
    derv = solve_min_derivative(s, kind, beta, k, grid=grid, scale=scale)
    curve = AmplitudeCurve(s, kind, beta, order=k, scale=scale)
    b_ref = _root_reference(s, beta, scale)
    u0 = borel_point(kind)
    ml = kind is TransformKind.MITTAG_LEFFLER
    out = []
    for sol in diff + derv:
        if ml and abs(sol.u) < 1e-3:
            continue  # indistinguishable from the identity transform
        if ml and sol.condition is Condition.MIN_DERIVATIVE and sol.u > 1.0:
            continue  # beyond the Borel point
        b = sol.amplitude
        if not (math.isfinite(b) and b > 0.0):
            continue
        if b_ref is not None and not (0.01 * b_ref < b < 2.0 * b_ref):
            continue
        if not _connected(curve, sol.u, u0, grid.lo, grid.hi):
            continue
        out.append(sol)
    if ml:
        pos = [sol for sol in out if sol.u > 0.0]
        if pos:
            out = pos
    out.sort(key=lambda sol: (sol.condition is Condition.MIN_DERIVATIVE, sol.u))
    return out


def ridge_minimize(s, kind, beta, k, grid=DEFAULT_GRID, lam=0.5,
                   power_shift=0, scale=1.0):
    """Minimum of the ridge cost functional

        F(u) = lam |W_{k+1} - W_k|^2 + (1 - lam) |dW_k/du|^2
               + (u - u0)^2 / 2,

    where W is the working amplitude (the posed problem's own amplitude)
    and u0 the Borel point; reports B_{k+1}(u_opt)."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lambda must be in [0, 1]")
    hi = AmplitudeCurve(s, kind, beta, order=k + 1, power_shift=power_shift,
                        scale=scale)
    lo = AmplitudeCurve(s, kind, beta, order=k, power_shift=power_shift,
                        scale=scale)
    u0 = borel_point(kind)
    h = 1e-5 * grid.width

    def cost(u):
        wl = lo.working_amplitude(u)
        wh = hi.working_amplitude(u)
        if not (wl > 0.0 and wh > 0.0):
            raise UndefinedError("non-positive working amplitude")
        d = derivative(lo.working_amplitude, u, h)
        val = (
            lam * (wh - wl) * (wh - wl)
            + (1.0 - lam) * d * d
            + 0.5 * (u - u0) * (u - u0)
        )
        if not math.isfinite(val):
            raise UndefinedError("non-finite cost")
        return val

    scan = ScanGrid(grid.lo, grid.hi, 1101)
    u_opt = minimize_scalar(cost, scan, tol=1e-8)
    return OptimizationSolution(
        u=u_opt,
        amplitude=hi(u_opt),
        condition=Condition.RIDGE_MINIMUM,
        order=k + 1,
    )


def borel_solution(s, kind, beta, k, power_shift=0, scale=1.0):
    """Amplitude of the plain (unoptimized) Borel summation, u = u0."""
    curve = AmplitudeCurve(s, kind, beta, order=k, power_shift=power_shift,
                           scale=scale)
    u0 = borel_point(kind)
    return OptimizationSolution(
        u=u0,
        amplitude=curve(u0),
        condition=Condition.BOREL_POINT,
        order=k,
    )
