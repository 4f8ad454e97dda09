"""Scalar special functions and 1D root-finding / minimization primitives.

Everything here is a pure function of its inputs and safe to call from
multiple threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NoDefinedPointError,
    PoleError,
    UndefinedError,
)

__all__ = [
    "Bracket",
    "ScanGrid",
    "DEFAULT_GRID",
    "gamma",
    "find_roots",
    "minimize_scalar",
    "derivative",
    "gauss_laguerre_nodes",
]


@dataclass(frozen=True)
class Bracket:
    """Sign-change interval [lo, hi] with the function values at the ends."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not (self.f_lo < 0.0 < self.f_hi or self.f_hi < 0.0 < self.f_lo):
            raise ValueError("bracket endpoints must have opposite signs")


@dataclass(frozen=True)
class ScanGrid:
    """Uniform search grid for a control parameter."""

    lo: float
    hi: float
    points: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("grid requires lo < hi")
        if self.points < 2:
            raise ValueError("grid requires at least 2 points")

    def values(self):
        return np.linspace(self.lo, self.hi, self.points)

    @property
    def width(self):
        return self.hi - self.lo


# Covers every control parameter encountered in the bundled benchmark
# problems (all optima lie in (-7.1, 0)) with a comfortable margin.
DEFAULT_GRID = ScanGrid(-8.0, 3.0, 2201)


# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(x):
    """Real gamma function via a Lanczos rational approximation.

    Uses the reflection formula for x < 0.5.  Raises PoleError within
    1e-12 of a non-positive integer and OverflowError when the result is
    not representable.
    """
    if x <= 0.0 and abs(x - round(x)) < 1e-12:
        raise PoleError("gamma pole at non-positive integer x=%g" % x)
    if x < 0.5:
        # reflection: gamma(x) = pi / (sin(pi x) * gamma(1 - x))
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    try:
        val = math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc
    except OverflowError:
        raise OverflowError("gamma(%g) exceeds representable range" % x)
    if math.isinf(val):
        raise OverflowError("gamma(%g) exceeds representable range" % x)
    return val


def _eval_grid(f, xs):
    """Evaluate f on the grid, mapping UndefinedError / non-finite values
    to None."""
    out = []
    for x in xs:
        try:
            y = f(x)
        except (UndefinedError, PoleError, OverflowError, ZeroDivisionError):
            out.append(None)
            continue
        if y is None or not math.isfinite(y):
            out.append(None)
        else:
            out.append(float(y))
    return out


def _bisect(f, lo, hi, f_lo, f_hi, tol):
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        try:
            f_mid = f(mid)
        except (UndefinedError, PoleError, OverflowError, ZeroDivisionError):
            # Undefined interior point: shrink from the side with the
            # larger residual; a pole inside the bracket cannot be a root.
            if abs(f_lo) > abs(f_hi):
                lo = mid
            else:
                hi = mid
            continue
        if not math.isfinite(f_mid):
            break
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def find_roots(f, grid, tol=1e-10):
    """All roots of f found by a sign-change scan over the grid, refined
    by bisection.  Undefined points split the scan; returns roots in
    ascending order, deduplicated at 1e-6."""
    xs = grid.values()
    ys = _eval_grid(f, xs)
    roots = []
    for i in range(len(xs) - 1):
        y0, y1 = ys[i], ys[i + 1]
        if y0 is None or y1 is None:
            continue
        if y0 == 0.0:
            roots.append(float(xs[i]))
            continue
        if (y0 < 0.0) != (y1 < 0.0):
            roots.append(_bisect(f, float(xs[i]), float(xs[i + 1]), y0, y1, tol))
    if ys[-1] == 0.0:
        roots.append(float(xs[-1]))
    roots.sort()
    dedup = []
    for r in roots:
        if not dedup or r - dedup[-1] > 1e-6:
            dedup.append(r)
    return dedup


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _safe_value(f, x):
    try:
        y = f(x)
    except (UndefinedError, PoleError, OverflowError, ZeroDivisionError):
        return math.inf
    if y is None or not math.isfinite(y):
        return math.inf
    return float(y)


def minimize_scalar(f, grid, tol=1e-8):
    """Location of the global grid minimum of f, refined by golden-section
    search within the best grid cell."""
    xs = grid.values()
    ys = _eval_grid(f, xs)
    best = None
    for i, y in enumerate(ys):
        if y is not None and (best is None or y < ys[best]):
            best = i
    if best is None:
        raise NoDefinedPointError("function undefined on the whole grid")
    lo = float(xs[max(best - 1, 0)])
    hi = float(xs[min(best + 1, len(xs) - 1)])
    if hi - lo <= tol:
        return float(xs[best])
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = _safe_value(f, c), _safe_value(f, d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = _safe_value(f, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = _safe_value(f, d)
    return 0.5 * (a + b)


def derivative(f, u, h):
    """Central difference with one Richardson extrapolation step."""
    d_h = (f(u + h) - f(u - h)) / (2.0 * h)
    d_h2 = (f(u + 0.5 * h) - f(u - 0.5 * h)) / h
    return (4.0 * d_h2 - d_h) / 3.0


def gauss_laguerre_nodes(order):
    """Nodes and weights for the weight e^{-t} on [0, inf)."""
    if not 1 <= order <= 128:
        raise ValueError("quadrature order must be in [1, 128]")
    nodes, weights = np.polynomial.laguerre.laggauss(order)
    return list(zip(nodes.tolist(), weights.tolist()))
