"""Borel-type coefficient transforms, their amplitude-reconstruction
factors, and finite-x resummation for the two classical kinds."""

import enum
from dataclasses import dataclass
from typing import Tuple

from . import _backend
from .errors import (
    DomainError,
    PoleError,
    UnsupportedKindError,
)
from .numerics import gamma, gauss_laguerre_nodes

__all__ = [
    "TransformKind",
    "TransformedSeries",
    "transform_coefficients",
    "borel_point",
    "amplitude_factor",
    "evaluate_resummed",
]


class TransformKind(enum.Enum):
    BOREL_LEROY = "borel-leroy"
    MITTAG_LEFFLER = "mittag-leffler"
    FRACTIONAL_DERIVATIVE = "frac-derivative"
    FRACTIONAL_INTEGRAL = "frac-integral"


@dataclass(frozen=True)
class TransformedSeries:
    b: Tuple[float, ...]
    u: float
    kind: TransformKind

    @property
    def order(self):
        return len(self.b) - 1


def _near_nonpositive_integer(x, tol=1e-10):
    return x <= tol and abs(x - round(x)) < tol


def _weight(kind, n, u):
    """Multiplier applied to a_n; n is the power of x in the source series."""
    if kind is TransformKind.BOREL_LEROY:
        arg = n + u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("gamma pole at index %d" % n, index=n)
        return 1.0 / gamma(arg)
    if kind is TransformKind.MITTAG_LEFFLER:
        arg = n * u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("gamma pole at index %d" % n, index=n)
        return 1.0 / gamma(arg)
    if kind is TransformKind.FRACTIONAL_DERIVATIVE:
        arg = n - u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("gamma pole at index %d" % n, index=n)
        return gamma(arg) / gamma(n + 1.0) ** 2
    if kind is TransformKind.FRACTIONAL_INTEGRAL:
        return (n + 1.0) ** u / gamma(n + 1.0)
    raise UnsupportedKindError(str(kind))


def transform_coefficients(s, kind, u, index_offset=0):
    """Transformed coefficients b_n(u) of the source series.

    index_offset shifts the power index fed to the gamma weights; it is
    used when the stored series is the bracket of x^p * (series), so that
    coefficients keep their natural powers of the physical variable.
    """
    b = tuple(
        s[n] * _weight(kind, n + index_offset, u) for n in range(s.order + 1)
    )
    return TransformedSeries(b=b, u=float(u), kind=kind)


def borel_point(kind):
    """Control-parameter value at which the transform is the plain Borel
    transform."""
    return 1.0 if kind is TransformKind.MITTAG_LEFFLER else 0.0


def amplitude_factor(kind, beta, u):
    """Factor relating the marginal amplitude of the transformed series to
    the large-variable amplitude of the summed function."""
    if kind is TransformKind.BOREL_LEROY:
        arg = beta + u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("amplitude-factor pole")
        return gamma(arg)
    if kind is TransformKind.MITTAG_LEFFLER:
        arg = beta * u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("amplitude-factor pole")
        return gamma(arg)
    if kind is TransformKind.FRACTIONAL_DERIVATIVE:
        arg = beta - u + 1.0
        if _near_nonpositive_integer(arg):
            raise PoleError("amplitude-factor pole")
        return gamma(beta + 1.0) ** 2 / gamma(arg)
    if kind is TransformKind.FRACTIONAL_INTEGRAL:
        if beta <= -1.0:
            raise DomainError(
                "fractional-integral amplitude needs beta > -1"
            )
        return gamma(beta + 1.0) / (beta + 1.0) ** u
    raise UnsupportedKindError(str(kind))


def evaluate_resummed(s, kind, beta, u, x, quad_order=64):
    """Finite-x value of the summed series by Gauss-Laguerre quadrature of
    the inverse transform; Borel-Leroy and Mittag-Leffler only."""
    if kind not in (TransformKind.BOREL_LEROY, TransformKind.MITTAG_LEFFLER):
        raise UnsupportedKindError(
            "finite-x inversion implemented for Borel-Leroy and "
            "Mittag-Leffler only"
        )
    if x < 0.0:
        raise DomainError("x must be non-negative")
    t = transform_coefficients(s, kind, u)
    if s.order == 0:
        # constant series: the gamma-weight normalization is exact
        return s[0]
    scale = t.b[0]
    A = _backend.fit_root([bn / scale for bn in t.b], beta)
    acc = 0.0
    for node, weight in gauss_laguerre_nodes(quad_order):
        if kind is TransformKind.BOREL_LEROY:
            val = _backend.eval_root(A, beta, scale, x * node)
            # fold the t^u Leroy weight into the integrand
            acc += weight * val * node ** u
        else:
            val = _backend.eval_root(A, beta, scale, x * node ** u)
            acc += weight * val
    return acc
