"""Truncated power-series container and algebra."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ZeroLeadingCoefficientError

__all__ = [
    "TruncatedSeries",
    "TargetAsymptotics",
    "cauchy_product",
    "diff_log",
    "reciprocal",
    "mobius_substitute",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients a_0..a_k of a small-variable expansion, index = power."""

    coeffs: Tuple[float, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least one coefficient")
        for c in self.coeffs:
            if not math.isfinite(c):
                raise ValueError("series coefficients must be finite")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncated(self, order):
        c = self.coeffs[: order + 1]
        return TruncatedSeries(c + (0.0,) * (order + 1 - len(c)))

    def scaled(self, factor):
        return TruncatedSeries(tuple(factor * c for c in self.coeffs))


@dataclass(frozen=True)
class TargetAsymptotics:
    """Large-variable power law f(x) ~ B x^beta; B when known exactly."""

    beta: float
    exact_amplitude: Optional[float] = None


def cauchy_product(s, t, order):
    """Product of two truncations, cut at the given order."""
    if order > s.order + t.order:
        raise ValueError("requested order exceeds available information")
    out = [0.0] * (order + 1)
    for n in range(order + 1):
        acc = 0.0
        for m in range(n + 1):
            if m <= s.order and n - m <= t.order:
                acc += s[m] * t[n - m]
        out[n] = acc
    return TruncatedSeries(out)


def diff_log(s):
    """Order-(k-1) truncation of f'(x)/f(x).

    Solves f' = f * L order by order; requires a_0 != 0.
    """
    if s[0] == 0.0:
        raise ZeroLeadingCoefficientError("diff_log needs a_0 != 0")
    if s.order < 1:
        raise ValueError("diff_log needs order >= 1")
    a = s.coeffs
    k = s.order
    c = [0.0] * k
    for n in range(k):
        acc = (n + 1) * a[n + 1]
        for m in range(1, n + 1):
            acc -= a[m] * c[n - m]
        c[n] = acc / a[0]
    return TruncatedSeries(c)


def reciprocal(s, order=None):
    """Truncation of 1 / s(x); requires a_0 != 0.

    Solves s * r = 1 order by order.
    """
    if s[0] == 0.0:
        raise ZeroLeadingCoefficientError("reciprocal needs a_0 != 0")
    if order is None:
        order = s.order
    a = s.coeffs
    r = [1.0 / a[0]]
    for n in range(1, order + 1):
        acc = 0.0
        for m in range(1, min(n, s.order) + 1):
            acc += a[m] * r[n - m]
        r.append(-acc / a[0])
    return TruncatedSeries(r)


def _mul_trunc(a, b, order):
    out = [0.0] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or ai == 0.0:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def mobius_substitute(s, f_c):
    """Series of s(f_c * x / (1 + x)) truncated at s.order.

    Horner-style composition of truncated series; exact for truncations.
    """
    if f_c <= 0.0:
        raise ValueError("f_c must be positive")
    k = s.order
    # w(x) = f_c * x/(1+x) = f_c * (x - x^2 + x^3 - ...)
    w = [0.0] + [f_c * (-1.0) ** (n + 1) for n in range(1, k + 1)]
    out = [s[k]] + [0.0] * k
    for n in range(k - 1, -1, -1):
        out = _mul_trunc(out, w, k)
        out[0] += s[n]
    return TruncatedSeries(out)
