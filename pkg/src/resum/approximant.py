"""Self-similar iterated root approximants.

The nested form is (((1 + A_1 x)^2 + A_2 x^2)^{3/2} + ... + A_k x^k)^{beta/k},
degenerating to (1 + A_1 x)^beta for k = 1.  Parameters are fixed by
matching the Taylor expansion of the approximant to the input
coefficients order by order (accuracy through order).
"""

from dataclasses import dataclass
from typing import Tuple

from . import _backend
from .errors import ZeroLeadingCoefficientError

__all__ = [
    "IteratedRootApproximant",
    "MarginalAmplitude",
    "fit_iterated_root",
    "evaluate_root",
    "marginal_amplitude",
]


@dataclass(frozen=True)
class IteratedRootApproximant:
    A: Tuple[float, ...]
    beta: float
    k: int
    scale: float


@dataclass(frozen=True)
class MarginalAmplitude:
    value: float


def fit_iterated_root(t, beta):
    """Fit an order-k iterated root to a transformed series.

    Normalizes by b_0 and determines A_1..A_k sequentially; at step j the
    order-j Taylor coefficient is affine in A_j, so A_j follows from two
    probe evaluations (exact, no iteration).  Taylor coefficients come
    from truncated-series composition of the power map, never from
    numerical differentiation.
    """
    b = t.b
    if b[0] == 0.0:
        raise ZeroLeadingCoefficientError("transformed series has b_0 = 0")
    if t.order < 1:
        raise ValueError("need order >= 1 to fit a root")
    scale = b[0]
    c = [bn / scale for bn in b]
    A = _backend.fit_root(c, beta)
    return IteratedRootApproximant(
        A=tuple(A), beta=float(beta), k=t.order, scale=scale
    )


def evaluate_root(r, x):
    """Value of the approximant at x >= 0.

    Raises ComplexValueError when an intermediate base is non-positive
    under a non-integer exponent.
    """
    if x < 0.0:
        raise ValueError("x must be non-negative")
    return _backend.eval_root(list(r.A), r.beta, r.scale, x)


def marginal_amplitude(r):
    """Leading large-x coefficient C_k: evaluate_root(r, x) ~ C_k x^beta."""
    return MarginalAmplitude(
        value=_backend.marginal(list(r.A), r.beta, r.scale)
    )


def reexpand(r, order):
    """Taylor coefficients of the fitted approximant (diagnostic; the fit
    must reproduce its inputs through order k)."""
    coeffs = _backend.root_expand(list(r.A), r.beta, order)
    return [r.scale * c for c in coeffs]
