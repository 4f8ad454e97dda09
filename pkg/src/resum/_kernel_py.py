"""Pure-Python implementation of the hot iterated-root kernels.

The compiled extension (resum._kernel) exposes the same four functions;
resum._backend picks whichever is importable.  Keep the two in sync.
"""

import math

import gmpy2

from .errors import (
    ComplexValueError,
    DegenerateOrderError,
    ZeroLeadingCoefficientError,
)

__all__ = [
    "fit_root",
    "root_expand",
    "marginal",
    "eval_root",
    "transform_weights",
    "transform_marginal",
]

BACKEND = "python"

# Working precision for the curve-level operations.  Amplitude curves of
# high-order fits lose ~5 decimal digits to cancellation, so double-only
# arithmetic leaves derivative scans dominated by noise; 150 bits keeps
# the returned doubles correctly rounded with a wide margin.
_PREC = 150


def _is_integer(p):
    return abs(p - round(p)) < 1e-12


def _pow_series(g, p, order):
    """Coefficients of g(x)**p to the given order, g[0] == 1 assumed.

    J.C.P. Miller recurrence: n*f_n = sum_{m=1..n} (m(p+1)-n) g_m f_{n-m}.
    """
    f = [0.0] * (order + 1)
    f[0] = 1.0
    gn = len(g)
    for n in range(1, order + 1):
        acc = 0.0
        top = min(n, gn - 1)
        for m in range(1, top + 1):
            acc += (m * (p + 1.0) - n) * g[m] * f[n - m]
        f[n] = acc / n
    return f


def _checked_pow(base, p):
    if _is_integer(p):
        ip = int(round(p))
        if base == 0.0 and ip < 0:
            raise ComplexValueError("zero base under negative exponent")
        return base ** ip
    if base <= 0.0:
        raise ComplexValueError(
            "non-positive base %g under non-integer exponent %g" % (base, p)
        )
    return base ** p


def fit_root(c, beta):
    """Parameters A_1..A_k of the iterated root matching the normalized
    coefficients c (c[0] == 1) through order k = len(c)-1.

    At step j only A_1..A_{j-1} are set, so the tail of the exponent
    ladder telescopes and the order-j coefficient is that of
    N_j(x)**(beta/j); A_j enters it affinely and is solved from probe
    evaluations at A_j = 0 and A_j = 1.
    """
    k = len(c) - 1
    if k < 1:
        raise ValueError("need series order >= 1")
    if abs(beta) < 1e-14:
        raise DegenerateOrderError("outer exponent beta = 0")
    a1 = c[1] / beta
    A = [a1]
    if k == 1:
        return A
    # q = current inner bracket (1 + A_1 x)^2, later N_j, to full order k
    q = [0.0] * (k + 1)
    q[0] = 1.0
    q[1] = 2.0 * a1
    q[2] = a1 * a1
    for j in range(2, k + 1):
        p = beta / j
        e0 = _pow_series(q, p, j)[j]
        q[j] += 1.0
        e1 = _pow_series(q, p, j)[j]
        q[j] -= 1.0
        slope = e1 - e0
        if abs(slope) < 1e-14:
            raise DegenerateOrderError(
                "affine coefficient of A_%d vanishes" % j
            )
        aj = (c[j] - e0) / slope
        A.append(aj)
        q[j] += aj
        if j < k:
            q = _pow_series(q, (j + 1.0) / j, k)
    return A


def root_expand(A, beta, order):
    """Taylor coefficients of the (normalized) iterated root to `order`."""
    k = len(A)
    if k == 1:
        return _pow_series([1.0, A[0]], beta, order)
    q = [0.0] * (order + 1)
    q[0] = 1.0
    if order >= 1:
        q[1] = 2.0 * A[0]
    if order >= 2:
        q[2] = A[0] * A[0]
        q[2] += A[1]
    for j in range(2, k):
        q = _pow_series(q, (j + 1.0) / j, order)
        if j + 1 <= order:
            q[j + 1] += A[j]
    return _pow_series(q, beta / k, order)


def marginal(A, beta, scale):
    """Large-x amplitude C of the iterated root, scale * x^beta prefactor."""
    k = len(A)
    if k == 1:
        return scale * _checked_pow(A[0], beta)
    p = A[0] * A[0] + A[1]
    for j in range(2, k):
        p = _checked_pow(p, (j + 1.0) / j) + A[j]
    return scale * _checked_pow(p, beta / k)


def eval_root(A, beta, scale, x):
    """Value of the iterated root approximant at x >= 0."""
    k = len(A)
    if k == 1:
        return scale * _checked_pow(1.0 + A[0] * x, beta)
    n = (1.0 + A[0] * x) ** 2 + A[1] * x * x
    for j in range(2, k):
        n = _checked_pow(n, (j + 1.0) / j) + A[j] * x ** (j + 1)
    return scale * _checked_pow(n, beta / k)


def _weight_mp(kind, n, u):
    """Transform weight in extended precision; NaN at gamma poles.

    kind codes: 0 Borel-Leroy, 1 Mittag-Leffler, 2 fractional derivative,
    3 fractional integral.
    """
    if kind == 0:
        return 1 / gmpy2.gamma(n + u + 1)
    if kind == 1:
        return 1 / gmpy2.gamma(n * u + 1)
    if kind == 2:
        return gmpy2.gamma(n - u + 1) / gmpy2.gamma(gmpy2.mpfr(n + 1)) ** 2
    return gmpy2.mpfr(n + 1) ** u / gmpy2.gamma(gmpy2.mpfr(n + 1))


def transform_weights(kind, n_max, u):
    """Transform weights w_0..w_{n_max} at control parameter u."""
    if n_max < 0:
        raise ValueError("order out of supported range")
    with gmpy2.context(precision=_PREC):
        uu = gmpy2.mpfr(u)
        out = []
        for n in range(n_max + 1):
            w = _weight_mp(kind, n, uu)
            # mirror the compiled kernel: exact-integer gamma poles are NaN
            out.append(float(w))
        return out


def transform_marginal(a, beta, kind, u, orders, offset=0):
    """Marginal amplitudes C_K of the transformed series for each K in
    `orders`, sharing one accuracy-through-order fit at the maximal K.

    Computes b_n = a_n * w_{n+offset}(kind, u), normalizes by b_0, fits
    the iterated root, and returns [C_K ...] as floats (NaN propagates
    from undefined points).  Raises ComplexValueError /
    DegenerateOrderError / ZeroLeadingCoefficientError.
    """
    ks = [int(K) for K in orders]
    if not ks:
        return []
    kmax = max(ks)
    if min(ks) < 1:
        raise ValueError("order out of supported range")
    if len(a) < kmax + 1:
        raise ValueError("series too short for requested order")
    with gmpy2.context(precision=_PREC):
        uu = gmpy2.mpfr(u)
        bb = gmpy2.mpfr(beta)
        b = [
            gmpy2.mpfr(a[n]) * _weight_mp(kind, n + offset, uu)
            for n in range(kmax + 1)
        ]
        if b[0] == 0:
            raise ZeroLeadingCoefficientError("transformed series has b_0 = 0")
        c = [x / b[0] for x in b]
        A = fit_root(c, bb)
        return [float(marginal(A[:K], bb, b[0])) for K in ks]
