# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot iterated-root kernels.

Matches the API of resum._kernel_py; all inner arithmetic runs in
quadruple precision (__float128 via libquadmath).  High-order fits lose
many digits to cancellation, so double or extended-double arithmetic
leaves the amplitude curves too noisy for difference/derivative scans;
quad precision keeps the returned doubles correctly rounded with a wide
margin at every supported order.
"""

from .errors import ComplexValueError, DegenerateOrderError, ZeroLeadingCoefficientError

cdef extern from "<quadmath.h>" nogil:
    ctypedef long double qfloat "__float128"
    qfloat tgammal "tgammaq"(qfloat)
    qfloat powl "powq"(qfloat, qfloat)
    qfloat fabsl "fabsq"(qfloat)
    qfloat roundl "roundq"(qfloat)
    qfloat nanl "nanq"(const char*)

BACKEND = "compiled"

DEF MAXN = 40

# status codes for nested evaluations
DEF OK = 0
DEF DEGENERATE = 1
DEF COMPLEX = 2


cdef inline bint _is_integer(qfloat p) nogil:
    return fabsl(p - roundl(p)) < 1e-12


cdef qfloat _checked_pow(qfloat base, qfloat p, int* status) nogil:
    cdef long long ip
    if _is_integer(p):
        ip = <long long> roundl(p)
        if base == 0.0 and ip < 0:
            status[0] = COMPLEX
            return 0.0
        return powl(base, <qfloat> ip)
    if base <= 0.0:
        status[0] = COMPLEX
        return 0.0
    return powl(base, p)


cdef void _pow_series(const qfloat* g, int glen, qfloat p, int order,
                      qfloat* f) nogil:
    """f = g**p to `order`, g[0] == 1 assumed (J.C.P. Miller recurrence)."""
    cdef int n, m, top
    cdef qfloat acc
    f[0] = 1.0
    for n in range(1, order + 1):
        acc = 0.0
        top = n if n < glen - 1 else glen - 1
        for m in range(1, top + 1):
            acc += (m * (p + 1.0) - n) * g[m] * f[n - m]
        f[n] = acc / n


cdef int _fit_root(const qfloat* c, int k, qfloat beta,
                   qfloat* A) nogil:
    """A_1..A_k of the iterated root matching c (c[0] == 1) through order k."""
    cdef qfloat q[MAXN + 1]
    cdef qfloat tmp[MAXN + 1]
    cdef qfloat probe[MAXN + 1]
    cdef qfloat e0, e1, slope, p
    cdef int j, i
    if fabsl(beta) < 1e-14:
        return DEGENERATE
    A[0] = c[1] / beta
    if k == 1:
        return OK
    for i in range(k + 1):
        q[i] = 0.0
    q[0] = 1.0
    q[1] = 2.0 * A[0]
    q[2] = A[0] * A[0]
    for j in range(2, k + 1):
        p = beta / j
        _pow_series(q, j + 1, p, j, probe)
        e0 = probe[j]
        q[j] += 1.0
        _pow_series(q, j + 1, p, j, probe)
        e1 = probe[j]
        q[j] -= 1.0
        slope = e1 - e0
        if fabsl(slope) < 1e-14:
            return DEGENERATE
        A[j - 1] = (c[j] - e0) / slope
        q[j] += A[j - 1]
        if j < k:
            _pow_series(q, k + 1, (j + 1.0) / j, k, tmp)
            for i in range(k + 1):
                q[i] = tmp[i]
    return OK


cdef qfloat _marginal(const qfloat* A, int k, qfloat beta,
                           qfloat scale, int* status) nogil:
    cdef qfloat p
    cdef int j
    if k == 1:
        return scale * _checked_pow(A[0], beta, status)
    p = A[0] * A[0] + A[1]
    for j in range(2, k):
        p = _checked_pow(p, (j + 1.0) / j, status) + A[j]
    return scale * _checked_pow(p, beta / k, status)


cdef void _root_expand(const qfloat* A, int k, qfloat beta, int order,
                       qfloat* out) nogil:
    cdef qfloat q[MAXN + 1]
    cdef qfloat tmp[MAXN + 1]
    cdef int i, j
    cdef qfloat g1[2]
    if k == 1:
        g1[0] = 1.0
        g1[1] = A[0]
        _pow_series(g1, 2, beta, order, out)
        return
    for i in range(order + 1):
        q[i] = 0.0
    q[0] = 1.0
    if order >= 1:
        q[1] = 2.0 * A[0]
    if order >= 2:
        q[2] = A[0] * A[0] + A[1]
    for j in range(2, k):
        _pow_series(q, order + 1, (j + 1.0) / j, order, tmp)
        for i in range(order + 1):
            q[i] = tmp[i]
        if j + 1 <= order:
            q[j + 1] += A[j]
    _pow_series(q, order + 1, beta / k, order, out)


cdef qfloat _eval_root(const qfloat* A, int k, qfloat beta,
                            qfloat scale, qfloat x, int* status) nogil:
    cdef qfloat n
    cdef int j
    if k == 1:
        return scale * _checked_pow(1.0 + A[0] * x, beta, status)
    n = (1.0 + A[0] * x) * (1.0 + A[0] * x) + A[1] * x * x
    for j in range(2, k):
        n = _checked_pow(n, (j + 1.0) / j, status) + A[j] * powl(x, j + 1)
    return scale * _checked_pow(n, beta / k, status)


cdef qfloat _weight(int kind, int n, qfloat u) nogil:
    """Coefficient multiplier of the four Borel-type transforms.

    kind: 0 Borel-Leroy, 1 Mittag-Leffler, 2 fractional derivative,
    3 fractional integral.  Gamma poles yield NaN (undefined point).
    """
    cdef qfloat arg
    if kind == 0:
        arg = n + u + 1.0
        if arg < 0.5 and fabsl(arg - roundl(arg)) < 1e-12:
            return nanl("")
        return 1.0 / tgammal(arg)
    if kind == 1:
        arg = n * u + 1.0
        if arg < 0.5 and fabsl(arg - roundl(arg)) < 1e-12:
            return nanl("")
        return 1.0 / tgammal(arg)
    if kind == 2:
        arg = n - u + 1.0
        if arg < 0.5 and fabsl(arg - roundl(arg)) < 1e-12:
            return nanl("")
        return tgammal(arg) / (tgammal(n + 1.0) * tgammal(n + 1.0))
    return powl(n + 1.0, u) / tgammal(n + 1.0)


def transform_weights(int kind, int n_max, double u):
    """Transform weights w_0..w_{n_max} at control parameter u."""
    cdef int n
    if n_max < 0 or n_max > MAXN:
        raise ValueError("order out of supported range")
    return [float(_weight(kind, n, <qfloat> u)) for n in range(n_max + 1)]


def transform_marginal(a, double beta, int kind, double u, orders, int offset=0):
    """Marginal amplitudes C_K of the transformed series for each K in
    `orders`, sharing one accuracy-through-order fit at the maximal K.

    Computes b_n = a_n * w_{n+offset}(kind, u), normalizes by b_0, fits
    the iterated root, and returns [C_K ...] as floats (NaN propagates
    from undefined points).  Raises ComplexValueError /
    DegenerateOrderError / ZeroLeadingCoefficientError.
    """
    cdef qfloat b[MAXN + 1]
    cdef qfloat c[MAXN + 1]
    cdef qfloat A[MAXN + 1]
    cdef int kmax = 0
    cdef int n, K, st
    cdef qfloat lb = beta, lu = u, val
    ks = [int(K) for K in orders]
    if not ks:
        return []
    for K in ks:
        if K < 1 or K > MAXN:
            raise ValueError("order out of supported range")
        if K > kmax:
            kmax = K
    if len(a) < kmax + 1:
        raise ValueError("series too short for requested order")
    for n in range(kmax + 1):
        b[n] = (<qfloat> (<double> a[n])) * _weight(kind, n + offset, lu)
    if b[0] == 0.0:
        raise ZeroLeadingCoefficientError("transformed series has b_0 = 0")
    for n in range(kmax + 1):
        c[n] = b[n] / b[0]
    st = _fit_root(c, kmax, lb, A)
    if st == DEGENERATE:
        raise DegenerateOrderError("iterated-root fit degenerate")
    out = []
    for K in ks:
        st = OK
        val = _marginal(A, K, lb, b[0], &st)
        if st == COMPLEX:
            raise ComplexValueError("complex-valued marginal amplitude")
        out.append(float(val))
    return out


def fit_root(c, double beta):
    """Parameters A_1..A_k of the iterated root matching the normalized
    coefficients c (c[0] == 1) through order k = len(c)-1."""
    cdef qfloat cc[MAXN + 1]
    cdef qfloat A[MAXN + 1]
    cdef int k = len(c) - 1
    cdef int i, st
    if k < 1:
        raise ValueError("need series order >= 1")
    if k > MAXN:
        raise ValueError("order out of supported range")
    for i in range(k + 1):
        cc[i] = <qfloat> (<double> c[i])
    st = _fit_root(cc, k, <qfloat> beta, A)
    if st == DEGENERATE:
        if fabsl(<qfloat> beta) < 1e-14:
            raise DegenerateOrderError("outer exponent beta = 0")
        raise DegenerateOrderError("affine coefficient of an A_j vanishes")
    return [float(A[i]) for i in range(k)]


def root_expand(A, double beta, int order):
    """Taylor coefficients of the (normalized) iterated root to `order`."""
    cdef qfloat AA[MAXN + 1]
    cdef qfloat out[MAXN + 1]
    cdef int k = len(A)
    cdef int i
    if order < 0 or order > MAXN or k > MAXN:
        raise ValueError("order out of supported range")
    for i in range(k):
        AA[i] = <qfloat> (<double> A[i])
    _root_expand(AA, k, <qfloat> beta, order, out)
    return [float(out[i]) for i in range(order + 1)]


def marginal(A, double beta, double scale):
    """Large-x amplitude C of the iterated root, scale * x^beta prefactor."""
    cdef qfloat AA[MAXN + 1]
    cdef int k = len(A)
    cdef int i, st = OK
    cdef qfloat val
    if k > MAXN:
        raise ValueError("order out of supported range")
    for i in range(k):
        AA[i] = <qfloat> (<double> A[i])
    val = _marginal(AA, k, <qfloat> beta, <qfloat> scale, &st)
    if st == COMPLEX:
        raise ComplexValueError("non-positive base under non-integer exponent")
    return float(val)


def eval_root(A, double beta, double scale, double x):
    """Value of the iterated root approximant at x >= 0."""
    cdef qfloat AA[MAXN + 1]
    cdef int k = len(A)
    cdef int i, st = OK
    cdef qfloat val
    if k > MAXN:
        raise ValueError("order out of supported range")
    for i in range(k):
        AA[i] = <qfloat> (<double> A[i])
    val = _eval_root(AA, k, <qfloat> beta, <qfloat> scale,
                     <qfloat> x, &st)
    if st == COMPLEX:
        raise ComplexValueError("non-positive base under non-integer exponent")
    return float(val)
