"""Independent oracles for derived quantities: closed forms evaluated
with external tools / exact rational arithmetic, pinned as literals."""

import math
from fractions import Fraction

from resum.benchmarks import (
    generate_gaussian_polymer,
    generate_wilson_loop,
    get_problem,
)
from resum.numerics import gamma
from resum.series import TruncatedSeries, diff_log, mobius_substitute
from resum.transforms import TransformKind, amplitude_factor


def test_gamma_literals():
    # reference values computed with mpmath at 50 digits
    assert abs(gamma(4.0 / 3.0) - 0.8929795115692492) < 1e-14
    assert abs(gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    # parity with the C library across a range of arguments
    for x in (0.1, 0.5, 1.0, 2.5, 7.25, 15.0, -0.5, -2.3):
        assert abs(gamma(x) - math.gamma(x)) <= 1e-13 * abs(math.gamma(x))


def test_fractional_integral_factor_closed_form():
    # Gamma(beta+1) / (beta+1)^u at beta = 1/3, u = -0.60088
    beta, u = 1.0 / 3.0, -0.60088
    expected = math.gamma(beta + 1.0) / (beta + 1.0) ** u
    got = amplitude_factor(TransformKind.FRACTIONAL_INTEGRAL, beta, u)
    assert abs(got - expected) <= 1e-13 * expected
    assert abs(got - 1.0614870071) < 1e-9


def test_hard_disc_diff_log_hand_computed():
    # c_0 = a_1/a_0 and c_1 = 2 a_2/a_0 - (a_1/a_0)^2, by hand from the
    # stored virial-type input
    s = get_problem("hard-disc").series
    ell = diff_log(s)
    c0 = s[1] / s[0]
    c1 = 2.0 * s[2] / s[0] - c0 * c0
    assert abs(ell[0] - c0) < 1e-14
    assert abs(ell[1] - c1) < 1e-12
    assert abs(ell[0] - 2.0) < 1e-14
    assert abs(ell[1] - (-1.74396)) < 1e-12


def test_hard_disc_input_is_mapped_low_density_expansion():
    # The stored input is the low-density expansion pushed through the
    # substitution x = f/(1-f), i.e. f = x/(1+x), at f_c = 1; the
    # quadratic coefficient of the source is 3.12802 (its printed
    # exponent is a typo).
    source = TruncatedSeries([1, 2, 3.12802, 4.25785, 5.3369, 6.36296,
                              7.35186, 8.3191, 9.27215, 10.2163])
    mapped = mobius_substitute(source, 1.0)
    stored = get_problem("hard-disc").series
    assert mapped.order == stored.order
    for a, b in zip(mapped.coeffs, stored.coeffs):
        assert abs(a - b) <= 1e-10 * max(1.0, abs(b))


def test_gaussian_polymer_closed_form():
    # a_n = 2 (-1)^n / (n+2)!
    s = generate_gaussian_polymer(11)
    assert s.order == 11
    for n in range(12):
        exact = Fraction(2 * (-1) ** n, math.factorial(n + 2))
        assert s[n] == float(exact)


def test_wilson_loop_closed_form():
    # a_n = sum_m (-1)^(n-2m) / ((n-2m)! 4^m m! (m+1)!)
    s = generate_wilson_loop(11)
    assert s.order == 11
    for n in range(12):
        exact = sum(
            (Fraction((-1) ** (n - 2 * m), math.factorial(n - 2 * m))
             / (Fraction(4) ** m * math.factorial(m)
                * math.factorial(m + 1)))
            for m in range(n // 2 + 1)
        )
        assert s[n] == float(exact)
