from fractions import Fraction
from math import factorial

import pytest

from m0nbar.algebra import poly_scale, ratpoly, series_compose
from m0nbar.getzler import (
    falling_binomial,
    open_homology_dims,
    series_f,
    series_g,
    verify_inverse,
)
from m0nbar.keel import poincare_poly
from m0nbar.report import all_pass
from m0nbar.strata import open_stratum_poly


def test_falling_binomial():
    assert falling_binomial(0) == ratpoly(1)
    assert falling_binomial(1) == ratpoly(0, 1)
    assert falling_binomial(2) == ratpoly(0, Fraction(-1, 2), Fraction(1, 2))
    # binom(k, n) at integer k must agree with the arithmetic value
    from m0nbar.algebra import poly_eval
    from math import comb
    for n in range(5):
        for k in range(8):
            assert poly_eval(falling_binomial(n), Fraction(k)) == comb(k, n)


def test_g_low_coefficients():
    g = series_g(4)
    assert g.coeffs[0] == ()
    assert g.coeffs[1] == (1,)
    assert g.coeffs[2] == ratpoly(Fraction(-1, 2))          # g = x - x^2/2 + ...
    assert g.coeffs[3] == ratpoly(Fraction(1, 3), Fraction(-1, 6))   # -(s-2)/6
    assert g.coeffs[4] == ratpoly(Fraction(-1, 4), Fraction(5, 24), Fraction(-1, 24))


def test_f_low_coefficients():
    f = series_f(4)
    assert f.coeffs[0] == ()
    assert f.coeffs[1] == (1,)
    assert f.coeffs[2] == ratpoly(Fraction(1, 2))
    assert f.coeffs[3] == ratpoly(Fraction(1, 6), Fraction(1, 6))
    assert f.coeffs[4] == ratpoly(Fraction(1, 24), Fraction(5, 24), Fraction(1, 24))


def test_f_coefficients_are_scaled_poincare_rows():
    f = series_f(7)
    for n in range(2, 8):
        expected = poly_scale(poincare_poly(n + 1), Fraction(1, factorial(n)))
        assert f.coeffs[n] == expected


def test_f_times_factorial_is_palindromic():
    f = series_f(8)
    for n in range(2, 9):
        row = poly_scale(f.coeffs[n], factorial(n))
        assert row == tuple(reversed(row))


def test_order_validation():
    with pytest.raises(ValueError):
        series_g(1)
    with pytest.raises(ValueError):
        series_f(0)
    with pytest.raises(ValueError):
        open_homology_dims(1)


def test_inverse_hand_order_three():
    # x^2 of f(g): 1/2 - 1/2; x^3: -(s-2)/6 - 1/2*2*(-1/2)... all cancel
    f, g = series_f(3), series_g(3)
    composed = series_compose(f, g)
    assert composed.coeffs[1] == (1,)
    assert composed.coeffs[2] == ()
    assert composed.coeffs[3] == ()


def test_inverse_orders():
    for order in (3, 6, 8):
        assert all_pass(verify_inverse(order))


def test_homology_dims_small():
    assert open_homology_dims(2).dims == (1,)
    assert open_homology_dims(3).dims == (1, 2)
    assert open_homology_dims(4).dims == (1, 5, 6)
    assert open_homology_dims(5).dims == (1, 9, 26, 24)


def test_homology_dims_start_with_one():
    for n in range(2, 8):
        assert open_homology_dims(n).dims[0] == 1


def test_homology_dims_match_open_stratum_counts():
    # sum_i (-1)^i dims[i] q^(n-2-i) must be the open-stratum count of
    # n+1 points, i.e. prod_{j=2}^{n-1} (q - j)
    for n in range(2, 8):
        dims = open_homology_dims(n).dims
        signed = [0] * (n - 1)
        for i, d in enumerate(dims):
            signed[n - 2 - i] = d if i % 2 == 0 else -d
        assert ratpoly(*signed) == ratpoly(*open_stratum_poly(n + 1))
