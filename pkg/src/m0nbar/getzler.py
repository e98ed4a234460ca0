"""Getzler's pair of generating functions for genus-zero moduli, and the
mechanical check that they are compositional inverses.

With s = t^2, the closed form

    g(x) = x - ((1+x)^s - (1 + s*x)) / (s(s-1))

encodes the homology of the open moduli spaces, while

    f(x) = x + sum_{n>=2} x^n/n! * P_{n+1}(s)

is built from the Poincare polynomials of the compactified spaces, and
f(g(x)) = g(f(x)) = x.  Both are handled as truncated bivariate series with
exact rational-polynomial coefficients; (1+x)^s expands through the
generalized binomial coefficients binom(s, n) = s(s-1)...(s-n+1)/n!, each a
polynomial in s, and the division by s(s-1) is exact polynomial division
with a remainder check (the divisibility is a theorem, so a remainder is a
loud bug, not data).

The `order` arguments below are inclusive: order 8 keeps x^0 .. x^8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    BiSeries,
    RatPoly,
    biseries,
    poly_add,
    poly_mul,
    poly_neg,
    poly_scale,
    poly_sub,
    ratpoly,
    ratpoly_div_exact,
    series_compose,
)
from .keel import poincare_poly
from .report import make_report

_S_TIMES_S_MINUS_1 = (0, -1, 1)   # s(s-1) = s^2 - s


def falling_binomial(n: int) -> RatPoly:
    """binom(s, n) = s(s-1)...(s-n+1)/n! as a polynomial in s."""
    if n < 0:
        raise ValueError("n must be >= 0")
    poly = ratpoly(1)
    for j in range(n):
        poly = poly_mul(poly, ratpoly(-j, 1))
    return poly_scale(poly, Fraction(1, factorial(n)))


def series_g(order: int) -> BiSeries:
    """Getzler's g, from the closed form, through x^order."""
    if order < 2:
        raise ValueError("order must be >= 2")
    coeffs = []
    for n in range(order + 1):
        numerator = falling_binomial(n)
        if n == 0:
            numerator = poly_sub(numerator, ratpoly(1))     # the 1 of (1 + s*x)
        elif n == 1:
            numerator = poly_sub(numerator, ratpoly(0, 1))  # the s*x of (1 + s*x)
        # the numerator vanishes identically for n <= 1, so the quotient is
        # exact there too; a remainder at any n is a hard error, not data
        quotient = ratpoly_div_exact(numerator, _S_TIMES_S_MINUS_1)
        coeffs.append(poly_neg(quotient))
    coeffs[1] = poly_add(coeffs[1], ratpoly(1))             # the leading x of g
    return biseries(order + 1, coeffs)


def series_f(order: int) -> BiSeries:
    """Getzler's f: x^n coefficient is P_{n+1}(s)/n! for n >= 2."""
    if order < 2:
        raise ValueError("order must be >= 2")
    coeffs = [(), (1,)]
    for n in range(2, order + 1):
        coeffs.append(poly_scale(poincare_poly(n + 1), Fraction(1, factorial(n))))
    return biseries(order + 1, coeffs)


def verify_inverse(order: int) -> list:
    """Check f(g(x)) = x and g(f(x)) = x exactly through x^order."""
    f = series_f(order)
    g = series_g(order)
    identity = _x_series(order)
    return [
        make_report("getzler-inverse", {"order": order, "direction": "f(g(x))"},
                    series_compose(f, g), identity, render=_biseries_brief),
        make_report("getzler-inverse", {"order": order, "direction": "g(f(x))"},
                    series_compose(g, f), identity, render=_biseries_brief),
    ]


def _x_series(order: int) -> BiSeries:
    coeffs = [()] * (order + 1)
    coeffs[1] = (1,)
    return biseries(order + 1, coeffs)


def _biseries_brief(b: BiSeries) -> str:
    nonzero = ["x^%d" % i for i, c in enumerate(b.coeffs) if c]
    return " + ".join(nonzero) if nonzero else "0"


@dataclass(frozen=True)
class HomologyDims:
    """dims[i] = dim H_i of the open moduli space with n+1 marked points."""
    n: int
    dims: tuple


def open_homology_dims(n: int) -> HomologyDims:
    """Extract dim H_i(M_{0,n+1}) for i = 0..n-2 from g's x^n coefficient.

    The coefficient times -n! is sum_i (-1)^i dims[i] s^(n-2-i); each
    extracted value must come out a nonnegative integer or the expansion is
    broken and this raises.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    signed = poly_scale(series_g(n).coeffs[n], -factorial(n))
    dims = []
    for i in range(n - 1):
        power = n - 2 - i
        c = signed[power] if power < len(signed) else Fraction(0)
        value = c if i % 2 == 0 else -c
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(
                "homology dimension extraction failed at n=%d i=%d: %s" % (n, i, value)
            )
        dims.append(int(value))
    return HomologyDims(n, tuple(dims))
