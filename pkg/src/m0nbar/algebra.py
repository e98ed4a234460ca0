"""Exact arithmetic kernel: dense univariate polynomials and truncated series.

A polynomial is a tuple of coefficients, index i holding the coefficient of
the i-th power of the indeterminate.  Canonical form has no trailing zeros,
so the zero polynomial is the empty tuple and structural equality (==) is
mathematical equality.  Coefficients are Python ints (IntPoly) or
fractions.Fraction objects (RatPoly); all arithmetic is exact and there is
no floating point anywhere in the package.

Truncated power series carry an explicit truncation order (exclusive) and
retain trailing zeros: a Series has rational coefficients, a BiSeries has
RatPoly coefficients, i.e. it is a series in x whose coefficients are
polynomials in a second indeterminate s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Polynomials are coefficient tuples in canonical form; IntPoly carries ints,
# RatPoly carries Fractions.  The arithmetic below is generic over both.
IntPoly = tuple
RatPoly = tuple


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder where none was expected."""


def normalize(coeffs) -> tuple:
    """Strip trailing zeros; the canonical zero polynomial is the empty tuple."""
    coeffs = tuple(coeffs)
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


def intpoly(*coeffs: int) -> IntPoly:
    return normalize(coeffs)


def ratpoly(*coeffs) -> RatPoly:
    """Build a rational-coefficient polynomial; Fraction keeps lowest terms."""
    return normalize(Fraction(c) for c in coeffs)


def poly_degree(p) -> int:
    """Degree of a canonical polynomial; the zero polynomial has degree -1."""
    return len(p) - 1


def poly_add(a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def poly_neg(a) -> tuple:
    return tuple(-c for c in a)


def poly_sub(a, b) -> tuple:
    return poly_add(a, poly_neg(b))


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out)


def poly_scale(a, c) -> tuple:
    if c == 0:
        return ()
    return normalize(x * c for x in a)


def poly_shift(a) -> tuple:
    """Multiply by the indeterminate (prepend a zero coefficient)."""
    return (0,) + tuple(a) if a else ()


def poly_eval(p, x):
    """Exact Horner evaluation."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ratpoly_div_exact(num: RatPoly, den: RatPoly) -> RatPoly:
    """Divide two rational polynomials, demanding a zero remainder.

    A nonzero remainder signals a math bug upstream, so it raises
    InexactDivisionError instead of returning a quotient/remainder pair.
    """
    num = normalize(Fraction(c) for c in num)
    den = normalize(Fraction(c) for c in den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        factor = rem[i + len(den) - 1] / lead
        quot[i] = factor
        if factor:
            for j, c in enumerate(den):
                rem[i + j] -= factor * c
    if normalize(rem):
        raise InexactDivisionError(
            "inexact division: remainder %r" % (normalize(rem),)
        )
    return normalize(quot)


def _coeff_str(c, latex: bool) -> str:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            if latex:
                return r"\frac{%d}{%d}" % (c.numerator, c.denominator)
            return "%d/%d" % (c.numerator, c.denominator)
        return str(c.numerator)
    return str(c)


def poly_str(p, var: str = "s", power_scale: int = 1,
             descending: bool = False, latex: bool = False) -> str:
    """Render a polynomial as text, e.g. "1 + 16*t^2 + 16*t^4 + t^6".

    power_scale stretches exponents (Poincare polynomials live in s = t^2
    but print in t).  Descending order reads better for monic q-polynomials
    such as "q^2 - 5*q + 6".
    """
    if not p:
        return "0"
    indices = range(len(p) - 1, -1, -1) if descending else range(len(p))
    parts = []
    for k in indices:
        c = p[k]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        power = k * power_scale
        if power == 0:
            body = _coeff_str(mag, latex)
        else:
            if power == 1:
                v = var
            else:
                v = "%s^{%d}" % (var, power) if latex else "%s^%d" % (var, power)
            if mag == 1:
                body = v
            else:
                body = _coeff_str(mag, latex) + ("" if latex else "*") + v
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# truncated series

@dataclass(frozen=True)
class Series:
    """Power series in one variable, truncated at `order` (exclusive).

    coeffs always has length == order; trailing zeros are kept because the
    truncation order is explicit state, not an artifact of storage.
    """
    order: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) != self.order:
            raise ValueError(
                "series wants exactly %d coefficients, got %d"
                % (self.order, len(coeffs))
            )
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True)
class BiSeries:
    """Series in x truncated at `order`, coefficients are RatPoly in s."""
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = tuple(ratpoly(*c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(
                "bivariate series wants exactly %d coefficients, got %d"
                % (self.order, len(coeffs))
            )
        object.__setattr__(self, "coeffs", coeffs)


def biseries(order: int, coeffs) -> BiSeries:
    return BiSeries(order, tuple(coeffs))


def biseries_x(order: int) -> BiSeries:
    """The identity series x at the given truncation order."""
    coeffs = [()] * order
    if order > 1:
        coeffs[1] = (1,)
    return biseries(order, coeffs)


def _bimul(a, b, order):
    # truncated product of coefficient lists (RatPoly entries)
    out = [()] * order
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(order - i):
            cb = b[j]
            if cb:
                out[i + j] = poly_add(out[i + j], poly_mul(ca, cb))
    return out


def series_compose(f: BiSeries, g: BiSeries) -> BiSeries:
    """Substitute g into f, exactly, truncated at the shared order.

    g must have zero constant term (otherwise the substitution is not
    defined as a truncated series), and mixing two truncation orders is an
    error rather than a silent truncation.
    """
    if f.order != g.order:
        raise ValueError(
            "cannot compose series of different orders (%d vs %d)"
            % (f.order, g.order)
        )
    order = f.order
    if order == 0:
        return biseries(0, ())
    if g.coeffs[0] != ():
        raise ValueError("composition needs a zero constant term in g")
    out = [()] * order
    out[0] = f.coeffs[0]
    gpow = [()] * order      # running power of g, starts at g^1
    for i, c in enumerate(g.coeffs):
        gpow[i] = c
    for n in range(1, order):
        fn = f.coeffs[n]
        if fn:
            for m in range(n, order):
                if gpow[m]:
                    out[m] = poly_add(out[m], poly_mul(fn, gpow[m]))
        if n + 1 < order:
            gpow = _bimul(gpow, g.coeffs, order)
    return biseries(order, out)


# ---------------------------------------------------------------------------
# integer plumbing: factorization and prime-power checks

def factorize(m: int) -> dict:
    """Trial-division factorization of m >= 2, as {prime: exponent}."""
    if m < 2:
        raise ValueError("factorize wants an integer >= 2")
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def factorization_str(m: int) -> str:
    if m < 2:
        return str(m)
    return " * ".join(
        str(p) if e == 1 else "%d^%d" % (p, e)
        for p, e in sorted(factorize(m).items())
    )


def is_prime(m: int) -> bool:
    return m >= 2 and factorize(m) == {m: 1}


def is_prime_power(m: int) -> bool:
    return m >= 2 and len(factorize(m)) == 1


def require_prime_power(q: int) -> None:
    """Reject q unless it is a prime power, naming the factorization."""
    if q < 2:
        raise ValueError("q = %r is not a prime power" % (q,))
    if not is_prime_power(q):
        raise ValueError(
            "q = %d = %s is not a prime power" % (q, factorization_str(q))
        )


def require_prime(p: int, what: str = "p") -> None:
    if not is_prime(p):
        if p >= 2:
            raise ValueError(
                "%s = %d = %s is not prime" % (what, p, factorization_str(p))
            )
        raise ValueError("%s = %r is not prime" % (what, p))
