"""Hasse-Weil zeta functions of P^n and Mbar_{0,n} as factored rational
functions, and the generating-function identity tying them to point counts.

For a smooth projective variety whose point count is a polynomial in q with
the Betti numbers as coefficients, the zeta function over F_p is the product
of factors (1 - p^j T)^(-e_j) with e_j = b_{2j}, and

    sum_{r>=1} |V(F_{p^r})| T^r = T d/dT log Z(T)
                                = sum_{r>=1} (sum_j e_j p^{jr}) T^r.

Zeta functions stay factored; expanding them buys nothing here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Series, require_prime
from .keel import betti, point_count
from .report import make_report


@dataclass(frozen=True)
class FactoredZeta:
    """Z(T) = prod over (j, e) in factors of (1 - p^j T)^(-e)."""
    p: int
    factors: tuple

    def __post_init__(self):
        require_prime(self.p)
        factors = tuple((int(j), int(e)) for j, e in self.factors)
        if sorted(j for j, _ in factors) != [j for j, _ in factors]:
            raise ValueError("factors must be sorted by j")
        if len({j for j, _ in factors}) != len(factors):
            raise ValueError("duplicate powers of p in factors")
        if any(e == 0 for _, e in factors):
            raise ValueError("zero exponents are not stored")
        object.__setattr__(self, "factors", factors)


def zeta_projective(n_dim: int, p: int) -> FactoredZeta:
    """Z_{P^n} = 1/((1-T)(1-pT)...(1-p^n T))."""
    if n_dim < 0:
        raise ValueError("n_dim must be >= 0")
    return FactoredZeta(p, tuple((j, 1) for j in range(n_dim + 1)))


def zeta_moduli(n: int, p: int) -> FactoredZeta:
    """Z_{Mbar_{0,n}}: exponent at p^j is the Betti number b_{2j}."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return FactoredZeta(p, tuple((j, betti(n, j)) for j in range(n - 2)))


def log_derivative_series(z: FactoredZeta, order: int) -> Series:
    """T d/dT log Z(T) through T^order, i.e. the point-count generating series.

    From the factored form the T^r coefficient is sum_j e_j p^{jr}.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)]
    for r in range(1, order + 1):
        coeffs.append(Fraction(sum(e * z.p ** (j * r) for j, e in z.factors)))
    return Series(order + 1, tuple(coeffs))


def verify_zeta_counts(n: int, p: int, order: int) -> list:
    """Check the T^r coefficient against point_count(n, p^r) for r = 1..order."""
    series = log_derivative_series(zeta_moduli(n, p), order)
    reports = []
    for r in range(1, order + 1):
        reports.append(
            make_report(
                "zeta-log-derivative",
                {"n": n, "p": p, "r": r},
                series.coeffs[r],
                point_count(n, p ** r),
            )
        )
    return reports


def zeta_str(z: FactoredZeta, latex: bool = False) -> str:
    """Render e.g. 1/((1-T)(1-2T)^5(1-4T))."""
    pieces = []
    for j, e in z.factors:
        scale = z.p ** j
        base = "(1-T)" if scale == 1 else "(1-%dT)" % scale
        if e != 1:
            base += "^{%d}" % e if latex else "^%d" % e
        pieces.append(base)
    body = "".join(pieces)
    return (r"\frac{1}{%s}" % body) if latex else "1/(%s)" % body


def zeta_record(z: FactoredZeta) -> dict:
    return {"p": z.p, "factors": [{"j": j, "exp": e} for j, e in z.factors]}
