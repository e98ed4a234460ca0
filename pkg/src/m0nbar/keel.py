"""Betti numbers and Poincare polynomials of the compactified moduli spaces
of stable n-pointed genus-zero curves, via Keel's recurrence, and the point
counts over finite fields that the polynomials predict.

Writing s = t^2 (odd cohomology vanishes, so only even degrees carry data),
the Poincare polynomials P_n(s) = sum_k a_k(n) s^k satisfy

    P_3 = 1,
    P_{n+1} = (1 + s) P_n + (s/2) * sum_{j=2}^{n-2} C(n,j) P_{j+1} P_{n-j+1},

and |Mbar_{0,n}(F_q)| = P_n(q) for every prime power q.
"""

from __future__ import annotations

from math import comb

from .algebra import (
    IntPoly,
    poly_add,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_shift,
    require_prime_power,
)
from .report import make_report


def _exact_half(p: IntPoly) -> IntPoly:
    # The pairing j <-> n-j makes the double sum even; an odd coefficient
    # here means the recurrence was driven with corrupted rows.
    if any(c % 2 for c in p):
        raise ArithmeticError("half-sum is not an integer polynomial: %r" % (p,))
    return tuple(c // 2 for c in p)


class BettiTable:
    """Memoized table of the numbers a_k(n) = b_{2k}(Mbar_{0,n}).

    Rows are built bottom-up and never mutated afterwards, so a populated
    table can be shared across threads; row n is the coefficient tuple
    (a_0(n), ..., a_{n-3}(n)).
    """

    def __init__(self):
        self._rows = {3: (1,)}
        self._max = 3

    def ensure(self, n: int) -> None:
        if n < 3:
            raise ValueError("n must be >= 3")
        while self._max < n:
            m = self._max
            conv = ()
            for j in range(2, m - 1):
                term = poly_mul(self._rows[j + 1], self._rows[m - j + 1])
                conv = poly_add(conv, poly_scale(term, comb(m, j)))
            half = _exact_half(conv)
            row = poly_add(poly_mul((1, 1), self._rows[m]), poly_shift(half))
            self._rows[m + 1] = row
            self._max = m + 1

    def row(self, n: int) -> IntPoly:
        self.ensure(n)
        return self._rows[n]

    def betti(self, n: int, k: int) -> int:
        row = self.row(n)
        if k < 0 or k >= len(row):
            return 0
        return row[k]


_TABLE = BettiTable()


def betti(n: int, k: int) -> int:
    """a_k(n) = b_{2k}(Mbar_{0,n}); zero outside 0 <= k <= n-3."""
    return _TABLE.betti(n, k)


def poincare_poly(n: int) -> IntPoly:
    """P_n as a polynomial in s = t^2; degree is exactly n-3."""
    return _TABLE.row(n)


def point_count(n: int, q: int) -> int:
    """|Mbar_{0,n}(F_q)| = P_n(q); q must be a prime power."""
    require_prime_power(q)
    return poly_eval(poincare_poly(n), q)


def verify_count_recurrence(n_max: int, q: int) -> list:
    """Check the point-count recurrence at q for every 4 <= n+1 <= n_max.

    Both sides go through point_count, i.e. the check is
        |Mbar_{0,n+1}| = (1+q) |Mbar_{0,n}|
                         + (q/2) sum_j C(n,j) |Mbar_{0,j+1}| |Mbar_{0,n-j+1}|.
    Returns one VerificationReport per n+1.
    """
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    require_prime_power(q)
    reports = []
    for m in range(4, n_max + 1):
        n = m - 1
        lhs = point_count(m, q)
        double = sum(
            comb(n, j) * point_count(j + 1, q) * point_count(n - j + 1, q)
            for j in range(2, n - 1)
        )
        if double % 2:
            raise ArithmeticError("glued-pair double count is odd at n=%d q=%d" % (n, q))
        rhs = (1 + q) * point_count(n, q) + q * (double // 2)
        reports.append(make_report("count-recurrence", {"n": m, "q": q}, lhs, rhs))
    return reports
