"""Fiber counts of the point-forgetting map and the counting identities they
drive.

Forgetting the last of n+1 marked points (and contracting any component made
unstable) maps Mbar_{0,n+1}(F_q) onto Mbar_{0,n}(F_q).  Over a curve with
k(rho) nodes the fiber has exactly (q+1) + q*k(rho) points, which aggregates
over strata into the two lemmas verified here:

    lemma3:  |Mbar_{0,n+1}| = (q+1) |Mbar_{0,n}| + q * sum_rho k(rho)
    lemma4:  sum_rho k(rho) = (1/2) sum_{j=2}^{n-2} C(n,j)
                              |Mbar_{0,j+1}| |Mbar_{0,n-j+1}|

Everything is checked as counting identities aggregated over strata; there
is no curve-by-curve construction of the map itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import poly_eval, require_prime_power
from .keel import point_count
from .report import VerificationReport, make_report
from .strata import DualTree, boundary_edge_sum, strata_table, stratified_count


def fiber_size(k_rho: int, q: int) -> int:
    """Number of preimages of a curve with k_rho nodes: (q+1) + q*k_rho.

    k_rho = 0 is the one-component (interior) case, where the forgotten
    point sits at one of the q+1-n free points of the line or sprouts a new
    component at one of the n marked points.
    """
    if k_rho < 0:
        raise ValueError("k_rho must be >= 0")
    require_prime_power(q)
    return (q + 1) + q * k_rho


@dataclass(frozen=True)
class FiberBreakdown:
    """The three addends of the fiber count over one stratum's curves."""
    k_rho: int
    q: int
    same_component: int   # unmarked smooth points available on the curve
    leg_sprouts: int      # new component at one of the n marked points
    node_sprouts: int     # new component at one of the k_rho nodes
    total: int


def fiber_size_breakdown(tree: DualTree, q: int):
    """Split fiber_size(k, q) the way the fiber itself splits, or None.

    Returns None (the empty-stratum marker) when some vertex valence
    exceeds q+1: such a component cannot hold its special points over F_q,
    the stratum has no F_q-points, and no breakdown is meaningful.
    """
    require_prime_power(q)
    if any(m > q + 1 for m in tree.valences()):
        return None
    n = tree.n_legs
    k = tree.edge_count
    same = (k + 1) * (q + 1) - n - 2 * k
    out = FiberBreakdown(k, q, same, n, k, same + n + k)
    if out.total != fiber_size(k, q):
        raise ArithmeticError("fiber breakdown does not add up: %r" % (out,))
    return out


def verify_lemma3(n: int, q: int) -> VerificationReport:
    """Check |Mbar_{0,n+1}| = (q+1)|Mbar_{0,n}| + q * sum k(rho), over strata."""
    lhs = stratified_count(n + 1, q)
    rhs = stratified_count(n, q) * (q + 1) + q * boundary_edge_sum(n, q)
    return make_report("lemma3", {"n": n, "q": q}, lhs, rhs)


def verify_lemma4(n: int, q: int) -> VerificationReport:
    """Check sum k(rho) against the glued-pair double count, halved.

    Every boundary curve arises from exactly 2*k(rho) ordered gluings, so
    the double count must be even; an odd value is an enumeration bug and
    raises instead of reporting.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    lhs = boundary_edge_sum(n, q)
    double = sum(
        comb(n, j) * point_count(j + 1, q) * point_count(n - j + 1, q)
        for j in range(2, n - 1)
    )
    if double % 2:
        raise ArithmeticError("glued-pair double count is odd at n=%d q=%d" % (n, q))
    return make_report("lemma4", {"n": n, "q": q}, lhs, double // 2)


def verify_fiber_sum(n: int, q: int) -> VerificationReport:
    """Check sum over strata of (stratum size) * (fiber size) = |Mbar_{0,n+1}|."""
    require_prime_power(q)
    lhs = sum(
        poly_eval(row.count_poly, q) * fiber_size(row.edge_count, q)
        for row in strata_table(n)
    )
    rhs = stratified_count(n + 1, q)
    return make_report("fiber-sum", {"n": n, "q": q}, lhs, rhs)
