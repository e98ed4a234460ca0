from fractions import Fraction

import pytest

from m0nbar.algebra import poly_add, poly_eval, poly_mul, poly_scale, ratpoly
from m0nbar.keel import poincare_poly
from m0nbar.strata import (
    boundary_edge_sum,
    enumerate_stable_trees,
    make_tree,
    open_stratum_poly,
    orbit_count_direct,
    strata_table,
    stratified_count,
    tree_serial,
)

QS = (2, 3, 4, 5, 7, 8, 9, 11)

GOLDEN_N3 = ["(1,2,3;)"]

GOLDEN_N4 = [
    "(1,2,3,4;)",
    "(1,2;(3,4;))",
    "(1,3;(2,4;))",
    "(1,4;(2,3;))",
]

# 1 one-vertex tree, 10 two-vertex trees (one per 2|3 split of the legs),
# 15 three-vertex chains (middle leg times pairing of the remaining four).
GOLDEN_N5 = [
    "(1,2,3,4,5;)",
    "(1,2,3;(4,5;))",
    "(1,2,4;(3,5;))",
    "(1,2,5;(3,4;))",
    "(1,2;(3,4,5;))",
    "(1,3,4;(2,5;))",
    "(1,3,5;(2,4;))",
    "(1,3;(2,4,5;))",
    "(1,4,5;(2,3;))",
    "(1,4;(2,3,5;))",
    "(1,5;(2,3,4;))",
    "(1;(2,3;)(4,5;))",
    "(1;(2,4;)(3,5;))",
    "(1;(2,5;)(3,4;))",
    "(2;(1,3;)(4,5;))",
    "(2;(1,4;)(3,5;))",
    "(2;(1,5;)(3,4;))",
    "(3;(1,2;)(4,5;))",
    "(3;(1,4;)(2,5;))",
    "(3;(1,5;)(2,4;))",
    "(4;(1,2;)(3,5;))",
    "(4;(1,3;)(2,5;))",
    "(4;(1,5;)(2,3;))",
    "(5;(1,2;)(3,4;))",
    "(5;(1,3;)(2,4;))",
    "(5;(1,4;)(2,3;))",
]


def test_golden_serializations():
    for n, golden in ((3, GOLDEN_N3), (4, GOLDEN_N4), (5, GOLDEN_N5)):
        assert [tree_serial(t) for t in enumerate_stable_trees(n)] == golden


def test_enumeration_counts_small():
    assert len(enumerate_stable_trees(3)) == 1
    assert len(enumerate_stable_trees(4)) == 4
    assert len(enumerate_stable_trees(5)) == 26


def test_enumeration_counts_against_forgetting_sites():
    # Independent oracle: forgetting the last leg of a stable (n+1)-tree
    # lands on a stable n-tree, and the preimages of a fixed tree are in
    # bijection with its modification sites (attach to a vertex, sprout at
    # a leg, subdivide an edge), so
    #     T(n+1) = sum over trees (vertex_count + n + edge_count).
    for n in range(3, 8):
        sites = sum(
            t.vertex_count + n + t.edge_count for t in enumerate_stable_trees(n)
        )
        assert len(enumerate_stable_trees(n + 1)) == sites


def test_enumeration_is_duplicate_free_and_stable():
    for n in range(3, 8):
        trees = enumerate_stable_trees(n)
        serials = [tree_serial(t) for t in trees]
        assert len(set(serials)) == len(trees)
        assert sum(1 for t in trees if t.vertex_count == 1) == 1
        for t in trees:
            assert len(t.edges) == t.vertex_count - 1
            assert all(m >= 3 for m in t.valences())
        assert serials == sorted(serials, key=lambda s: (s.count("("), s))


def test_enumeration_rejects_small_n():
    with pytest.raises(ValueError):
        enumerate_stable_trees(2)


def test_serialization_round_trip():
    from m0nbar.strata import _parse_serial
    for n in range(3, 6):
        for t in enumerate_stable_trees(n):
            s = tree_serial(t)
            assert _parse_serial(s) == t
            assert tree_serial(_parse_serial(s)) == s


def test_make_tree_canonicalizes():
    # same chain described with two different vertex numberings
    a = make_tree(3, [(0, 1), (1, 2)], {1: 0, 2: 0, 5: 1, 3: 2, 4: 2})
    b = make_tree(3, [(2, 1), (0, 1)], {1: 2, 2: 2, 5: 1, 3: 0, 4: 0})
    assert a == b
    assert tree_serial(a) == "(5;(1,2;)(3,4;))"


def test_make_tree_validation():
    with pytest.raises(ValueError, match="valence"):
        make_tree(2, [(0, 1)], {1: 0, 2: 0, 3: 0, 4: 1})  # vertex 1 has valence 2
    with pytest.raises(ValueError, match="tree"):
        make_tree(3, [(0, 1)], {1: 0, 2: 0, 3: 1, 4: 2, 5: 2, 6: 2})
    with pytest.raises(ValueError, match="labels"):
        make_tree(1, [], {1: 0, 3: 0, 4: 0})


def test_open_stratum_poly():
    assert open_stratum_poly(3) == (1,)
    assert open_stratum_poly(4) == (-2, 1)
    assert poly_eval(open_stratum_poly(6), 5) == 6
    with pytest.raises(ValueError):
        open_stratum_poly(2)


def test_open_stratum_pigeonhole_vanishing():
    # no n distinct points fit on a line with q+1 < n points
    for q in (2, 3, 4, 5, 7):
        for n in range(q + 2, q + 6):
            assert poly_eval(open_stratum_poly(n), q) == 0


def test_stratified_count_examples():
    for q in QS:
        assert stratified_count(3, q) == 1
    assert stratified_count(4, 2) == 3
    assert stratified_count(5, 2) == 15


def test_stratified_count_rejects_bad_q():
    with pytest.raises(ValueError, match="prime power"):
        stratified_count(4, 6)


def test_boundary_edge_sum_examples():
    for q in QS:
        assert boundary_edge_sum(3, q) == 0
        assert boundary_edge_sum(4, q) == 3
    assert boundary_edge_sum(5, 2) == 30
    assert boundary_edge_sum(5, 3) == 40


def test_total_count_polynomial_is_poincare():
    # summing the stratum polynomials gives P_n with s -> q, exactly
    for n in range(3, 8):
        total = ()
        for row in strata_table(n):
            total = poly_add(total, row.count_poly)
        assert total == poincare_poly(n)


def test_interpolated_counts_match_poincare():
    # rebuild the counting polynomial from point values alone
    for n in range(3, 8):
        points = [(q, stratified_count(n, q)) for q in QS[: n - 1]]
        rebuilt = ()
        for i, (xi, yi) in enumerate(points):
            basis = ratpoly(1)
            denom = Fraction(1)
            for j, (xj, _) in enumerate(points):
                if j != i:
                    basis = poly_mul(basis, ratpoly(-xj, 1))
                    denom *= xi - xj
            rebuilt = poly_add(rebuilt, poly_scale(basis, Fraction(yi) / denom))
        assert rebuilt == ratpoly(*poincare_poly(n))


def test_orbit_count_direct_examples():
    assert orbit_count_direct(3, 2) == 1
    assert orbit_count_direct(4, 5) == 3
    assert orbit_count_direct(5, 5) == 6
    assert orbit_count_direct(8, 7) == 120
    assert orbit_count_direct(9, 7) == 0  # pigeonhole


def test_orbit_count_matches_formula():
    for q in (2, 3, 5, 7):
        for n in range(3, q + 2):
            assert orbit_count_direct(n, q) == poly_eval(open_stratum_poly(n), q)


def test_orbit_count_guards():
    with pytest.raises(ValueError, match="prime"):
        orbit_count_direct(4, 4)
    with pytest.raises(ValueError, match="guard"):
        orbit_count_direct(4, 11)
    with pytest.raises(ValueError):
        orbit_count_direct(2, 5)


def test_stratified_count_via_orbit_oracle():
    # full triangulation at tiny q: every stratum factor recomputed by the
    # explicit orbit enumeration instead of the product formula
    for n in (4, 5):
        for q in (2, 3, 5):
            total = 0
            for tree in enumerate_stable_trees(n):
                factor = 1
                for m in tree.valences():
                    factor *= orbit_count_direct(m, q)
                total += factor
            assert total == stratified_count(n, q)
