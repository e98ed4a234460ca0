"""Independent census of the strata of Mbar_{0,n}: stable dual trees with n
labeled legs, per-stratum point-count polynomials in q, and a brute-force
orbit count on the projective line for tiny prime fields.

A dual tree records one vertex per component of a stable curve, one edge per
node where two components meet, and one labeled leg per marked point.
Stability is the valence bound

    (incident edges) + (assigned legs) >= 3   at every vertex.

Enumeration runs over the number of vertices p = 1 .. n-2: every unlabeled
tree shape on p vertices is generated (Pruefer sequences, deduplicated up to
isomorphism), the n leg labels are distributed over the shape's vertices
subject to the valence bound, and the result is canonicalized.  Duplicate
avoidance is a plain set of canonical serializations; at this scale (n <= 8
gives 39208 trees) robustness beats cleverness.

Canonical form: a tree is serialized rooted at each graph-theoretic center
as "(sorted,legs;child1child2...)" with children sorted by their own
serialization, and the lexicographically smaller string wins.  Sibling
serializations never tie because sibling subtrees carry disjoint, nonempty
leg sets, so the string is a complete isomorphism invariant.  DualTree
values are rebuilt by parsing their canonical string, which makes == on
DualTree equality of leg-labeled isomorphism classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from heapq import heapify, heappop, heappush

from .algebra import IntPoly, is_prime, poly_eval, poly_mul, require_prime_power

ORBIT_GUARD_MAX_Q = 7   # (q+1)!/(q+1-n)! canonicalizations; 8!/1 worst case


@dataclass(frozen=True)
class DualTree:
    """Combinatorial type of a stable genus-zero curve, in canonical numbering.

    edges is a sorted tuple of sorted vertex pairs; legs[i] is the vertex
    carrying leg label i+1.
    """
    vertex_count: int
    edges: tuple
    legs: tuple

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def valences(self) -> tuple:
        val = [0] * self.vertex_count
        for a, b in self.edges:
            val[a] += 1
            val[b] += 1
        for v in self.legs:
            val[v] += 1
        return tuple(val)


@dataclass(frozen=True)
class StratumInfo:
    """One stratum row: its tree, point-count polynomial in q, and k(rho)."""
    tree: DualTree
    count_poly: IntPoly
    edge_count: int


# ---------------------------------------------------------------------------
# canonical serialization

def _adjacency(vertex_count, edges):
    adj = [[] for _ in range(vertex_count)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _centers(adj) -> list:
    """Graph-theoretic center(s) of a tree: one or two vertices."""
    p = len(adj)
    if p <= 2:
        return list(range(p))
    deg = [len(nb) for nb in adj]
    alive = p
    layer = [v for v in range(p) if deg[v] == 1]
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 0:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _serial_from(root, adj, legs_at) -> str:
    def rec(v, parent):
        parts = sorted(rec(u, v) for u in adj[v] if u != parent)
        return "(%s;%s)" % (",".join(map(str, legs_at[v])), "".join(parts))
    return rec(root, -1)


def _canonical_serial(adj, legs_at) -> str:
    return min(_serial_from(c, adj, legs_at) for c in _centers(adj))


def _parse_serial(serial: str) -> DualTree:
    """Rebuild the canonically numbered DualTree from its serialization."""
    edges = []
    legs = {}
    pos = 0
    counter = 0

    def node(parent):
        nonlocal pos, counter
        if serial[pos] != "(":
            raise ValueError("bad tree serialization %r" % serial)
        pos += 1
        v = counter
        counter += 1
        if parent >= 0:
            edges.append((parent, v))
        end = serial.index(";", pos)
        if end > pos:
            for tok in serial[pos:end].split(","):
                legs[int(tok)] = v
        pos = end + 1
        while serial[pos] == "(":
            node(v)
        pos += 1  # the closing parenthesis

    node(-1)
    if pos != len(serial):
        raise ValueError("trailing junk in tree serialization %r" % serial)
    n = len(legs)
    if sorted(legs) != list(range(1, n + 1)):
        raise ValueError("leg labels must be exactly 1..n")
    return DualTree(
        vertex_count=counter,
        edges=tuple(sorted(tuple(sorted(e)) for e in edges)),
        legs=tuple(legs[i] for i in range(1, n + 1)),
    )


def tree_serial(tree: DualTree) -> str:
    """Canonical serialization of a dual tree (a complete invariant)."""
    legs_at = [[] for _ in range(tree.vertex_count)]
    for label, v in enumerate(tree.legs, start=1):
        legs_at[v].append(label)
    return _canonical_serial(_adjacency(tree.vertex_count, tree.edges), legs_at)


def make_tree(vertex_count: int, edges, legs) -> DualTree:
    """Validate and canonicalize an arbitrary vertex/edge/leg description.

    legs maps label -> vertex (labels must be exactly 1..n).  Raises
    ValueError unless the edges form a tree and every vertex has valence
    at least 3.
    """
    edges = [tuple(sorted(e)) for e in edges]
    if len(edges) != len(set(edges)):
        raise ValueError("duplicate edges")
    for a, b in edges:
        if a == b or not (0 <= a < vertex_count and 0 <= b < vertex_count):
            raise ValueError("bad edge (%r, %r)" % (a, b))
    if len(edges) != vertex_count - 1:
        raise ValueError("a tree on %d vertices needs %d edges" % (vertex_count, vertex_count - 1))
    adj = _adjacency(vertex_count, edges)
    seen = [False] * vertex_count
    stack = [0]
    seen[0] = True
    while stack:
        for u in adj[stack.pop()]:
            if not seen[u]:
                seen[u] = True
                stack.append(u)
    if not all(seen):
        raise ValueError("edges do not connect the vertices")
    legs = dict(legs)
    n = len(legs)
    if sorted(legs) != list(range(1, n + 1)):
        raise ValueError("leg labels must be exactly 1..n")
    legs_at = [[] for _ in range(vertex_count)]
    for label in range(1, n + 1):
        v = legs[label]
        if not 0 <= v < vertex_count:
            raise ValueError("leg %d sits on unknown vertex %r" % (label, v))
        legs_at[v].append(label)
    for v in range(vertex_count):
        if len(adj[v]) + len(legs_at[v]) < 3:
            raise ValueError("vertex %d has valence < 3 (not stable)" % v)
    return _parse_serial(_canonical_serial(adj, legs_at))


# ---------------------------------------------------------------------------
# enumeration

def _pruefer_edges(seq, p):
    degree = [1] * p
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(p) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for v in seq:
        leaf = heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heappush(leaves, v)
    edges.append((heappop(leaves), heappop(leaves)))
    return edges


@lru_cache(maxsize=None)
def _tree_shapes(p: int) -> tuple:
    """All unlabeled trees on p vertices, as adjacency tuples."""
    if p == 1:
        return (((),),)
    if p == 2:
        return (((1,), (0,)),)
    no_legs = [[] for _ in range(p)]
    shapes = {}
    for seq in itertools.product(range(p), repeat=p - 2):
        adj = _adjacency(p, _pruefer_edges(seq, p))
        key = _canonical_serial(adj, no_legs)
        if key not in shapes:
            shapes[key] = tuple(tuple(sorted(nb)) for nb in adj)
    return tuple(shapes[k] for k in sorted(shapes))


def _leg_distributions(adj, n):
    """Yield legs-per-vertex lists meeting each vertex's valence deficit."""
    p = len(adj)
    deficit = [max(0, 3 - len(adj[v])) for v in range(p)]
    if sum(deficit) > n:
        return
    # vertices with the largest deficits first, so infeasible branches die early
    order = sorted(range(p), key=lambda v: -deficit[v])
    tail_need = [0] * (p + 1)
    for i in range(p - 1, -1, -1):
        tail_need[i] = tail_need[i + 1] + deficit[order[i]]
    legs_at = [()] * p

    def rec(i, remaining):
        v = order[i]
        if i == p - 1:
            if len(remaining) >= deficit[v]:
                legs_at[v] = remaining
                yield legs_at
            return
        lo = deficit[v]
        hi = len(remaining) - tail_need[i + 1]
        for size in range(lo, hi + 1):
            for chosen in itertools.combinations(remaining, size):
                legs_at[v] = chosen
                rest = tuple(x for x in remaining if x not in chosen)
                yield from rec(i + 1, rest)

    yield from rec(0, tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def enumerate_stable_trees(n: int) -> tuple:
    """Every isomorphism class of stable dual tree with legs 1..n, once each.

    Deterministic order: by vertex count, then by canonical serialization.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    serials = set()
    for p in range(1, n - 1):
        for adj in _tree_shapes(p):
            centers = _centers(adj)
            for legs_at in _leg_distributions(adj, n):
                serials.add(min(_serial_from(c, adj, legs_at) for c in centers))
    # every vertex contributes exactly one "(", so this sorts by vertex count
    ordered = sorted(serials, key=lambda s: (s.count("("), s))
    return tuple(_parse_serial(s) for s in ordered)


# ---------------------------------------------------------------------------
# stratum counting

@lru_cache(maxsize=None)
def open_stratum_poly(m: int) -> IntPoly:
    """Number of PGL2(F_q)-orbits of m distinct labeled points on P^1(F_q).

    The group is simply transitive on ordered triples of distinct points,
    which pins the first three points at (0, 1, oo) and leaves the product
    prod_{j=2}^{m-2} (q - j) of remaining choices; the empty product (m = 3)
    is 1.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    poly = (1,)
    for j in range(2, m - 1):
        poly = poly_mul(poly, (-j, 1))
    return poly


@lru_cache(maxsize=None)
def strata_table(n: int) -> tuple:
    """StratumInfo for every stable tree with n legs, in enumeration order."""
    rows = []
    for tree in enumerate_stable_trees(n):
        poly = (1,)
        for m in tree.valences():
            poly = poly_mul(poly, open_stratum_poly(m))
        rows.append(StratumInfo(tree, poly, tree.edge_count))
    return tuple(rows)


def stratified_count(n: int, q: int) -> int:
    """|Mbar_{0,n}(F_q)| summed stratum by stratum over all dual trees."""
    require_prime_power(q)
    return sum(poly_eval(row.count_poly, q) for row in strata_table(n))


def boundary_edge_sum(n: int, q: int) -> int:
    """Sum of k(rho) over the F_q-points rho of the boundary strata."""
    require_prime_power(q)
    return sum(
        row.edge_count * poly_eval(row.count_poly, q)
        for row in strata_table(n)
        if row.edge_count
    )


# ---------------------------------------------------------------------------
# explicit orbit counting over tiny prime fields

def projective_points(p: int) -> list:
    """P^1(F_p) as 0..p-1 plus None for the point at infinity."""
    return list(range(p)) + [None]


def _homog(z, p):
    return (1, 0) if z is None else (z % p, 1)


def _canonical_tail(points, p):
    # Unique Moebius map sending the first three points to (0, 1, oo):
    # the top row annihilates points[0], the bottom row annihilates
    # points[2], and the bottom row is scaled so points[1] lands on 1.
    (x1, y1), (x2, y2), (x3, y3) = (_homog(z, p) for z in points[:3])
    top = (y1, -x1 % p)
    bot = (y3, -x3 % p)
    t_top = (top[0] * x2 + top[1] * y2) % p
    t_bot = (bot[0] * x2 + bot[1] * y2) % p
    mu = t_top * pow(t_bot, -1, p) % p
    out = []
    for z in points[3:]:
        x, y = _homog(z, p)
        u = (top[0] * x + top[1] * y) % p
        w = mu * (bot[0] * x + bot[1] * y) % p
        out.append(None if w == 0 else u * pow(w, -1, p) % p)
    return tuple(out)


def orbit_count_direct(n: int, q: int) -> int:
    """Count n-tuples of distinct points on P^1(F_q) up to PGL2(F_q).

    Brute force: canonicalize every configuration by the unique Moebius map
    pinning its first three points at (0, 1, oo) and count distinct
    canonical forms.  Supports prime q only (field arithmetic is integers
    mod p) and guards q <= 7, which caps the enumeration at 8!/1 = 40320
    configurations.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not is_prime(q):
        raise ValueError(
            "explicit orbit enumeration supports prime fields only, not q = %d" % q
        )
    if q > ORBIT_GUARD_MAX_Q:
        raise ValueError(
            "resource guard: explicit orbit enumeration is capped at q <= %d"
            % ORBIT_GUARD_MAX_Q
        )
    if n > q + 1:
        return 0  # pigeonhole: no n distinct points on a (q+1)-point line
    seen = set()
    for config in itertools.permutations(projective_points(q), n):
        seen.add(_canonical_tail(config, q))
    return len(seen)
