"""Named separating graphs, projective-plane split graphs, random split graphs.

Vertex numbering is fixed: graphs given in the source by 1-based labels are
shifted to 0-based, split constructions put the clique side first.
"""

from __future__ import annotations

import itertools
import random

from .graphs import BigGraph, Graph, GraphError, complement, disjoint_union

# G12: adjacency is "u,v lie together in some listed maximal clique"
# (1-based labels shifted to 0-based).
G12_CLIQUES = [
    frozenset(s)
    for s in (
        {1, 4, 7}, {2, 4, 5, 6}, {2, 4, 6, 7}, {2, 4, 6, 9}, {2, 4, 9, 12},
        {2, 5, 8}, {2, 6, 7, 11}, {2, 11, 12}, {3, 6, 9}, {4, 5, 6, 10},
        {4, 10, 12}, {6, 10, 11}, {10, 11, 12},
    )
]
G12_STABLE_SETS = [
    frozenset(s)
    for s in (
        {1, 2, 3, 10}, {1, 3, 5, 11}, {1, 3, 5, 12}, {1, 3, 8, 10},
        {1, 3, 8, 11}, {1, 3, 8, 12}, {1, 5, 9, 11}, {1, 6, 8, 12},
        {1, 8, 9, 10}, {1, 8, 9, 11}, {3, 4, 8, 11}, {3, 5, 7, 12},
        {3, 7, 8, 10}, {3, 7, 8, 12}, {5, 7, 9}, {7, 8, 9, 10},
    )
]
# The weakly-CIS certificate subfamilies for G12.
G12_CLIQUE_SUBFAMILY = [
    frozenset(s)
    for s in (
        {1, 4, 7}, {2, 4, 9, 12}, {2, 5, 8}, {2, 6, 7, 11}, {3, 6, 9},
        {4, 5, 6, 10}, {10, 11, 12},
    )
]
G12_STABLE_SUBFAMILY = [
    frozenset(s)
    for s in (
        {1, 2, 3, 10}, {1, 5, 9, 11}, {1, 6, 8, 12}, {3, 4, 8, 11},
        {3, 5, 7, 12}, {7, 8, 9, 10},
    )
]

# Cir9: adjacency is "no listed maximal stable set contains both u and v".
CIR9_STABLE_SETS = [
    frozenset(s)
    for s in ({1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {3, 6, 9})
]

GALLERY_NAMES = (
    "K1", "P4", "C4", "TwoK2", "Bull", "Net", "S3", "SK", "CK", "C5Star",
    "C9", "Cir9", "F", "FK", "G12", "LK33",
)
BIG_GALLERY_NAMES = ("L", "LLbar")


def _shift(sets):
    return [frozenset(v - 1 for v in s) for s in sets]


def _graph_from_cliques(n: int, cliques) -> Graph:
    edges = set()
    for c in cliques:
        edges.update(itertools.combinations(sorted(c), 2))
    return Graph(n, edges)


def _graph_from_stable_sets(n: int, stables) -> Graph:
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if not any(u in s and v in s for s in stables)
    ]
    return Graph(n, edges)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _sun3() -> Graph:
    # clique {0,1,2}; vertex 3+k is the private pair vertex of edge k
    edges = [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)]
    return Graph(6, edges)


def _glue_triangles(base: Graph) -> Graph:
    """New apex vertex adjacent to both endpoints of every edge of ``base``."""
    edges = list(base.edges())
    n = base.n + len(edges)
    out = list(base.edges())
    for k, (u, v) in enumerate(edges):
        a = base.n + k
        out += [(a, u), (a, v)]
    return Graph(n, out)


def _rook33() -> Graph:
    # line graph of K_{3,3}: vertices (i,j), adjacent iff they share a row
    # or a column
    verts = list(itertools.product(range(3), range(3)))
    pos = {p: k for k, p in enumerate(verts)}
    edges = [
        (pos[p], pos[q])
        for p, q in itertools.combinations(verts, 2)
        if p[0] == q[0] or p[1] == q[1]
    ]
    return Graph(9, edges)


def _projective_points(q: int):
    """Points of PG(2, q) as normalized homogeneous triples over GF(q)."""
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def projective_split(q: int) -> Graph:
    """Split incidence graph of the projective plane over GF(q), q prime.

    Points come first and form a clique, lines follow and form a stable set;
    a point is adjacent to the lines through it.  q in {2, 3, 5} keeps the
    graph within 64 vertices.
    """
    if q not in (2, 3, 5):
        raise GraphError("projective plane order must be a prime in {2, 3, 5}")
    pts = _projective_points(q)
    npt = len(pts)  # q^2 + q + 1; lines are indexed by the same triples
    edges = list(itertools.combinations(range(npt), 2))
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if sum(a * b for a, b in zip(p, line)) % q == 0:
                edges.append((i, npt + j))
    return Graph(2 * npt, edges)


def _cross_adjacency(k: int, l: int, seed: int):
    """Clique-to-stable adjacency rows of the random split graph, as masks."""
    rng = random.Random(seed)
    return [
        sum(rng.getrandbits(1) << s for s in range(l)) for _ in range(k)
    ]


def random_split(k: int, l: int, seed: int):
    """Random split graph: clique of size k, stable set of size l, each
    cross pair an edge with probability 1/2 under the seeded PRNG.

    Returns a :class:`Graph` when k + l <= 64, else a :class:`BigGraph`
    (the statistical acceptance run uses k = l = 40).
    """
    if k < 1 or l < 1:
        raise GraphError("both sides of the split must be nonempty")
    rows = _cross_adjacency(k, l, seed)
    edges = list(itertools.combinations(range(k), 2))
    edges += [(c, k + s) for c in range(k) for s in range(l) if rows[c] >> s & 1]
    if k + l <= 64:
        return Graph(k + l, edges)
    return BigGraph(k + l, edges)


def random_split_lemma_properties(k: int, l: int, seed: int):
    """The four structural properties of the random split construction:
    S maximal stable, C maximal clique, common neighbors in S for clique
    pairs, common non-neighbors in C for stable pairs.
    """
    rows = _cross_adjacency(k, l, seed)
    s_maximal = all(rows[c] != 0 for c in range(k))
    c_maximal = all(
        any(not rows[c] >> s & 1 for c in range(k)) for s in range(l)
    )
    common_nbr = all(
        rows[c1] & rows[c2]
        for c1, c2 in itertools.combinations(range(k), 2)
    )
    common_nonnbr = all(
        any((~rows[c] >> s1 & 1) and (~rows[c] >> s2 & 1) for c in range(k))
        for s1, s2 in itertools.combinations(range(l), 2)
    )
    return (s_maximal, c_maximal, common_nbr, common_nonnbr)


def _big_L() -> BigGraph:
    """Line graph of K_{5,6} with a new triangle apex glued on every edge."""
    verts = list(itertools.product(range(5), range(6)))
    pos = {p: i for i, p in enumerate(verts)}
    base_edges = [
        (pos[p], pos[q])
        for p, q in itertools.combinations(verts, 2)
        if p[0] == q[0] or p[1] == q[1]
    ]
    n = len(verts)
    edges = list(base_edges)
    for j, (u, v) in enumerate(base_edges):
        a = n + j
        edges += [(a, u), (a, v)]
    return BigGraph(n + len(base_edges), edges)


def big_L_clique_families():
    """The 5 disjoint 6-cliques and 6 disjoint 5-cliques of L covering the
    line-graph-of-K_{5,6} part of the vertex set (rows/columns of the rook's
    graph)."""
    verts = list(itertools.product(range(5), range(6)))
    pos = {p: i for i, p in enumerate(verts)}
    six_cliques = [
        {pos[(i, j)] for j in range(6)} for i in range(5)
    ]
    five_cliques = [
        {pos[(i, j)] for i in range(5)} for j in range(6)
    ]
    return six_cliques, five_cliques


def gallery(name: str) -> Graph:
    """The named graph from the separating-example list (bitset graphs only;
    L and LLbar live in :func:`big_gallery`)."""
    if name in BIG_GALLERY_NAMES:
        raise GraphError(
            f"{name} exceeds 64 vertices; use big_gallery({name!r})"
        )
    try:
        return _GALLERY_BUILDERS[name]()
    except KeyError:
        raise GraphError(f"unknown gallery graph {name!r}") from None


def big_gallery(name: str) -> BigGraph:
    if name == "L":
        return _big_L()
    if name == "LLbar":
        left = _big_L()
        return left.disjoint_union(left.complement())
    raise GraphError(f"unknown big gallery graph {name!r}")


_GALLERY_BUILDERS = {
    "K1": lambda: Graph(1),
    "P4": lambda: path(4),
    "C4": lambda: cycle(4),
    "TwoK2": lambda: Graph(4, [(0, 1), (2, 3)]),
    "Bull": lambda: Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
    "S3": _sun3,
    "Net": lambda: complement(_sun3()),
    "SK": lambda: disjoint_union(_sun3(), complete(2)),
    "CK": lambda: disjoint_union(cycle(4), complete(2)),
    "C5Star": lambda: _glue_triangles(cycle(5)),
    "C9": lambda: cycle(9),
    "Cir9": lambda: _graph_from_stable_sets(9, _shift(CIR9_STABLE_SETS)),
    "F": lambda: projective_split(2),
    "FK": lambda: disjoint_union(projective_split(2), complete(2)),
    "G12": lambda: _graph_from_cliques(12, _shift(G12_CLIQUES)),
    "LK33": _rook33,
}
