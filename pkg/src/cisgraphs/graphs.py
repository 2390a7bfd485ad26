"""Small-graph core: bitset graphs, graph6 I/O, complement/union/join, isomorphism.

Vertices are 0..n-1.  Adjacency rows and vertex sets are plain Python ints
used as bitmasks, which keeps all the set algebra branch-free for n <= 64.
Graphs too large for a single word (the L / L-Lbar gallery items) use the
adjacency-set fallback :class:`BigGraph`.
"""

from __future__ import annotations

import itertools
import random


class GraphError(ValueError):
    pass


def bits(mask: int):
    """Iterate over the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph on at most 64 vertices, immutable."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges=()):
        if not 1 <= n <= 64:
            raise GraphError(f"vertex count {n} outside 1..64")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_adj(cls, adj) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._hash = None
        return g

    @property
    def full(self) -> int:
        """Mask with all n vertex bits set."""
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self):
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def closed_nbhd(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.closed_nbhd(v):
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def subgraph(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``mask``, relabeled 0..k-1."""
        verts = list(bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        edges = [
            (pos[u], pos[v])
            for u, v in itertools.combinations(verts, 2)
            if self.has_edge(u, v)
        ]
        return Graph(max(len(verts), 1), edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.adj)
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph.from_adj([full & ~g.closed_nbhd(v) for v in range(g.n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > 64:
        raise GraphError("disjoint union exceeds 64 vertices")
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph.from_adj(adj)


def join(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > 64:
        raise GraphError("join exceeds 64 vertices")
    m1 = (1 << g1.n) - 1
    m2 = ((1 << g2.n) - 1) << g1.n
    adj = [row | m2 for row in g1.adj]
    adj += [(row << g1.n) | m1 for row in g2.adj]
    return Graph.from_adj(adj)


# ---------------------------------------------------------------------------
# graph6 encoding (standard format: 6-bit groups, MSB first, upper triangle
# column-major)

_G6_HEADER = ">>graph6<<"


def _g6_order(text: str):
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise GraphError("empty graph6 string")
    c = ord(text[0])
    if c == 126:  # '~': extended order
        if len(text) < 4:
            raise GraphError("truncated graph6 order")
        if ord(text[1]) == 126:
            raise GraphError("graph6 order above 258047 not supported")
        n = 0
        for ch in text[1:4]:
            d = ord(ch) - 63
            if not 0 <= d < 64:
                raise GraphError(f"bad graph6 order byte {ch!r}")
            n = n << 6 | d
        return n, text[4:]
    if not 63 <= c <= 125:
        raise GraphError(f"bad graph6 order byte {text[0]!r}")
    return c - 63, text[1:]


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (n <= 64)."""
    n, payload = _g6_order(text.strip())
    if n < 1:
        raise GraphError("graph6 order must be at least 1")
    if n > 64:
        raise GraphError(f"graph6 order {n} exceeds 64")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) < need:
        raise GraphError("truncated graph6 bit payload")
    if len(payload) > need:
        raise GraphError("trailing bytes after graph6 payload")
    bitstream = 0
    for ch in payload:
        d = ord(ch) - 63
        if not 0 <= d < 64:
            raise GraphError(f"bad graph6 payload byte {ch!r}")
        bitstream = bitstream << 6 | d
    bitstream >>= 6 * need - nbits
    edges = []
    k = nbits
    for col in range(1, n):
        for row in range(col):
            k -= 1
            if bitstream >> k & 1:
                edges.append((row, col))
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    stream = 0
    nbits = 0
    for col in range(1, n):
        for row in range(col):
            stream = stream << 1 | (g.adj[row] >> col & 1)
            nbits += 1
    pad = (-nbits) % 6
    stream <<= pad
    nbits += pad
    return head + "".join(
        chr((stream >> s & 63) + 63) for s in range(nbits - 6, -1, -6)
    )


def parse_edge_list(text: str) -> Graph:
    """Edge-list fallback format: one "u v" pair per line, 0-based.

    An optional first line with a single integer fixes the vertex count
    (needed when trailing vertices are isolated).
    """
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1 and n is None and not edges:
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
    if n is None:
        if not edges:
            raise GraphError("empty edge list and no vertex count")
        n = max(max(u, v) for u, v in edges) + 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse graph6 if the input looks like it, else fall back to edge list."""
    stripped = text.strip()
    if "\n" not in stripped and (
        stripped.startswith(_G6_HEADER) or not any(c.isspace() for c in stripped)
    ):
        return parse_graph6(stripped)
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# isomorphism (permutation backtracking with degree pruning; fine to n ~ 10)


def _refine_colors(g: Graph, rounds: int = 3):
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def iso_invariant(g: Graph):
    """Cheap isomorphism invariant used for bucketing before exact checks."""
    return (g.n, g.edge_count(), tuple(sorted(_refine_colors(g))))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    c1, c2 = _refine_colors(g1), _refine_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    # map vertices of g1 in order of decreasing constraint (rarest color first)
    from collections import Counter

    freq = Counter(c1)
    order = sorted(range(n), key=lambda v: (freq[c1[v]], -g1.degree(v)))
    candidates = [[w for w in range(n) if c2[w] == c1[v]] for v in order]
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in candidates[i]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (g1.adj[v] >> u & 1) != (g2.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used ^= 1 << w
                mapping[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# adjacency-set fallback for graphs above 64 vertices


class BigGraph:
    """Adjacency-set graph without the 64-vertex cap.

    Only the operations needed by the oversized gallery items (L and its
    complement) are provided; everything else in the package requires
    :class:`Graph`.
    """

    def __init__(self, n: int, edges=()):
        self.n = n
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            self.adj[u].add(v)
            self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def is_clique(self, verts) -> bool:
        vs = list(verts)
        return all(v in self.adj[u] for u, v in itertools.combinations(vs, 2))

    def is_stable(self, verts) -> bool:
        vs = list(verts)
        return not any(v in self.adj[u] for u, v in itertools.combinations(vs, 2))

    def is_maximal_clique(self, verts) -> bool:
        vs = set(verts)
        if not self.is_clique(vs):
            return False
        outside = set(range(self.n)) - vs
        return not any(vs <= self.adj[w] for w in outside)

    def complement(self) -> "BigGraph":
        g = BigGraph(self.n)
        allv = set(range(self.n))
        for v in range(self.n):
            g.adj[v] = allv - self.adj[v] - {v}
        return g

    def disjoint_union(self, other: "BigGraph") -> "BigGraph":
        g = BigGraph(self.n + other.n)
        for v in range(self.n):
            g.adj[v] = set(self.adj[v])
        for v in range(other.n):
            g.adj[self.n + v] = {self.n + w for w in other.adj[v]}
        return g

    def simplicial_cliques(self):
        """All distinct closed neighborhoods that are cliques."""
        seen = set()
        out = []
        for v in range(self.n):
            nb = frozenset(self.adj[v]) | {v}
            if nb in seen:
                continue
            if self.is_clique(nb):
                seen.add(nb)
                out.append(set(nb))
        return out

    def is_edge_simplicial(self) -> bool:
        cliques = self.simplicial_cliques()
        per_vertex = [[] for _ in range(self.n)]
        for c in cliques:
            for v in c:
                per_vertex[v].append(c)
        return all(
            any(v in c for c in per_vertex[u]) for u, v in self.edges()
        )


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return Graph(n, edges)
