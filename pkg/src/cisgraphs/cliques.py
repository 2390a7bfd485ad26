"""Maximal clique / maximal stable set enumeration and clique predicates.

Families are returned as lists of bitmasks in ascending mask order, so
every caller sees the same deterministic family for a given graph.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, bits, complement

DEFAULT_FAMILY_CAP = 1 << 20


class FamilyCapExceeded(RuntimeError):
    """Raised when a graph has more maximal cliques than the configured cap."""


def maximal_cliques(g: Graph, cap: int = DEFAULT_FAMILY_CAP):
    """All inclusion-maximal cliques of g, as bitmasks sorted ascending.

    Bron-Kerbosch with a max-degree pivot; deterministic for a given graph.
    """
    out = []
    closed = [g.closed_nbhd(v) for v in range(g.n)]

    def expand(clique: int, cand: int, excl: int):
        if not cand and not excl:
            if len(out) >= cap:
                raise FamilyCapExceeded(f"more than {cap} maximal cliques")
            out.append(clique)
            return
        # pivot: vertex of cand|excl covering the most candidates
        pivot = max(
            bits(cand | excl), key=lambda v: (g.adj[v] & cand).bit_count()
        )
        for v in bits(cand & ~g.adj[pivot]):
            expand(clique | 1 << v, cand & g.adj[v], excl & g.adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, g.full, 0)
    out.sort()
    return out


def maximal_stable_sets(g: Graph, cap: int = DEFAULT_FAMILY_CAP):
    return maximal_cliques(complement(g), cap)


def is_strong_clique(g: Graph, clique: int, stables=None) -> bool:
    """True iff the clique meets every maximal stable set of g."""
    if not g.is_clique(clique):
        raise ValueError("vertex set is not a clique")
    if stables is None:
        stables = maximal_stable_sets(g)
    return all(clique & s for s in stables)


def simplicial_cliques(g: Graph):
    """All distinct closed neighborhoods N[v] that are cliques."""
    seen = set()
    out = []
    for v in range(g.n):
        nb = g.closed_nbhd(v)
        if nb not in seen and g.is_clique(nb):
            seen.add(nb)
            out.append(nb)
    out.sort()
    return out


def covers_edges(g: Graph, family) -> bool:
    return all(
        any(mask >> u & 1 and mask >> v & 1 for mask in family)
        for u, v in g.edges()
    )


def covers_nonedges(g: Graph, family) -> bool:
    return all(
        any(mask >> u & 1 and mask >> v & 1 for mask in family)
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.has_edge(u, v)
    )


def covers_vertices(g: Graph, family) -> bool:
    covered = 0
    for mask in family:
        covered |= mask
    return covered & g.full == g.full


def maximal_cliques_brute(g: Graph):
    """Subset-lattice oracle for small n; used only in tests."""
    cliques = [m for m in range(1, 1 << g.n) if g.is_clique(m)]
    as_set = set(cliques)
    out = []
    for c in cliques:
        if not any(
            c | 1 << v in as_set for v in range(g.n) if not c >> v & 1
        ):
            out.append(c)
    return sorted(out)
