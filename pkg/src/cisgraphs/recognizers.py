"""Class predicates: CIS and relatives, split/threshold/cograph, triangle
conditions, edge simplicial, perfect, plus the co-/cap-/cup- modifier
dispatch used by the table verifier and the scans.

Degenerate verdicts are fixed: edgeless graphs are edge simplicial,
semi-weakly CIS and triangle vacuously; K1 is CIS and not almost CIS.
"""

from __future__ import annotations

import itertools

from .cliques import (
    covers_nonedges,
    maximal_cliques,
    maximal_stable_sets,
    simplicial_cliques,
)
from .graphs import Graph, bits, complement, mask_of


class UnsupportedSize(ValueError):
    """Input too large for an exact predicate (perfect: n <= 16)."""


# ---------------------------------------------------------------------------
# forbidden induced subgraphs on 4 vertices
#
# The induced degree multiset identifies every 4-vertex graph, so the
# threshold / cograph tests reduce to a scan over 4-subsets.

_DEG_P4 = (1, 1, 2, 2)
_DEG_C4 = (2, 2, 2, 2)
_DEG_2K2 = (1, 1, 1, 1)


def _four_subset_degrees(g: Graph):
    for quad in itertools.combinations(range(g.n), 4):
        m = mask_of(quad)
        yield quad, tuple(sorted((g.adj[v] & m).bit_count() for v in quad))


def is_cograph(g: Graph) -> bool:
    return all(d != _DEG_P4 for _, d in _four_subset_degrees(g))


def is_threshold(g: Graph) -> bool:
    bad = (_DEG_P4, _DEG_C4, _DEG_2K2)
    return all(d not in bad for _, d in _four_subset_degrees(g))


def induced_p4s(g: Graph):
    """All induced paths a-b-c-d, with (b, c) ranging over ordered edges."""
    for b in range(g.n):
        for c in bits(g.adj[b]):
            for a in bits(g.adj[b] & ~g.closed_nbhd(c)):
                for d in bits(g.adj[c] & ~g.closed_nbhd(b) & ~(1 << a)):
                    if not g.has_edge(a, d):
                        yield (a, b, c, d)


# ---------------------------------------------------------------------------
# split graphs


def split_partition(g: Graph):
    """A split partition (clique mask, stable mask), or None.

    A graph is split iff some maximal clique has a stable complement.
    """
    for c in maximal_cliques(g):
        rest = g.full & ~c
        if g.is_stable(rest):
            return (c, rest)
    return None


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def count_split_partitions(g: Graph) -> int:
    """Number of partitions V = C + S with C a clique and S stable
    (clique side labeled; used by the almost-CIS cross-check)."""
    return sum(
        1
        for c in range(1 << g.n)
        if g.is_clique(c) and g.is_stable(g.full & ~c)
    )


# ---------------------------------------------------------------------------
# CIS family


def disjoint_pairs(g: Graph, limit: int | None = None):
    """Disjoint (maximal clique, maximal stable set) pairs, canonical order."""
    cliques = maximal_cliques(g)
    stables = maximal_stable_sets(g)
    out = []
    for c in cliques:
        for s in stables:
            if not c & s:
                out.append((c, s))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_cis(g: Graph) -> bool:
    return not disjoint_pairs(g, limit=1)


def cis_certificate(g: Graph):
    """None if CIS, else the first disjoint (clique, stable set) pair."""
    pairs = disjoint_pairs(g, limit=1)
    return pairs[0] if pairs else None


def is_almost_cis(g: Graph) -> bool:
    """Exactly one disjoint pair; cross-checked against the unique-split-
    partition characterization.  Disagreement is a bug, hence the assert."""
    by_pairs = len(disjoint_pairs(g, limit=2)) == 1
    if g.n <= 20:
        by_split = is_split(g) and count_split_partitions(g) == 1
        assert by_pairs == by_split, "almost-CIS characterizations disagree"
    return by_pairs


def is_quasi_cis(g: Graph) -> bool:
    return len(disjoint_pairs(g, limit=2)) <= 1


# ---------------------------------------------------------------------------
# edge simplicial / semi-weakly CIS


def is_edge_simplicial(g: Graph) -> bool:
    simp = simplicial_cliques(g)
    return all(
        any(m >> u & 1 and m >> v & 1 for m in simp) for u, v in g.edges()
    )


def strong_maximal_cliques(g: Graph):
    stables = maximal_stable_sets(g)
    return [c for c in maximal_cliques(g) if all(c & s for s in stables)]


def is_semi_weakly_cis(g: Graph) -> bool:
    """Edge covering family of strong cliques exists.

    Restricting to *maximal* strong cliques is safe: a clique contained in
    a maximal clique meets every stable set the bigger clique misses, so
    strength is monotone under taking clique supersets.
    """
    strong = strong_maximal_cliques(g)
    return all(
        any(m >> u & 1 and m >> v & 1 for m in strong) for u, v in g.edges()
    )


# ---------------------------------------------------------------------------
# triangle conditions


def triangle_violation(g: Graph):
    """First (stable set, edge) violating the triangle condition, or None."""
    for s in maximal_stable_sets(g):
        for u, v in g.edges():
            if s >> u & 1 or s >> v & 1:
                continue
            if not g.adj[u] & g.adj[v] & s:
                return (s, (u, v))
    return None


def is_triangle(g: Graph) -> bool:
    return triangle_violation(g) is None


def _stable_set_has_triangle_property(g: Graph, s: int) -> bool:
    for u, v in g.edges():
        if s >> u & 1 or s >> v & 1:
            continue
        if not g.adj[u] & g.adj[v] & s:
            return False
    return True


def is_weakly_triangle(g: Graph) -> bool:
    """Non-edge covering family of maximal stable sets, each with the
    triangle property.

    The property is per-set, so the family of *all* admissible maximal
    stable sets is the unique inclusion-maximal candidate; coverage by it
    decides the class.
    """
    admissible = [
        s
        for s in maximal_stable_sets(g)
        if _stable_set_has_triangle_property(g, s)
    ]
    return covers_nonedges(g, admissible)


def has_bad_p4(g: Graph) -> bool:
    """Induced a-b-c-d with a maximal stable set containing a, d and no
    common neighbor of b, c inside it."""
    stables = maximal_stable_sets(g)
    for a, b, c, d in induced_p4s(g):
        want = 1 << a | 1 << d
        for s in stables:
            if s & want == want and not g.adj[b] & g.adj[c] & s:
                return True
    return False


# ---------------------------------------------------------------------------
# perfect (Berge: no odd hole in g or its complement), n <= 16


def _has_odd_hole(g: Graph) -> bool:
    n = g.n
    for m in range(1, 1 << n):
        k = m.bit_count()
        if k < 5 or k % 2 == 0:
            continue
        ok = True
        for v in bits(m):
            if (g.adj[v] & m).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        # 2-regular: a single cycle iff connected
        start = (m & -m).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & m
            frontier = nxt & ~seen
            seen |= nxt
        if seen & m == m:
            return True
    return False


def is_perfect(g: Graph) -> bool:
    if g.n > 16:
        raise UnsupportedSize("perfect test limited to n <= 16")
    return not (_has_odd_hole(g) or _has_odd_hole(complement(g)))


# ---------------------------------------------------------------------------
# property dispatch

MODIFIERS = ("plain", "co", "cap", "cup")


def _base_predicates():
    # imported here so that search/equistable can depend on this module's
    # predicates in their own tests without an import cycle
    from . import equistable, search

    return {
        "threshold": is_threshold,
        "cograph": is_cograph,
        "split": is_split,
        "edge_simplicial": is_edge_simplicial,
        "cis": is_cis,
        "almost_cis": is_almost_cis,
        "quasi_cis": is_quasi_cis,
        "semi_weakly_cis": is_semi_weakly_cis,
        "weakly_cis": search.is_weakly_cis,
        "triangle": is_triangle,
        "weakly_triangle": is_weakly_triangle,
        "normal": search.is_normal,
        "perfect": is_perfect,
        "equistable": lambda g: equistable.is_equistable(g).verdict,
        "strongly_equistable": lambda g: equistable.is_strongly_equistable(g).verdict,
    }


_PREDICATES = None


def base_predicate(name: str):
    global _PREDICATES
    if _PREDICATES is None:
        _PREDICATES = _base_predicates()
    return _PREDICATES[name]


def apply_modifier(base: str, modifier: str, g: Graph) -> bool:
    """Evaluate (base, modifier): co = on the complement, cap = both,
    cup = either."""
    pred = base_predicate(base)
    if modifier == "plain":
        return pred(g)
    if modifier == "co":
        return pred(complement(g))
    if modifier == "cap":
        return pred(g) and pred(complement(g))
    if modifier == "cup":
        return pred(g) or pred(complement(g))
    raise ValueError(f"unknown modifier {modifier!r}")
