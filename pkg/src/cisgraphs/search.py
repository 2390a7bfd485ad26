"""Existence search for cross-intersecting clique/stable-set subfamilies.

One boolean per candidate maximal clique / maximal stable set, binary
exclusion constraints for disjoint pairs, one covering clause per edge,
non-edge or vertex.  Solved by unit-propagating backtracking that always
branches on the unsatisfied clause with the fewest open candidates, in
canonical family order, so certificates are reproducible.
"""

from __future__ import annotations

import itertools

from .cliques import maximal_cliques, maximal_stable_sets
from .graphs import Graph

DEFAULT_BACKTRACK_CAP = 1_000_000


class SearchUndecided(RuntimeError):
    """Backtrack budget exhausted; never silently reported as 'no'."""


def _coverage_clauses(g: Graph, cliques, stables, clique_target, stable_target):
    clauses = []
    nc = len(cliques)
    if clique_target == "edges":
        for u, v in g.edges():
            need = 1 << u | 1 << v
            clauses.append([i for i, c in enumerate(cliques) if c & need == need])
    elif clique_target == "vertices":
        for v in range(g.n):
            clauses.append([i for i, c in enumerate(cliques) if c >> v & 1])
    else:
        raise ValueError(clique_target)
    if stable_target == "nonedges":
        for u, v in itertools.combinations(range(g.n), 2):
            if g.has_edge(u, v):
                continue
            need = 1 << u | 1 << v
            clauses.append(
                [nc + j for j, s in enumerate(stables) if s & need == need]
            )
    elif stable_target == "vertices":
        for v in range(g.n):
            clauses.append([nc + j for j, s in enumerate(stables) if s >> v & 1])
    else:
        raise ValueError(stable_target)
    return clauses


def exists_cross_intersecting(
    g: Graph,
    clique_target: str = "edges",
    stable_target: str = "nonedges",
    backtrack_cap: int = DEFAULT_BACKTRACK_CAP,
):
    """Cross-intersecting covering subfamilies of the maximal clique and
    maximal stable set families, or None if none exist.

    Returns (clique masks, stable masks) on success.  Restricting the
    candidates to maximal sets is what the definitions ask for, so the
    search is complete.
    """
    cliques = maximal_cliques(g)
    stables = maximal_stable_sets(g)
    nc, ns = len(cliques), len(stables)
    nv = nc + ns
    excl = [[] for _ in range(nv)]
    for i, c in enumerate(cliques):
        for j, s in enumerate(stables):
            if not c & s:
                excl[i].append(nc + j)
                excl[nc + j].append(i)
    clauses = _coverage_clauses(g, cliques, stables, clique_target, stable_target)
    if any(not cl for cl in clauses):
        return None

    state = [None] * nv  # None / True / False
    trail = []
    backtracks = 0

    def assign(var, value):
        """Set a variable, propagating exclusions; False on conflict."""
        queue = [(var, value)]
        while queue:
            v, val = queue.pop()
            if state[v] is not None:
                if state[v] != val:
                    return False
                continue
            state[v] = val
            trail.append(v)
            if val:
                for w in excl[v]:
                    if state[w] is True:
                        return False
                    if state[w] is None:
                        queue.append((w, False))
        return True

    def undo(mark):
        while len(trail) > mark:
            state[trail.pop()] = None

    def pick_clause():
        best = None
        for cl in clauses:
            if any(state[v] is True for v in cl):
                continue
            open_vars = [v for v in cl if state[v] is None]
            if not open_vars:
                return []
            if best is None or len(open_vars) < len(best):
                best = open_vars
                if len(best) == 1:
                    break
        return best

    def solve():
        nonlocal backtracks
        cl = pick_clause()
        if cl is None:
            return True
        entry = len(trail)
        for v in cl:
            mark = len(trail)
            if assign(v, True) and solve():
                return True
            undo(mark)
            backtracks += 1
            if backtracks > backtrack_cap:
                raise SearchUndecided("backtrack cap exceeded")
            if not assign(v, False):
                undo(entry)
                return False
        undo(entry)
        return False

    if not solve():
        return None
    chosen_c = [c for i, c in enumerate(cliques) if state[i] is True]
    chosen_s = [s for j, s in enumerate(stables) if state[nc + j] is True]
    return chosen_c, chosen_s


def verify_cover_certificate(
    g: Graph, chosen_cliques, chosen_stables, clique_target="edges",
    stable_target="nonedges",
) -> bool:
    """Re-verify an (externally supplied) certificate by set arithmetic."""
    cliques = set(maximal_cliques(g))
    stables = set(maximal_stable_sets(g))
    if not all(c in cliques for c in chosen_cliques):
        return False
    if not all(s in stables for s in chosen_stables):
        return False
    if any(not c & s for c in chosen_cliques for s in chosen_stables):
        return False
    clauses = _coverage_clauses(
        g, list(chosen_cliques), list(chosen_stables), clique_target,
        stable_target,
    )
    return all(clauses)


def is_weakly_cis(g: Graph) -> bool:
    return exists_cross_intersecting(g, "edges", "nonedges") is not None


def is_normal(g: Graph) -> bool:
    return exists_cross_intersecting(g, "vertices", "vertices") is not None
