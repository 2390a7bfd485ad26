"""Exact decision procedures for equistable and strongly equistable graphs.

The feasible region is the polytope  P = { w >= 0 : w(S) = 1 for every
maximal stable set S }.  For a nonempty convex set, a linear functional
w(T) takes a single value on all of P iff it is constant on the affine
hull of P, which equals the solution set of the stable-set equalities
together with the implicitly tight bounds w(v) = 0.  So:

* not equistable  iff P is empty or some other nonempty subset T has
  w(T) identically 1 on P;
* not strongly equistable iff P is empty or some such T has w(T)
  identically equal to a value <= 1.

Constancy of w(T) is tested against a null-space basis of the equality
system, which replaces the per-subset LP loop with subset-sum sweeps and
keeps the 14-16 vertex gallery graphs inside the time budget.

All arithmetic is exact; no floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cliques import maximal_stable_sets
from .graphs import Graph, bits
from .lp import null_space, solve_equality_lp

MAX_LP_VERTICES = 16


@dataclass(frozen=True)
class WeightPolytope:
    """Equality system w(S) = 1 over all maximal stable sets, with w >= 0."""

    graph: Graph
    stable_sets: tuple

    @classmethod
    def of(cls, g: Graph) -> "WeightPolytope":
        return cls(g, tuple(maximal_stable_sets(g)))

    def rows(self):
        n = self.graph.n
        return [[s >> v & 1 for v in range(n)] for s in self.stable_sets]


@dataclass(frozen=True)
class EquistableCertificate:
    verdict: bool
    reason: str  # "weights" | "infeasible" | "forced-subset"
    weights: tuple | None = None  # rational weight per vertex
    forced_subset: int | None = None  # bitmask
    forced_value: Fraction | None = None

    def to_dict(self):
        d = {"verdict": self.verdict, "reason": self.reason}
        if self.weights is not None:
            d["weights"] = [str(w) for w in self.weights]
        if self.forced_subset is not None:
            d["forced_subset"] = sorted(bits(self.forced_subset))
            d["forced_value"] = str(self.forced_value)
        return d


def lp_optimize(poly: WeightPolytope, coeffs, maximize=True):
    """Exact optimum of a linear objective over the polytope.

    Returns None when the polytope is empty, else (value, point).
    """
    status, value, x = solve_equality_lp(
        poly.rows(), [1] * len(poly.stable_sets), list(coeffs), maximize
    )
    if status == "infeasible":
        return None
    return value, x


def _subset_sums(values, n):
    """values per vertex -> array indexed by vertex mask with the sums."""
    out = [0] * (1 << n)
    for v in range(n):
        val = values[v]
        lo = 1 << v
        for m in range(lo):
            out[lo | m] = out[m] + val
    return out


def _analysis(g: Graph):
    """Relative-interior point and null-space directions of the polytope.

    Returns None when the polytope is empty, else (point, directions,
    stable_sets); the directions span the affine hull around the point.
    """
    n = g.n
    poly = WeightPolytope.of(g)
    zero_obj = [0] * n
    if lp_optimize(poly, zero_obj, maximize=False) is None:
        return None
    # implicitly tight bounds and a relative interior point
    total = [Fraction(0)] * n
    implicit_zero = []
    for v in range(n):
        obj = [0] * n
        obj[v] = 1
        value, point = lp_optimize(poly, obj, maximize=True)
        if value == 0:
            implicit_zero.append(v)
        total = [a + b for a, b in zip(total, point)]
    point = [t / n for t in total]
    rows = poly.rows()
    for v in implicit_zero:
        row = [0] * n
        row[v] = 1
        rows.append(row)
    directions = null_space(rows, n)
    return point, directions, poly.stable_sets


def _scaled_int_sums(vec, n):
    """Subset sums of a rational vector, scaled to integers.

    Returns (denominator, sums) with sums[mask] = denom * vec-sum."""
    denom = lcm(*[f.denominator for f in vec]) if vec else 1
    ints = [int(f * denom) for f in vec]
    return denom, _subset_sums(ints, n)


def _forced_subsets(g: Graph, point, directions, stable_sets):
    """Masks T (nonempty, not maximal stable) with w(T) constant on the
    polytope, each with its constant value."""
    n = g.n
    stable = set(stable_sets)
    denom, base = _scaled_int_sums(point, n)
    live = bytearray([1]) * (1 << n)
    for d in directions:
        dd, sums = _scaled_int_sums(d, n)
        del dd
        for m in range(1 << n):
            if live[m] and sums[m]:
                live[m] = 0
    out = []
    for m in range(1, 1 << n):
        if live[m] and m not in stable:
            out.append((m, Fraction(base[m], denom)))
    return out


def _find_weighting(g: Graph, point, directions, stable_sets):
    """A point of the polytope with w(T) != 1 for every non-stable T.

    Walks from the relative interior point along a generic null direction;
    the step length dodges the finitely many hyperplane hits.
    """
    n = g.n
    if not directions:
        return point
    denom_p, base = _scaled_int_sums(point, n)
    stable = set(stable_sets)
    for attempt in range(1, 32):
        # deterministic "generic" combination of the null directions
        dvec = [Fraction(0)] * n
        w = Fraction(1)
        for d in directions:
            dvec = [a + w * b for a, b in zip(dvec, d)]
            w *= attempt + 1
        denom_d, dsums = _scaled_int_sums(dvec, n)
        # the direction must move every currently-colliding functional
        if any(
            base[m] == denom_p and dsums[m] == 0
            for m in range(1, 1 << n)
            if m not in stable
        ):
            continue
        # largest step keeping w >= 0
        step = None
        for v in range(n):
            if dvec[v] < 0:
                lim = point[v] / -dvec[v]
                if step is None or lim < step:
                    step = lim
        if step is None:
            step = Fraction(1)
        bad = set()
        for m in range(1, 1 << n):
            if m not in stable and dsums[m]:
                # w(T) at step t is base/denom_p + t * dsums/denom_d
                bad.add(
                    Fraction(denom_p - base[m], denom_p)
                    * Fraction(denom_d, dsums[m])
                )
        k = 2
        while step / k in bad:
            k += 1
        eps = step / k
        cand = [p + eps * d for p, d in zip(point, dvec)]
        if _verify_weighting(g, cand, stable_sets):
            return cand
    raise RuntimeError("weight construction failed to avoid all hyperplanes")


def _verify_weighting(g: Graph, weights, stable_sets) -> bool:
    """w(S) = 1 exactly for maximal stable sets and for nothing else."""
    n = g.n
    if any(w < 0 for w in weights):
        return False
    denom, sums = _scaled_int_sums(list(weights), n)
    stable = set(stable_sets)
    for m in range(1, 1 << n):
        if (sums[m] == denom) != (m in stable):
            return False
    return True


def verify_weighting(g: Graph, weights) -> bool:
    return _verify_weighting(g, [Fraction(w) for w in weights],
                             maximal_stable_sets(g))


def _check(g: Graph, strongly: bool) -> EquistableCertificate:
    if g.n > MAX_LP_VERTICES:
        raise ValueError(
            f"equistability decision limited to n <= {MAX_LP_VERTICES}"
        )
    res = _analysis(g)
    if res is None:
        return EquistableCertificate(False, "infeasible")
    point, directions, stable_sets = res
    forced = _forced_subsets(g, point, directions, stable_sets)
    threshold_hit = [
        (m, val)
        for m, val in forced
        if (val <= 1 if strongly else val == 1)
    ]
    if threshold_hit:
        m, val = min(
            threshold_hit, key=lambda mv: (mv[0].bit_count(), mv[0])
        )
        return EquistableCertificate(
            False, "forced-subset", forced_subset=m, forced_value=val
        )
    if strongly:
        return EquistableCertificate(True, "weights")
    weights = _find_weighting(g, point, directions, stable_sets)
    return EquistableCertificate(True, "weights", weights=tuple(weights))


def is_equistable(g: Graph) -> EquistableCertificate:
    """Equistable decision with a fully verified weight certificate."""
    return _check(g, strongly=False)


def is_strongly_equistable(g: Graph) -> EquistableCertificate:
    return _check(g, strongly=True)


def forced_value(g: Graph, subset: int):
    """The constant value of w(subset) over the polytope, or None if the
    value varies (or the polytope is empty)."""
    res = _analysis(g)
    if res is None:
        return None
    point, directions, _ = res
    n = g.n
    if any(
        sum(d[v] for v in bits(subset)) != 0 for d in directions
    ):
        return None
    return sum((point[v] for v in bits(subset)), Fraction(0))


def verify_forced_subset(g: Graph, combination):
    """Check a signed combination of maximal stable sets in the style of
    the hand-written non-equistability certificates.

    ``combination`` is a list of (vertex mask, +1/-1).  The signed sum of
    characteristic vectors must be 0/1-valued; the subset it selects is
    returned (its polytope value is then forced to the signed sign-sum).
    """
    stable = set(maximal_stable_sets(g))
    coeff = [0] * g.n
    for mask, sign in combination:
        if sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        if mask not in stable:
            raise ValueError("combination member is not a maximal stable set")
        for v in bits(mask):
            coeff[v] += sign
    if any(c not in (0, 1) for c in coeff):
        raise ValueError("signed combination is not 0/1-valued")
    out = 0
    for v, c in enumerate(coeff):
        if c:
            out |= 1 << v
    return out
