"""Command line front end: classify graphs, reproduce the relation table,
run exhaustive scans, emit gallery graphs, recognize CIS line graphs, and
decide equistability.

Exit codes: 0 success, 1 internal verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import equistable as eq
from . import gallery as gal
from . import hasse, linegraph, search
from .cliques import maximal_cliques, maximal_stable_sets
from .graphs import Graph, GraphError, bits, complement, encode_graph6, parse_graph
from .recognizers import (
    UnsupportedSize,
    cis_certificate,
    is_almost_cis,
    is_cis,
    is_cograph,
    is_edge_simplicial,
    is_perfect,
    is_quasi_cis,
    is_semi_weakly_cis,
    is_split,
    is_threshold,
    is_triangle,
    is_weakly_triangle,
    triangle_violation,
)

JSON_SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def _read_input(spec: str) -> Graph:
    if spec.startswith("gallery:"):
        name = spec.split(":", 1)[1]
        try:
            return gal.gallery(name)
        except GraphError as exc:
            raise InputError(str(exc)) from exc
    if spec.startswith("random-split:"):
        raise InputError("random-split inputs need the classify command")
    if spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc}") from exc
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise InputError(str(exc)) from exc


def _load_graph(args) -> Graph:
    spec = args.input
    if spec is None:
        raise InputError("an --input/-i source is required")
    if spec.startswith("random-split:"):
        try:
            k, l = (int(x) for x in spec.split(":", 1)[1].split(","))
        except ValueError as exc:
            raise InputError("random-split spec must be random-split:K,L") from exc
        g = gal.random_split(k, l, args.seed)
        if not isinstance(g, Graph):
            raise InputError("random-split input too large for classification")
        return g
    return _read_input(spec)


def _emit(args, payload, text_render):
    if args.format == "json":
        payload = dict(payload)
        payload["schema_version"] = JSON_SCHEMA_VERSION
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_render)


def _set(mask: int):
    return sorted(bits(mask))


# ---------------------------------------------------------------------------
# classify


def _membership(g: Graph):
    """All base predicates on g, with LP/size-capped entries marked
    unsupported instead of raising."""
    out = {}
    plain = {
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
    }
    for name, fn in plain.items():
        out[name] = fn(g)
    try:
        out["perfect"] = is_perfect(g)
    except UnsupportedSize:
        out["perfect"] = "unsupported"
    if g.n <= eq.MAX_LP_VERTICES:
        out["equistable"] = eq.is_equistable(g).verdict
        out["strongly_equistable"] = eq.is_strongly_equistable(g).verdict
    else:
        out["equistable"] = "unsupported"
        out["strongly_equistable"] = "unsupported"
    return out


def cmd_classify(args) -> int:
    g = _load_graph(args)
    base = _membership(g)
    co = _membership(complement(g))
    table_props = {}
    for prop in hasse.PROPERTY_ORDER:
        name, modifier = hasse.PROPERTY_DEFS[prop]
        a, b = base[name], co[name]
        if "unsupported" in (a, b):
            table_props[prop] = "unsupported"
        elif modifier == "plain":
            table_props[prop] = a
        elif modifier == "cap":
            table_props[prop] = a and b
        else:
            table_props[prop] = a or b
    certs = {}
    pair = cis_certificate(g)
    if pair is not None:
        certs["disjoint_pair"] = {
            "clique": _set(pair[0]), "stable_set": _set(pair[1]),
        }
    tv = triangle_violation(g)
    if tv is not None:
        certs["triangle_violation"] = {
            "stable_set": _set(tv[0]), "edge": list(tv[1]),
        }
    payload = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.edge_count(),
        "base": base,
        "complement_base": co,
        "properties": table_props,
        "certificates": certs,
    }
    lines = [f"graph {payload['graph6']}  (n={g.n}, m={payload['m']})"]
    for name in sorted(base):
        lines.append(f"  {name:<22} {base[name]!s:<12} co: {co[name]}")
    lines.append("table properties:")
    for prop in hasse.PROPERTY_ORDER:
        lines.append(f"  {prop:<12} {table_props[prop]}")
    for key, val in certs.items():
        lines.append(f"certificate {key}: {val}")
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# table / scan


def cmd_table(args) -> int:
    cells = hasse.verify_table(include_lp=args.include_lp)
    failures = [c for c in cells if c.kind == "witness" and not c.passed]
    payload = {
        "cells": [c.to_dict() for c in cells],
        "witness_cells": sum(c.kind == "witness" for c in cells),
        "failures": len(failures),
    }
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["row", "col", "kind", "witness", "passed", "detail"])
        for c in cells:
            writer.writerow(
                [c.row, c.col, c.kind, c.witness or "",
                 "" if c.passed is None else c.passed, c.detail]
            )
        print(buf.getvalue(), end="")
    else:
        by_row = {}
        for c in cells:
            by_row.setdefault(c.row, []).append(c)

        def cell_text(c):
            if c.kind == "equal":
                return "="
            if c.kind == "subset":
                return "<="
            if c.kind == "unknown":
                return "?"
            if c.kind == "erratum":
                return f"?[{c.witness}]"
            if c.kind == "skipped":
                return f"skip[{c.witness}]"
            return f"{c.witness}{'' if c.passed else '!FAIL'}"

        lines = ["row: " + " ".join(hasse.PROPERTY_ORDER)]
        for row in hasse.PROPERTY_ORDER:
            lines.append(
                f"{row:<10} " + " ".join(cell_text(c) for c in by_row[row])
            )
        lines.append(
            f"{payload['witness_cells']} witness cells verified, "
            f"{len(failures)} failures"
        )
        _emit(args, payload, "\n".join(lines))
    return 1 if failures else 0


def cmd_scan(args) -> int:
    report = hasse.scan(max_n=args.max_n, include_lp=args.include_lp)
    payload = report.to_dict()
    lines = [
        f"scan n <= {report.max_n} (lp properties up to n = {report.lp_max_n})",
        f"graph counts: {report.counts}",
    ]
    for name, a in sorted(report.arrows.items()):
        lines.append(
            f"  arrow {name:<32} checked {a.checked:<6} "
            + ("ok" if a.ok else f"FAIL {a.failures[:3]}")
        )
    bad_subset = [k for k, a in report.subset_cells.items() if not a.ok]
    bad_collapse = [k for k, a in report.collapse.items() if not a.ok]
    lines.append(
        f"  table subset cells: {len(report.subset_cells)} checked, "
        f"failures: {bad_subset or 'none'}"
    )
    lines.append(
        f"  complement collapse: failures: {bad_collapse or 'none'}"
    )
    lines.append("scan " + ("passed" if report.ok else "FAILED"))
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# gallery


def cmd_gallery(args) -> int:
    if args.action == "list":
        payload = {
            "graphs": list(gal.GALLERY_NAMES),
            "big_graphs": list(gal.BIG_GALLERY_NAMES),
        }
        lines = []
        for name in gal.GALLERY_NAMES:
            g = gal.gallery(name)
            lines.append(f"{name:<8} n={g.n:<3} m={g.edge_count()}")
        for name in gal.BIG_GALLERY_NAMES:
            g = gal.big_gallery(name)
            lines.append(f"{name:<8} n={g.n:<3} m={g.edge_count()}  (big)")
        _emit(args, payload, "\n".join(lines))
        return 0
    name = args.id
    if name in gal.BIG_GALLERY_NAMES:
        g = gal.big_gallery(name)
        edge_lines = [f"{g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges())]
        payload = {"id": name, "n": g.n, "edges": sorted(g.edges())}
        _emit(args, payload, "\n".join(edge_lines))
        return 0
    try:
        g = gal.gallery(name)
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    payload = {"id": name, "n": g.n, "graph6": encode_graph6(g)}
    _emit(args, payload, encode_graph6(g))
    return 0


# ---------------------------------------------------------------------------
# cis-line


def cmd_cis_line(args) -> int:
    g = _load_graph(args)
    res = linegraph.root_graph(g)
    if res.kind == "not-line-graph":
        # the input is not a line graph: treat it as the root graph H
        role = "root"
        roots = [g]
    else:
        role = "line-graph"
        roots = res.roots
    verdicts = []
    for h in roots:
        verdict, cert, backend = linegraph.is_cis_line_root(h, args.backend)
        entry = {
            "root_graph6": encode_graph6(h),
            "cis": verdict,
            "matching_backend": backend,
        }
        if cert is not None:
            if cert[0] == "bull":
                entry["bull_vertices"] = list(cert[1])
            else:
                entry["violating_vertex"] = cert[1]
                entry["violating_matching"] = [list(e) for e in cert[2]]
        if h.n <= 8:
            agree = linegraph.check_condition_vii(h) == verdict
            entry["maximal_matching_crosscheck"] = agree
            if not agree:
                print("internal error: recognizer disagrees with the "
                      "maximal-matching oracle", file=sys.stderr)
                return 1
        verdicts.append(entry)
    if role == "line-graph" and args.verify:
        # the verdict must match the brute-force CIS test on the input
        direct = is_cis(g)
        if any(e["cis"] != direct for e in verdicts):
            print("internal error: line-graph verdict does not match the "
                  "direct CIS test", file=sys.stderr)
            return 1
    payload = {
        "input_graph6": encode_graph6(g),
        "input_role": role,
        "ambiguous_root": len(roots) > 1,
        "verdicts": verdicts,
        "conditions_checked": ["bull-subgraph", "weighted-matching"],
    }
    lines = [f"input interpreted as: {role}"]
    for e in verdicts:
        lines.append(
            f"root {e['root_graph6']}: line graph is "
            + ("CIS" if e["cis"] else "not CIS")
        )
        if "bull_vertices" in e:
            lines.append(f"  bull subgraph on vertices {e['bull_vertices']}")
        if "violating_vertex" in e:
            lines.append(
                f"  vertex {e['violating_vertex']} has a neighborhood-"
                f"covering matching {e['violating_matching']}"
            )
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# equistable


def cmd_equistable(args) -> int:
    g = _load_graph(args)
    if g.n > eq.MAX_LP_VERTICES:
        raise InputError(
            f"equistability decision limited to n <= {eq.MAX_LP_VERTICES}"
        )
    cert = eq.is_equistable(g)
    strong = eq.is_strongly_equistable(g)
    payload = {
        "graph6": encode_graph6(g),
        "equistable": cert.to_dict(),
        "strongly_equistable": strong.to_dict(),
    }
    if args.verify:
        ok = True
        if cert.weights is not None:
            ok &= eq.verify_weighting(g, cert.weights)
        if cert.forced_subset is not None:
            ok &= eq.forced_value(g, cert.forced_subset) == cert.forced_value
        if strong.forced_subset is not None:
            ok &= eq.forced_value(g, strong.forced_subset) == strong.forced_value
        if not ok:
            print("internal error: certificate failed re-verification",
                  file=sys.stderr)
            return 1
        payload["verified"] = True
    lines = [f"graph {payload['graph6']}"]
    for label, c in (("equistable", cert), ("strongly equistable", strong)):
        lines.append(f"{label}: {c.verdict} ({c.reason})")
        if c.weights is not None:
            lines.append(
                "  weights: " + " ".join(str(w) for w in c.weights)
            )
        if c.forced_subset is not None:
            lines.append(
                f"  subset {_set(c.forced_subset)} forced to "
                f"{c.forced_value}"
            )
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cisgraphs",
        description="exact recognition of clique/stable-set graph classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument(
                "--input", "-i",
                help="graph source: path, '-' for stdin, gallery:ID, "
                     "or random-split:K,L",
            )
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--verify", action="store_true",
                       help="re-verify emitted certificates")

    p = sub.add_parser("classify", help="full membership vector for a graph")
    add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("table", help="reproduce and verify the relation table")
    add_common(p, with_input=False)
    p.add_argument("--include-lp", action=argparse.BooleanOptionalAction,
                   default=True)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("scan", help="exhaustive inclusion-arrow scan")
    add_common(p, with_input=False)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--include-lp", action="store_true",
                   help="run LP-backed classes above n = 6 too")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("gallery", help="list or emit the named graphs")
    p_sub = p.add_subparsers(dest="action", required=True)
    p_list = p_sub.add_parser("list")
    add_common(p_list, with_input=False)
    p_list.set_defaults(fn=cmd_gallery, action="list")
    p_emit = p_sub.add_parser("emit")
    p_emit.add_argument("id")
    add_common(p_emit, with_input=False)
    p_emit.set_defaults(fn=cmd_gallery, action="emit")

    p = sub.add_parser("cis-line",
                       help="CIS recognition for line graphs / root graphs")
    add_common(p)
    p.add_argument("--backend", choices=("auto", "brute", "blossom"),
                   default="auto")
    p.set_defaults(fn=cmd_cis_line)

    p = sub.add_parser("equistable", help="exact equistability decision")
    add_common(p)
    p.set_defaults(fn=cmd_equistable)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
