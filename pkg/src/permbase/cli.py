"""Command line front end.

Subcommands: basesize, kgraph, chartab, verify.  Groups are specified as
``snk N K``, ``pgl2 Q``, ``dihedral N``, ``sym N``, or ``file PATH`` (text
format: ``degree n`` then one generator per line as 0-based images).
Exit status 0 means agreement / all checks passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .actions import (GroupAction, dihedral_action, ksubset_action,
                      natural_action, pgl2_action, symmetric_action)
from .basesize import (base_size_all, base_size_char_formula,
                       base_size_kuelshammer, find_base_controlling, graph_for,
                       min_base_search, BaseSizeReport)
from .chartable import character_table
from .classfun import class_function_to_json, permutation_character, restrict
from .perm import DEFAULT_CAP, load_group_file
from .verify import all_passed, run_all

KINDS = ("snk", "pgl2", "dihedral", "sym", "file")


def build_action(kind: str, params: list[str], cap: int) -> GroupAction:
    def want(n):
        if len(params) != n:
            raise ValueError(f"{kind} expects {n} parameter(s), got {len(params)}")

    if kind == "snk":
        want(2)
        return ksubset_action(int(params[0]), int(params[1]), cap=cap)
    if kind == "pgl2":
        want(1)
        return pgl2_action(int(params[0]), cap=cap)
    if kind == "dihedral":
        want(1)
        return dihedral_action(int(params[0]), cap=cap)
    if kind == "sym":
        want(1)
        return symmetric_action(int(params[0]), cap=cap)
    if kind == "file":
        want(1)
        group = load_group_file(params[0], cap=cap)
        return natural_action(group, name=f"file({params[0]})")
    raise ValueError(f"unknown group kind {kind!r}")


def _add_spec(parser):
    parser.add_argument("kind", choices=KINDS, help="group family")
    parser.add_argument("params", nargs="*", help="family parameters")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="element enumeration cap")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for internal loops (output is "
                             "identical for any value)")
    parser.add_argument("--json", action="store_true", help="machine readable output")


def _report_text(report: BaseSizeReport, action: GroupAction) -> str:
    lines = [f"group: {action.name}  degree {action.domain_size}  "
             f"order {action.group.order}"]
    if report.search is not None:
        pts = ", ".join(action.label_str(p, one_based_subsets=True)
                        for p in report.search.points)
        lines.append(f"method search:      {report.search.size}  (base: [{pts}])")
    if report.char_formula is not None:
        l, v = report.char_formula
        lines.append(f"method character:   {l}  (<phi, chi^{l}> = {v})")
    if report.kuelshammer is not None:
        size, d = report.kuelshammer
        lines.append(f"method kuelshammer: {size}  (d(1_H, phi|H) = {d})")
    if report.phi is None:
        lines.append("no base-controlling homomorphism: search method only")
    lines.append(f"agree: {'yes' if report.agree else 'NO'}")
    return "\n".join(lines)


def cmd_basesize(args) -> int:
    action = build_action(args.kind, args.params, args.cap)
    if args.method == "search":
        witness = min_base_search(action)
        report = BaseSizeReport(action.name, witness, None, None, None, True)
    elif args.method in ("character", "kuelshammer"):
        phi = find_base_controlling(action)
        if phi is None:
            print(f"error: {action.name} admits no base-controlling homomorphism; "
                  f"use --method search", file=sys.stderr)
            return 1
        if args.method == "character":
            res = base_size_char_formula(action, phi, args.lmax)
            report = BaseSizeReport(action.name, None, res, None, phi, True)
        else:
            res = base_size_kuelshammer(action, phi)
            report = BaseSizeReport(action.name, None, None, res, phi, True)
    else:
        report = base_size_all(action, args.lmax)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(_report_text(report, action))
    return 0 if report.agree else 1


def cmd_kgraph(args) -> int:
    action = build_action(args.kind, args.params, args.cap)
    if not action.is_transitive():
        print("error: the graph is defined for transitive actions", file=sys.stderr)
        return 1
    graph = graph_for(action)
    phi = find_base_controlling(action)
    annotations = {0: "1_H"}
    d_phi = None
    if phi is not None:
        vertex = graph.index_of_vertex(restrict(phi, graph.subgroup))
        annotations[vertex] = "phi|H"
        d_phi = graph.distance(0, vertex)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(graph.to_dot(annotations))
    payload = {
        "action": action.name,
        "vertices": graph.vertex_count,
        "degrees": list(graph.table.degrees),
        "edges": [list(e) for e in graph.edges],
        "diameter": graph.diameter,
        "distance_trivial_to_phi": d_phi,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"graph on Irr(H) for {action.name}: {graph.vertex_count} vertices, "
              f"{len(graph.edges)} edges")
        print(f"edges: {' '.join(f'{i}-{j}' for i, j in graph.edges)}")
        print(f"diameter: {graph.diameter}")
        if d_phi is not None:
            print(f"d(1_H, phi|H): {d_phi}")
        else:
            print("no base-controlling homomorphism")
    return 0


def cmd_chartab(args) -> int:
    action = build_action(args.kind, args.params, args.cap)
    if args.which == "stabilizer":
        if not action.is_transitive():
            print("error: stabilizer table needs a transitive action", file=sys.stderr)
            return 1
        group = action.point_stabilizer(0).group
        title = f"point stabilizer of {action.name} (order {group.order})"
    else:
        group = action.group
        title = f"{action.name} (order {group.order})"
    table = character_table(group)
    classes = group.conjugacy_classes()
    if args.json:
        payload = {
            "group": title,
            "order": group.order,
            "irreducibles": [class_function_to_json(chi) for chi in table.irreducibles],
        }
        print(json.dumps(payload, indent=2))
        return 0
    headers = [""] + [
        f"{'+'.join(map(str, rep.cycle_type()))}({size})"
        for rep, size in zip(classes.representatives, classes.sizes)]
    rows = [headers]
    for i, chi in enumerate(table.irreducibles):
        rows.append([f"chi{i}"] + [str(v) for v in chi.values])
    widths = [max(len(row[c]) for row in rows) for c in range(len(headers))]
    print(f"character table of {title}; columns: cycle type (class size)")
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return 0


def cmd_verify(args) -> int:
    action = build_action(args.kind, args.params, args.cap)
    strict = args.kind != "file"
    results = run_all(action, strict_lower_bound=strict)
    if args.json:
        print(json.dumps({"action": action.name,
                          "checks": [{"name": r.name, "status": r.status,
                                      "detail": r.detail} for r in results],
                          "ok": all_passed(results)}, indent=2))
    else:
        print(f"verification of {action.name}:")
        for r in results:
            print(f"  {r.status.upper():4s} {r.name}: {r.detail}")
        print("result: " + ("OK" if all_passed(results) else "FAILED"))
    return 0 if all_passed(results) else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="permbase",
        description="Base sizes of permutation groups by search, character "
                    "sums, and graph distance, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basesize", help="compute the base size")
    _add_spec(p)
    p.add_argument("--method", choices=("search", "character", "kuelshammer", "all"),
                   default="all")
    p.add_argument("--lmax", type=int, default=None,
                   help="cap for the character formula scan")
    p.set_defaults(func=cmd_basesize)

    p = sub.add_parser("kgraph", help="the graph on Irr(point stabilizer)")
    _add_spec(p)
    p.add_argument("--dot", default=None, metavar="PATH", help="write DOT output")
    p.set_defaults(func=cmd_kgraph)

    p = sub.add_parser("chartab", help="character table")
    _add_spec(p)
    p.add_argument("--which", choices=("group", "stabilizer"), default="group")
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("verify", help="run the invariant suite")
    _add_spec(p)
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
