"""Named invariant checks for one action, powering the `verify` command.

Each check returns pass/fail/skip with a short detail string.  Checks that
need the full character table of the big group are skipped above a size
limit; the lower-bound check can be demoted from fail to flag for groups
outside the built-in catalog, where the bound's hypotheses have not been
reviewed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .actions import GroupAction, min_base_search
from .basesize import base_size_all, find_base_controlling, graph_for
from .chartable import character_table, constituent_multiplicity
from .classfun import (induce, inner_product, permutation_character,
                       pm1_characters, restrict, trivial_character)
from .kgraph import check_path_property

GROUP_TABLE_LIMIT = 5000
EXHAUSTIVE_AXIOM_LIMIT = 2000


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail", "skip", "flag"
    detail: str


def _action_axioms(action: GroupAction) -> CheckResult:
    g = action.group
    maps = action.maps
    npts = action.domain_size
    idmap = tuple(range(npts))
    if maps[0] != idmap:
        return CheckResult("action-axioms", "fail", "identity does not act trivially")
    index = g._index
    if g.order <= EXHAUSTIVE_AXIOM_LIMIT:
        pairs = ((i, j) for i in range(g.order) for j in range(g.order))
        mode = "exhaustive"
    else:
        rng = random.Random(2024)
        pairs = ((rng.randrange(g.order), rng.randrange(g.order)) for _ in range(2000))
        mode = "sampled"
    checked = 0
    for i, j in pairs:
        prod = index[(g.elements[i] * g.elements[j]).images]
        comp = tuple(maps[i][maps[j][p]] for p in range(npts))
        if maps[prod] != comp:
            return CheckResult("action-axioms", "fail",
                               f"apply(gh) != apply(g) o apply(h) at ({i},{j})")
        checked += 1
    return CheckResult("action-axioms", "pass", f"{checked} pairs ({mode})")


def _orbit_stabilizer(action: GroupAction) -> CheckResult:
    g = action.group
    for p in range(action.domain_size):
        orb = action.orbit_of(p)
        stab = action.point_stabilizer(p)
        if len(orb) * stab.order != g.order:
            return CheckResult("orbit-stabilizer", "fail",
                               f"|orbit|*|stab| != |G| at point {p}")
    return CheckResult("orbit-stabilizer", "pass",
                       f"all {action.domain_size} points")


def _class_sums(action: GroupAction) -> CheckResult:
    g = action.group
    classes = g.conjugacy_classes()
    if sum(classes.sizes) != g.order:
        return CheckResult("class-sums", "fail", "sizes do not sum to |G|")
    if any(g.order % s for s in classes.sizes):
        return CheckResult("class-sums", "fail", "a class size does not divide |G|")
    return CheckResult("class-sums", "pass", f"{len(classes)} classes")


def _stabilizer_table(action: GroupAction) -> CheckResult:
    stab = action.point_stabilizer(0)
    table = character_table(stab.group)  # verified internally on construction
    return CheckResult("stabilizer-table-orthogonality", "pass",
                       f"{len(table)} irreducibles, degrees {list(table.degrees)}")


def _group_table(action: GroupAction) -> CheckResult:
    g = action.group
    if g.order > GROUP_TABLE_LIMIT:
        return CheckResult("group-table-orthogonality", "skip",
                           f"|G| = {g.order} > {GROUP_TABLE_LIMIT}")
    table = character_table(g)
    return CheckResult("group-table-orthogonality", "pass",
                       f"{len(table)} irreducibles")


def _perm_char_induced(action: GroupAction) -> CheckResult:
    if not action.is_transitive():
        return CheckResult("perm-char-is-induced-trivial", "skip", "action not transitive")
    chi = permutation_character(action)
    stab = action.point_stabilizer(0)
    ind = induce(trivial_character(stab.group), action.group)
    if chi == ind:
        return CheckResult("perm-char-is-induced-trivial", "pass",
                           "chi equals 1_H induced")
    return CheckResult("perm-char-is-induced-trivial", "fail", "values differ")


def _frobenius(action: GroupAction) -> CheckResult:
    g = action.group
    if g.order > GROUP_TABLE_LIMIT:
        return CheckResult("frobenius-reciprocity", "skip",
                           f"|G| = {g.order} > {GROUP_TABLE_LIMIT}")
    stab = action.point_stabilizer(0)
    tg = character_table(g)
    th = character_table(stab.group)
    count = 0
    for alpha in th.irreducibles:
        up = induce(alpha, g)
        for beta in tg.irreducibles:
            lhs = inner_product(up, beta)
            rhs = inner_product(alpha, restrict(beta, stab))
            if not lhs == rhs:
                return CheckResult("frobenius-reciprocity", "fail",
                                   f"mismatch: {lhs} != {rhs}")
            count += 1
    return CheckResult("frobenius-reciprocity", "pass", f"{count} pairs")


def _restrict_induce_identity(action: GroupAction) -> CheckResult:
    g = action.group
    if g.order > GROUP_TABLE_LIMIT:
        return CheckResult("restrict-induce-identity", "skip",
                           f"|G| = {g.order} > {GROUP_TABLE_LIMIT}")
    if not action.is_transitive():
        return CheckResult("restrict-induce-identity", "skip", "action not transitive")
    stab = action.point_stabilizer(0)
    chi = permutation_character(action)
    count = 0
    for beta in character_table(g).irreducibles:
        if not induce(restrict(beta, stab), g) == beta * chi:
            return CheckResult("restrict-induce-identity", "fail",
                               f"fails for irreducible #{count}")
        count += 1
    return CheckResult("restrict-induce-identity", "pass", f"{count} irreducibles")


def _path_property(action: GroupAction) -> CheckResult:
    if not (action.is_transitive() and action.is_faithful()):
        return CheckResult("path-property", "skip", "needs transitive faithful action")
    graph = graph_for(action)
    res = check_path_property(graph, permutation_character(action))
    if res.ok:
        return CheckResult("path-property", "pass", f"{res.assertions} inner products")
    return CheckResult("path-property", "fail", f"violated at {res.violation}")


def _adjacency_oracle(action: GroupAction) -> CheckResult:
    g = action.group
    if g.order > GROUP_TABLE_LIMIT:
        return CheckResult("adjacency-oracle", "skip",
                           f"|G| = {g.order} > {GROUP_TABLE_LIMIT}")
    if not (action.is_transitive() and action.is_faithful()):
        return CheckResult("adjacency-oracle", "skip", "needs transitive faithful action")
    graph = graph_for(action)
    tg = character_table(g)
    mults = [constituent_multiplicity(up, tg) for up in graph.induced]
    n = graph.vertex_count
    checked = 0
    for i in range(n):
        for j in range(i + 1, n):
            definitional = any(a > 0 and b > 0 for a, b in zip(mults[i], mults[j]))
            if definitional != graph.adjacency[i][j]:
                return CheckResult("adjacency-oracle", "fail",
                                   f"fast path disagrees at ({i},{j})")
            checked += 1
    return CheckResult("adjacency-oracle", "pass", f"{checked} vertex pairs")


def _pm1_match(action: GroupAction) -> CheckResult:
    g = action.group
    homs = pm1_characters(g)
    if g.order > GROUP_TABLE_LIMIT:
        return CheckResult("pm1-characters", "pass",
                           f"{len(homs)} homomorphisms (table check skipped)")
    table = character_table(g)
    from_table = [chi for chi in table.irreducibles
                  if chi.degree == 1 and chi.is_pm1_valued()]
    ok = (len(from_table) == len(homs)
          and all(any(chi == phi for phi in homs) for chi in from_table))
    if ok:
        return CheckResult("pm1-characters", "pass",
                           f"{len(homs)} homomorphisms match the degree-1 rows")
    return CheckResult("pm1-characters", "fail",
                       "homomorphism list disagrees with the table")


def _base_methods(action: GroupAction) -> CheckResult:
    if not action.is_faithful():
        return CheckResult("base-methods", "skip", "action not faithful")
    report = base_size_all(action)
    sizes = report.sizes()
    if report.agree:
        return CheckResult("base-methods", "pass", f"{sizes}")
    return CheckResult("base-methods", "fail", f"disagreement: {sizes}")


def _lower_bound(action: GroupAction, strict: bool) -> CheckResult:
    if not (action.is_transitive() and action.is_faithful()):
        return CheckResult("graph-lower-bound", "skip", "needs transitive faithful action")
    graph = graph_for(action)
    b = min_base_search(action).size
    bound = graph.diameter + 1
    if b >= bound:
        return CheckResult("graph-lower-bound", "pass",
                           f"b = {b} >= diameter + 1 = {bound}")
    if strict:
        return CheckResult("graph-lower-bound", "fail", f"b = {b} < {bound}")
    return CheckResult("graph-lower-bound", "flag",
                       f"b = {b} < {bound}; review the bound's hypotheses for this group")


def _theorem_equality(action: GroupAction) -> CheckResult:
    if not (action.is_transitive() and action.is_faithful()):
        return CheckResult("diameter-equals-distance", "skip",
                           "needs transitive faithful action")
    phi = find_base_controlling(action)
    if phi is None:
        return CheckResult("diameter-equals-distance", "skip",
                           "no base-controlling homomorphism")
    graph = graph_for(action)
    vertex = graph.index_of_vertex(restrict(phi, graph.subgroup))
    d = graph.distance(0, vertex)
    if graph.diameter == d:
        return CheckResult("diameter-equals-distance", "pass",
                           f"both equal {d}")
    return CheckResult("diameter-equals-distance", "fail",
                       f"diameter {graph.diameter} != d = {d}")


def run_all(action: GroupAction, strict_lower_bound: bool = True) -> list[CheckResult]:
    checks = [
        _action_axioms(action),
        _orbit_stabilizer(action),
        _class_sums(action),
        _stabilizer_table(action) if action.is_transitive() else
        CheckResult("stabilizer-table-orthogonality", "skip", "action not transitive"),
        _group_table(action),
        _perm_char_induced(action),
        _frobenius(action) if action.is_transitive() else
        CheckResult("frobenius-reciprocity", "skip", "action not transitive"),
        _restrict_induce_identity(action),
        _path_property(action),
        _adjacency_oracle(action),
        _pm1_match(action),
        _base_methods(action),
        _lower_bound(action, strict_lower_bound),
        _theorem_equality(action),
    ]
    return checks


def all_passed(results: list[CheckResult]) -> bool:
    return not any(r.status == "fail" for r in results)
