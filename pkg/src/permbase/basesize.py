"""Base size of a faithful action by three independent methods, and the
search for a base-controlling homomorphism.

Methods: exhaustive minimal-base search; the least power l with
<phi, chi^l> nonzero (chi the permutation character); and 1 plus the graph
distance from the trivial character of a point stabilizer H to the
restriction of phi, in K(G, H).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import BaseWitness, GroupAction, UnfaithfulActionError, min_base_search
from .classfun import (ClassFunction, inner_product, permutation_character,
                       pm1_characters, restrict)
from .kgraph import KulshammerGraph, build_graph


@dataclass(frozen=True)
class BaseSizeReport:
    """Per-method base sizes with a witness and agreement flag."""

    action_name: str
    search: BaseWitness | None
    char_formula: tuple[int, Fraction] | None  # (l, the nonzero inner product)
    kuelshammer: tuple[int, int] | None        # (size, distance d)
    phi: ClassFunction | None
    agree: bool

    def sizes(self) -> dict[str, int]:
        out = {}
        if self.search is not None:
            out["search"] = self.search.size
        if self.char_formula is not None:
            out["character"] = self.char_formula[0]
        if self.kuelshammer is not None:
            out["kuelshammer"] = self.kuelshammer[0]
        return out

    def to_json(self) -> dict:
        return {
            "action": self.action_name,
            "search": (None if self.search is None
                       else {"size": self.search.size,
                             "base": list(self.search.points)}),
            "char_formula": (None if self.char_formula is None
                             else {"size": self.char_formula[0],
                                   "value": str(self.char_formula[1])}),
            "kuelshammer": (None if self.kuelshammer is None
                            else {"size": self.kuelshammer[0],
                                  "distance": self.kuelshammer[1]}),
            "has_phi": self.phi is not None,
            "agree": self.agree,
        }


def _element_signs(action: GroupAction, phi: ClassFunction) -> list[int]:
    if phi.group is not action.group:
        raise ValueError("phi must live on the acting group")
    if not phi.is_pm1_valued():
        raise ValueError("phi must take values in {1, -1}")
    class_of = action.group.conjugacy_classes().class_of
    class_signs = [v.as_integer() for v in phi.values]
    return [class_signs[class_of[i]] for i in range(action.group.order)]


def is_base_controlling(action: GroupAction, phi: ClassFunction) -> bool:
    """Whether a point tuple is a base exactly when phi kills its stabilizer.

    Enumerates the distinct pointwise set-stabilizers depth-first, extending
    point sets one point at a time; branches whose stabilizer was already
    visited are pruned, and only one representative point per orbit of the
    current stabilizer is tried (sound, since the kernel of phi is normal).
    Returns False as soon as a nontrivial stabilizer inside ker(phi) shows up.
    """
    if not action.is_faithful():
        raise UnfaithfulActionError(f"{action.name}: need a faithful action")
    signs = _element_signs(action, phi)
    maps = action.maps
    npts = action.domain_size
    root = tuple(range(action.group.order))
    visited = {root}
    stack = [root]
    while stack:
        ids = stack.pop()
        if len(ids) == 1:
            continue
        if all(signs[i] == 1 for i in ids):
            return False
        seen = [False] * npts
        for p in range(npts):
            if seen[p]:
                continue
            orb = {maps[i][p] for i in ids}
            for q in orb:
                seen[q] = True
            if len(orb) == 1:
                continue
            child = tuple(i for i in ids if maps[i][p] == p)
            if child not in visited:
                visited.add(child)
                stack.append(child)
    return True


def find_base_controlling(action: GroupAction) -> ClassFunction | None:
    """First base-controlling homomorphism among the {1,-1} characters, or None."""
    for phi in pm1_characters(action.group):
        if is_base_controlling(action, phi):
            return phi
    return None


def base_size_char_formula(action: GroupAction, phi: ClassFunction,
                           l_max: int | None = None,
                           verify_phi: bool = False) -> tuple[int, Fraction]:
    """Smallest l with <phi, chi^l> != 0, together with that value.

    phi is trusted to be base-controlling unless verify_phi is set.  The scan
    is capped at l_max (default: the domain size, which no base can exceed);
    exhausting the cap raises ValueError.
    """
    if phi.group is not action.group:
        raise ValueError("phi must live on the acting group")
    if verify_phi and not is_base_controlling(action, phi):
        raise ValueError("phi is not base-controlling for this action")
    if l_max is None:
        l_max = action.domain_size
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    chi = permutation_character(action)
    power = chi ** 0
    for l in range(0, l_max + 1):
        if l > 0:
            power = power * chi
        v = inner_product(phi, power)
        if not v.is_zero:
            return l, v.as_fraction()
    raise ValueError(
        f"<phi, chi^l> vanished for all l <= {l_max}; "
        "phi is not base-controlling or the cap is too small")


def base_size_kuelshammer(action: GroupAction, phi: ClassFunction,
                          graph: KulshammerGraph | None = None) -> tuple[int, int]:
    """Base size as d(1_H, phi restricted to H) + 1 in K(G, H).

    H is the stabilizer of point 0.  Also computes the diameter and asserts
    it equals d, which the supporting theorem guarantees whenever phi is
    base-controlling.
    """
    if not action.is_transitive():
        raise ValueError(f"{action.name}: graph method needs a transitive action")
    if not action.is_faithful():
        raise UnfaithfulActionError(f"{action.name}: need a faithful action")
    if graph is None:
        graph = graph_for(action)
    stab = graph.subgroup
    phi_down = restrict(phi, stab)
    vertex = graph.index_of_vertex(phi_down)
    d = graph.distance(0, vertex)
    assert graph.diameter == d, (
        f"diameter {graph.diameter} != d(1_H, phi|H) = {d}; "
        "theorem equality violated")
    return d + 1, d


def graph_for(action: GroupAction) -> KulshammerGraph:
    """K(G, H) for H the stabilizer of point 0, cached on the action."""
    cached = action._cache.get("kgraph0")
    if cached is None:
        cached = build_graph(action.group, action.point_stabilizer(0))
        action._cache["kgraph0"] = cached
    return cached


def base_size_all(action: GroupAction, l_max: int | None = None) -> BaseSizeReport:
    """Run every applicable method:

    the search always; the character formula when a base-controlling phi
    exists; the graph method additionally needs transitivity.
    """
    witness = min_base_search(action)
    phi = find_base_controlling(action)
    char_res = None
    kuel_res = None
    if phi is not None:
        char_res = base_size_char_formula(action, phi, l_max)
        if action.is_transitive():
            kuel_res = base_size_kuelshammer(action, phi)
    sizes = {witness.size}
    if char_res is not None:
        sizes.add(char_res[0])
    if kuel_res is not None:
        sizes.add(kuel_res[0])
    return BaseSizeReport(
        action_name=action.name,
        search=witness,
        char_formula=char_res,
        kuelshammer=kuel_res,
        phi=phi,
        agree=len(sizes) == 1,
    )
