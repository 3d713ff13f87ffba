"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately re-derive values by the most direct route
available (element-by-element sums, literal conjugation loops, exhaustive
tuple search) so they stay independent of the library's faster paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from permbase import (ClassFunction, Cyclotomic, GroupAction,
                      PermutationGroup, alternating_action, cyclic_action,
                      dihedral_action, inner_product, ksubset_action,
                      pgl2_action, symmetric_action)
from permbase.cyclotomic import ZERO


def inner_product_elementwise(f1: ClassFunction, f2: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over every group element of f1(g) * conj(f2(g))."""
    g = f1.group
    assert f2.group is g
    total = ZERO
    for i in range(g.order):
        total = total + f1.value_on_element(i) * f2.value_on_element(i).conjugate()
    return total * Fraction(1, g.order)


def induce_elementwise(alpha: ClassFunction, group: PermutationGroup) -> list[Cyclotomic]:
    """Literal induction values per class of G:
    alpha_up(g) = (1/|H|) * sum over x in G with x g x^-1 in H of alpha(x g x^-1).
    """
    h = alpha.group
    h_class_of = h.conjugacy_classes().class_of
    h_index = {e.images: i for i, e in enumerate(h.elements)}
    out = []
    for rep in group.conjugacy_classes().representatives:
        total = ZERO
        for x in group.elements:
            y = x * rep * x.inverse()
            hi = h_index.get(y.images)
            if hi is not None:
                total = total + alpha.values[h_class_of[hi]]
        out.append(total * Fraction(1, h.order))
    return out


def brute_force_min_base(action: GroupAction) -> int:
    """Smallest subset of points with trivial pointwise stabilizer, by
    exhaustive enumeration of all subsets in increasing size."""
    for size in range(action.domain_size + 1):
        for pts in combinations(range(action.domain_size), size):
            if action.pointwise_stabilizer(pts).is_trivial:
                return size
    raise AssertionError("no base found; action not faithful")


def snk_pairs(n_max: int = 8) -> list[tuple[int, int]]:
    """All (n, k) with 2 <= 2k <= n <= n_max."""
    return [(n, k) for n in range(2, n_max + 1) for k in range(1, n // 2 + 1)]


def property_fixtures() -> list[GroupAction]:
    """Transitive faithful fixtures whose big group stays within the
    order-5000 limit for full Irr(G) computations."""
    out = [dihedral_action(n) for n in range(3, 13)]
    out.append(pgl2_action(7))
    out.extend(ksubset_action(n, k) for n, k in snk_pairs(6))
    out.extend(cyclic_action(n) for n in range(2, 9))
    out.extend(alternating_action(n) for n in range(4, 8))
    out.append(symmetric_action(5))
    return out


def lower_bound_fixtures() -> list[GroupAction]:
    """Every transitive faithful catalog fixture for the lower-bound check."""
    out = [dihedral_action(n) for n in range(3, 13)]
    out.append(pgl2_action(7))
    out.extend(ksubset_action(n, k) for n, k in snk_pairs(8))
    out.extend(cyclic_action(n) for n in range(2, 9))
    out.extend(alternating_action(n) for n in range(3, 9))
    out.extend(symmetric_action(n) for n in range(2, 9))
    return out
