"""Group actions on finite domains, a catalog of standard actions, and
minimal-base search.

An action stores the full table of point images for every group element,
so stabilizer filtering, orbit computation and base search are plain
table lookups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .perm import DEFAULT_CAP, Permutation, PermutationGroup, Subgroup


class UnfaithfulActionError(ValueError):
    """The operation requires a faithful action (trivial kernel)."""


class KSubsetRangeError(ValueError):
    """The k-subset action requires n >= 2k unless explicitly overridden."""


class GroupAction:
    """An action of a fully enumerated group on a finite point set.

    ``maps[i][p]`` is the image of point ``p`` under element ``i`` of the
    group.  ``labels`` carries a printable label per point (ints for natural
    actions, sorted tuples for subset actions).
    """

    __slots__ = ("group", "labels", "label_index", "maps", "name", "_cache")

    def __init__(self, group: PermutationGroup, labels, maps, name: str):
        self.group = group
        self.labels = tuple(labels)
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}
        self.maps = maps
        self.name = name
        self._cache = {}

    @property
    def domain_size(self) -> int:
        return len(self.labels)

    def apply(self, element_index: int, point: int) -> int:
        return self.maps[element_index][point]

    def apply_perm(self, p: Permutation, point: int) -> int:
        return self.maps[self.group.index_of(p)][point]

    def kernel_indices(self) -> tuple[int, ...]:
        cached = self._cache.get("kernel")
        if cached is None:
            idmap = tuple(range(self.domain_size))
            cached = tuple(i for i, m in enumerate(self.maps) if m == idmap)
            self._cache["kernel"] = cached
        return cached

    def is_faithful(self) -> bool:
        return self.kernel_indices() == (0,)

    def orbit_of(self, point: int, element_indices=None) -> tuple[int, ...]:
        ids = range(self.group.order) if element_indices is None else element_indices
        maps = self.maps
        return tuple(sorted({maps[i][point] for i in ids}))

    def orbits(self, element_indices=None) -> list[tuple[int, ...]]:
        ids = (range(self.group.order) if element_indices is None
               else element_indices)
        maps = self.maps
        seen = [False] * self.domain_size
        out = []
        for p in range(self.domain_size):
            if seen[p]:
                continue
            orb = sorted({maps[i][p] for i in ids})
            for q in orb:
                seen[q] = True
            out.append(tuple(orb))
        return out

    def is_transitive(self) -> bool:
        return self.domain_size > 0 and len(self.orbit_of(0)) == self.domain_size

    def stabilizer_indices(self, element_indices, point: int) -> tuple[int, ...]:
        maps = self.maps
        return tuple(i for i in element_indices if maps[i][point] == point)

    def point_stabilizer(self, point: int) -> Subgroup:
        """All elements fixing the point."""
        if not 0 <= point < self.domain_size:
            raise ValueError(f"point {point} outside domain of size {self.domain_size}")
        key = ("stab", point)
        cached = self._cache.get(key)
        if cached is None:
            cached = Subgroup(self.group,
                              self.stabilizer_indices(range(self.group.order), point))
            self._cache[key] = cached
        return cached

    def pointwise_stabilizer(self, points) -> Subgroup:
        """Elements fixing every listed point, computed by incremental filtering."""
        ids = tuple(range(self.group.order))
        for p in points:
            if not 0 <= p < self.domain_size:
                raise ValueError(f"point {p} outside domain of size {self.domain_size}")
            ids = self.stabilizer_indices(ids, p)
        return Subgroup(self.group, ids)

    def label_str(self, point: int, one_based_subsets: bool = False) -> str:
        lab = self.labels[point]
        if isinstance(lab, tuple):
            if one_based_subsets:
                return "{" + ",".join(str(i + 1) for i in lab) + "}"
            return "{" + ",".join(map(str, lab)) + "}"
        return str(lab)

    def __repr__(self) -> str:
        return f"<action {self.name}: order {self.group.order} on {self.domain_size} points>"


def _action_from_generator_maps(group, labels, gen_maps, name) -> GroupAction:
    """Transport the generator point-maps along the group's generation tree."""
    k = len(labels)
    idmap = tuple(range(k))
    maps: list[tuple[int, ...]] = [idmap] * group.order
    tree = group._tree
    for idx in range(1, group.order):
        parent, gi = tree[idx]
        pm = maps[parent]
        maps[idx] = tuple(map(pm.__getitem__, gen_maps[gi]))
    return GroupAction(group, labels, maps, name)


def natural_action(group: PermutationGroup, name: str | None = None) -> GroupAction:
    """The group acting on 0..degree-1 by its own images."""
    gen_maps = [g.images for g in group.generators]
    return _action_from_generator_maps(
        group, range(group.degree), gen_maps,
        name or f"natural(degree {group.degree})")


@lru_cache(maxsize=None)
def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """S_n generated by the transposition (0 1) and the n-cycle."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, [list(range(n))]))
    return PermutationGroup.generate(n, gens, cap)


@lru_cache(maxsize=None)
def alternating_group(n: int, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """A_n from a 3-cycle and an even long cycle."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return PermutationGroup.generate(n, (), cap)
    gens = [Permutation.from_cycles(n, [[0, 1, 2]])]
    if n > 3:
        if n % 2 == 1:
            gens.append(Permutation.from_cycles(n, [list(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [list(range(1, n))]))
    return PermutationGroup.generate(n, gens, cap)


@lru_cache(maxsize=None)
def ksubset_action(n: int, k: int, force: bool = False,
                   cap: int = DEFAULT_CAP) -> GroupAction:
    """S_n acting on the k-element subsets of {0, ..., n-1}.

    Subsets are enumerated in lexicographic order.  Requires n >= 2k; pass
    ``force=True`` to build the (still well-defined) action outside that range.
    """
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n < 2 * k and not force:
        raise KSubsetRangeError(
            f"k-subset action expects n >= 2k (got n={n}, k={k}); "
            "pass force=True to build it anyway")
    group = symmetric_group(n, cap)
    labels = list(combinations(range(n), k))
    index = {lab: i for i, lab in enumerate(labels)}
    gen_maps = [tuple(index[tuple(sorted(g.images[i] for i in lab))] for lab in labels)
                for g in group.generators]
    return _action_from_generator_maps(group, labels, gen_maps, f"subsets({n},{k})")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _primitive_root(q: int) -> int:
    """Smallest primitive root modulo the prime q."""
    if q == 2:
        return 1
    factors = set()
    m = q - 1
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for c in range(2, q):
        if all(pow(c, (q - 1) // f, q) != 1 for f in factors):
            return c
    raise AssertionError("no primitive root found")


@lru_cache(maxsize=None)
def pgl2_action(q: int, cap: int = DEFAULT_CAP) -> GroupAction:
    """PGL(2, q), q prime, on the q+1 points of the projective line.

    Point 0 is the point at infinity; point i+1 is the affine point i.
    Generated by x -> x+1, x -> cx (c the smallest primitive root), x -> 1/x.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    npts = q + 1
    INF = 0

    def pt(x):
        return x + 1

    shift = [0] * npts
    shift[INF] = INF
    for x in range(q):
        shift[pt(x)] = pt((x + 1) % q)
    c = _primitive_root(q)
    scale = [0] * npts
    scale[INF] = INF
    for x in range(q):
        scale[pt(x)] = pt((c * x) % q)
    invert = [0] * npts
    invert[INF] = pt(0)
    invert[pt(0)] = INF
    for x in range(1, q):
        invert[pt(x)] = pt(pow(x, q - 2, q))
    gens = [Permutation(shift), Permutation(scale), Permutation(invert)]
    group = PermutationGroup.generate(npts, gens, cap)
    return natural_action(group, name=f"pgl2({q})")


@lru_cache(maxsize=None)
def dihedral_action(n: int, cap: int = DEFAULT_CAP) -> GroupAction:
    """The dihedral group of order 2n on the n vertices of the n-gon.

    Restricted to n >= 3: at n = 2 the natural action of the order-4 group
    on 2 points is unfaithful, so base search is undefined there.
    """
    if n < 3:
        raise ValueError(f"dihedral action needs n >= 3, got {n}")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(n - i) % n for i in range(n)])
    group = PermutationGroup.generate(n, [rot, ref], cap)
    return natural_action(group, name=f"dihedral({n})")


@lru_cache(maxsize=None)
def cyclic_action(n: int, cap: int = DEFAULT_CAP) -> GroupAction:
    """The cyclic group of order n acting regularly on n points."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = [] if n == 1 else [Permutation([(i + 1) % n for i in range(n)])]
    group = PermutationGroup.generate(n, gens, cap)
    return natural_action(group, name=f"cyclic({n})")


@lru_cache(maxsize=None)
def alternating_action(n: int, cap: int = DEFAULT_CAP) -> GroupAction:
    """A_n on n points."""
    return natural_action(alternating_group(n, cap), name=f"alt({n})")


@lru_cache(maxsize=None)
def symmetric_action(n: int, cap: int = DEFAULT_CAP) -> GroupAction:
    """S_n on n points."""
    return natural_action(symmetric_group(n, cap), name=f"sym({n})")


@dataclass(frozen=True)
class BaseWitness:
    """A sequence of points whose pointwise stabilizer is trivial."""

    points: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.points)


def search_base(action: GroupAction, max_len: int) -> tuple[int, ...] | None:
    """Depth-bounded exhaustive search for a base of length <= max_len.

    Returns the first base found (points in ascending-index order within the
    pruned tree) or None if no base of that length exists.  Pruning: points
    fixed by the current stabilizer are skipped, only one representative per
    orbit of the current stabilizer is tried, and a branch is abandoned when
    the stabilizer is too large to be killed within the remaining depth
    (each point divides the stabilizer order by at most the domain size).
    """
    if not action.is_faithful():
        raise UnfaithfulActionError(
            f"{action.name}: base search needs a faithful action")
    maps = action.maps
    npts = action.domain_size

    def rec(ids, budget, prefix):
        if len(ids) == 1:
            return prefix
        if budget == 0 or len(ids) > npts ** budget:
            return None
        seen = [False] * npts
        for p in range(npts):
            if seen[p]:
                continue
            orb = {maps[i][p] for i in ids}
            for qpt in orb:
                seen[qpt] = True
            if len(orb) == 1:
                continue
            child = [i for i in ids if maps[i][p] == p]
            got = rec(child, budget - 1, prefix + (p,))
            if got is not None:
                return got
        return None

    return rec(list(range(action.group.order)), max_len, ())


def min_base_search(action: GroupAction) -> BaseWitness:
    """A minimum-length base, by iterative deepening over the target length."""
    if not action.is_faithful():
        raise UnfaithfulActionError(
            f"{action.name}: base search needs a faithful action")
    for length in range(action.domain_size + 1):
        found = search_base(action, length)
        if found is not None:
            return BaseWitness(found)
    raise AssertionError("faithful action must admit a base")
