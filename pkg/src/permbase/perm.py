"""Permutations and fully enumerated finite permutation groups.

Groups are stored as their complete element list, generated breadth-first
from the given generators.  Element order, conjugacy class order and class
representatives are all deterministic, so every downstream computation is
bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Group closure would exceed the configured element cap."""


class Permutation:
    """A permutation of {0, ..., n-1}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for i in images:
            if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[i] = True
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if images[a] != a:
                    raise ValueError("cycles are not disjoint")
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition p*q, with q applied first: (p*q)(x) = p(q(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in composition")
        return Permutation(map(self.images.__getitem__, other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = True) -> list[list[int]]:
        """Disjoint cycles, each starting at its minimal point, sorted by start."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if include_fixed or len(cycle) > 1:
                out.append(cycle)
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def sign(self) -> int:
        """Parity of the permutation: +1 for even, -1 for odd."""
        odd = sum(len(c) - 1 for c in self.cycles()) % 2
        return -1 if odd else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return f"Permutation.identity({len(self.images)})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"<perm {body} deg {len(self.images)}>"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(x) = p(q(x))."""
    return p * q


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy classes of a group, in canonical order.

    Class 0 is the identity class; the rest are sorted by (size, index of
    the representative).  Representatives are the minimal element of each
    class in the group's element order.
    """

    representatives: tuple[Permutation, ...]
    rep_indices: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.representatives)


class PermutationGroup:
    """A finite permutation group with its full element list.

    Elements are enumerated breadth-first from the identity, multiplying on
    the right by the generators in the order given; newly found elements of
    each level are appended in lexicographic order of their image tuples.
    """

    __slots__ = ("degree", "generators", "elements", "order",
                 "_index", "_tree", "_cache")

    def __init__(self, degree, generators, elements, index, tree):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self._index = index
        self._tree = tree  # element i = elements[parent] * generators[gen]
        self._cache = {}

    @classmethod
    def generate(cls, degree: int, generators, cap: int = DEFAULT_CAP) -> "PermutationGroup":
        """Close the generators under composition.

        An empty generator list gives the trivial group of the stated degree.
        Raises EnumerationCapError if the closure would exceed ``cap`` elements.
        """
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g)
                     for g in generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        ident = Permutation.identity(degree)
        elements = [ident]
        index = {ident.images: 0}
        tree = [(-1, -1)]
        gen_images = [g.images for g in gens]
        frontier = [0]
        while frontier:
            found = {}
            for idx in frontier:
                base = elements[idx].images
                for gi, gim in enumerate(gen_images):
                    img = tuple(map(base.__getitem__, gim))
                    if img not in index and img not in found:
                        found[img] = (idx, gi)
            frontier = []
            for img in sorted(found):
                if len(elements) + 1 > cap:
                    raise EnumerationCapError(
                        f"group order exceeds cap of {cap} elements")
                index[img] = len(elements)
                frontier.append(len(elements))
                elements.append(Permutation(img))
                tree.append(found[img])
        return cls(degree, gens, tuple(elements), index, tuple(tree))

    @classmethod
    def from_elements(cls, degree: int, elements, cap: int = DEFAULT_CAP) -> "PermutationGroup":
        """Rebuild a group from a closed element collection.

        A small generating set is extracted greedily in the order given, and
        the group is regenerated from it so the canonical element order applies.
        """
        elems = list(elements)
        ident = Permutation.identity(degree).images
        closed = {ident}
        gens: list[Permutation] = []
        for e in elems:
            if e.images not in closed:
                gens.append(e)
                grp = cls.generate(degree, gens, cap)
                closed = set(grp._index)
        grp = cls.generate(degree, gens, cap) if gens else cls.generate(degree, (), cap)
        if grp.order != len({e.images for e in elems}):
            raise ValueError("element collection is not closed under the group operations")
        return grp

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p) -> bool:
        return isinstance(p, Permutation) and p.images in self._index

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<group of order {self.order}, degree {self.degree}>"

    def conjugacy_classes(self) -> ConjugacyClasses:
        cached = self._cache.get("classes")
        if cached is not None:
            return cached
        imgs = [e.images for e in self.elements]
        index = self._index
        conj_pairs = [(g.images, g.inverse().images) for g in self.generators]
        assigned = [False] * self.order
        raw: list[list[int]] = []
        for start in range(self.order):
            if assigned[start]:
                continue
            orbit = [start]
            assigned[start] = True
            queue = [start]
            while queue:
                x = imgs[queue.pop()]
                for gim, gin in conj_pairs:
                    y = tuple(gim[x[gin[p]]] for p in range(self.degree))
                    yi = index[y]
                    if not assigned[yi]:
                        assigned[yi] = True
                        orbit.append(yi)
                        queue.append(yi)
            raw.append(sorted(orbit))
        head = [c for c in raw if c[0] == 0]
        rest = sorted((c for c in raw if c[0] != 0), key=lambda c: (len(c), c[0]))
        ordered = head + rest
        class_of = [0] * self.order
        for ci, members in enumerate(ordered):
            for ei in members:
                class_of[ei] = ci
        classes = ConjugacyClasses(
            representatives=tuple(self.elements[c[0]] for c in ordered),
            rep_indices=tuple(c[0] for c in ordered),
            sizes=tuple(len(c) for c in ordered),
            class_of=tuple(class_of),
            members=tuple(tuple(c) for c in ordered),
        )
        assert sum(classes.sizes) == self.order
        self._cache["classes"] = classes
        return classes

    def exponent(self) -> int:
        """lcm of the element orders."""
        cached = self._cache.get("exponent")
        if cached is None:
            cached = math.lcm(*(r.order() for r in self.conjugacy_classes().representatives))
            self._cache["exponent"] = cached
        return cached

    def right_translation_columns(self) -> tuple[tuple[int, ...], ...]:
        """For each generator g, the map element index -> index of element*g."""
        cached = self._cache.get("rcols")
        if cached is None:
            index = self._index
            cols = []
            for g in self.generators:
                gim = g.images
                cols.append(tuple(index[tuple(map(e.images.__getitem__, gim))]
                                  for e in self.elements))
            cached = tuple(cols)
            self._cache["rcols"] = cached
        return cached

    def subgroup(self, indices) -> "Subgroup":
        return Subgroup(self, indices)


class Subgroup:
    """A subgroup given by the sorted indices of its elements in the parent."""

    __slots__ = ("parent", "indices")

    def __init__(self, parent: PermutationGroup, indices):
        self.parent = parent
        self.indices = tuple(sorted(indices))
        if not self.indices or self.indices[0] != 0:
            raise ValueError("a subgroup must contain the identity (index 0)")

    @property
    def order(self) -> int:
        return len(self.indices)

    @property
    def is_trivial(self) -> bool:
        return len(self.indices) == 1

    def _materialize(self):
        key = ("subgroup", self.indices)
        cached = self.parent._cache.get(key)
        if cached is None:
            elems = [self.parent.elements[i] for i in self.indices]
            grp = PermutationGroup.from_elements(self.parent.degree, elems)
            if grp.order != len(self.indices):
                raise ValueError("index set is not closed under the group operations")
            to_parent = tuple(self.parent.index_of(e) for e in grp.elements)
            cached = (grp, to_parent)
            self.parent._cache[key] = cached
        return cached

    @property
    def group(self) -> PermutationGroup:
        """The subgroup as a standalone group (canonical element order)."""
        return self._materialize()[0]

    @property
    def to_parent(self) -> tuple[int, ...]:
        """Map from element indices of ``self.group`` to parent indices."""
        return self._materialize()[1]

    def __contains__(self, p) -> bool:
        return p in self.parent and self.parent.index_of(p) in set(self.indices)

    def __repr__(self) -> str:
        return f"<subgroup of order {len(self.indices)} in {self.parent!r}>"


def load_group_file(path, cap: int = DEFAULT_CAP) -> PermutationGroup:
    """Read a group from a text file.

    Line 1 is ``degree n``; each further non-empty line is one generator as a
    space-separated list of 0-based images.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh.read().split("\n")]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree":
        raise ValueError(f"first line must be 'degree n', got {lines[0]!r}")
    degree = int(head[1])
    if degree <= 0:
        raise ValueError("degree must be positive")
    gens = []
    for ln in lines[1:]:
        images = [int(tok) for tok in ln.split()]
        if len(images) != degree:
            raise ValueError(f"generator line has {len(images)} images, expected {degree}")
        gens.append(Permutation(images))
    return PermutationGroup.generate(degree, gens, cap)
