"""Class functions on enumerated groups: exact inner products, pointwise
products and powers, permutation characters, restriction, induction, and
the homomorphisms onto {1, -1}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import lcm

from .actions import GroupAction
from .cyclotomic import ONE, ZERO, Cyclotomic
from .perm import PermutationGroup, Subgroup


class ClassFunction:
    """One exact cyclotomic value per conjugacy class of a fixed group."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermutationGroup, values):
        values = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)
                       for v in values)
        classes = group.conjugacy_classes()
        if len(values) != len(classes):
            raise ValueError(f"need {len(classes)} class values, got {len(values)}")
        exponent = group.exponent()
        for v in values:
            if exponent % v.conductor != 0:
                raise ValueError(
                    f"value conductor {v.conductor} does not divide group exponent {exponent}")
        self.group = group
        self.values = values

    def __getitem__(self, class_index: int) -> Cyclotomic:
        return self.values[class_index]

    def value_on_element(self, element_index: int) -> Cyclotomic:
        return self.values[self.group.conjugacy_classes().class_of[element_index]]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _same_group(self, other: "ClassFunction"):
        if self.group is not other.group:
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same_group(other)
            return ClassFunction(self.group,
                                 tuple(a * b for a, b in zip(self.values, other.values)))
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return ClassFunction(self.group, tuple(v * other for v in self.values))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ClassFunction":
        if not isinstance(n, int) or n < 0:
            raise ValueError("pointwise powers need a nonnegative integer exponent")
        return ClassFunction(self.group, tuple(v ** n for v in self.values))

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def is_pm1_valued(self) -> bool:
        return all(v == 1 or v == -1 for v in self.values)

    def __repr__(self) -> str:
        vals = ", ".join(str(v) for v in self.values)
        return f"ClassFunction[{vals}]"


def trivial_character(group: PermutationGroup) -> ClassFunction:
    cached = group._cache.get("trivial_character")
    if cached is None:
        cached = ClassFunction(group, (ONE,) * len(group.conjugacy_classes()))
        group._cache["trivial_character"] = cached
    return cached


def inner_product(f1: ClassFunction, f2: ClassFunction) -> Cyclotomic:
    """(1/|G|) * sum over g of f1(g) * conj(f2(g)), as a class-weighted sum."""
    f1._same_group(f2)
    classes = f1.group.conjugacy_classes()
    total = ZERO
    for size, a, b in zip(classes.sizes, f1.values, f2.values):
        total = total + a * b.conjugate() * size
    return total * Fraction(1, f1.group.order)


def inner_product_integer(f1: ClassFunction, f2: ClassFunction) -> int:
    """Inner product that must come out a nonnegative integer (characters)."""
    v = inner_product(f1, f2)
    n = v.as_integer()
    if n < 0:
        raise ValueError(f"inner product {n} is negative; arguments are not characters")
    return n


def permutation_character(action: GroupAction) -> ClassFunction:
    """Value at a class = number of domain points fixed by its representative."""
    classes = action.group.conjugacy_classes()
    vals = []
    for ri in classes.rep_indices:
        m = action.maps[ri]
        vals.append(sum(1 for p in range(action.domain_size) if m[p] == p))
    return ClassFunction(action.group, vals)


def sign_character(group: PermutationGroup) -> ClassFunction:
    """The parity homomorphism of a permutation group, as a class function.

    For the natural S_n this is the sign character; for subgroups of A_n it
    degenerates to the trivial character.
    """
    classes = group.conjugacy_classes()
    return ClassFunction(group, tuple(r.sign() for r in classes.representatives))


def restrict(f: ClassFunction, sub: Subgroup) -> ClassFunction:
    """Restriction of a class function along a subgroup embedding."""
    if f.group is not sub.parent:
        raise ValueError("subgroup does not live in the class function's group")
    h = sub.group
    parent_class_of = f.group.conjugacy_classes().class_of
    vals = []
    for rep_h in h.conjugacy_classes().rep_indices:
        parent_idx = sub.to_parent[rep_h]
        vals.append(f.values[parent_class_of[parent_idx]])
    return ClassFunction(h, vals)


def _embedding_data(h: PermutationGroup, g: PermutationGroup):
    """Fusion data for h <= g: per h-class, the g-class that absorbs it."""
    for other, data in h._cache.setdefault("embeddings", []):
        if other is g:
            return data
    try:
        to_parent = tuple(g.index_of(e) for e in h.elements)
    except ValueError:
        raise ValueError("not a subgroup: some element is missing from the big group") from None
    g_class_of = g.conjugacy_classes().class_of
    h_classes = h.conjugacy_classes()
    fusion = []
    for hc in range(len(h_classes)):
        rep_parent = to_parent[h_classes.rep_indices[hc]]
        fusion.append(g_class_of[rep_parent])
    data = (to_parent, tuple(fusion))
    h._cache["embeddings"].append((g, data))
    return data


def induce(alpha: ClassFunction, group: PermutationGroup) -> ClassFunction:
    """Induction of a class function from a subgroup.

    Evaluates (1/|H|) * sum over x in G with x g x^-1 in H of alpha(x g x^-1);
    the x-sum collapses to |C_G(g)| times the sum of |hc| * alpha(hc) over the
    H-classes hc fusing into the class of g.
    """
    h = alpha.group
    _, fusion = _embedding_data(h, group)
    g_classes = group.conjugacy_classes()
    h_classes = h.conjugacy_classes()
    sums: list = [ZERO] * len(g_classes)
    for hc, gc in enumerate(fusion):
        sums[gc] = sums[gc] + alpha.values[hc] * h_classes.sizes[hc]
    vals = []
    for gc, s in enumerate(sums):
        centralizer = group.order // g_classes.sizes[gc]
        vals.append(s * Fraction(centralizer, h.order))
    return ClassFunction(group, vals)


def pm1_characters(group: PermutationGroup) -> tuple[ClassFunction, ...]:
    """All homomorphisms G -> {1, -1}, as class functions.

    Found by assigning signs to the generators and keeping the assignments
    that extend consistently over the whole element list; the count is a
    power of two.  The trivial character comes first.
    """
    cached = group._cache.get("pm1")
    if cached is not None:
        return cached
    gens = group.generators
    classes = group.conjugacy_classes()
    if not gens:
        out = (trivial_character(group),)
        group._cache["pm1"] = out
        return out
    cols = group.right_translation_columns()
    tree = group._tree
    order = group.order
    found = []
    for signs in iproduct((1, -1), repeat=len(gens)):
        val = [0] * order
        val[0] = 1
        for idx in range(1, order):
            parent, gi = tree[idx]
            val[idx] = val[parent] * signs[gi]
        ok = True
        for gi in range(len(gens)):
            col = cols[gi]
            s = signs[gi]
            if any(val[col[i]] != val[i] * s for i in range(order)):
                ok = False
                break
        if not ok:
            continue
        for members in classes.members:
            first = val[members[0]]
            assert all(val[i] == first for i in members), "homomorphism not a class function"
        found.append(ClassFunction(group, tuple(val[ri] for ri in classes.rep_indices)))
    count = len(found)
    assert count & (count - 1) == 0, "number of {1,-1} characters must be a power of two"
    out = tuple(found)
    group._cache["pm1"] = out
    return out


def common_conductor(f: ClassFunction) -> int:
    return lcm(*(v.conductor for v in f.values))


def class_function_to_json(f: ClassFunction) -> dict:
    """Serialize per the documented schema:
    {conductor, classes: [{size, rep_cycles, value: [rational coeffs]}]}.
    """
    m = common_conductor(f)
    classes = f.group.conjugacy_classes()
    out_classes = []
    for size, rep, v in zip(classes.sizes, classes.representatives, f.values):
        out_classes.append({
            "size": size,
            "rep_cycles": rep.cycles(),
            "value": [str(Fraction(c)) for c in v.lifted_coeffs(m)],
        })
    return {"conductor": m, "classes": out_classes}


def class_function_from_json(group: PermutationGroup, data: dict) -> ClassFunction:
    """Inverse of class_function_to_json for a known group."""
    m = data["conductor"]
    classes = group.conjugacy_classes()
    if len(data["classes"]) != len(classes):
        raise ValueError("class count mismatch")
    vals = []
    for entry, size, rep in zip(data["classes"], classes.sizes, classes.representatives):
        if entry["size"] != size or entry["rep_cycles"] != rep.cycles():
            raise ValueError("class data does not match the group")
        vals.append(Cyclotomic(m, [Fraction(c) for c in entry["value"]]))
    return ClassFunction(group, vals)
