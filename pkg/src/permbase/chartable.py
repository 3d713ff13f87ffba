"""Exact character tables of fully enumerated groups.

The table is found from the class-multiplication matrices: their joint
eigenvectors over a prime field F_p (p = 1 mod the group exponent, p larger
than both twice the square root of the order and the class count) are the
central characters mod p.  Degrees are recovered from the orthogonality
relation, and each value is lifted to an exact cyclotomic number through the
eigenvalue-multiplicity discrete Fourier sum on the power map of the class
representative.  Row and column orthogonality are verified exactly before a
table is returned; a verification failure aborts, it is never ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classfun import ClassFunction, inner_product
from .cyclotomic import Cyclotomic, _reduce, euler_phi
from .perm import PermutationGroup


class TableVerificationError(RuntimeError):
    """Exact orthogonality verification of a computed table failed."""


@dataclass(frozen=True)
class CharacterTable:
    """All irreducible characters of a group, in canonical order.

    Row 0 is the trivial character; the rest are sorted by degree and then
    lexicographically by their value vectors.
    """

    group: PermutationGroup
    irreducibles: tuple[ClassFunction, ...]

    def __len__(self) -> int:
        return len(self.irreducibles)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(chi.degree.as_integer() for chi in self.irreducibles)

    def index_of(self, f: ClassFunction) -> int:
        for i, chi in enumerate(self.irreducibles):
            if chi == f:
                return i
        raise ValueError("class function is not a row of this table")


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


def _dixon_prime(exponent: int, order: int, class_count: int) -> int:
    """Smallest usable prime: p = 1 mod exponent, p > 2*sqrt(order), p > classes."""
    floor = max(math.isqrt(4 * order), class_count)
    p = exponent + 1
    while p <= floor or not _is_prime(p):
        p += exponent
    return p


def _smallest_generator(p: int) -> int:
    if p == 2:
        return 1
    factors = set()
    m = p - 1
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for c in range(2, p):
        if all(pow(c, (p - 1) // f, p) != 1 for f in factors):
            return c
    raise AssertionError("no generator found")


def _class_matrix(group: PermutationGroup, i: int) -> list[list[int]]:
    """M[j][k] = number of pairs (x, y), x in class i, y in class j, xy = rep_k."""
    classes = group.conjugacy_classes()
    r = len(classes)
    elements = group.elements
    index = group._index
    class_of = classes.class_of
    rep_imgs = [elements[ri].images for ri in classes.rep_indices]
    mat = [[0] * r for _ in range(r)]
    for xi in classes.members[i]:
        xinv = elements[xi].inverse().images
        for k in range(r):
            y = tuple(map(xinv.__getitem__, rep_imgs[k]))
            mat[class_of[index[y]]][k] += 1
    return mat


def _echelon(vectors, p: int):
    """Reduced column echelon basis of the span; returns (basis, pivot_rows)."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for vec in vectors:
        v = list(vec)
        for b, piv in zip(basis, pivots):
            c = v[piv]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, b)]
        piv = next((row for row, x in enumerate(v) if x), None)
        if piv is None:
            continue
        inv = pow(v[piv], p - 2, p)
        v = [x * inv % p for x in v]
        for t, (b, bp) in enumerate(zip(basis, pivots)):
            c = b[piv]
            if c:
                basis[t] = [(x - c * y) % p for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(piv)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[t] for t in order], [pivots[t] for t in order]


def _charpoly(mat, p: int) -> list[int]:
    """det(mat - x*I) coefficients mod p, by evaluation and interpolation."""
    s = len(mat)
    xs = list(range(s + 1))
    ys = [_det_shift(mat, x, p) for x in xs]
    full = [1]
    for x in xs:
        full = _polymul(full, [(-x) % p, 1], p)
    out = [0] * (s + 1)
    for x, y in zip(xs, ys):
        quot = _polydiv_linear(full, x, p)
        denom = 1
        for u in xs:
            if u != x:
                denom = denom * (x - u) % p
        scale = y * pow(denom, p - 2, p) % p
        for i, c in enumerate(quot):
            out[i] = (out[i] + c * scale) % p
    return out


def _det_shift(mat, lam: int, p: int) -> int:
    s = len(mat)
    a = [[(mat[i][j] - (lam if i == j else 0)) % p for j in range(s)] for i in range(s)]
    det = 1
    for col in range(s):
        piv = next((row for row in range(col, s) if a[row][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det % p
        det = det * a[col][col] % p
        inv = pow(a[col][col], p - 2, p)
        for row in range(col + 1, s):
            c = a[row][col] * inv % p
            if c:
                a[row] = [(x - c * y) % p for x, y in zip(a[row], a[col])]
    return det % p


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _polydiv_linear(poly, root: int, p: int):
    """poly / (x - root), exact (root must be a root)."""
    out = [0] * (len(poly) - 1)
    carry = 0
    for i in range(len(poly) - 1, 0, -1):
        carry = (poly[i] + carry * root) % p
        out[i - 1] = carry
    assert (poly[0] + carry * root) % p == 0
    return out


def _kernel(mat, p: int):
    """Basis of the null space of a square matrix mod p."""
    s = len(mat)
    a = [row[:] for row in mat]
    pivots = []
    row = 0
    for col in range(s):
        piv = next((x for x in range(row, s) if a[x][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], p - 2, p)
        a[row] = [v * inv % p for v in a[row]]
        for x in range(s):
            if x != row and a[x][col]:
                c = a[x][col]
                a[x] = [(v - c * w) % p for v, w in zip(a[x], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(s) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * s
        v[fc] = 1
        for rr, pc in enumerate(pivots):
            v[pc] = (-a[rr][fc]) % p
        out.append(v)
    return out


def _matvec(mat, vec, p):
    return [sum(row[k] * vec[k] for k in range(len(vec))) % p for row in mat]


def _split_subspace(basis, pivots, mat, p):
    """Split an invariant subspace into eigen-subspaces of mat."""
    s = len(basis)
    images = [_matvec(mat, b, p) for b in basis]
    # Coordinates of each image in the echelon basis come from the pivot rows.
    R = [[images[t][pivots[u]] for t in range(s)] for u in range(s)]
    for t in range(s):
        recon = [0] * len(basis[0])
        for u in range(s):
            c = R[u][t]
            if c:
                recon = [(x + c * y) % p for x, y in zip(recon, basis[u])]
        assert recon == images[t], "subspace is not invariant; internal error"
    poly = _charpoly(R, p)
    out = []
    for lam in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * lam + c) % p
        if acc:
            continue
        shifted = [[(R[i][j] - (lam if i == j else 0)) % p for j in range(s)]
                   for i in range(s)]
        kern = _kernel(shifted, p)
        ambient = []
        for coords in kern:
            v = [0] * len(basis[0])
            for u, c in enumerate(coords):
                if c:
                    v = [(x + c * y) % p for x, y in zip(v, basis[u])]
            ambient.append(v)
        out.append(_echelon(ambient, p))
    assert sum(len(b) for b, _ in out) == s, "eigen decomposition lost dimensions"
    return out


def _mod_p_character_table(group: PermutationGroup, p: int):
    """Character values mod p, one row per irreducible (row order arbitrary)."""
    classes = group.conjugacy_classes()
    r = len(classes)
    full = _echelon([[1 if i == j else 0 for i in range(r)] for j in range(r)], p)
    subspaces = [full]
    for i in range(1, r):
        if all(len(b) == 1 for b, _ in subspaces):
            break
        mat = [[v % p for v in row] for row in _class_matrix(group, i)]
        nxt = []
        for basis, pivots in subspaces:
            if len(basis) == 1:
                nxt.append((basis, pivots))
            else:
                nxt.extend(_split_subspace(basis, pivots, mat, p))
        subspaces = nxt
    assert all(len(b) == 1 for b, _ in subspaces), \
        "class matrices failed to separate the central characters"

    elements = group.elements
    index = group._index
    istar = [classes.class_of[index[elements[ri].inverse().images]]
             for ri in classes.rep_indices]
    inv_sizes = [pow(sz, p - 2, p) for sz in classes.sizes]
    rows = []
    for basis, _ in subspaces:
        v = basis[0]
        assert v[0] != 0, "central character vanishes on the identity class"
        scale = pow(v[0], p - 2, p)
        omega = [x * scale % p for x in v]
        s = sum(omega[i] * omega[istar[i]] % p * inv_sizes[i] for i in range(r)) % p
        d2 = group.order % p * pow(s, p - 2, p) % p
        degree = next((d for d in range(1, math.isqrt(group.order) + 1)
                       if d * d % p == d2), None)
        assert degree is not None, "degree recovery failed; prime too small"
        theta = [degree * omega[i] % p * inv_sizes[i] % p for i in range(r)]
        rows.append((degree, theta))
    return rows


def _lift_row(group: PermutationGroup, degree: int, theta, p: int, zeta_m: int):
    """Exact cyclotomic values from a mod-p character row."""
    classes = group.conjugacy_classes()
    m = group.exponent()
    elements = group.elements
    index = group._index
    values = []
    for ci, ri in enumerate(classes.rep_indices):
        g = elements[ri]
        o = g.order()
        power_class = []
        x = group.identity
        for _ in range(o):
            power_class.append(classes.class_of[index[x.images]])
            x = x * g
        zeta_o = pow(zeta_m, m // o, p)
        inv_o = pow(o, p - 2, p)
        mults = []
        for j in range(o):
            zinv = pow(zeta_o, (p - 1) - j % (p - 1), p) if j else 1
            acc = 0
            zt = 1
            for t in range(o):
                acc = (acc + theta[power_class[t]] * zt) % p
                zt = zt * zinv % p
            mults.append(acc * inv_o % p)
        assert sum(mults) == degree, \
            "eigenvalue multiplicities do not sum to the degree"
        # Store at conductor o (the element order): the value is a sum of
        # o-th roots, and a tight conductor keeps restriction to subgroups
        # of smaller exponent legal and the arithmetic small.
        expdict = {j: a for j, a in enumerate(mults) if a}
        values.append(Cyclotomic(o, _reduce(o, expdict)))
    return values


def _verify_orthogonality(group: PermutationGroup, chars: list[ClassFunction]):
    classes = group.conjugacy_classes()
    r = len(classes)
    for i in range(r):
        for j in range(i, r):
            got = inner_product(chars[i], chars[j])
            want = 1 if i == j else 0
            if not got == want:
                raise TableVerificationError(
                    f"row orthogonality failed at ({i},{j}): got {got}")
    for c1 in range(r):
        for c2 in range(c1, r):
            acc = Cyclotomic.rational(0)
            for chi in chars:
                acc = acc + chi.values[c1] * chi.values[c2].conjugate()
            want = group.order // classes.sizes[c1] if c1 == c2 else 0
            if not acc == want:
                raise TableVerificationError(
                    f"column orthogonality failed at ({c1},{c2}): got {acc}")


def character_table(group: PermutationGroup) -> CharacterTable:
    """The full set of irreducible characters, exactly, verified.

    Raises TableVerificationError if the computed table fails exact row or
    column orthogonality (an internal bug surface, not a user error).
    """
    cached = group._cache.get("character_table")
    if cached is not None:
        return cached
    classes = group.conjugacy_classes()
    r = len(classes)
    m = group.exponent()
    p = _dixon_prime(m, group.order, r)
    zeta_m = pow(_smallest_generator(p), (p - 1) // m, p)
    rows = _mod_p_character_table(group, p)
    chars = []
    for degree, theta in rows:
        if group.order % degree != 0:
            raise TableVerificationError(
                f"computed degree {degree} does not divide the group order")
        chars.append(ClassFunction(group, _lift_row(group, degree, theta, p, zeta_m)))
    if sum(d * d for d, _ in rows) != group.order:
        raise TableVerificationError("degrees do not satisfy sum of squares = order")
    _verify_orthogonality(group, chars)

    ident = [chi for chi in chars if all(v == 1 for v in chi.values)]
    if len(ident) != 1:
        raise TableVerificationError("table does not contain the trivial character")
    rest = [chi for chi in chars if chi is not ident[0]]
    rest.sort(key=lambda chi: (chi.degree.as_integer(),
                               tuple(v.sort_key(m) for v in chi.values)))
    table = CharacterTable(group, tuple(ident + rest))
    group._cache["character_table"] = table
    return table


def constituent_multiplicity(f: ClassFunction, table: CharacterTable) -> tuple[int, ...]:
    """Multiplicities of each irreducible in a character.

    Raises ValueError when any multiplicity is negative or non-integral,
    or when the decomposition does not reassemble the input (then the input
    was not a character of the table's group).
    """
    if f.group is not table.group:
        raise ValueError("character and table live on different groups")
    mults = []
    for chi in table.irreducibles:
        v = inner_product(f, chi)
        try:
            n = v.as_integer()
        except ValueError:
            raise ValueError(f"non-integer multiplicity {v}; not a character") from None
        if n < 0:
            raise ValueError(f"negative multiplicity {n}; not a character")
        mults.append(n)
    recon = [Cyclotomic.rational(0)] * len(f.values)
    for n, chi in zip(mults, table.irreducibles):
        if n:
            recon = [a + n * b for a, b in zip(recon, chi.values)]
    if any(not a == b for a, b in zip(recon, f.values)):
        raise ValueError("decomposition does not reassemble the input; not a character")
    return tuple(mults)
