"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Values are stored as rational coefficient vectors over the power basis
zeta^0, ..., zeta^(phi(m)-1), canonically reduced modulo the m-th
cyclotomic polynomial, so the zero test is exact.  Purely rational values
are normalized to conductor 1.  Mixed-conductor arithmetic lifts both
operands to the lcm of their conductors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("conductor must be positive")
    out = m
    n = m
    f = 2
    while f * f <= n:
        if n % f == 0:
            out -= out // f
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out -= out // n
    return out


def _polydiv_exact(num: list[int], den) -> list[int]:
    """Exact division of integer polynomials (coefficients low to high)."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    assert all(c == 0 for c in num), "division was not exact"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, low to high, monic."""
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    assert len(poly) == euler_phi(m) + 1
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the coefficient vector of x^e mod Phi_m, for e in 0..m-1."""
    phi = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    top = tuple(-c for c in poly[:phi])  # x^phi = top, since Phi_m is monic
    rows: list[tuple[int, ...]] = []
    for e in range(min(phi, m)):
        rows.append(tuple(1 if i == e else 0 for i in range(phi)))
    for e in range(phi, m):
        prev = rows[e - 1]
        carry = prev[phi - 1]
        shifted = (0,) + prev[:phi - 1]
        if carry:
            rows.append(tuple(s + carry * t for s, t in zip(shifted, top)))
        else:
            rows.append(shifted)
    return tuple(rows)


def _q(x):
    """Normalize a rational coefficient: integral Fractions become ints."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


def _reduce(m: int, expdict) -> tuple:
    """Reduce a sparse {exponent mod m: coeff} dict to the canonical basis."""
    phi = euler_phi(m)
    acc = [0] * phi
    rows = None
    for e, c in expdict.items():
        if c == 0:
            continue
        if e < phi:
            acc[e] += c
        else:
            if rows is None:
                rows = _power_rows(m)
            row = rows[e]
            for i, t in enumerate(row):
                if t:
                    acc[i] += c * t
    return tuple(_q(c) for c in acc)


class Cyclotomic:
    """An element of Q(zeta_m), exact."""

    __slots__ = ("conductor", "coeffs")
    __hash__ = None  # equality lifts conductors, so hashing would be unsound

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(_q(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
                       for c in coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"need {euler_phi(conductor)} coefficients for conductor {conductor}, "
                f"got {len(coeffs)}")
        if conductor > 1 and all(c == 0 for c in coeffs[1:]):
            conductor, coeffs = 1, coeffs[:1]
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        return cls(1, (value,))

    @classmethod
    def root_of_unity(cls, m: int, e: int = 1) -> "Cyclotomic":
        """zeta_m^e."""
        return cls(m, _reduce(m, {e % m: 1}))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coeffs[0])

    def as_integer(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return int(f)

    def lifted_coeffs(self, m: int) -> tuple:
        """Coefficients over the basis of Q(zeta_m); requires conductor | m.

        Unlike the canonical form, the result is not re-collapsed, so its
        length is always phi(m).
        """
        if m == self.conductor:
            return self.coeffs
        if m % self.conductor != 0:
            raise ValueError(f"cannot lift conductor {self.conductor} into {m}")
        s = m // self.conductor
        return _reduce(m, {j * s: c for j, c in enumerate(self.coeffs) if c != 0})

    def _pair(self, other: "Cyclotomic"):
        if self.conductor == other.conductor:
            return self.conductor, self.coeffs, other.coeffs
        m = math.lcm(self.conductor, other.conductor)
        return m, self.lifted_coeffs(m), other.lifted_coeffs(m)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._pair(other)
        return Cyclotomic(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational:
            q = self.coeffs[0]
            return Cyclotomic(other.conductor, tuple(q * c for c in other.coeffs))
        if other.is_rational:
            q = other.coeffs[0]
            return Cyclotomic(self.conductor, tuple(q * c for c in self.coeffs))
        m, a, b = self._pair(other)
        prod: dict[int, object] = {}
        nz_b = [(j, cb) for j, cb in enumerate(b) if cb != 0]
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in nz_b:
                e = (i + j) % m
                prod[e] = prod.get(e, 0) + ca * cb
        return Cyclotomic(m, _reduce(m, prod))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if self.is_rational:
            return Cyclotomic.rational(self.coeffs[0] ** n)
        out = Cyclotomic.rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta^j -> zeta^(m-j)."""
        if self.is_rational:
            return self
        m = self.conductor
        return Cyclotomic(m, _reduce(m, {(m - j) % m: c
                                         for j, c in enumerate(self.coeffs) if c != 0}))

    @property
    def is_real(self) -> bool:
        return self == self.conjugate()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        m, a, b = self._pair(other)
        return a == b

    def sort_key(self, m: int) -> tuple:
        """Deterministic comparison key over the basis of Q(zeta_m)."""
        return tuple(Fraction(c) for c in self.lifted_coeffs(m))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            z = "1" if j == 0 else (f"z{self.conductor}" if j == 1
                                    else f"z{self.conductor}^{j}")
            if c == 1 and j > 0:
                t = z
            elif c == -1 and j > 0:
                t = "-" + z
            else:
                t = f"{c}*{z}" if j > 0 else str(c)
            terms.append(t)
        out = terms[0]
        for t in terms[1:]:
            out += ("-" + t[1:]) if t.startswith("-") else ("+" + t)
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self})"


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
