"""Elements of Z_2[theta] = Z_2[x]/(f) known modulo 2^k.

All elements of one computation share the absolute precision ``2^k``, so a
coefficient vector of integers in ``[0, 2^k)`` is stored instead of a vector
of separately tracked 2-adic numbers.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import NotAUnit
from . import gf2x


def _reduce(poly: Sequence[int], f: Sequence[int], mod: int) -> list[int]:
    n = len(f) - 1
    r = [c % mod for c in poly]
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c:
            for j in range(n):
                r[i - n + j] = (r[i - n + j] - c * f[j]) % mod
        r[i] = 0
    r = (r + [0] * n)[:n]
    return r


class AlgebraElement:
    __slots__ = ("coeffs", "f", "k")

    def __init__(self, coeffs: Sequence[int], f: Sequence[int], k: int = 3):
        if f[-1] != 1:
            raise ValueError("f must be monic")
        self.f = tuple(f)
        self.k = k
        self.coeffs = tuple(_reduce(coeffs, f, 1 << k))

    @classmethod
    def from_poly(cls, poly: Sequence[int], f: Sequence[int], k: int = 3) -> "AlgebraElement":
        return cls(poly, f, k)

    @classmethod
    def one(cls, f, k: int = 3):
        return cls([1], f, k)

    @classmethod
    def theta(cls, f, k: int = 3):
        return cls([0, 1], f, k)

    @property
    def modulus(self) -> int:
        return 1 << self.k

    def _new(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(coeffs, self.f, self.k)

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.f != self.f:
                raise ValueError("elements of different algebras")
            return other
        return self._new([other])

    def __add__(self, other):
        other = self._lift(other)
        return self._new([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._new(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._new([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._lift(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.f, self.k))

    def __repr__(self):
        return f"AlgebraElement({list(self.coeffs)} mod 2^{self.k})"

    def reduce_mod2(self) -> int:
        """The image in F_2[theta-bar] as a packed F_2 polynomial."""
        return gf2x.from_intpoly(self.coeffs)

    def is_unit(self) -> bool:
        fbar = gf2x.from_intpoly(self.f)
        return gf2x.degree(gf2x.gcd(self.reduce_mod2(), fbar)) == 0

    def inverse(self) -> "AlgebraElement":
        """Inverse mod 2^k: invert mod 2, then Newton-lift ``x <- x(2 - ux)``."""
        fbar = gf2x.from_intpoly(self.f)
        try:
            inv = gf2x.inverse_mod(self.reduce_mod2(), fbar)
        except ZeroDivisionError:
            raise NotAUnit(f"{self} is not a unit") from None
        x = self._new(gf2x.to_bits(inv, len(self.f)))
        prec = 1
        while prec < self.k:
            x = x * (2 - self * x)
            prec *= 2
        return x

    def with_precision(self, k: int) -> "AlgebraElement":
        """Reduce to absolute precision ``2^k`` (k must not exceed the current one)."""
        if k > self.k:
            raise ValueError("cannot invent precision")
        return AlgebraElement(self.coeffs, self.f, k)
