"""Iterates of x^2 + c as exact integer polynomials in c.

A_1 = c, A_{n+1} = A_n^2 + c, so A_n(c) is the n-th iterate of 0.
a_n(x) = x^(2^(n-1)) A_n(1/x) satisfies a_1 = 1, a_{n+1} = x^(2^n - 1) + a_n^2.
B_n is the Moebius quotient prod_{d | n} A_d^mu(n/d); it is a monic integer
polynomial and A_n = prod_{d | n} B_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .. import polyz
from ..errors import IndexOutOfRange, InternalInconsistency, NotMonic, OddDegree, ResultantNotUnit

MAX_INDEX = 12
MAX_RESULTANT_INDEX = 8
KINDS = ("A", "a", "B")


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def mobius(n: int) -> int:
    k = 0
    m = n
    for p in prime_factors(n):
        m //= p
        if m % p == 0:
            return 0
        k += 1
    return -1 if k % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _check_index(n: int, cap: int = MAX_INDEX):
    if not isinstance(n, int) or not 1 <= n <= cap:
        raise IndexOutOfRange(f"index {n} outside 1 .. {cap}")


@lru_cache(maxsize=None)
def _A(n: int) -> tuple:
    if n == 1:
        return (0, 1)
    prev = list(_A(n - 1))
    return tuple(polyz.add(polyz.mul_kronecker(prev, prev), [0, 1]))


@lru_cache(maxsize=None)
def _a(n: int) -> tuple:
    if n == 1:
        return (1,)
    prev = list(_a(n - 1))
    return tuple(polyz.add(polyz.monomial((1 << (n - 1)) - 1), polyz.mul_kronecker(prev, prev)))


@lru_cache(maxsize=None)
def _B(n: int) -> tuple:
    num, den = [1], [1]
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num = polyz.mul_kronecker(num, list(_A(d)))
        elif mu == -1:
            den = polyz.mul_kronecker(den, list(_A(d)))
    q, r = polyz.divmod_exact(num, den)
    if r:
        raise InternalInconsistency(f"B_{n} is not an integer polynomial")
    return tuple(q)


@dataclass(frozen=True)
class IterPoly:
    kind: str
    n: int
    poly: tuple

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def __call__(self, x):
        return polyz.evaluate(self.poly, x)

    def to_string(self) -> str:
        return polyz.to_string(list(self.poly), "x" if self.kind == "a" else "c")


def iter_poly(kind: str, n: int) -> IterPoly:
    """A_n, a_n or B_n for 1 <= n <= 12."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    _check_index(n)
    poly = {"A": _A, "a": _a, "B": _B}[kind](n)
    return IterPoly(kind, n, poly)


def value_table(kind: str, n_max: int, points=(0, -1, -2)) -> dict:
    """{n: {x: value}} for n = 1 .. n_max."""
    return {n: {x: iter_poly(kind, n)(x) for x in points} for n in range(1, n_max + 1)}


def rigid_divisibility_check(m: int, n: int) -> int:
    """Res(B_m, B_n), which must be +1 or -1 for m != n."""
    _check_index(m, MAX_RESULTANT_INDEX)
    _check_index(n, MAX_RESULTANT_INDEX)
    if not m < n:
        raise IndexOutOfRange(f"need m < n, got m={m}, n={n}")
    r = polyz.resultant(list(_B(m)), list(_B(n)))
    if r not in (1, -1):
        raise ResultantNotUnit(f"Res(B_{m}, B_{n}) = {r}")
    return r


@dataclass(frozen=True)
class ThreeAdicCertificate:
    holds: bool
    residues: tuple
    degree: int

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "residues_mod3": list(self.residues), "degree": self.degree}


def three_adic_square_certificate(B) -> ThreeAdicCertificate:
    """Check that B(c) is a nonzero 3-adic square for every c in Q_3.

    For v3(c) >= 0 it suffices that B is 1 mod 3 on F_3; for v3(c) < 0 the
    leading term c^deg dominates, and it is a square since B is monic of
    even degree.
    """
    B = polyz.trim(list(B))
    if not B:
        raise NotMonic("the zero polynomial")
    if B[-1] != 1:
        raise NotMonic(f"leading coefficient {B[-1]}")
    d = len(B) - 1
    if d % 2:
        raise OddDegree(f"degree {d} is odd")
    residues = tuple(polyz.evaluate(B, x) % 3 for x in range(3))
    return ThreeAdicCertificate(all(r == 1 for r in residues), residues, d)


def cofactor(n: int, m: int) -> list:
    """A_n / A_m = product of B_d over d | n with d not dividing m."""
    if n % m:
        raise ValueError(f"{m} does not divide {n}")
    out = [1]
    for d in divisors(n):
        if m % d:
            out = polyz.mul_kronecker(out, list(_B(d)))
    return out
