"""Polynomials over F_2 packed into Python ints (bit i is the coefficient of x^i)."""

from __future__ import annotations

import random
from typing import Sequence


def from_intpoly(p: Sequence[int]) -> int:
    """Reduce an integer coefficient list (lowest degree first) mod 2."""
    out = 0
    for i, c in enumerate(p):
        if c & 1:
            out |= 1 << i
    return out


def to_bits(a: int, n: int) -> list[int]:
    return [(a >> i) & 1 for i in range(n)]


def degree(a: int) -> int:
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def divmod2(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = degree(b)
    q = 0
    while a and degree(a) >= db:
        s = degree(a) - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def mod(a: int, b: int) -> int:
    return divmod2(a, b)[1]


def mulmod(a: int, b: int, m: int) -> int:
    return mod(mul(a, b), m)


def powmod(a: int, e: int, m: int) -> int:
    result = 1 % m if degree(m) > 0 else 0
    a = mod(a, m)
    while e:
        if e & 1:
            result = mulmod(result, a, m)
        e >>= 1
        if e:
            a = mulmod(a, a, m)
    return result


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(d, s, t)`` with ``s*a + t*b = d = gcd(a, b)``."""
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q, r = divmod2(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
        t0, t1 = t1, t0 ^ mul(q, t1)
    return r0, s0, t0


def inverse_mod(a: int, m: int) -> int:
    d, s, _ = xgcd(mod(a, m), m)
    if d != 1:
        raise ZeroDivisionError("not invertible modulo m")
    return mod(s, m)


def derivative(a: int) -> int:
    # d/dx x^i = i x^(i-1); only odd i survive mod 2
    return (a >> 1) & int("01" * ((a.bit_length() + 1) // 2 + 1), 2)


def is_squarefree(a: int) -> bool:
    return degree(gcd(a, derivative(a))) == 0


def distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split a squarefree ``f`` into ``(product of degree-d factors, d)`` pairs."""
    out = []
    rest = f
    xp = 2  # x^(2^d) mod rest, starting at x
    d = 0
    while degree(rest) > 0:
        d += 1
        if 2 * d > degree(rest):
            out.append((rest, degree(rest)))
            break
        xp = mulmod(xp, xp, rest)
        g = gcd(xp ^ 2, rest)
        if degree(g) > 0:
            out.append((g, d))
            rest = divmod2(rest, g)[0]
            xp = mod(xp, rest)
    return out


def equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    """Cantor-Zassenhaus splitting with trace maps (characteristic 2)."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        r = rng.getrandbits(n) | 0
        if degree(r) < 1:
            continue
        # T(r) = r + r^2 + ... + r^(2^(d-1)) lands in F_2 on each factor
        t = mod(r, f)
        acc = t
        for _ in range(d - 1):
            t = mulmod(t, t, f)
            acc ^= t
        g = gcd(acc, f)
        if 0 < degree(g) < n:
            return (equal_degree(g, d, rng)
                    + equal_degree(divmod2(f, g)[0], d, rng))


def factor_squarefree(f: int, seed: int = 0) -> list[int]:
    """Irreducible factors of a squarefree ``f``, sorted by (degree, value)."""
    rng = random.Random(seed)
    out = []
    for part, d in distinct_degree(f):
        out.extend(equal_degree(part, d, rng))
    return sorted(out, key=lambda p: (degree(p), p))


def is_irreducible(f: int) -> bool:
    n = degree(f)
    if n <= 0:
        return False
    return factor_squarefree(f) == [f] if is_squarefree(f) else False


def to_string(a: int, var: str = "x") -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(degree(a), -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else (var if i == 1 else f"{var}^{i}"))
    return " + ".join(terms)
