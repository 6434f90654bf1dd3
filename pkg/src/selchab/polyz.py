"""Dense integer polynomials stored as coefficient lists, lowest degree first.

The zero polynomial is the empty list.  Everything here is exact.
"""

from __future__ import annotations

import ast
from math import gcd
from typing import Sequence

from .errors import InputError

Poly = list


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: Sequence[int]) -> int:
    p = trim(p)
    return len(p) - 1 if p else -1


def lc(p: Sequence[int]) -> int:
    p = trim(p)
    return p[-1] if p else 0


def add(a, b) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def neg(a) -> Poly:
    return [-x for x in a]


def sub(a, b) -> Poly:
    return add(a, neg(b))


def scale(a, c: int) -> Poly:
    return trim([x * c for x in a])


def mul(a, b) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def mul_kronecker(a, b) -> Poly:
    """Product via one big-integer multiplication (Kronecker substitution).

    Coefficients are packed into slots wide enough for the signed result.
    """
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    bound = max(abs(x) for x in a) * max(abs(x) for x in b) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    pa = sum(x << (i * bits) for i, x in enumerate(a))
    pb = sum(x << (i * bits) for i, x in enumerate(b))
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = prod & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        prod = (prod - r) >> bits
    return trim(out)


def power(a, e: int) -> Poly:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def monomial(k: int, c: int = 1) -> Poly:
    return [0] * k + [c]


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def compose(p, q) -> Poly:
    acc: Poly = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c])
    return acc


def reverse(p, n: int) -> Poly:
    """``x^n * p(1/x)``; requires ``deg p <= n``."""
    p = trim(p)
    if len(p) > n + 1:
        raise ValueError("reverse needs deg p <= n")
    return trim(list(reversed(p + [0] * (n + 1 - len(p)))))


def content(p) -> int:
    c = 0
    for x in p:
        c = gcd(c, x)
    return c


def divmod_exact(a, b) -> tuple[Poly, Poly]:
    """Division by a polynomial whose leading coefficient divides every step.

    Raises ``ValueError`` when a non-integral quotient coefficient arises.
    """
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1]
        if c == 0:
            continue
        if c % lb:
            raise ValueError("quotient is not integral")
        qc = c // lb
        q[i] = qc
        for j, y in enumerate(b):
            r[i + j] -= qc * y
    return trim(q), trim(r)


def exact_quotient(a, b) -> Poly:
    q, r = divmod_exact(a, b)
    if r:
        raise ValueError("division leaves a remainder")
    return q


def pseudo_remainder(a, b) -> Poly:
    """``lc(b)^(deg a - deg b + 1) * a mod b``."""
    a = trim(a)
    b = trim(b)
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    r = list(a)
    for _ in range(da - db + 1):
        # one leading degree is eliminated per pass; the top may already be 0
        r = [x * lb for x in r]
        c = r[-1] // lb
        shift = len(r) - 1 - db
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r.pop()
    return trim(r)


def resultant(a, b) -> int:
    """Resultant via the subresultant pseudo-remainder sequence.

    Fraction-free: every division below is exact in Z.
    """
    a = trim(a)
    b = trim(b)
    if not a or not b:
        return 0
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            sign = -sign
    if db == 0:
        return sign * b[0] ** da
    ca, cb = content(a), content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** db * cb ** da
    g = 1
    h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b)
        a = b
        den = g * h ** delta
        b = [x // den for x in r]
        if not b:
            return 0
        g = a[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if len(b) - 1 <= 0:
            break
    da = len(a) - 1
    hb = b[-1] ** da
    if da >= 1:
        hb = hb // h ** (da - 1)
    else:
        hb = hb * h
    return sign * t * hb


def discriminant(f) -> int:
    f = trim(f)
    n = len(f) - 1
    r = resultant(f, derivative(f))
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(s * r, f[-1])
    if rem:
        raise ValueError("discriminant division not exact")
    return q


# -- text I/O -----------------------------------------------------------------


def _eval_ast(node, var: str) -> Poly:
    if isinstance(node, ast.Expression):
        return _eval_ast(node.body, var)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return trim([node.value])
    if isinstance(node, ast.Name):
        if node.id != var:
            raise InputError(f"unknown symbol {node.id!r} (expected {var!r})")
        return [0, 1]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        p = _eval_ast(node.operand, var)
        return neg(p) if isinstance(node.op, ast.USub) else p
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, var)
        if isinstance(node.op, ast.Pow):
            e = _eval_ast(node.right, var)
            if len(e) > 1 or (e and e[0] < 0):
                raise InputError("exponents must be nonnegative integer constants")
            return power(left, e[0] if e else 0)
        right = _eval_ast(node.right, var)
        if isinstance(node.op, ast.Add):
            return add(left, right)
        if isinstance(node.op, ast.Sub):
            return sub(left, right)
        if isinstance(node.op, ast.Mult):
            return mul(left, right)
    raise InputError(f"unsupported syntax in polynomial: {ast.dump(node)[:60]}")


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse e.g. ``"x^3 - 2*x + 1"``; multiplication must be written with ``*``."""
    src = text.strip().replace("^", "**")
    if not src:
        raise InputError("empty polynomial")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _eval_ast(tree, var)


def to_string(p, var: str = "x") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
