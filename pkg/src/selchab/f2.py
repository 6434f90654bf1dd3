"""Linear algebra over F_2 on bit vectors.

Vectors are tuples of 0/1; internally they are packed into ints with
coordinate i at bit i.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def pack(v: Sequence[int]) -> int:
    x = 0
    for i, b in enumerate(v):
        if b & 1:
            x |= 1 << i
    return x


def unpack(x: int, n: int) -> tuple[int, ...]:
    return tuple((x >> i) & 1 for i in range(n))


class _Reducer:
    """Incremental echelon basis that also tracks which inputs built each row."""

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}  # pivot bit -> (row, combination)

    def reduce(self, x: int) -> tuple[int, int]:
        comb = 0
        while x:
            top = x.bit_length() - 1
            if top not in self.rows:
                break
            row, c = self.rows[top]
            x ^= row
            comb ^= c
        return x, comb

    def insert(self, x: int, tag: int) -> bool:
        r, comb = self.reduce(x)
        if not r:
            return False
        self.rows[r.bit_length() - 1] = (r, comb ^ tag)
        return True


def rank(vectors: Iterable[Sequence[int]]) -> int:
    red = _Reducer()
    return sum(red.insert(pack(v), 0) for v in vectors)


def is_independent(vectors: Sequence[Sequence[int]]) -> bool:
    return rank(vectors) == len(vectors)


def solve(basis: Sequence[Sequence[int]], target: Sequence[int]) -> tuple[int, ...] | None:
    """Coefficients c with sum c_i basis_i = target, or None if target is not in the span.

    ``basis`` must be linearly independent.
    """
    red = _Reducer()
    for i, v in enumerate(basis):
        if not red.insert(pack(v), 1 << i):
            raise ValueError("basis vectors are dependent")
    r, comb = red.reduce(pack(target))
    if r:
        return None
    return unpack(comb, len(basis))


def in_span(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    red = _Reducer()
    for v in vectors:
        red.insert(pack(v), 0)
    return red.reduce(pack(target))[0] == 0


def span_basis(vectors: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Canonical (fully reduced echelon) basis of the span, sorted for stable output."""
    red = _Reducer()
    for v in vectors:
        red.insert(pack(v), 0)
    pivots = sorted(red.rows)
    rows = {p: red.rows[p][0] for p in pivots}
    for p in pivots:
        for q in pivots:
            if q != p and (rows[q] >> p) & 1:
                rows[q] ^= rows[p]
    return sorted((unpack(rows[p], n) for p in pivots), reverse=True)


def combine(vectors: Sequence[Sequence[int]], coeffs: Sequence[int], n: int) -> tuple[int, ...]:
    x = 0
    for v, c in zip(vectors, coeffs):
        if c & 1:
            x ^= pack(v)
    return unpack(x, n)


def add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple((x ^ y) & 1 for x, y in zip(a, b))


def intersection_dim(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> int:
    return rank(a) + rank(b) - rank(list(a) + list(b))


def span_elements(vectors: Sequence[Sequence[int]], n: int) -> set[tuple[int, ...]]:
    """All elements of the span (only for small spans)."""
    basis = span_basis(vectors, n)
    out = {unpack(0, n)}
    for v in basis:
        out |= {add(w, v) for w in out}
    return out
