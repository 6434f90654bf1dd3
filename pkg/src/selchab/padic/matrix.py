"""Matrices over Q_2 and echelonization of logarithm lattices over Z_2."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from ..errors import InsufficientPrecision, InternalInconsistency, NotFullRank
from ..f2 import rank as f2_rank
from .number import INF, PadicNumber


class Z2Matrix:
    """A rows x cols grid of :class:`PadicNumber` (immutable)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[PadicNumber]]):
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix")

    @classmethod
    def from_rationals(cls, rows, relprec: int | None = None, absprec: int | None = None):
        return cls([[PadicNumber.from_rational(x, relprec=relprec, absprec=absprec) for x in r]
                    for r in rows])

    @classmethod
    def identity(cls, n: int, relprec: int = 64):
        return cls.from_rationals([[int(i == j) for j in range(n)] for i in range(n)],
                                  relprec=relprec)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def transpose(self) -> "Z2Matrix":
        return Z2Matrix(list(zip(*self.rows)))

    def __matmul__(self, other: "Z2Matrix") -> "Z2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            new = []
            for c in cols:
                acc = PadicNumber.exact_zero()
                for a, b in zip(r, c):
                    acc = acc + a * b
                new.append(acc)
            out.append(new)
        return Z2Matrix(out)

    def min_absprec(self):
        return min((x.absprec for r in self.rows for x in r), default=INF)

    def min_valuation(self):
        return min((x.valuation for r in self.rows for x in r), default=INF)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[x.to_fraction() for x in r] for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[repr(x) for x in r] for r in self.rows]

    @classmethod
    def from_strings(cls, rows) -> "Z2Matrix":
        return cls([[PadicNumber.from_string(s) for s in r] for r in rows])

    def reduce_mod2(self) -> list[list[int]]:
        """Entries mod 2; all entries must be certified 2-adic integers."""
        return [[x.residue(1) for x in r] for r in self.rows]

    def inverse(self) -> "Z2Matrix":
        """Gauss-Jordan inverse with minimal-valuation pivoting."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        relprec = max((x.relprec for r in self.rows for x in r if x.unit), default=64)
        a = [list(r) for r in self.rows]
        inv = [list(r) for r in Z2Matrix.identity(n, relprec).rows]
        for col in range(n):
            cands = [(a[i][col].valuation, i) for i in range(col, n) if a[i][col].unit]
            if not cands:
                raise InsufficientPrecision("singular or imprecise matrix")
            _, p = min(cands)
            a[col], a[p] = a[p], a[col]
            inv[col], inv[p] = inv[p], inv[col]
            piv = a[col][col]
            a[col] = [x / piv for x in a[col]]
            inv[col] = [x / piv for x in inv[col]]
            for i in range(n):
                if i != col and not a[i][col].is_exact_zero:
                    q = a[i][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[col])]
                    inv[i] = [x - q * y for x, y in zip(inv[i], inv[col])]
        return Z2Matrix(inv)


class Echelon(NamedTuple):
    U: Z2Matrix
    basis: Z2Matrix
    pivots: tuple  # (row, col, valuation) in elimination order


def echelonize_over_Z2(L: Z2Matrix, relprec: int | None = None) -> Echelon:
    """Column-reduce ``L`` so that the rows of ``L @ U`` generate ``Z_2^g``.

    The pivot is an entry of minimal valuation in the active block (ties go
    to the lowest column, then the lowest row).  ``basis`` holds the pivot
    rows of ``L @ U`` in elimination order; after ordering the columns the
    same way it is unit lower triangular.

    Raises :class:`InsufficientPrecision` if some pivot cannot be certified
    minimal, and :class:`NotFullRank` if the active block is exactly zero.
    """
    nr, g = L.shape
    if relprec is None:
        relprec = max(64, max((x.absprec for r in L.rows for x in r if x.absprec != INF),
                              default=64) + 8)
    M = [list(r) for r in L.rows]
    U = [list(r) for r in Z2Matrix.identity(g, relprec).rows]
    rows_left = list(range(nr))
    cols_left = list(range(g))
    pivots = []
    for _ in range(g):
        best = None
        floor = INF  # smallest valuation any unresolved entry might have
        any_inexact = False
        for c in cols_left:
            for r in rows_left:
                x = M[r][c]
                if x.unit:
                    key = (x.valuation, c, r)
                    if best is None or key < best:
                        best = key
                elif not x.is_exact_zero:
                    any_inexact = True
                    floor = min(floor, x.valuation)
        if best is None:
            if any_inexact:
                raise InsufficientPrecision("active block indistinguishable from zero")
            raise NotFullRank("logarithm matrix does not span a full lattice")
        v, c, r = best
        if floor < v:
            raise InsufficientPrecision(
                f"pivot valuation {v} not certified: an entry is only known to O(2^{floor})")
        p = M[r][c]
        for j in cols_left:
            if j == c or M[r][j].is_exact_zero:
                continue
            q = M[r][j] / p
            for i in range(nr):
                if not M[i][c].is_exact_zero:
                    M[i][j] = M[i][j] - q * M[i][c]
            for i in range(g):
                if not U[i][c].is_exact_zero:
                    U[i][j] = U[i][j] - q * U[i][c]
            M[r][j] = PadicNumber.exact_zero()
        inv = 1 / p
        for i in range(nr):
            M[i][c] = M[i][c] * inv
        for i in range(g):
            U[i][c] = U[i][c] * inv
        pivots.append((r, c, v))
        rows_left.remove(r)
        cols_left.remove(c)
    Um = Z2Matrix(U)
    basis = Z2Matrix([M[r] for r, _, _ in pivots])
    return Echelon(Um, basis, tuple(pivots))


def lattice_certificate(L: Z2Matrix, U: Z2Matrix) -> dict:
    """Check that the rows of ``L @ U`` generate ``Z_2^g``.

    The product must be integral with every entry known at least mod 2, and
    its reduction mod 2 must have rank ``g``.  Raises
    :class:`InsufficientPrecision` when the data cannot decide.
    """
    LU = L @ U
    g = U.ncols
    for r in LU.rows:
        for x in r:
            if x.is_exact_zero:
                continue
            if x.unit and x.valuation < 0:
                return {"integral": False, "rank_mod2": None, "generates": False}
            if x.absprec < 1:
                raise InsufficientPrecision(f"entry {x} of L*U not known mod 2")
    red = LU.reduce_mod2()
    rk = f2_rank(red)
    return {"integral": True, "rank_mod2": rk, "generates": rk == g}


def dyadic_matrix(U: Z2Matrix, relprec: int) -> Z2Matrix:
    """Round entries to dyadic rationals and store them with ``relprec`` bits."""
    return Z2Matrix.from_rationals(U.to_fractions(), relprec=relprec)


def fraction_inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse over Q (Gauss-Jordan on Fractions)."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                q = a[i][col]
                a[i] = [x - q * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def same_lattice(U1: Z2Matrix, U2: Z2Matrix) -> bool:
    """True when ``U1^(-1) U2`` lies in GL_g(Z_2) (dyadic representatives).

    Two transformations that both send the row lattice of L onto Z_2^g
    satisfy this; it is the lattice-equality test between different choices
    of U.
    """
    A = fraction_inverse(U1.to_fractions())
    B = U2.to_fractions()
    n = len(B)
    M = [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    for r in M:
        for x in r:
            if x and x.denominator % 2 == 0:
                return False
    red = [[(x.numerator * pow(x.denominator, -1, 2)) % 2 for x in r] for r in M]
    return f2_rank(red) == n


def _v2_int(n: int) -> int:
    return (n & -n).bit_length() - 1


def hermite_form_Z2(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Canonical upper triangular basis of the Z_2-span of nonsingular rational rows.

    Diagonal entries are powers of 2 and entries above a pivot 2^e are
    dyadic rationals in [0, 2^e).  Two row sets span the same Z_2-lattice
    exactly when their Hermite forms agree.
    """
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    dens = [x.denominator for r in rows for x in r]
    shift = max(_v2_int(d) for d in dens)
    odd = 1
    for d in dens:
        odd = odd * (d >> _v2_int(d)) // gcd(odd, d >> _v2_int(d))
    # odd denominators are units in Z_2: clear them without changing the lattice
    A = [[int(x * odd * (1 << shift)) for x in r] for r in rows]
    det = fraction_det([[Fraction(x) for x in r] for r in A])
    if det == 0:
        raise ZeroDivisionError("singular matrix")
    M = _v2_int(det.numerator) + 1
    mod = 1 << M
    A = [[x % mod for x in r] for r in A] + [[mod * int(i == j) for j in range(n)] for i in range(n)]
    out = []
    for col in range(n):
        cand = [(_v2_int(r[col]) if r[col] % mod else M, i) for i, r in enumerate(A)]
        e, piv = min(cand)
        if e >= M:
            raise InternalInconsistency("lattice does not contain 2^M Z_2^n")
        prow = A.pop(piv)
        inv = pow(prow[col] >> e, -1, mod)
        prow = [(x * inv) % mod for x in prow]
        A = [[(x - (r[col] >> e) * y) % mod for x, y in zip(r, prow)] for r in A]
        A = [r for r in A if any(r)]
        out.append(prow)
    for col in range(n):
        e = _v2_int(out[col][col])
        for i in range(col):
            q = out[i][col] >> e
            out[i] = [(x - q * y) for x, y in zip(out[i], out[col])]
    scale = Fraction(1, 1 << shift)
    return [[Fraction(x) * scale for x in r] for r in out]


def fraction_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            q = a[i][col] / a[col][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[col])]
    return det
