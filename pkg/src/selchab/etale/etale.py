"""Square classes of units of Z_2[theta] when f is squarefree mod 2.

H_2 has F_2-basis

    1 + 2*theta^i          for i = 0 .. 2g,
    1 + 4*theta^b          for b in a greedily chosen set B' of size m,

where B' is the first run of monomials whose traces span F_2^m.  A unit is
put into the principal-unit group by an odd power, then the 1 + 2(...) layer
is peeled coefficient by coefficient and the 1 + 4(...) layer is read off via
traces; a principal unit 1 + 4a is a square exactly when every trace of a mod
2 vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .. import f2
from ..errors import InternalInconsistency, NotAUnit, NotSquarefreeMod2
from . import gf2x
from .algebra import AlgebraElement

PRECISION_BITS = 3  # everything here is decided modulo 8


@dataclass(frozen=True)
class SquareClass:
    bits: tuple

    def __add__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass(f2.add(self.bits, other.bits))

    def is_trivial(self) -> bool:
        return not any(self.bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)


@dataclass(frozen=True)
class Delta2Generator:
    """``1 - scale * (-theta)^(-d)``."""

    d: int
    scale: int
    square_class: SquareClass

    @property
    def label(self) -> str:
        return f"1 - {self.scale}*(-theta)^(-{self.d})"


@dataclass(frozen=True)
class EtaleData:
    f: tuple
    g: int
    fbar_factors: tuple
    trace_tables: tuple
    exponent: int
    trace_monomials: tuple
    I_set: tuple
    delta2_basis: tuple

    @property
    def m(self) -> int:
        return len(self.fbar_factors)

    @property
    def theta_dim(self) -> int:
        return len(self.f) - 1

    @property
    def dim_H2(self) -> int:
        return self.theta_dim + self.m

    @property
    def factor_degrees(self) -> tuple:
        return tuple(gf2x.degree(p) for p in self.fbar_factors)

    @property
    def fbar(self) -> int:
        return gf2x.from_intpoly(self.f)

    def h2_basis(self) -> list[tuple[str, AlgebraElement]]:
        out = []
        for i in range(self.theta_dim):
            out.append((f"1 + 2*theta^{i}", self.element([0] * i + [1]) * 2 + 1))
        for b in self.trace_monomials:
            out.append((f"1 + 4*theta^{b}", self.element([0] * b + [1]) * 4 + 1))
        return out

    def element(self, poly: Sequence[int], k: int = PRECISION_BITS) -> AlgebraElement:
        return AlgebraElement(poly, self.f, k)

    def neg_theta_inverse(self) -> AlgebraElement:
        """``(-theta)^(-1) = q(theta)/f(0)`` where ``f = x*q + f(0)``."""
        q = list(self.f[1:])
        mod = 1 << PRECISION_BITS
        c = pow(self.f[0], -1, mod)
        return self.element([x * c for x in q])

    def delta2_vectors(self) -> list[SquareClass]:
        return [gen.square_class for gen in self.delta2_basis]


def _trace_table(p: int) -> int:
    """Bit i is Tr(x^i) on F_2[x]/(p), for i < deg p."""
    d = gf2x.degree(p)
    table = 0
    for i in range(d):
        tr = 0
        for k in range(d):
            tr ^= (gf2x.mod(1 << (i + k), p) >> k) & 1
        if tr:
            table |= 1 << i
    return table


def _trace_vector(fbar_factors, tables, a: int) -> tuple:
    out = []
    for p, t in zip(fbar_factors, tables):
        out.append(bin(gf2x.mod(a, p) & t).count("1") & 1)
    return tuple(out)


def trace_vector(e: EtaleData, a) -> tuple:
    """Per-factor traces of ``a`` (an :class:`AlgebraElement` or packed F_2 polynomial)."""
    if isinstance(a, AlgebraElement):
        a = a.reduce_mod2()
    return _trace_vector(e.fbar_factors, e.trace_tables, a)


def theta_bar_inverse(f: Sequence[int]) -> int:
    fbar = gf2x.from_intpoly(f)
    return (fbar ^ 1) >> 1


def _coords(f, theta_dim, factors, tables, exponent, trace_monomials, u: AlgebraElement) -> tuple:
    if not u.is_unit():
        raise NotAUnit(f"{u} is not a unit of Z_2[theta]")
    u = u.with_precision(PRECISION_BITS) if u.k > PRECISION_BITS else u
    if u.k < PRECISION_BITS:
        raise InternalInconsistency("square classes need the unit modulo 8")
    v = u ** exponent
    if v.reduce_mod2() != 1:
        raise InternalInconsistency("odd power did not land in the principal units")
    beta = [(c >> 1) & 1 for c in v.coeffs]
    for i, b in enumerate(beta):
        if b:
            v = v * (AlgebraElement([0] * i + [2], f, PRECISION_BITS) + 1)
    if any(c & 3 for c in v.coeffs[1:]) or v.coeffs[0] & 3 != 1:
        raise InternalInconsistency("principal unit not congruent to 1 mod 4 after peeling")
    alpha = gf2x.from_intpoly([(c >> 2) & 1 for c in v.coeffs])
    tr = _trace_vector(factors, tables, alpha)
    basis = [_trace_vector(factors, tables, 1 << b) for b in trace_monomials]
    gamma = f2.solve(basis, tr)
    if gamma is None:
        raise InternalInconsistency("trace monomials do not span")
    return tuple(beta) + tuple(gamma)


def square_class_coords(e: EtaleData, u: AlgebraElement) -> SquareClass:
    """Coordinates of the class of the unit ``u`` in H_2 w.r.t. ``e.h2_basis()``."""
    bits = _coords(e.f, e.theta_dim, e.fbar_factors, e.trace_tables, e.exponent,
                   e.trace_monomials, u)
    return SquareClass(bits)


def is_square_unit(e: EtaleData, u: AlgebraElement) -> bool:
    return square_class_coords(e, u).is_trivial()


def build_etale(f: Sequence[int], seed: int = 0) -> EtaleData:
    """Factor ``f`` mod 2 and assemble H_2 and the delta_2-image basis."""
    f = tuple(f)
    n = len(f) - 1
    if f[-1] != 1:
        raise ValueError("f must be monic")
    if n % 2 == 0:
        raise ValueError("f must have odd degree")
    g = (n - 1) // 2
    fbar = gf2x.from_intpoly(f)
    if gf2x.degree(fbar) != n or not gf2x.is_squarefree(fbar):
        raise NotSquarefreeMod2("f is not squarefree modulo 2")
    factors = tuple(gf2x.factor_squarefree(fbar, seed=seed))
    if sum(gf2x.degree(p) for p in factors) != n:
        raise InternalInconsistency("factor degrees do not add up")
    tables = tuple(_trace_table(p) for p in factors)
    exponent = 1
    for p in factors:
        exponent = lcm(exponent, (1 << gf2x.degree(p)) - 1)
    m = len(factors)

    trace_monomials = []
    chosen = []
    i = 0
    while len(chosen) < m:
        if i >= n:
            raise InternalInconsistency("traces of monomials do not span F_2^m")
        tv = _trace_vector(factors, tables, 1 << i)
        if f2.is_independent(chosen + [tv]):
            chosen.append(tv)
            trace_monomials.append(i)
        i += 1
    trace_monomials = tuple(trace_monomials)

    # I: greedy odd d with the traces of theta-bar^(-d) independent
    tinv = theta_bar_inverse(f)
    I_set = []
    tvecs = []
    for d in range(1, 2 * g, 2):
        if len(I_set) == m - 1:
            break
        tv = _trace_vector(factors, tables, gf2x.powmod(tinv, d, fbar))
        if sum(tv) % 2:
            raise InternalInconsistency(f"sum of traces of theta^(-{d}) is nonzero")
        if f2.is_independent(tvecs + [tv]):
            tvecs.append(tv)
            I_set.append(d)
    if len(I_set) != m - 1:
        raise InternalInconsistency("could not find the odd index set I")

    partial = EtaleData(f, g, factors, tables, exponent, trace_monomials, tuple(I_set), ())
    ninv = partial.neg_theta_inverse()
    gens = []
    for d in range(1, g + 1):
        u = 1 - (ninv ** d) * 2
        gens.append(Delta2Generator(d, 2, square_class_coords(partial, u)))
    for d in I_set:
        u = 1 - (ninv ** d) * 4
        gens.append(Delta2Generator(d, 4, square_class_coords(partial, u)))
    if not f2.is_independent([gen.square_class.bits for gen in gens]):
        raise InternalInconsistency("delta_2 generators are dependent")
    return EtaleData(f, g, factors, tables, exponent, trace_monomials, tuple(I_set), tuple(gens))


def delta2_image_basis(e: EtaleData) -> list[tuple[Delta2Generator, SquareClass]]:
    return [(gen, gen.square_class) for gen in e.delta2_basis]


def delta2_coordinates(e: EtaleData, cls: SquareClass) -> tuple | None:
    """Coordinates of ``cls`` w.r.t. the delta_2 basis, or None if outside the image."""
    return f2.solve([v.bits for v in e.delta2_vectors()], cls.bits)
