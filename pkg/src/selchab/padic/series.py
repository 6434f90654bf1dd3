"""Truncated power series over Q_2 with per-coefficient precision.

A :class:`PadicSeries` with ``N`` stored coefficients is known modulo
``O(t^N)``.  An optional :class:`TailLaw` certifies lower bounds for the
valuations of the coefficients that were *not* stored, which is what makes
evaluation at a point of positive valuation rigorous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InsufficientPrecision, NotASquare, PrecisionExhausted
from .number import INF, PadicNumber, padic_sqrt

_EPS = 1e-9


@dataclass(frozen=True)
class TailLaw:
    """Valuation lower bound ``c0 + c1*n - c2*log2(n)`` for the coefficient of ``t^n``."""

    c0: Fraction
    c1: Fraction
    c2: Fraction = Fraction(1)

    def bound(self, n: int) -> float:
        lg = math.log2(n) if n > 1 else 0.0
        return float(self.c0) + float(self.c1) * n - float(self.c2) * lg

    def int_bound(self, n: int) -> int:
        """Integer lower bound (valuations of Q_2 elements are integers)."""
        return math.ceil(self.bound(n) - _EPS)

    def holds(self, n: int, valuation) -> bool:
        return valuation >= self.bound(n) - _EPS

    def shifted(self, dc0) -> "TailLaw":
        return TailLaw(Fraction(self.c0) + Fraction(dc0), Fraction(self.c1), Fraction(self.c2))

    def tail_minimum(self, start: int, slope_extra) -> int:
        """Lower bound of ``bound(n) + slope_extra*n`` over all ``n >= start``.

        The function is convex in ``n``, so the minimum sits at the start or
        at the real critical point ``c2/(a ln 2)``.
        """
        a = float(self.c1) + float(slope_extra)
        if a <= 0:
            raise PrecisionExhausted("series does not converge at this valuation")
        crit = float(self.c2) / (a * math.log(2))
        cands = {max(start, 1), max(start, math.floor(crit)), max(start, math.ceil(crit))}
        best = min(self.bound(n) + float(slope_extra) * n for n in cands)
        return math.ceil(best - _EPS)


def _lower_val(c: PadicNumber):
    return c.valuation


def _fixed_point(coeffs: Sequence[PadicNumber]):
    """Common-shift integer representatives: value = X / 2^shift."""
    vals = [c.valuation for c in coeffs if c.unit]
    shift = max(0, -min(vals)) if vals else 0
    xs = [(c.unit << (c.valuation + shift)) if c.unit else 0 for c in coeffs]
    return xs, shift


def _pack_product(xs: list[int], ys: list[int], n_out: int) -> list[int]:
    """Truncated convolution of nonnegative integer lists via Kronecker packing."""
    xs = xs[:n_out]
    ys = ys[:n_out]
    if not xs or not ys:
        return [0] * n_out
    bx = max(x.bit_length() for x in xs)
    by = max(y.bit_length() for y in ys)
    if bx == 0 or by == 0:
        return [0] * n_out
    width = bx + by + max(len(xs), len(ys)).bit_length() + 1
    px = 0
    for x in reversed(xs):
        px = (px << width) | x
    py = 0
    for y in reversed(ys):
        py = (py << width) | y
    prod = px * py
    mask = (1 << width) - 1
    out = []
    for _ in range(n_out):
        out.append(prod & mask)
        prod >>= width
    return out


def _mul_coeffs(a: Sequence[PadicNumber], b: Sequence[PadicNumber], n_out: int) -> list[PadicNumber]:
    xs, sx = _fixed_point(a)
    ys, sy = _fixed_point(b)
    zs = _pack_product(xs, ys, n_out)
    shift = sx + sy
    la = [_lower_val(c) for c in a]
    lb = [_lower_val(c) for c in b]
    pa = [c.absprec for c in a]
    pb = [c.absprec for c in b]
    out = []
    for n in range(n_out):
        prec = INF
        for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
            j = n - i
            t = min(pa[i] + lb[j], la[i] + pb[j])
            if t < prec:
                prec = t
        if prec == INF:
            out.append(PadicNumber.exact_zero())
        else:
            out.append(PadicNumber.from_parts(-shift, zs[n], int(prec) + shift))
    return out


class PadicSeries:
    """Power series ``sum c_n t^n`` known modulo ``O(t^N)``, ``N = len(coeffs)``."""

    __slots__ = ("coeffs", "tail_law")

    def __init__(self, coeffs: Iterable[PadicNumber], tail_law: TailLaw | None = None):
        self.coeffs = tuple(coeffs)
        self.tail_law = tail_law

    @classmethod
    def from_rationals(cls, values, relprec: int | None = None, absprec: int | None = None,
                       order_bound: int | None = None, tail_law: TailLaw | None = None):
        values = list(values)
        if order_bound is not None:
            values = (values + [0] * order_bound)[:order_bound]
        return cls([PadicNumber.from_rational(v, relprec=relprec, absprec=absprec)
                    for v in values], tail_law)

    @property
    def order_bound(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        terms = [f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if not c.is_exact_zero]
        return " + ".join(terms + [f"O(t^{self.order_bound})"])

    def truncate(self, n: int) -> "PadicSeries":
        return PadicSeries(self.coeffs[:n], self.tail_law if n >= len(self) else None)

    def valuations(self) -> list:
        return [c.valuation for c in self.coeffs]

    def check_tail_law(self, start: int = 1) -> bool:
        """True when every stored coefficient with index >= start obeys the law."""
        if self.tail_law is None:
            return True
        return all(self.tail_law.holds(n, c.valuation)
                   for n, c in enumerate(self.coeffs) if n >= start and not c.is_exact_zero
                   and c.unit)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "PadicSeries") -> "PadicSeries":
        n = min(len(self), len(other))
        return PadicSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self):
        return PadicSeries([-c for c in self.coeffs], self.tail_law)

    def __sub__(self, other: "PadicSeries") -> "PadicSeries":
        return self + (-other)

    def scale(self, c) -> "PadicSeries":
        return PadicSeries([x * c for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PadicSeries):
            n = min(len(self), len(other))
            return PadicSeries(_mul_coeffs(self.coeffs, other.coeffs, n))
        return self.scale(other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PadicSeries":
        """Multiply by ``t^k`` (the order bound grows by ``k``)."""
        return PadicSeries([PadicNumber.exact_zero()] * k + list(self.coeffs))

    def derivative(self) -> "PadicSeries":
        return PadicSeries([c * n for n, c in enumerate(self.coeffs) if n > 0])

    def integral(self) -> "PadicSeries":
        """Formal integral with zero constant term; ``c_{n-1}`` is divided by ``n``."""
        out = [PadicNumber.exact_zero()]
        out.extend(c / (n + 1) for n, c in enumerate(self.coeffs))
        return PadicSeries(out)

    formal_integrate = integral

    def reciprocal(self) -> "PadicSeries":
        c0 = self.coeffs[0]
        if c0.unit == 0:
            raise PrecisionExhausted("reciprocal needs a nonzero constant term")
        n = len(self)
        inv0 = 1 / c0
        g = [inv0]
        for k in range(1, n):
            acc = PadicNumber.exact_zero()
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * g[k - i]
            g.append(-acc * inv0)
        return PadicSeries(g)

    def sqrt_unit(self) -> "PadicSeries":
        """Square root whose constant term is the root of ``c0`` congruent to 1 mod 4."""
        c0 = self.coeffs[0]
        if c0.unit == 0 or c0.valuation != 0:
            raise NotASquare("sqrt_unit needs a unit constant term")
        s0 = padic_sqrt(c0)
        two_s0 = s0 * 2
        s = [s0]
        for k in range(1, len(self)):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc = acc - s[i] * s[k - i]
            s.append(acc / two_s0)
        return PadicSeries(s)

    def compose(self, g: "PadicSeries") -> "PadicSeries":
        """``self(g(t))``; requires ``g(0) = 0``."""
        if not g.coeffs[0].is_zero():
            raise ValueError("compose needs g(0) = 0")
        n = min(len(self), len(g))
        acc = PadicSeries([self.coeffs[n - 1]] + [PadicNumber.exact_zero()] * (n - 1))
        for i in range(n - 2, -1, -1):
            acc = acc * g
            acc = PadicSeries([acc.coeffs[0] + self.coeffs[i]] + list(acc.coeffs[1:]))
        return acc

    def evaluate(self, t: PadicNumber) -> PadicNumber:
        """Value at ``t``; the tail law bounds the omitted coefficients.

        Without a tail law the series is treated as the polynomial it stores.
        """
        t = PadicNumber.from_rational(t) if not isinstance(t, PadicNumber) else t
        acc = PadicNumber.exact_zero()
        for c in reversed(self.coeffs):
            acc = acc * t + c
        if self.tail_law is not None and not t.is_exact_zero:
            if t.unit == 0:
                raise PrecisionExhausted("evaluation point has no significant digits")
            bound = self.tail_law.tail_minimum(len(self), t.valuation)
            acc = acc + PadicNumber.big_oh(bound)
        return acc


def series_from_poly(poly: Sequence[int], order: int, relprec: int) -> PadicSeries:
    return PadicSeries.from_rationals(list(poly), relprec=relprec, order_bound=order)


def fixed_point_invert(phi: PadicSeries) -> PadicSeries:
    """Compositional inverse of ``phi(s) = s + O(s^2)``.

    Returns ``psi`` with ``phi(psi(u)) = u + O(u^N)``.  Newton iteration
    doubles the number of correct terms per step.
    """
    n = len(phi)
    if n < 2 or not phi.coeffs[0].is_zero():
        raise ValueError("phi must vanish at 0")
    lead = phi.coeffs[1]
    if lead.unit == 0 or lead.valuation != 0:
        raise ValueError("phi'(0) must be a unit")
    zero = PadicNumber.exact_zero()
    # phi' is known to one term less than phi; the padded entry only ever
    # multiplies residual terms that vanish identically.
    dphi = PadicSeries(list(phi.derivative().coeffs) + [zero])
    ident = [zero, PadicNumber.from_rational(1, relprec=max(lead.relprec, 1))]
    psi = PadicSeries(ident[:min(2, n)])
    known = 2
    while known < n:
        known = min(2 * known, n)
        cur = PadicSeries((list(psi.coeffs) + [zero] * known)[:known])
        phi_k = phi.truncate(known)
        resid = phi_k.compose(cur)
        target = PadicSeries((ident + [zero] * known)[:known])
        resid = resid - target
        denom = dphi.truncate(known).compose(cur)
        corr = resid * denom.reciprocal()
        psi = cur - corr
    return psi.truncate(n)


def require_precision(series: PadicSeries, n: int, absprec: int) -> None:
    """Raise unless coefficients ``0..n-1`` are known to ``absprec``."""
    for i, c in enumerate(series.coeffs[:n]):
        if c.absprec < absprec:
            raise InsufficientPrecision(f"coefficient {i} known only to 2^{c.absprec}")
