"""Precision-tracked elements of Q_2.

A nonzero element is stored as ``2^valuation * unit`` where ``unit`` is odd
and known modulo ``2^relprec``.  Two kinds of zero exist and are kept apart:
the exact zero (``valuation = inf``) and a zero that only reflects lost
precision, written ``O(2^a)`` and stored with ``unit = 0, relprec = 0`` and
``valuation = a`` (a lower bound).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from ..errors import (
    DivisionByIndistinguishableZero,
    InsufficientPrecision,
    NotASquare,
    PrecisionExhausted,
)

INF = math.inf
DEFAULT_RELPREC = 64


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is infinite")
    return (n & -n).bit_length() - 1


def v2_rational(x) -> float:
    x = Fraction(x)
    if x == 0:
        return INF
    return v2(x.numerator) - v2(x.denominator)


class PadicNumber:
    __slots__ = ("valuation", "unit", "relprec")

    def __init__(self, valuation, unit: int, relprec):
        # Raw constructor; callers pass an odd unit already or use the helpers.
        self.valuation = valuation
        self.unit = unit
        self.relprec = relprec

    # -- construction -----------------------------------------------------

    @classmethod
    def exact_zero(cls) -> "PadicNumber":
        return cls(INF, 0, INF)

    @classmethod
    def big_oh(cls, absprec: int) -> "PadicNumber":
        """The indistinguishable-from-zero value ``O(2^absprec)``."""
        return cls(int(absprec), 0, 0)

    @classmethod
    def from_parts(cls, valuation: int, unit: int, relprec: int) -> "PadicNumber":
        """Build ``2^valuation * unit + O(2^(valuation+relprec))``; ``unit`` may be even."""
        if relprec <= 0:
            return cls.big_oh(valuation + max(relprec, 0))
        unit %= 1 << relprec
        if unit == 0:
            return cls.big_oh(valuation + relprec)
        s = v2(unit)
        return cls(valuation + s, unit >> s, relprec - s)

    @classmethod
    def from_rational(cls, x, relprec: int | None = None, absprec: int | None = None) -> "PadicNumber":
        """Convert an int or Fraction.

        With ``absprec`` the result is known modulo ``2^absprec``; otherwise
        ``relprec`` (default 64) significant bits are kept.
        """
        if isinstance(x, PadicNumber):
            return x
        x = Fraction(x)
        if x == 0:
            return cls.exact_zero() if absprec is None else cls.big_oh(absprec)
        num, den = x.numerator, x.denominator
        vn, vd = v2(num), v2(den)
        val = vn - vd
        if absprec is not None:
            r = absprec - val
            if r <= 0:
                return cls.big_oh(absprec)
            if relprec is not None:
                r = min(r, relprec)
        else:
            r = DEFAULT_RELPREC if relprec is None else relprec
        mod = 1 << r
        unit = ((num >> vn) * pow(den >> vd, -1, mod)) % mod
        return cls(val, unit, r)

    @classmethod
    def from_fixed(cls, value: int, shift: int, absprec) -> "PadicNumber":
        """Interpret the integer ``value`` as ``value / 2^shift`` known mod ``2^absprec``."""
        if absprec == INF:
            if value == 0:
                return cls.exact_zero()
            return cls.from_rational(Fraction(value, 1 << shift) if shift >= 0
                                     else value << -shift)
        return cls.from_parts(-shift, value, absprec + shift)

    # -- state ------------------------------------------------------------

    @property
    def absprec(self):
        if self.unit == 0:
            return self.valuation  # inf for the exact zero
        return self.valuation + self.relprec

    @property
    def is_exact_zero(self) -> bool:
        return self.valuation == INF

    @property
    def is_exhausted(self) -> bool:
        """True for ``O(2^a)``: no significant digit survives."""
        return self.unit == 0 and self.valuation != INF

    def is_zero(self) -> bool:
        return self.unit == 0

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, (int, Rational)):
            x = Fraction(other)
            if x == 0:
                return PadicNumber.exact_zero()
            r = self.relprec if self.unit else DEFAULT_RELPREC
            if self.absprec != INF:
                r = max(r, int(self.absprec - v2_rational(x)) + 1)
            return PadicNumber.from_rational(x, relprec=max(r, 1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        a = min(self.absprec, other.absprec)
        terms = [(x.valuation, x.unit) for x in (self, other) if x.unit]
        if not terms:
            return PadicNumber.big_oh(a)
        v = min(t[0] for t in terms)
        if v >= a:
            return PadicNumber.big_oh(a)
        total = 0
        for val, unit in terms:
            total += unit << (val - v)
        return PadicNumber.from_parts(v, total, a - v)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.valuation, (-self.unit) % (1 << self.relprec), self.relprec)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero or other.is_exact_zero:
            return PadicNumber.exact_zero()
        if self.unit == 0 or other.unit == 0:
            return PadicNumber.big_oh(self.valuation + other.valuation)
        r = min(self.relprec, other.relprec)
        return PadicNumber(self.valuation + other.valuation,
                           (self.unit * other.unit) % (1 << r), r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_exact_zero:
            raise ZeroDivisionError("division by exact zero")
        if other.unit == 0:
            raise DivisionByIndistinguishableZero(f"divisor {other} has no significant digits")
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            return PadicNumber.big_oh(self.valuation - other.valuation)
        r = min(self.relprec, other.relprec)
        mod = 1 << r
        return PadicNumber(self.valuation - other.valuation,
                           (self.unit * pow(other.unit, -1, mod)) % mod, r)

    def __rtruediv__(self, other):
        return PadicNumber.from_rational(other, relprec=self.relprec if self.unit else None) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return PadicNumber.from_rational(1, relprec=self.relprec if self.unit else DEFAULT_RELPREC)
        if self.unit == 0:
            if n < 0:
                raise DivisionByIndistinguishableZero("negative power of a zero")
            return self if self.is_exact_zero else PadicNumber.big_oh(self.valuation * n)
        mod = 1 << self.relprec
        return PadicNumber(self.valuation * n, pow(self.unit, n, mod), self.relprec)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def sqrt(self) -> "PadicNumber":
        return padic_sqrt(self)

    # -- conversions ------------------------------------------------------

    def to_fraction(self) -> Fraction:
        """Dyadic representative with unit part in ``(-2^(r-1), 2^(r-1)]``.

        The symmetric range makes exactly stored small negative numbers come
        back unchanged.
        """
        if self.unit == 0:
            return Fraction(0)
        u = self.unit
        if u > 1 << (self.relprec - 1):
            u -= 1 << self.relprec
        return Fraction(u) * Fraction(2) ** self.valuation

    def residue(self, k: int) -> int:
        """The value modulo ``2^k`` as an integer in ``[0, 2^k)``."""
        if self.is_exact_zero:
            return 0
        if self.absprec < k:
            raise InsufficientPrecision(f"{self} is not known modulo 2^{k}")
        if self.unit == 0:
            return 0
        if self.valuation < 0:
            raise ValueError(f"{self} is not a 2-adic integer")
        return (self.unit << self.valuation) % (1 << k)

    def with_absprec(self, absprec: int) -> "PadicNumber":
        """Drop digits so that the result is known only modulo ``2^absprec``."""
        if absprec >= self.absprec:
            return self
        if self.unit == 0 or absprec <= self.valuation:
            return PadicNumber.big_oh(absprec)
        r = absprec - self.valuation
        return PadicNumber(self.valuation, self.unit % (1 << r), r)

    def __repr__(self):
        if self.is_exact_zero:
            return "0"
        if self.unit == 0:
            return f"O(2^{self.valuation})"
        return f"2^{self.valuation} * {self.unit} mod 2^{self.relprec}"

    __str__ = __repr__

    @classmethod
    def from_string(cls, text: str) -> "PadicNumber":
        """Inverse of ``repr``."""
        text = text.strip()
        if text == "0":
            return cls.exact_zero()
        m = re.fullmatch(r"O\(2\^(-?\d+)\)", text)
        if m:
            return cls.big_oh(int(m.group(1)))
        m = re.fullmatch(r"2\^(-?\d+) \* (\d+) mod 2\^(\d+)", text)
        if not m:
            raise ValueError(f"cannot parse 2-adic number {text!r}")
        return cls.from_parts(int(m.group(1)), int(m.group(2)), int(m.group(3)))


def padic_sqrt(a: PadicNumber) -> PadicNumber:
    """Square root with the branch ``2^(v/2) * (root congruent to 1 mod 4)``.

    The root of a unit known mod ``2^r`` is known mod ``2^(r-1)``.
    """
    if a.is_exact_zero:
        return a
    if a.unit == 0:
        raise PrecisionExhausted(f"square root of {a}")
    if a.valuation % 2:
        raise NotASquare(f"{a} has odd valuation")
    r = a.relprec
    if r < 3:
        raise InsufficientPrecision(f"square class of {a} needs 3 significant bits")
    u = a.unit
    if u % 8 != 1:
        raise NotASquare(f"unit part {u % 8} mod 8 is not 1")
    mod = 1 << (r + 2)
    x = 1
    for _ in range(2 * r.bit_length() + 4):
        if (x * x - u) % (1 << r) == 0:
            break
        x = ((x + u * pow(x, -1, mod)) % mod) >> 1
    else:  # pragma: no cover - Newton always converges from x = 1
        raise PrecisionExhausted("square root iteration did not converge")
    rp = r - 1
    x %= 1 << rp
    if x % 4 == 3:
        x = (-x) % (1 << rp)
    return PadicNumber(a.valuation // 2, x, rp)
