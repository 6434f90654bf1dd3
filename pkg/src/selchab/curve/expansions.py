"""Power-series expansions of the differentials x^j dx / y at P0 and at infinity.

At P0 the uniformizer is t = x and w = 1/y = f^(-1/2) with y(0) = h(0).
From f*w^2 = 1 one gets 2 f w' + f' w = 0, i.e.

    w_m = -(1 / (2 m f_0)) * sum_{i=1}^{min(N, m)} f_i (2m - i) w_{m-i}.

Each step divides by 2m and so loses 1 + v2(m) bits; the recurrence is run
on fixed-point integers with enough guard bits that every returned
coefficient is known to the requested absolute precision.

At infinity, s = 1/x and t = y/x^(g+1) satisfy t^2 = s + H(s)^2 with
H(s) = s^(g+1) h(1/s); s is an integer power series in T = t^2 and
omega_j = -2 s^(g-1-j) s'(T) dt has integer coefficients and only even
powers of t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .. import polyz
from ..padic import INF, PadicNumber, PadicSeries, TailLaw, v2
from .spec import CurveSpec


def _loss_prefix(K: int) -> list[int]:
    """``L[m] = sum_{k=1}^{m} (1 + v2(k))``."""
    out = [0] * max(K, 1)
    for m in range(1, K):
        out[m] = out[m - 1] + 1 + v2(m)
    return out


def p0_law(c: CurveSpec) -> TailLaw:
    """Valuation bound ``2/N - 2n/N - log2 n`` for the t^n coefficients of the integrals."""
    N = c.N
    return TailLaw(Fraction(2, N), Fraction(-2, N), Fraction(1))


def infinity_law() -> TailLaw:
    """Integral coefficients at infinity are 2 * integer / odd: valuation >= 1."""
    return TailLaw(Fraction(1), Fraction(0), Fraction(0))


def w_coefficients(c: CurveSpec, K: int, absprec: int) -> list[PadicNumber]:
    """``w_0 .. w_{K-1}`` of ``1/y(t)``, each known to ``absprec`` (absolute)."""
    f = c.f
    N = c.N
    L = _loss_prefix(K)
    S = L[K - 1]
    M = S + L[K - 1] + absprec + 2
    mod = 1 << M
    f0 = f[0]
    X = [(pow(c.h0, -1, mod) << S) % mod]
    for m in range(1, K):
        acc = 0
        for i in range(1, min(N, m) + 1):
            fi = f[i]
            if fi:
                acc += fi * (2 * m - i) * X[m - i]
        e = 1 + v2(m)
        odd = (m >> (e - 1)) * f0
        acc = (-acc) % mod
        acc >>= e  # exact for the true value; low bits are correct
        X.append((acc * pow(odd, -1, mod)) % mod)
    out = []
    for m in range(K):
        known = M - L[m] - 2  # absolute bits of X[m]
        out.append(PadicNumber.from_fixed(X[m] % (1 << known), S, known - S))
    return out


@dataclass
class P0Expansion:
    curve: CurveSpec
    w: list  # PadicNumber coefficients of 1/y
    absprec: int

    @property
    def nterms(self) -> int:
        return len(self.w)

    def w_series(self, j: int) -> PadicSeries:
        zero = PadicNumber.exact_zero()
        return PadicSeries(([zero] * j + list(self.w))[:self.nterms])

    def a(self, k: int) -> tuple:
        """Coefficient vector of t^k in (w_0, ..., w_{g-1})."""
        zero = PadicNumber.exact_zero()
        return tuple(self.w[k - j] if k >= j else zero for j in range(self.curve.g))

    def ell_coefficient(self, j: int, n: int) -> PadicNumber:
        if n < j + 1:
            return PadicNumber.exact_zero()
        return self.w[n - 1 - j] / n

    def ell_series(self, j: int, nterms: int | None = None) -> PadicSeries:
        n_out = self.nterms if nterms is None else min(nterms, self.nterms)
        coeffs = [PadicNumber.exact_zero()] + [self.ell_coefficient(j, n) for n in range(1, n_out)]
        return PadicSeries(coeffs, p0_law(self.curve))

    def check_laws(self) -> dict:
        """Check the real valuation law on every integral coefficient and the
        integer-weakened bounds on the coefficients themselves."""
        c = self.curve
        law = p0_law(c)
        N = c.N
        strong = weak = lattice = True
        for j in range(c.g):
            for n in range(j + 1, self.nterms):
                x = self.ell_coefficient(j, n)
                if not x.unit:
                    continue
                if not law.holds(n, x.valuation):
                    strong = False
                if x.valuation < math.ceil(Fraction(-2 * n, N)) - math.log2(n) - 1e-9:
                    weak = False
        for k in range(self.nterms):
            for x in self.a(k):
                if x.unit and x.valuation < math.ceil(Fraction(-2 * k, N)):
                    lattice = False
        return {"integral_law": strong, "integral_law_weak": weak, "a_n_bound": lattice}


def p0_expansion(c: CurveSpec, nterms: int, prec: int) -> P0Expansion:
    return P0Expansion(c, w_coefficients(c, nterms, prec), prec)


def expand_at_P0(c: CurveSpec, nterms: int, prec: int) -> list[PadicSeries]:
    """``w_j(t) = t^j / y(t)`` for ``j = 0 .. g-1``."""
    if nterms < 2 * c.g:
        raise ValueError("nterms must be at least 2g")
    exp = p0_expansion(c, nterms, prec)
    return [exp.w_series(j) for j in range(c.g)]


# -- infinity ------------------------------------------------------------------


def _smul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def _sreciprocal(a: list[int], n: int) -> list[int]:
    """Reciprocal of an integer series with constant term 1."""
    assert a[0] == 1
    out = [1] + [0] * (n - 1)
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * out[k - i]
        out[k] = -acc
    return out


def _H_of(c: CurveSpec, s: list[int], n: int) -> list[int]:
    """H(s) = sum_i h_i s^(g+1-i) by Horner in s."""
    g = c.g
    hs = list(c.h) + [0] * (g + 1 - len(c.h))
    acc = [0] * n
    # H(s) = s * (h_g + s*(h_{g-1} + ... + s*h_0))
    for i in range(0, g + 1):
        acc = _smul(acc, s, n)
        acc[0] += hs[i]
    return _smul(acc, s, n)


def s_series(c: CurveSpec, n: int) -> list[int]:
    """Integer coefficients of s(T) with ``s + H(s)^2 = T``, modulo ``T^n``.

    Newton iteration for phi(s) = s + H(s)^2 - T doubles the number of
    correct coefficients per pass.
    """
    s = [0, 1] + [0] * (n - 2) if n >= 2 else [0] * n
    known = 2
    while known < n:
        known = min(2 * known, n)
        cur = (s + [0] * known)[:known]
        H = _H_of(c, cur, known)
        phi = [a + b for a, b in zip(cur, _smul(H, H, known))]
        phi[1] -= 1
        # phi'(s) = 1 + 2 H(s) H'(s); H'(s) via the derivative of H as a polynomial
        g = c.g
        hs = list(c.h) + [0] * (g + 1 - len(c.h))
        Hpoly = [0] * (g + 2)
        for i in range(g + 1):
            Hpoly[g + 1 - i] = hs[i]
        dH = polyz.derivative(Hpoly)
        dHs = [0] * known
        for coef in reversed(dH or [0]):
            dHs = _smul(dHs, cur, known)
            dHs[0] += coef
        dphi = _smul(H, dHs, known)
        dphi = [2 * x for x in dphi]
        dphi[0] += 1
        corr = _smul(phi, _sreciprocal(dphi, known), known)
        s = [a - b for a, b in zip(cur, corr)]
    return s[:n]


@dataclass
class InfinityExpansion:
    curve: CurveSpec
    s: list  # integer coefficients of s(T)
    omega: list  # omega[j][k] = coefficient of T^k (i.e. t^(2k)) in omega_j / dt

    @property
    def nterms_T(self) -> int:
        return len(self.s)

    def omega_series(self, j: int, relprec: int = 64) -> PadicSeries:
        """omega_j / dt as a series in t (odd powers exactly zero)."""
        zero = PadicNumber.exact_zero()
        coeffs = []
        for k, x in enumerate(self.omega[j]):
            coeffs.append(PadicNumber.from_rational(x, relprec=relprec) if x else zero)
            coeffs.append(zero)
        return PadicSeries(coeffs[:-1])

    def ell_coefficient_exact(self, j: int, n: int) -> Fraction:
        """Coefficient of t^n in the integral of omega_j (zero for even n)."""
        if n % 2 == 0:
            return Fraction(0)
        k = (n - 1) // 2
        return Fraction(self.omega[j][k], n)

    def ell_series(self, j: int, relprec: int = 64) -> PadicSeries:
        coeffs = []
        for n in range(2 * self.nterms_T):
            x = self.ell_coefficient_exact(j, n)
            coeffs.append(PadicNumber.from_rational(x, relprec=relprec) if x
                          else PadicNumber.exact_zero())
        return PadicSeries(coeffs, infinity_law())

    def check_laws(self) -> dict:
        even = all(x.is_exact_zero for j in range(self.curve.g)
                   for x in self.omega_series(j).coeffs[1::2])
        integral_ok = True
        for j in range(self.curve.g):
            for n in range(1, 2 * self.nterms_T, 2):
                x = self.ell_coefficient_exact(j, n)
                if x and v2(x.numerator) - v2(x.denominator) < 1:
                    integral_ok = False
        omega_int = all(v2(x) >= 1 for row in self.omega for x in row if x)
        return {"only_even_powers": even, "omega_coefficients_even": omega_int,
                "integral_valuation_ge_1": integral_ok}


def infinity_expansion(c: CurveSpec, nterms_T: int) -> InfinityExpansion:
    s = s_series(c, nterms_T + 1)
    sp = [(k + 1) * s[k + 1] for k in range(nterms_T)]
    s = s[:nterms_T]
    g = c.g
    omega = []
    power = [1] + [0] * (nterms_T - 1)
    powers = [power]
    for _ in range(g - 1):
        powers.append(_smul(powers[-1], s, nterms_T))
    for j in range(g):
        prod = _smul(powers[g - 1 - j], sp, nterms_T)
        omega.append([-2 * x for x in prod])
    return InfinityExpansion(c, s, omega)


def expand_at_infinity(c: CurveSpec, nterms: int, prec: int) -> list[PadicSeries]:
    """omega_j / dt at infinity as series in t = y/x^(g+1), for j = 0 .. g-1."""
    if nterms < 2 * c.g:
        raise ValueError("nterms must be at least 2g")
    exp = infinity_expansion(c, (nterms + 1) // 2)
    return [exp.omega_series(j, relprec=prec + 64) for j in range(c.g)]


def reparametrize_at_infinity(c: CurveSpec, series: PadicSeries) -> PadicSeries:
    """Rewrite a series in t = y/x^(g+1) in terms of t~ = (y - h(x))/x^(g+1) = t - H(s(t^2))."""
    n = len(series)
    nT = (n + 1) // 2 + 1
    s = s_series(c, nT)
    H = _H_of(c, s, nT)
    phi = [0] * n
    for k, x in enumerate(H):
        if 2 * k < n:
            phi[2 * k] -= x
    if n > 1:
        phi[1] += 1
    from ..padic import fixed_point_invert

    phi_s = PadicSeries.from_rationals(phi, relprec=series[1].relprec if n > 1 and series[1].unit else 64)
    inverse = fixed_point_invert(phi_s)
    return series.compose(inverse)
