"""The 2-adic logarithm lattice and the normalizing transformation U.

Rows of L are the logarithms of the generators

    sum_{n>=1} (2^n / n) a_{dn-1}    for d = 1 .. g,
    sum_{n>=1} (4^n / n) a_{dn-1}    for odd d = 1 .. 2g-1,

where a_k is the coefficient vector of t^k in (w_0, ..., w_{g-1}) at P0.
Using every odd d (instead of a minimal index set) only adds redundant
generators.  U is chosen so that the rows of L*U generate Z_2^g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InputError, InsufficientPrecision, InternalInconsistency
from ..padic import PadicNumber, TailLaw
from ..padic.matrix import (
    Z2Matrix,
    echelonize_over_Z2,
    fraction_inverse,
    hermite_form_Z2,
    lattice_certificate,
    same_lattice,
)
from .expansions import (
    InfinityExpansion,
    P0Expansion,
    infinity_expansion,
    infinity_law,
    p0_law,
    w_coefficients,
)
from .spec import CurveSpec

DEFAULT_PREC = 24
MAX_RETRIES = 4


def default_scan_terms(c: CurveSpec, prec: int) -> int:
    return max(4 * c.g, 2 * prec)


def lattice_rows(g: int) -> list[tuple[int, int]]:
    """``(d, e)`` for each row of L: the generator uses powers of ``2^e``."""
    return [(d, 1) for d in range(1, g + 1)] + [(d, 2) for d in range(1, 2 * g, 2)]


def _term_bound(N: int, d: int, e: int, n: int) -> float:
    """Lower bound for the valuation of the n-th term of row (d, e)."""
    return e * n - math.log2(n) + 2 / N - 2 * d * n / N - math.log2(d * n)


def row_length(N: int, d: int, e: int, prec: int) -> int:
    """Number of terms after which every remaining term has valuation >= prec."""
    a = e - 2 * d / N
    if a <= 0:
        raise InternalInconsistency(f"row d={d} does not converge")
    n = max(1, math.ceil(2 / (a * math.log(2))))  # the bound increases from here on
    while _term_bound(N, d, e, n + 1) < prec:
        n += 1
    return n


def exact_dyadic(rows, prec: int) -> Z2Matrix:
    rows = [[Fraction(x) for x in r] for r in rows]
    bits = max((max(abs(x.numerator).bit_length(), x.denominator.bit_length())
                for r in rows for x in r), default=1)
    return Z2Matrix.from_rationals(rows, relprec=bits + 4 * prec + 64)


@dataclass
class VectorSeries:
    """sum_n c_n t^n with vector coefficients; ``tail_law`` bounds every n >= len(coeffs)."""

    coeffs: list
    tail_law: TailLaw
    dim: int

    def __len__(self):
        return len(self.coeffs)

    def evaluate(self, t: PadicNumber) -> tuple:
        out = []
        k = t.valuation
        tail = self.tail_law.tail_minimum(len(self.coeffs), k)
        for i in range(self.dim):
            acc = PadicNumber.exact_zero()
            for c in reversed(self.coeffs):
                acc = acc * t + c[i]
            out.append(acc + PadicNumber.big_oh(tail))
        return tuple(out)

    def lower_valuation(self, n: int) -> float:
        """Lower bound for min_i v(c_n[i]); exact zeros give +inf."""
        return min(x.valuation for x in self.coeffs[n])

    def components(self, i: int) -> list:
        return [c[i] for c in self.coeffs]


@dataclass
class LogLattice:
    curve: CurveSpec
    prec: int
    L: Z2Matrix
    U: Z2Matrix
    U_computed: Z2Matrix
    basis: Z2Matrix
    pivots: tuple
    certificate: dict
    u_source: str
    p0: P0Expansion
    row_lengths: list
    attempts: int = 1
    _infinity: InfinityExpansion | None = field(default=None, repr=False)

    @property
    def g(self) -> int:
        return self.curve.g

    @property
    def nterms(self) -> int:
        return self.p0.nterms

    def a_coeffs(self, count: int | None = None) -> list:
        count = self.p0.nterms if count is None else count
        return [self.p0.a(k) for k in range(count)]

    def infinity(self, nterms_T: int | None = None) -> InfinityExpansion:
        want = nterms_T or default_scan_terms(self.curve, self.prec) // 2 + 1
        if self._infinity is None or self._infinity.nterms_T < want:
            self._infinity = infinity_expansion(self.curve, want)
        return self._infinity

    def infty_coeffs(self) -> list:
        inf = self.infinity()
        return [tuple(inf.omega[j][k] for j in range(self.g)) for k in range(inf.nterms_T)]

    def LU(self) -> Z2Matrix:
        return self.L @ self.U

    def LU_mod2(self) -> list:
        return self.LU().reduce_mod2()

    def image_hermite(self) -> list:
        """Canonical basis of the image of log, the row span of L = Z_2^g U^(-1)."""
        return hermite_form_Z2(fraction_inverse(self.U.to_fractions()))

    def min_valuation_U(self) -> int:
        return int(self.U.min_valuation())

    def scan_series(self, center: str, nterms: int | None = None) -> VectorSeries:
        """U-transformed integral series log'(t) around ``center`` ('P0' or 'Infinity')."""
        g = self.g
        n_out = nterms or default_scan_terms(self.curve, self.prec)
        Uf = self.U.to_fractions()
        zero = PadicNumber.exact_zero()
        shift = self.min_valuation_U()
        if center == "P0":
            p0 = self.p0
            if n_out > p0.nterms:
                p0 = P0Expansion(self.curve, w_coefficients(self.curve, n_out, p0.absprec),
                                 p0.absprec)
            coeffs = [tuple(zero for _ in range(g))]
            for n in range(1, n_out):
                ell = [p0.ell_coefficient(j, n) for j in range(g)]
                row = []
                for col in range(g):
                    acc = zero
                    for j in range(g):
                        if Uf[j][col] and not ell[j].is_exact_zero:
                            acc = acc + ell[j] * self.U[j, col]
                    row.append(acc)
                coeffs.append(tuple(row))
            return VectorSeries(coeffs, p0_law(self.curve).shifted(shift), g)
        if center in ("Infinity", "inf", "infinity"):
            inf = self.infinity(n_out // 2 + 1)
            relprec = 4 * self.prec + 64
            coeffs = []
            for n in range(n_out):
                ell = [inf.ell_coefficient_exact(j, n) for j in range(g)]
                row = []
                for col in range(g):
                    x = sum((ell[j] * Uf[j][col] for j in range(g)), Fraction(0))
                    row.append(PadicNumber.from_rational(x, relprec=relprec) if x else zero)
                coeffs.append(tuple(row))
            return VectorSeries(coeffs, infinity_law().shifted(shift), g)
        raise ValueError(f"unknown center {center!r}")


def _assemble_L(c: CurveSpec, prec: int) -> tuple[Z2Matrix, P0Expansion, list]:
    g, N = c.g, c.N
    rows = lattice_rows(g)
    lengths = [row_length(N, d, e, prec) for d, e in rows]
    K = max(d * n for (d, _), n in zip(rows, lengths)) + 1
    K = max(K, default_scan_terms(c, prec) + 1)
    A_w = prec + math.ceil(math.log2(max(lengths) + 1)) + 4
    w = w_coefficients(c, K, A_w)
    tail = PadicNumber.big_oh(prec)
    L = []
    for (d, e), n_max in zip(rows, lengths):
        entries = [PadicNumber.exact_zero()] * g
        for n in range(1, n_max + 1):
            scal = PadicNumber.from_rational(Fraction(1 << (e * n), n), relprec=A_w + 8)
            for j in range(g):
                idx = d * n - 1 - j
                if idx >= 0 and not w[idx].is_exact_zero:
                    entries[j] = entries[j] + scal * w[idx]
        L.append([x + tail for x in entries])
    return Z2Matrix(L), P0Expansion(c, w, A_w), lengths


def _symmetric(x: PadicNumber, absprec: int) -> Fraction:
    """Representative of ``x`` mod ``2^absprec`` with unit part in (-2^(r-1), 2^(r-1)]."""
    y = x.with_absprec(absprec)
    if not y.unit:
        return Fraction(0)
    u = y.unit
    if u > 1 << (y.relprec - 1):
        u -= 1 << y.relprec
    return Fraction(u) * Fraction(2) ** y.valuation


def _small_U(L: Z2Matrix, U: Z2Matrix, prec: int) -> Z2Matrix:
    """Shortest dyadic rounding of U that still normalizes the lattice."""
    vmin = int(U.min_valuation())
    for a in range(vmin + 1, vmin + 2 * prec + 1):
        cand = exact_dyadic([[_symmetric(x, a) for x in r] for r in U.rows], prec)
        try:
            if lattice_certificate(L, cand)["generates"]:
                return cand
        except InsufficientPrecision:
            continue
    cand = exact_dyadic(U.to_fractions(), prec)
    if not lattice_certificate(L, cand)["generates"]:
        raise InsufficientPrecision("rounded U no longer normalizes the lattice")
    return cand


def _once(c: CurveSpec, prec: int, u_override) -> LogLattice:
    L, p0, lengths = _assemble_L(c, prec)
    ech = echelonize_over_Z2(L)
    U = _small_U(L, ech.U, prec)
    cert = lattice_certificate(L, U)
    cert = dict(cert, pivots=[list(p) for p in ech.pivots])
    U_final, source = U, "computed"
    if u_override is not None:
        Uo = exact_dyadic(u_override, prec)
        if Uo.shape != (c.g, c.g):
            raise InputError(f"U override must be {c.g}x{c.g}")
        cert_o = lattice_certificate(L, Uo)
        if not cert_o["generates"]:
            raise InputError("U override does not send the logarithm lattice onto Z_2^g")
        cert["override"] = dict(cert_o, same_lattice_as_computed=same_lattice(U, Uo))
        U_final, source = Uo, "override"
    basis = Z2Matrix([(L @ U_final).rows[r] for r, _, _ in ech.pivots])
    return LogLattice(c, prec, L, U_final, U, basis, ech.pivots, cert, source, p0, lengths)


def log_lattice(c: CurveSpec, prec: int = DEFAULT_PREC, u_override=None,
                max_retries: int = MAX_RETRIES) -> LogLattice:
    """Compute L, certify U, retrying with doubled precision when a pivot is uncertain."""
    p = prec
    for attempt in range(max_retries + 1):
        try:
            lat = _once(c, p, u_override)
            lat.attempts = attempt + 1
            return lat
        except InsufficientPrecision:
            if attempt == max_retries:
                raise
            p *= 2
    raise InsufficientPrecision("unreachable")  # pragma: no cover
