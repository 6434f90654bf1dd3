"""The rho map and the residue-disk scan.

For t in a class 2^k (u0 + 2^j Z_2) and F(t) = sum c_n t^n,

    v(F(t) - F(t0)) >= min_n (v(c_n) + n k) + j =: m_k + j,

so once F(t0) has minimal valuation v0 <= m_k + j - 1 the whole class has
the same rho.  Classes that are not yet pinned are split in two.  For k at
least the dominance threshold k0 the first nonzero term decides rho by
itself, which closes the scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import (
    IndistinguishableFromZero,
    InsufficientPrecision,
    PrecisionExhausted,
    ScanBudgetExceeded,
)
from ..padic import INF, PadicNumber
from .lattice import LogLattice, VectorSeries

DEFAULT_BUDGET = 1 << 12
MAX_THRESHOLD = 4096


def rho(v) -> tuple:
    """``2^(-v2(v)) * v mod 2`` for a vector v of 2-adic numbers (ints/Fractions accepted)."""
    v = [x if isinstance(x, PadicNumber) else PadicNumber.from_rational(x) for x in v]
    vals = [x.valuation for x in v if x.unit]
    if not vals:
        raise IndistinguishableFromZero("rho of a vector that is zero at this precision")
    v0 = min(vals)
    for x in v:
        if not x.is_exact_zero and x.absprec < v0 + 1:
            raise IndistinguishableFromZero(
                f"component {x} is not known modulo 2^{v0 + 1}")
    return tuple(1 if (x.unit and x.valuation == v0) else 0 for x in v)


def rho_valuation(v) -> int:
    return min(x.valuation for x in v if x.unit)


@dataclass
class DiskScanResult:
    center: str
    classes: frozenset
    certificate: list = field(default_factory=list)
    threshold: int = 0
    classes_examined: int = 0

    def sorted_classes(self) -> list:
        return sorted(self.classes, reverse=True)

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "classes": [list(v) for v in self.sorted_classes()],
            "dominance_threshold": self.threshold,
            "classes_examined": self.classes_examined,
            "certificate": self.certificate,
        }


def _lower(x: PadicNumber) -> float:
    return x.valuation  # a lower bound for O(2^a) as well; inf for exact zeros


def min_term(series: VectorSeries, k: int, start: int = 1) -> float:
    """Lower bound of ``min_{n >= start} v(c_n) + n k`` including the tail law."""
    best = INF
    for n in range(start, len(series)):
        lv = min(_lower(x) for x in series.coeffs[n])
        if lv != INF:
            best = min(best, lv + n * k)
    return min(best, series.tail_law.tail_minimum(max(len(series), start), k))


def first_term(series: VectorSeries) -> int:
    for n in range(1, len(series)):
        if any(not x.is_exact_zero for x in series.coeffs[n]):
            return n
    raise PrecisionExhausted("series has no nonzero stored coefficient")


def dominance_threshold(series: VectorSeries) -> tuple[int, int, tuple]:
    """Smallest k with n k + v(c_n) > n1 k + v(c_n1) + 1 for every n > n1.

    Returns ``(k0, n1, rho(c_n1))``.
    """
    n1 = first_term(series)
    c1 = series.coeffs[n1]
    r1 = rho(c1)
    v1 = rho_valuation(c1)
    for k in range(1, MAX_THRESHOLD):
        if min_term(series, k, start=n1 + 1) > n1 * k + v1 + 1:
            return k, n1, r1
    raise ScanBudgetExceeded("no dominance threshold below the search cap")


def disk_scan(c, lat: LogLattice, center: str, budget: int = DEFAULT_BUDGET,
              nterms: int | None = None, series: VectorSeries | None = None) -> DiskScanResult:
    """All values of rho(log' i(P)) for P in the punctured disk around ``center``.

    Raises :class:`ScanBudgetExceeded` rather than returning a partial set,
    and :class:`InsufficientPrecision` when the stored coefficients cannot
    separate a class (the caller retries at higher precision).
    """
    center = "Infinity" if center.lower().startswith("inf") else "P0"
    if series is None:
        series = lat.scan_series(center, nterms)
    k0, n1, r1 = dominance_threshold(series)
    classes = set()
    cert = []
    examined = 0
    for k in range(1, k0):
        mk = min_term(series, k)
        queue = [(1, 1)]  # (u0, j): u in u0 + 2^j Z_2, u odd
        while queue:
            nxt = []
            for u0, j in queue:
                examined += 1
                if examined > budget:
                    raise ScanBudgetExceeded(
                        f"disk scan at {center} needs more than {budget} classes")
                t0 = PadicNumber.from_rational(u0 << k, relprec=4 * lat.prec + 64)
                val = series.evaluate(t0)
                try:
                    r = rho(val)
                    v0 = rho_valuation(val)
                except IndistinguishableFromZero:
                    known = min(x.absprec for x in val)
                    if known < mk + j + 1:
                        raise InsufficientPrecision(
                            f"value at t = 2^{k}*{u0} not known well enough") from None
                    nxt += [(u0, j + 1), (u0 + (1 << j), j + 1)]
                    continue
                if mk + j >= v0 + 1:
                    classes.add(r)
                    cert.append({"k": k, "u": u0, "j": j, "rho": list(r),
                                 "value_valuation": int(v0), "variation_bound": int(mk + j)})
                else:
                    nxt += [(u0, j + 1), (u0 + (1 << j), j + 1)]
            queue = sorted(nxt, key=lambda p: (p[1], p[0]))
    classes.add(r1)
    cert.append({"k_at_least": k0, "dominant_term": n1, "rho": list(r1)})
    return DiskScanResult(center, frozenset(classes), cert, k0, examined)


def brute_force_rho(series: VectorSeries, bits: int = 10) -> set:
    """rho(F(2u)) for u = 1 .. 2^bits - 1, evaluated term by term."""
    out = set()
    for u in range(1, 1 << bits):
        t = PadicNumber.from_rational(2 * u, relprec=256)
        out.add(rho(series.evaluate(t)))
    return out
