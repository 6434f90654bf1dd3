"""Curves y^2 = x^(2g+1) + h(x)^2 and their standing assumptions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import polyz
from ..errors import DegreeTooLarge, EvenH0, InternalInconsistency, NotSquarefreeMod2
from ..etale import gf2x


@dataclass(frozen=True)
class CurveSpec:
    g: int
    h: tuple
    name: str = field(default="", compare=False)

    @property
    def N(self) -> int:
        return 2 * self.g + 1

    @property
    def f(self) -> tuple:
        return tuple(polyz.add(polyz.monomial(self.N), polyz.mul(list(self.h), list(self.h))))

    @property
    def h0(self) -> int:
        return self.h[0]

    @property
    def h1(self) -> int:
        return sum(self.h)

    @property
    def unit_disk_supported(self) -> bool:
        return self.h1 % 2 == 0

    @property
    def P0(self) -> tuple:
        return (0, self.h0)

    def odd_points(self) -> list:
        return ["infinity", (0, self.h0), (0, -self.h0)]

    def describe(self) -> str:
        return f"y^2 = x^{self.N} + ({polyz.to_string(list(self.h))})^2"

    def to_dict(self) -> dict:
        return {"g": self.g, "h": list(self.h), "h_text": polyz.to_string(list(self.h)),
                "f": list(self.f), "name": self.name}


def new_curve(g: int, h, name: str = "") -> CurveSpec:
    """Validate ``deg h <= g`` and ``h(0)`` odd; ``h`` is a coefficient list or a string."""
    if isinstance(h, str):
        h = polyz.parse_poly(h)
    h = polyz.trim([int(c) for c in h])
    if g < 1:
        raise ValueError("genus must be at least 1")
    if polyz.deg(h) > g:
        raise DegreeTooLarge(f"deg h = {polyz.deg(h)} exceeds g = {g}")
    if not h or h[0] % 2 == 0:
        raise EvenH0("h(0) must be odd")
    c = CurveSpec(g, tuple(h), name)
    fbar = gf2x.from_intpoly(c.f)
    if not gf2x.is_squarefree(fbar):
        raise NotSquarefreeMod2("f is not squarefree modulo 2")  # impossible when h(0) is odd
    return c


def reduced_points_f2(N: int) -> list:
    """Points of eta^2 + eta = xi^N over F_2, plus the point at infinity."""
    pts = ["infinity"]
    for xi in (0, 1):
        for eta in (0, 1):
            if (eta * eta + eta - xi ** N) % 2 == 0:
                pts.append((xi, eta))
    return pts


def structural_checks(c: CurveSpec) -> dict:
    """Identity ``f - h^2 = x^N``, the reduced model's point count, and the odd-order points."""
    diff = polyz.sub(list(c.f), polyz.mul(list(c.h), list(c.h)))
    identity_ok = diff == polyz.monomial(c.N)
    pts = reduced_points_f2(c.N)
    if not identity_ok:
        raise InternalInconsistency("f - h^2 is not x^(2g+1)")
    if pts != ["infinity", (0, 0), (0, 1)]:
        raise InternalInconsistency(f"unexpected reduced points {pts}")
    return {
        "f_minus_h2_is_x_pow_N": identity_ok,
        "order_P0_minus_inf_divides": c.N,
        "reduced_points": [p if isinstance(p, str) else list(p) for p in pts],
        "odd_order_points": [p if isinstance(p, str) else list(p) for p in c.odd_points()],
    }
