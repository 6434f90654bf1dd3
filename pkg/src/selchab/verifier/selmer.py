"""Trusted Selmer-group input and its images in H_2 and in F_2^g."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .. import f2, polyz
from ..errors import InputError, NotInLocalImage, RankDrop
from ..etale import EtaleData, SquareClass, delta2_coordinates, square_class_coords
from ..curve.lattice import LogLattice, lattice_rows

MODES = ("trivial", "unit_reps", "delta2_coords", "f2g_override")


@dataclass
class SelmerInput:
    mode: str
    generators: list = field(default_factory=list)
    provenance: str = ""
    u_override: list | None = None
    declared_dimension: int | None = None
    enlarged: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown Selmer mode {self.mode!r}; expected one of {MODES}")
        if self.mode == "trivial" and self.generators:
            raise InputError("trivial Selmer input takes no generators")

    @property
    def is_trivial(self) -> bool:
        return self.mode == "trivial"

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "generators": self.generators,
            "u_override": self.u_override,
            "provenance": self.provenance,
            "declared_dimension": self.declared_dimension,
            "enlarged": self.enlarged,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SelmerInput":
        if not isinstance(d, dict) or "mode" not in d:
            raise InputError("Selmer input must be an object with a 'mode' field")
        unknown = set(d) - {"mode", "generators", "u_override", "provenance",
                            "declared_dimension", "enlarged", "comment"}
        if unknown:
            raise InputError(f"unknown Selmer fields {sorted(unknown)}")
        return cls(
            mode=d["mode"],
            generators=list(d.get("generators") or []),
            provenance=str(d.get("provenance", "")),
            u_override=d.get("u_override"),
            declared_dimension=d.get("declared_dimension"),
            enlarged=bool(d.get("enlarged", False)),
        )

    @classmethod
    def load(cls, path) -> "SelmerInput":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read Selmer file {path}: {exc.strerror}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"Selmer file {path} is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def parse_matrix(rows) -> list[list[Fraction]]:
    """Matrix of ints, floats-free strings like ``"-1/4"``, or Fractions."""
    try:
        out = [[Fraction(x) if not isinstance(x, float) else _reject_float(x) for x in r]
               for r in rows]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad matrix entry: {exc}") from None
    if not out or len({len(r) for r in out}) != 1:
        raise InputError("matrix must be rectangular and nonempty")
    return out


def _reject_float(x):
    raise InputError(f"floating point matrix entry {x!r}; use an integer or 'p/q' string")


def _bits(v, n: int, what: str) -> tuple:
    if not isinstance(v, (list, tuple)) or len(v) != n or any(b not in (0, 1) for b in v):
        raise InputError(f"{what} must be a 0/1 vector of length {n}")
    return tuple(v)


def _unit_rep(e: EtaleData, gen):
    if isinstance(gen, str):
        var = "theta" if "theta" in gen else "x"
        poly = polyz.parse_poly(gen, var=var)
    elif isinstance(gen, list):
        poly = [int(c) for c in gen]
    else:
        raise InputError(f"unit representative {gen!r} must be a string or coefficient list")
    return e.element(poly)


def selmer_to_H2(e: EtaleData, s: SelmerInput) -> list[SquareClass]:
    """Square classes of the Selmer generators; the rank must match the declared dimension."""
    if s.mode == "trivial":
        return []
    if s.mode == "f2g_override":
        raise ValueError("F_2^g override vectors have no H_2 classes")
    if s.mode == "unit_reps":
        classes = [square_class_coords(e, _unit_rep(e, gen)) for gen in s.generators]
    else:
        n = e.g + e.m - 1
        basis = e.delta2_vectors()
        classes = []
        for gen in s.generators:
            coeffs = _bits(gen, n, "delta_2 coordinate vector")
            classes.append(SquareClass(f2.combine([b.bits for b in basis], coeffs, e.dim_H2)))
    declared = s.declared_dimension if s.declared_dimension is not None else len(s.generators)
    rk = f2.rank([c.bits for c in classes])
    if rk < declared:
        raise RankDrop(f"Selmer generators span dimension {rk}, declared {declared}")
    return classes


def push_forward_rows(e: EtaleData) -> list[int]:
    """Row of L matching each delta_2 generator (d with scale 2, then d in I with scale 4)."""
    rows = lattice_rows(e.g)
    index = {(d, 2 ** ex): i for i, (d, ex) in enumerate(rows)}
    return [index[(gen.d, gen.scale)] for gen in e.delta2_basis]


def selmer_to_F2g(e: EtaleData, lat: LogLattice, classes, enlarged: bool = False):
    """Images of H_2 classes in F_2^g = (im log')/2(im log').

    Returns ``(basis, notes)``.  A class outside the delta_2 image is dropped
    with a note when ``enlarged`` is set and is an error otherwise.
    """
    g = lat.g
    LU2 = lat.LU_mod2()
    rows = [LU2[i] for i in push_forward_rows(e)]
    images = []
    notes = []
    for idx, cls in enumerate(classes):
        coords = delta2_coordinates(e, cls)
        if coords is None:
            if enlarged:
                notes.append(f"generator {idx} is outside the local image and was discarded")
                continue
            raise NotInLocalImage(f"Selmer generator {idx} is not in the image of delta_2")
        images.append(f2.combine(rows, coords, g))
    return f2.span_basis(images, g), notes


def override_vectors(s: SelmerInput, g: int) -> list[tuple]:
    return f2.span_basis([_bits(v, g, "F_2^g override vector") for v in s.generators], g)
