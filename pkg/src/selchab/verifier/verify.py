"""Three-regime verification: unit-x disk, the P0 / iota(P0) disks and the infinity disk."""

from __future__ import annotations

from dataclasses import dataclass

from .. import f2
from ..curve import CurveSpec, disk_scan, log_lattice, structural_checks
from ..curve.expansions import infinity_expansion, p0_expansion
from ..curve.lattice import DEFAULT_PREC, default_scan_terms
from ..curve.scan import DEFAULT_BUDGET
from ..errors import InputError, SelChabError
from ..etale import EtaleData, build_etale, is_square_unit, square_class_coords
from ..padic import v2
from ..polyz import evaluate
from .report import VerificationReport, matrix_strings
from .selmer import SelmerInput, override_vectors, parse_matrix, selmer_to_F2g, selmer_to_H2


@dataclass
class VerifyOptions:
    prec: int = DEFAULT_PREC
    budget: int = DEFAULT_BUDGET
    u_override: list | None = None
    residue_bits: int = 10


def centered_mod8(x: int) -> int:
    """Representative of x mod 8 in -3 .. 4."""
    r = x % 8
    return r - 8 if r > 4 else r


def unit_x_points_excluded(f, max_bits: int = 10) -> bool:
    """True if some 2^k proves that no x in Z_2^* makes f(x) a nonzero square.

    For every odd residue x mod 2^k, f(x) mod 2^k must either be undecided
    (divisible by 2^k) or look like a square: even valuation and, when three
    bits of the unit part are known, unit part 1 mod 8.
    """
    for k in range(3, max_bits + 1):
        mod = 1 << k
        possible = False
        for x in range(1, mod, 2):
            y = evaluate(list(f), x) % mod
            if y == 0:
                possible = True
                break
            v = v2(y)
            if v % 2:
                continue
            unit_bits = k - v
            if unit_bits >= 3 and (y >> v) % 8 != 1:
                continue
            possible = True
            break
        if not possible:
            return True
    return False


def unit_disk_check(c: CurveSpec, e: EtaleData, selmer_H2, reproduction: bool = False,
                    residue_bits: int = 10) -> dict:
    """Points with v2(x) = 0: compare the class of x0 - theta with the Selmer image."""
    if not c.unit_disk_supported:
        if unit_x_points_excluded(c.f, residue_bits):
            return {"status": "no_2adic_points", "x0_mod8": None, "class": None,
                    "member": None, "pass": True,
                    "note": "no point with v2(x) = 0 (residue search)"}
        return {"status": "not_applicable", "x0_mod8": None, "class": None,
                "member": None, "pass": False,
                "note": "h(1) is odd; the unit-x disks are not handled"}
    x0 = centered_mod8(1 - c.h1 ** 2)
    u = e.element([x0, -1])
    cls = square_class_coords(e, u)
    square = is_square_unit(e, u)
    if reproduction:
        return {"status": "taken_from_input_source", "x0_mod8": x0, "class": list(cls.bits),
                "is_square": square, "member": None, "pass": True,
                "note": "Selmer data given only in F_2^g coordinates; this regime rests on the source of that data"}
    member = f2.in_span([s.bits for s in selmer_H2], cls.bits)
    return {"status": "checked", "x0_mod8": x0, "class": list(cls.bits), "is_square": square,
            "member": member, "pass": not member, "note": ""}


def _expansion_laws(c: CurveSpec, prec: int) -> dict:
    nterms = default_scan_terms(c, prec)
    p0 = p0_expansion(c, nterms, prec).check_laws()
    inf = infinity_expansion(c, nterms // 2 + 1).check_laws()
    return {"nterms": nterms, "P0": p0, "Infinity": inf,
            "all_hold": all(p0.values()) and all(inf.values())}


def verify_curve(c: CurveSpec, s: SelmerInput, options: VerifyOptions | None = None) -> VerificationReport:
    opts = options or VerifyOptions()
    rep = VerificationReport.empty(c, s)
    try:
        rep.assumptions = structural_checks(c)
        rep.assumptions.update({"deg_h_le_g": True, "h0_odd": True, "f_squarefree_mod2": True,
                                "unit_disk_supported": c.unit_disk_supported})
        e = build_etale(c.f)
        rep.etale = {
            "factor_degrees": list(e.factor_degrees),
            "m": e.m,
            "dim_H2": e.dim_H2,
            "I_set": list(e.I_set),
            "delta2_dimension": len(e.delta2_basis),
            "delta2_generators": [gen.label for gen in e.delta2_basis],
        }
        rep.expansions = _expansion_laws(c, opts.prec)
        if not rep.expansions["all_hold"]:
            return rep.inconclusive("a valuation law failed on a computed coefficient")

        reproduction = s.mode == "f2g_override"
        selmer_H2 = [] if reproduction else selmer_to_H2(e, s)
        rep.selmer_image_H2 = [list(x.bits) for x in selmer_H2]
        rep.unit_disk = unit_disk_check(c, e, selmer_H2, reproduction, opts.residue_bits)

        if s.is_trivial:
            rep.selmer_image_F2g = []
            rep.notes.append("trivial Selmer group: J(Q) is finite of odd order, "
                             "so the three odd-order points are all rational points")
            return rep.success()

        u_override = opts.u_override if opts.u_override is not None else s.u_override
        if reproduction and u_override is None:
            raise InputError("F_2^g vectors depend on the basis; supply the U they refer to")
        U = parse_matrix(u_override) if u_override is not None else None
        lat = log_lattice(c, opts.prec, u_override=U)
        rep.lattice = {
            "prec": lat.prec,
            "attempts": lat.attempts,
            "u_source": lat.u_source,
            "row_lengths": lat.row_lengths,
            "L": matrix_strings(lat.L),
            "U": [[str(x) for x in r] for r in lat.U.to_fractions()],
            "U_computed": [[str(x) for x in r] for r in lat.U_computed.to_fractions()],
            "LU_mod2": lat.LU_mod2(),
            "certificate": lat.certificate,
        }
        if reproduction:
            image = override_vectors(s, c.g)
            rep.notes.append("F_2^g vectors supplied directly (reproduction mode)")
        else:
            image, notes = selmer_to_F2g(e, lat, selmer_H2, enlarged=s.enlarged)
            rep.notes.extend(notes)
        rep.selmer_image_F2g = [list(v) for v in image]

        z0 = disk_scan(c, lat, "P0", budget=opts.budget)
        zi = disk_scan(c, lat, "Infinity", budget=opts.budget)
        rep.Z_P0 = z0.to_dict()
        rep.Z_inf = zi.to_dict()

        for z in z0.sorted_classes() + zi.sorted_classes():
            if f2.in_span(image, z):
                return rep.failure({"kind": "F2g", "vector": list(z)})
        if rep.unit_disk["status"] == "checked" and rep.unit_disk["member"]:
            return rep.failure({"kind": "H2", "class": rep.unit_disk["class"]})
        if not rep.unit_disk["pass"]:
            return rep.inconclusive(rep.unit_disk["note"])
        return rep.success()
    except InputError:
        raise
    except SelChabError as exc:
        return rep.inconclusive(f"{type(exc).__name__}: {exc}")
