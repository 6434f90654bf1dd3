"""Command line front end.

Exit codes: 0 Success, 1 Failure, 2 Inconclusive, 3 input error.  Commands
that produce no verdict exit 0 on completion and 2 on a computational error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path

from . import polyz
from .curve import CurveSpec, disk_scan, log_lattice, new_curve
from .curve.lattice import DEFAULT_PREC
from .curve.scan import DEFAULT_BUDGET
from .errors import InputError, SelChabError
from .etale import build_etale
from .presets import PRESET_SELMER, data_path, load_data, preset, preset_U
from .verifier import SelmerInput, VerifyOptions, verify_curve
from .verifier.report import EXIT_CODES, matrix_strings

EXIT_INPUT = 3
MIN_PREC = 8
PREC_ENV = "SELCHAB_PRECISION"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    curve: CurveSpec | None = None
    preset_name: str | None = None
    selmer_path: str | None = None
    u_override: list | None = None
    prec: int = DEFAULT_PREC
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    extra: dict = field(default_factory=dict)


# -- input handling -------------------------------------------------------------


def parse_h(text: str) -> list:
    """An expression in x, or a comma separated coefficient list, lowest degree first."""
    if re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)+\s*", text):
        return [int(x) for x in text.split(",")]
    return polyz.parse_poly(text, "x")


def default_precision() -> int:
    env = os.environ.get(PREC_ENV)
    if env is None:
        return DEFAULT_PREC
    try:
        return int(env)
    except ValueError:
        raise InputError(f"{PREC_ENV}={env!r} is not an integer") from None


def load_u(path) -> list:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read U file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"U file {path} is not valid JSON: {exc}") from None
    rows = data["U"] if isinstance(data, dict) and "U" in data else data
    if not isinstance(rows, list):
        raise InputError(f"U file {path} must hold a matrix or an object with key 'U'")
    return rows


def build_config(args) -> RunConfig:
    prec = args.prec if getattr(args, "prec", None) is not None else default_precision()
    if prec < MIN_PREC:
        raise InputError(f"precision must be at least {MIN_PREC} bits, got {prec}")
    cfg = RunConfig(args.command, prec=prec, fmt=getattr(args, "format", "text"),
                    budget=getattr(args, "budget", DEFAULT_BUDGET),
                    jobs=getattr(args, "jobs", 1) or 1)
    if hasattr(args, "preset"):
        if args.preset and (args.g is not None or args.h is not None):
            raise InputError("give either --preset or -g/--h, not both")
        if args.preset:
            cfg.curve = preset(args.preset)
            cfg.preset_name = cfg.curve.name
        elif args.g is not None and args.h is not None:
            cfg.curve = new_curve(args.g, parse_h(args.h))
        elif args.command != "survey":
            raise InputError("a curve is required: --preset NAME or -g G --h POLY")
    if getattr(args, "u_override", None):
        cfg.u_override = load_u(args.u_override)
    elif cfg.preset_name:
        cfg.u_override = preset_U(cfg.preset_name)
    cfg.selmer_path = getattr(args, "selmer", None)
    return cfg


def emit(obj: dict, text: str, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps(obj, indent=2), file=out)
    else:
        print(text, file=out)


def _frac_rows(rows) -> list:
    return [[str(Fraction(x)) for x in r] for r in rows]


# -- subcommands ----------------------------------------------------------------


def cmd_verify_curve(cfg: RunConfig) -> int:
    path = cfg.selmer_path
    if path is None and cfg.preset_name in PRESET_SELMER:
        path = data_path(PRESET_SELMER[cfg.preset_name])
    if path is None:
        raise InputError("no Selmer input: pass --selmer FILE")
    s = SelmerInput.load(path)
    rep = verify_curve(cfg.curve, s, VerifyOptions(prec=cfg.prec, budget=cfg.budget,
                                                   u_override=cfg.u_override))
    emit(rep.to_dict(), rep.summary(), cfg.fmt)
    return rep.exit_code


def cmd_log_image(cfg: RunConfig) -> int:
    lat = log_lattice(cfg.curve, cfg.prec, u_override=cfg.u_override)
    H = _frac_rows(lat.image_hermite())
    obj = {
        "curve": cfg.curve.to_dict(),
        "prec": lat.prec,
        "attempts": lat.attempts,
        "u_source": lat.u_source,
        "L": matrix_strings(lat.L),
        "U": _frac_rows(lat.U.to_fractions()),
        "image_basis": H,
        "LU_mod2": lat.LU_mod2(),
        "certificate": lat.certificate,
    }
    lines = [f"curve: {cfg.curve.describe()}", f"precision: {lat.prec} (attempts {lat.attempts})",
             "L (one row per generator):"]
    lines += ["  " + "  ".join(r) for r in obj["L"]]
    lines.append(f"U ({lat.u_source}):")
    lines += ["  " + "  ".join(r) for r in obj["U"]]
    lines.append("image of log (Hermite basis over Z_2):")
    lines += ["  " + "  ".join(r) for r in H]
    lines.append(f"certificate: integral={lat.certificate['integral']} "
                 f"rank_mod2={lat.certificate['rank_mod2']} generates={lat.certificate['generates']}")
    emit(obj, "\n".join(lines), cfg.fmt)
    return 0


def cmd_disk_scan(cfg: RunConfig) -> int:
    lat = log_lattice(cfg.curve, cfg.prec, u_override=cfg.u_override)
    centers = ["P0", "Infinity"] if cfg.extra["center"] == "both" else [cfg.extra["center"]]
    results = [disk_scan(cfg.curve, lat, c, budget=cfg.budget) for c in centers]
    obj = {"curve": cfg.curve.to_dict(), "prec": lat.prec, "u_source": lat.u_source,
           "scans": [r.to_dict() for r in results]}
    lines = [f"curve: {cfg.curve.describe()}"]
    for r in results:
        lines.append(f"Z({r.center}) = {[tuple(v) for v in r.sorted_classes()]}"
                     f"  (threshold k0 = {r.threshold}, {r.classes_examined} classes examined)")
    emit(obj, "\n".join(lines), cfg.fmt)
    return 0


def cmd_dynamics(cfg: RunConfig) -> int:
    from .dynamics import (
        discriminant_check,
        irreducibility_chain,
        iter_poly,
        reduce_square_question,
        rigid_divisibility_check,
        three_adic_square_certificate,
        cofactor,
    )

    x = cfg.extra
    obj, lines = {}, []
    if x.get("chain") is not None:
        ch = irreducibility_chain(x["chain"])
        obj["chain"] = ch
        lines.append(f"f_c^2 irreducible => f_c^{ch['n']} irreducible: {ch['status']}")
        for link in ch["links"]:
            lines.append(f"  A_{link['n']}: {link['status']} ({link['route']}; facts {link['facts']})")
    if x.get("reduce") is not None:
        plan = reduce_square_question(x["reduce"])
        obj["reduce"] = plan.to_dict()
        lines.append(f"A_{plan.n}(c) square implies: {', '.join(plan.targets)}")
        for c in plan.cases:
            lines.append(f"  {c.target}: {c.rationale}")
        lines.append(f"  conclusion: {plan.conclusion}")
    if x.get("poly") is not None:
        kind, n = x["poly"]
        p = iter_poly(kind, int(n))
        entry = {"kind": kind, "n": p.n, "degree": p.degree, "coefficients": [str(c) for c in p.poly]}
        if x.get("eval") is not None:
            entry["value"] = str(p(x["eval"]))
            lines.append(str(p(x["eval"])))
        else:
            lines.append(p.to_string())
        obj["poly"] = entry
    if x.get("resultant") is not None:
        m, n = x["resultant"]
        r = rigid_divisibility_check(m, n)
        obj["resultant"] = {"m": m, "n": n, "value": r}
        lines.append(f"Res(B_{m}, B_{n}) = {r}")
    if x.get("disc") is not None:
        d = discriminant_check(x["disc"])
        obj["disc"] = {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                       for k, v in d.items() if k != "factors"}
        obj["disc"]["factors"] = [str(f) for f in d["factors"]]
        lines.append(f"disc(a_{d['n']}) = {d['discriminant']}")
        lines.append(f"  |disc| = product of listed factors: {d['product_matches']}; all prime: "
                     f"{d['all_prime']}; squarefree: {d['squarefree']}")
    if x.get("three_adic") is not None:
        n, m = x["three_adic"]
        cert = three_adic_square_certificate(cofactor(n, m))
        obj["three_adic"] = dict(cert.to_dict(), n=n, m=m)
        lines.append(f"A_{n}/A_{m} is a nonzero 3-adic square everywhere: {cert.holds} "
                     f"(residues {list(cert.residues)})")
    if not obj:
        raise InputError("dynamics needs one of --chain, --reduce, --poly, --resultant, --disc, --three-adic")
    emit(obj, "\n".join(lines), cfg.fmt)
    return 0


# -- survey ---------------------------------------------------------------------


def survey_row(curve: CurveSpec, selmer_path, prec: int, budget: int) -> dict:
    row = {"name": curve.name, "g": curve.g, "h": polyz.to_string(list(curve.h)),
           "m": None, "dim_H2": None, "delta2_dim": None, "Z_P0": None, "Z_inf": None,
           "selmer_dim": "requires external data", "verdict": None, "error": None}
    try:
        e = build_etale(curve.f)
        row.update(m=e.m, dim_H2=e.dim_H2, delta2_dim=len(e.delta2_basis))
        lat = log_lattice(curve, prec)
        row["Z_P0"] = len(disk_scan(curve, lat, "P0", budget=budget).classes)
        row["Z_inf"] = len(disk_scan(curve, lat, "Infinity", budget=budget).classes)
        if selmer_path is not None:
            s = SelmerInput.load(selmer_path)
            rep = verify_curve(curve, s, VerifyOptions(prec=prec, budget=budget))
            row["selmer_dim"] = s.declared_dimension if s.declared_dimension is not None \
                else len(s.generators)
            row["verdict"] = {"Success": "+", "Failure": "-"}.get(rep.status, "?")
            if rep.status == "Inconclusive":
                row["error"] = rep.verdict["reason"]
    except SelChabError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def survey_curves(args) -> list[tuple[CurveSpec, object]]:
    out = []
    if args.family:
        lo, hi = args.family
        for g in range(lo, hi + 1):
            c = preset(f"C{g}")
            sel = PRESET_SELMER.get(c.name)
            out.append((c, data_path(sel) if sel else None))
    if args.box:
        g, bound = args.box
        for coeffs in product(range(-bound, bound + 1), repeat=g + 1):
            h = list(coeffs)
            if h[-1] <= 0 or h[0] % 2 == 0 or sum(h) % 2:
                continue
            out.append((new_curve(g, h), None))
    if args.curves:
        for line in Path(args.curves).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(";")
            g = int(parts[0])
            h = parse_h(parts[1].strip())
            sel = parts[2].strip() if len(parts) > 2 and parts[2].strip() else None
            out.append((new_curve(g, h), sel))
    if not out:
        raise InputError("survey needs --family, --box or --curves")
    if args.limit:
        out = out[: args.limit]
    return out


def cmd_survey(cfg: RunConfig) -> int:
    curves = cfg.extra["curves"]
    jobs = [(c, s, cfg.prec, cfg.budget) for c, s in curves]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            rows = list(ex.map(survey_row, *zip(*jobs)))
    else:
        rows = [survey_row(*j) for j in jobs]
    cols = ["name", "g", "h", "m", "dim_H2", "delta2_dim", "Z_P0", "Z_inf", "selmer_dim", "verdict"]
    lines = ["\t".join(cols + ["error"])]
    for r in rows:
        lines.append("\t".join("" if r[k] is None else str(r[k]) for k in cols)
                     + ("\t" + r["error"] if r["error"] else ""))
    emit({"rows": rows}, "\n".join(lines), cfg.fmt)
    return 0


# -- argument parsing -----------------------------------------------------------


def _add_curve_args(p):
    p.add_argument("--preset", help="named curve: a3, a5, a7 or C<g>")
    p.add_argument("-g", type=int, help="genus")
    p.add_argument("--h", help="h(x) as an expression in x or comma separated coefficients")


def _add_common(p, budget=False):
    p.add_argument("--prec", type=int, help=f"target precision in bits (default ${PREC_ENV} or {DEFAULT_PREC})")
    p.add_argument("--format", choices=["text", "json"], default="text")
    if budget:
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="disk scan class budget")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="selchab", description="Selmer group Chabauty for y^2 = x^(2g+1) + h(x)^2")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify-curve", help="run the full verification")
    _add_curve_args(p)
    _add_common(p, budget=True)
    p.add_argument("--selmer", help="Selmer input file (JSON)")
    p.add_argument("--u-override", help="JSON file with the matrix U")

    p = sub.add_parser("log-image", help="logarithm lattice L, U and the image of log")
    _add_curve_args(p)
    _add_common(p)
    p.add_argument("--u-override", help="JSON file with the matrix U")

    p = sub.add_parser("disk-scan", help="rho values on a residue disk")
    _add_curve_args(p)
    _add_common(p, budget=True)
    p.add_argument("--center", choices=["P0", "inf", "both"], default="both")
    p.add_argument("--u-override", help="JSON file with the matrix U")

    p = sub.add_parser("dynamics", help="iterates of x^2 + c")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--chain", type=int, metavar="N", help="status of f_c^2 irreducible => f_c^N irreducible")
    p.add_argument("--reduce", type=int, metavar="N", help="reduction plan for A_N(c) square")
    p.add_argument("--poly", nargs=2, metavar=("KIND", "N"), help="print A_N, a_N or B_N")
    p.add_argument("--eval", type=int, metavar="X", help="evaluate --poly at X")
    p.add_argument("--resultant", nargs=2, type=int, metavar=("M", "N"), help="Res(B_M, B_N)")
    p.add_argument("--disc", type=int, metavar="N", help="check disc(a_N) against the shipped factors")
    p.add_argument("--three-adic", nargs=2, type=int, metavar=("N", "M"),
                   help="3-adic square certificate for A_N / A_M")

    p = sub.add_parser("survey", help="local invariants for a batch of curves")
    _add_common(p, budget=True)
    p.add_argument("--family", nargs=2, type=int, metavar=("GMIN", "GMAX"),
                   help="the curves C_g for GMIN <= g <= GMAX")
    p.add_argument("--box", nargs=2, type=int, metavar=("G", "B"),
                   help="all h of degree <= G with |coefficients| <= B, h(0) odd, h(1) even, lc > 0")
    p.add_argument("--curves", help="file with lines 'g; h; [selmer file]'")
    p.add_argument("--limit", type=int, help="stop after this many curves")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    return parser


COMMANDS = {
    "verify-curve": cmd_verify_curve,
    "log-image": cmd_log_image,
    "disk-scan": cmd_disk_scan,
    "dynamics": cmd_dynamics,
    "survey": cmd_survey,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        if args.command == "disk-scan":
            cfg.extra["center"] = {"inf": "Infinity"}.get(args.center, args.center)
        elif args.command == "dynamics":
            cfg.extra = {"chain": args.chain, "reduce": args.reduce, "poly": args.poly,
                         "eval": args.eval, "resultant": args.resultant, "disc": args.disc,
                         "three_adic": args.three_adic}
            if args.poly and args.poly[0] not in ("A", "a", "B"):
                raise InputError(f"--poly KIND must be A, a or B, got {args.poly[0]!r}")
            if args.poly and not args.poly[1].isdigit():
                raise InputError(f"--poly N must be a positive integer, got {args.poly[1]!r}")
        elif args.command == "survey":
            cfg.extra["curves"] = survey_curves(args)
        return COMMANDS[args.command](cfg)
    except ValueError as exc:
        # InputError and the validation errors (EvenH0, IndexOutOfRange, ...) are ValueErrors
        print(f"input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SelChabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CODES["Inconclusive"]


if __name__ == "__main__":
    sys.exit(main())
