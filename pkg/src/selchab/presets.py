"""Named curves and the data files shipped with them."""

from __future__ import annotations

import json
import re
from importlib import resources

from .curve import CurveSpec, new_curve
from .errors import InputError

DATA = "selchab.data"


def data_path(name: str):
    return resources.files(DATA).joinpath(name)


def load_data(name: str) -> dict:
    return json.loads(data_path(name).read_text())


def dynamics_curve(n: int) -> CurveSpec:
    """y^2 = a_n(x) = x^(2^(n-1) - 1) + a_(n-1)(x)^2 for odd n >= 3."""
    from .dynamics import iter_poly

    if n < 3 or n % 2 == 0:
        raise InputError("a_n presets exist for odd n >= 3")
    h = list(iter_poly("a", n - 1).poly)
    return new_curve((1 << (n - 2)) - 1, h, name=f"a{n}")


def family_curve(g: int) -> CurveSpec:
    """C_g: y^2 = x^(2g+1) + (x + 1)^2."""
    return new_curve(g, [1, 1], name=f"C{g}")


def preset(name: str) -> CurveSpec:
    """``a3``, ``a5``, ``a7`` or ``C<g>``."""
    m = re.fullmatch(r"a(\d+)", name)
    if m:
        return dynamics_curve(int(m.group(1)))
    m = re.fullmatch(r"[Cc](\d+)", name)
    if m and int(m.group(1)) >= 1:
        return family_curve(int(m.group(1)))
    raise InputError(f"unknown preset {name!r}; expected a3, a5, a7 or C<g>")


PRESET_SELMER = {
    "a5": "a5_selmer.json",
    "a7": "a7_selmer.json",
    "C2": "c2_witness_selmer.json",
}
PRESET_SELMER.update({f"C{g}": "cg_trivial_selmer.json" for g in (1, 3, 5, 11)})

PRESET_U = {"a5": "a5_U.json"}


def preset_U(name: str):
    file = PRESET_U.get(name)
    return None if file is None else load_data(file)["U"]
