"""Local invariants and verdicts for the family y^2 = x^(2g+1) + (x + 1)^2.

The verdict is "?" where no Selmer data ships with the package; the last
column is the tabulated sign for comparison.
"""

from selchab.curve import disk_scan, log_lattice
from selchab.etale import build_etale
from selchab.presets import PRESET_SELMER, data_path, load_data, preset
from selchab.verifier import SelmerInput, verify_curve

table = load_data("curves.json")["Cg"]
print("g  m  dim_H2  |Z(P0)|  |Z(inf)|  selmer_dim  verdict  tabulated")
for g in range(1, 7):
    c = preset(f"C{g}")
    e = build_etale(c.f)
    lat = log_lattice(c, 24)
    z0 = disk_scan(c, lat, "P0").classes
    zi = disk_scan(c, lat, "Infinity").classes
    verdict = "?"
    if c.name in PRESET_SELMER:
        rep = verify_curve(c, SelmerInput.load(data_path(PRESET_SELMER[c.name])))
        verdict = {"Success": "+", "Failure": "-"}.get(rep.status, "?")
    print(f"{g:<2} {e.m:<2} {e.dim_H2:<7} {len(z0):<8} {len(zi):<9} "
          f"{table['selmer_dimension'][g - 1]:<11} {verdict:<8} {table['success'][g - 1]}")
