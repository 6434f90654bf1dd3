"""Walk through the verification of y^2 = a_5(x), step by step."""

from fractions import Fraction

from selchab.curve import disk_scan, log_lattice
from selchab.etale import build_etale, is_square_unit
from selchab.presets import data_path, preset, preset_U
from selchab.verifier import SelmerInput, VerifyOptions, verify_curve

c = preset("a5")
print("curve:", c.describe(), " genus", c.g)

e = build_etale(c.f)
print("f mod 2 factor degrees:", e.factor_degrees)
print("dim H_2 =", e.dim_H2, " I =", e.I_set, " delta_2 basis size =", len(e.delta2_basis))
print("-3 - theta is a square:", is_square_unit(e, e.element([-3, -1])))

U = [[Fraction(x) for x in row] for row in preset_U("a5")]
lat = log_lattice(c, 24, u_override=U)
print("lattice certificate:", lat.certificate)
for center in ("P0", "Infinity"):
    z = disk_scan(c, lat, center)
    print(f"Z({center}) =", z.sorted_classes(), " threshold", z.threshold)

rep = verify_curve(c, SelmerInput.load(data_path("a5_selmer.json")), VerifyOptions(u_override=U))
print()
print(rep.summary())
