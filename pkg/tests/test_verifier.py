import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selchab.curve import new_curve
from selchab.errors import InputError, RankDrop
from selchab.etale import build_etale
from selchab.presets import data_path, preset
from selchab.verifier import (
    EXIT_CODES,
    SelmerInput,
    VerificationReport,
    VerifyOptions,
    selmer_to_H2,
    unit_disk_check,
    verify_curve,
)
from selchab.verifier.selmer import parse_matrix
from selchab.verifier.verify import centered_mod8, unit_x_points_excluded


def load_selmer(name):
    return SelmerInput.load(data_path(name))


def test_selmer_input_validation():
    with pytest.raises(InputError):
        SelmerInput("bogus")
    with pytest.raises(InputError):
        SelmerInput("trivial", generators=[[1]])
    with pytest.raises(InputError):
        SelmerInput.from_dict({"mode": "trivial", "extra": 1})
    with pytest.raises(InputError):
        SelmerInput.from_dict([1, 2])
    with pytest.raises(InputError):
        SelmerInput.load("/nonexistent/selmer.json")


def test_selmer_file_roundtrip(tmp_path):
    s = load_selmer("a5_selmer.json")
    p = tmp_path / "s.json"
    p.write_text(json.dumps(s.to_dict()))
    assert SelmerInput.load(p).to_dict() == s.to_dict()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        SelmerInput.load(bad)


def test_parse_matrix():
    assert parse_matrix([["1/2", 0], [0, "-1/4"]])[1][1] == -0.25
    for bad in ([[0.5]], [], [[1], [1, 2]], [["x"]], [["1/0"]]):
        with pytest.raises(InputError):
            parse_matrix(bad)


def test_delta2_coordinates_must_have_right_length():
    c = preset("C2")
    e = build_etale(c.f)
    n = e.g + e.m - 1
    with pytest.raises(InputError):
        selmer_to_H2(e, SelmerInput("delta2_coords", [[1] * (n + 1)]))
    classes = selmer_to_H2(e, SelmerInput("delta2_coords", [[1] + [0] * (n - 1)]))
    assert len(classes) == 1


def test_rank_drop_detected():
    c = preset("C2")
    e = build_etale(c.f)
    s = SelmerInput("unit_reps", ["12 - theta", "12 - theta"], declared_dimension=2)
    with pytest.raises(RankDrop):
        selmer_to_H2(e, s)


def test_trivial_selmer_short_circuits():
    rep = verify_curve(preset("C1"), load_selmer("cg_trivial_selmer.json"))
    assert rep.status == "Success" and rep.exit_code == 0
    assert rep.lattice is None and rep.Z_P0 is None
    assert rep.expansions["all_hold"]


def test_override_without_U_is_input_error():
    s = SelmerInput("f2g_override", [[1, 1]])
    with pytest.raises(InputError):
        verify_curve(preset("C2"), s)


def test_c2_witness_forces_failure():
    rep = verify_curve(preset("C2"), load_selmer("c2_witness_selmer.json"))
    assert rep.status == "Failure" and rep.exit_code == 1
    assert rep.verdict["witness"] == {"kind": "F2g", "vector": [1, 1]}
    assert rep.unit_disk["status"] == "taken_from_input_source"


def test_report_roundtrip():
    rep = verify_curve(preset("C2"), load_selmer("c2_witness_selmer.json"))
    back = VerificationReport.from_json(rep.to_json())
    assert back.to_dict() == rep.to_dict()
    assert "verdict: Failure" in back.summary()
    with pytest.raises(ValueError):
        VerificationReport.from_dict({"curve": {}})
    assert EXIT_CODES == {"Success": 0, "Failure": 1, "Inconclusive": 2}


def test_budget_exhaustion_is_inconclusive():
    rep = verify_curve(preset("C2"), load_selmer("c2_witness_selmer.json"), VerifyOptions(budget=1))
    assert rep.status == "Inconclusive" and rep.exit_code == 2
    assert "ScanBudgetExceeded" in rep.verdict["reason"]


def test_unit_disk_regime_for_a5(a5, a5_etale):
    ud = unit_disk_check(a5, a5_etale, [])
    assert ud["x0_mod8"] == -3 and ud["is_square"] is False
    assert ud["status"] == "checked" and ud["pass"]


def test_centered_mod8():
    assert [centered_mod8(x) for x in (5, 4, -3, 12, 0)] == [-3, 4, -3, 4, 0]


@settings(max_examples=200)
@given(st.lists(st.integers(-8, 8), min_size=2, max_size=6))
def test_unit_x_exclusion_is_sound(f):
    # a certificate of no unit-x points must agree with a search over small odd x
    if unit_x_points_excluded(f, 8):
        for x in range(-201, 202, 2):
            v = sum(a * x ** i for i, a in enumerate(f))
            assert not (v > 0 and math.isqrt(v) ** 2 == v)


def test_unit_x_exclusion_certificate():
    # x^3 + x + 4 has 2-valuation exactly 1 at every odd x
    assert unit_x_points_excluded([4, 1, 0, 1], 8)


def test_unit_x_exclusion_finds_point():
    # y^2 = x^3 + 3^2 has the point (-2, 1) but also (3, 6) with x odd
    assert not unit_x_points_excluded(new_curve(1, [3]).f, 10)
