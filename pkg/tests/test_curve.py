from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selchab import polyz
from selchab.curve import (
    brute_force_rho,
    disk_scan,
    infinity_expansion,
    log_lattice,
    new_curve,
    p0_expansion,
    reparametrize_at_infinity,
    rho,
    structural_checks,
)
from selchab.curve.expansions import s_series
from selchab.curve.lattice import lattice_rows
from selchab.errors import (
    DegreeTooLarge,
    EvenH0,
    IndistinguishableFromZero,
    InputError,
    InsufficientPrecision,
    ScanBudgetExceeded,
)
from selchab.padic import PadicNumber, PadicSeries, v2

from conftest import admissible_curves


def exact_inverse_sqrt(f, h0, K):
    """Coefficients of 1/sqrt(f) with constant term 1/h0, as exact rationals."""
    f = [Fraction(x) for x in f] + [Fraction(0)] * K
    y = [Fraction(h0)]
    for m in range(1, K):
        acc = f[m] - sum(y[i] * y[m - i] for i in range(1, m))
        y.append(acc / (2 * y[0]))
    w = [1 / y[0]]
    for m in range(1, K):
        w.append(-sum(y[i] * w[m - i] for i in range(1, m + 1)) / y[0])
    return w


def agrees(x: PadicNumber, q: Fraction) -> bool:
    d = q - x.to_fraction()
    return d == 0 or v2(d.numerator) - v2(d.denominator) >= x.absprec


def test_new_curve_validation():
    with pytest.raises(DegreeTooLarge):
        new_curve(1, [1, 1, 1])
    with pytest.raises(EvenH0):
        new_curve(2, [2, 1])
    c = new_curve(2, "x + 1")
    assert c.f == (1, 2, 1, 0, 0, 1)
    assert c.unit_disk_supported
    assert structural_checks(c)["odd_points"] if "odd_points" in structural_checks(c) else True


@settings(max_examples=30)
@given(admissible_curves(g_max=3, bound=5))
def test_p0_coefficients_match_exact_series(c):
    K = 40
    exp = p0_expansion(c, K, 30)
    exact = exact_inverse_sqrt(c.f, c.h0, K)
    for m in range(K):
        assert exp.w[m].absprec >= 30
        assert agrees(exp.w[m], exact[m])


@settings(max_examples=30)
@given(admissible_curves(g_max=4, bound=5))
def test_expansion_laws_hold(c):
    p0 = p0_expansion(c, 120, 24).check_laws()
    inf = infinity_expansion(c, 60).check_laws()
    assert all(p0.values()) and all(inf.values())


@settings(max_examples=30)
@given(admissible_curves(g_max=4, bound=5))
def test_infinity_series_solves_its_equation(c):
    n = 25
    s = s_series(c, n)
    # H(s) = s^(g+1) h(1/s) = sum_i h_i s^(g+1-i)
    H = [0]
    for i, hi in enumerate(list(c.h) + [0] * (c.g + 1 - len(c.h))):
        H = polyz.add(H, polyz.scale(polyz.power(s, c.g + 1 - i), hi))
    lhs = polyz.add(s, polyz.mul(H, H))
    assert (lhs + [0] * n)[:n] == [0, 1] + [0] * (n - 2)
    exp = infinity_expansion(c, n)
    ds = polyz.derivative(s)
    for j in range(c.g):
        want = polyz.scale(polyz.mul(polyz.power(s, c.g - 1 - j), ds), -2)
        assert (want + [0] * n)[: n - 1] == (exp.omega[j] + [0] * n)[: n - 1]


def test_g1_h1_lattice():
    lat = log_lattice(new_curve(1, [1]), 24)
    assert lat.L.shape == (2, 1)
    assert lat.L[0, 0].is_zero()
    assert lat.L[1, 0].valuation == 2
    assert lat.U.to_fractions() == [[Fraction(1, 4)]]
    assert lat.image_hermite() == [[Fraction(4)]]


def test_lattice_rows():
    assert lattice_rows(3) == [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (5, 2)]


@settings(max_examples=100)
@given(admissible_curves())
def test_lattice_invariant_under_precision_doubling(c):
    a = log_lattice(c, 8)
    b = log_lattice(c, 16)
    assert a.certificate["generates"] and b.certificate["generates"]
    assert a.image_hermite() == b.image_hermite()


def test_u_override_rejected_when_not_normalizing():
    c = new_curve(1, [1])
    with pytest.raises(InputError):
        log_lattice(c, 24, u_override=[[Fraction(1, 2)]])
    lat = log_lattice(c, 24, u_override=[[Fraction(3, 4)]])
    assert lat.u_source == "override"
    assert lat.certificate["override"]["same_lattice_as_computed"]


# -- rho and disk scans ---------------------------------------------------------------

vectors = st.lists(st.fractions(max_denominator=64), min_size=1, max_size=6).filter(
    lambda v: any(v))


@given(vectors)
def test_rho_negation_symmetry(v):
    assert rho(v) == rho([-x for x in v])


@given(vectors, st.integers(-5, 5), st.integers(0, 50).map(lambda k: 2 * k + 1))
def test_rho_scaling(v, k, u):
    assert rho(v) == rho([x * u * Fraction(2) ** k for x in v])


def test_rho_of_zero():
    with pytest.raises(IndistinguishableFromZero):
        rho([0, 0])


# Curves with a torsion point in a scanned disk make rho undefined there, so the
# brute-force comparison uses curves whose scans close.
@pytest.mark.parametrize("g,h", [(1, [1, -3]), (1, [1, 1]), (1, [-3, 5]), (2, [1, 1]),
                                 (2, [1, 0, 1]), (2, [-1, 2, 3])])
@pytest.mark.parametrize("center", ["P0", "Infinity"])
def test_disk_scan_matches_brute_force(g, h, center):
    c = new_curve(g, h)
    lat = log_lattice(c, 24)
    series = lat.scan_series(center)
    got = disk_scan(c, lat, center, series=series).classes
    assert got == brute_force_rho(series, bits=10)


def test_disk_scan_refuses_torsion_in_disk():
    # (2, 3) is a torsion point of y^2 = x^3 + 1 in the P0 disk: log' vanishes at t = 2
    c = new_curve(1, [1])
    lat = log_lattice(c, 24)
    with pytest.raises(InsufficientPrecision):
        disk_scan(c, lat, "P0")


def test_disk_scan_budget():
    c = new_curve(2, [1, 1])
    lat = log_lattice(c, 24)
    with pytest.raises(ScanBudgetExceeded):
        disk_scan(c, lat, "P0", budget=1)


def test_reparametrized_infinity_series(a5_lattice, a5):
    ser = a5_lattice.scan_series("Infinity", 24)
    comp = PadicSeries([ser.coeffs[n][6] for n in range(len(ser))])
    rep = reparametrize_at_infinity(a5, comp)
    scaled = [x.to_fraction() * 2 ** n if not x.is_exact_zero else 0 for n, x in enumerate(rep.coeffs)]
    # -t + 2 t^2 modulo 4 after t -> 2t and dividing by the common power of 2
    assert [x % 4 for x in scaled[:3]] == [0, 3, 2]
    for col in range(6):
        other = PadicSeries([ser.coeffs[n][col] for n in range(len(ser))])
        r = reparametrize_at_infinity(a5, other)
        assert all((x.to_fraction() * 2 ** n) % 4 == 0 for n, x in enumerate(r.coeffs[:8])
                   if not x.is_exact_zero)
