import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from selchab import f2, polyz
from selchab.curve import new_curve
from selchab.errors import NotAUnit, NotSquarefreeMod2
from selchab.etale import (
    AlgebraElement,
    build_etale,
    delta2_coordinates,
    gf2x,
    is_square_unit,
    square_class_coords,
    theta_bar_inverse,
    trace_vector,
)

from conftest import admissible_curves


def newton_power_sums_mod2(f, count):
    """Power sums of the roots of x^N f(1/x) over F_2, via Newton's identities."""
    N = len(f) - 1
    r = [c % 2 for c in reversed(f)]  # r[i] = coefficient of x^i in the reversal
    c = [r[i] for i in range(N + 1)]  # monic since f(0) is odd
    p = [0] * (count + 1)
    for k in range(1, count + 1):
        acc = (k * c[N - k]) % 2 if k <= N else 0
        for i in range(1, k):
            if N - i >= 0 and i <= N:
                acc ^= (c[N - i] * p[k - i]) % 2
        p[k] = acc % 2
    return p


def unit_element(e, coeffs):
    return e.element(coeffs)


def mod8_squares(f):
    """All unit squares in (Z/8)[x]/(f), by enumeration."""
    N = len(f) - 1
    out = set()
    for coeffs in itertools.product(range(8), repeat=N):
        w = AlgebraElement(list(coeffs), f, 3)
        if w.is_unit():
            out.add(tuple((w * w).coeffs))
    return out


def test_a5_local_structure(a5_etale):
    e = a5_etale
    assert e.factor_degrees == (5, 5, 5)
    assert e.I_set == (3, 5)
    assert e.dim_H2 == 18
    assert len(e.delta2_basis) == 9
    assert e.exponent == 31


def test_a5_unit_disk_class(a5_etale):
    u = a5_etale.element([-3, -1])
    assert not is_square_unit(a5_etale, u)


@pytest.mark.parametrize("h", [[1], [1, 1], [3], [1, 2], [1, 0, 1], [1, 1, 1]])
def test_square_classes_against_enumeration(h):
    g = max(1, len(h) - 1)
    c = new_curve(g, h)
    if c.N > 5:
        pytest.skip("enumeration too large")
    e = build_etale(c.f)
    squares = mod8_squares(list(c.f))
    N = c.N
    for coeffs in itertools.islice(itertools.product(range(8), repeat=N), 0, None, 7):
        u = e.element(list(coeffs))
        if not u.is_unit():
            continue
        assert is_square_unit(e, u) == (tuple(u.coeffs) in squares)


def test_h2_basis_coordinates_are_standard(a5_etale):
    e = a5_etale
    for i, (_, u) in enumerate(e.h2_basis()):
        bits = square_class_coords(e, u).bits
        assert bits == tuple(int(j == i) for j in range(e.dim_H2))


def test_non_unit_and_bad_input():
    e = build_etale(new_curve(1, [1]).f)
    with pytest.raises(NotAUnit):
        square_class_coords(e, e.element([0, 1, 1]) * 0 + 2)
    with pytest.raises(NotSquarefreeMod2):
        build_etale([1, 1, 1, 1])  # (x + 1)^3 modulo 2


# -- property suites over random admissible curves -----------------------------------


@settings(max_examples=100)
@given(admissible_curves())
def test_trace_identity(c):
    e = build_etale(c.f)
    tinv = theta_bar_inverse(c.f)
    sums = newton_power_sums_mod2(list(c.f), 2 * c.g)
    for d in range(1, 2 * c.g + 1):
        tv = trace_vector(e, gf2x.powmod(tinv, d, e.fbar))
        assert sum(tv) % 2 == 0
        assert sums[d] == 0


@settings(max_examples=100)
@given(admissible_curves())
def test_dim_H2_and_delta2_basis(c):
    e = build_etale(c.f)
    assert sum(e.factor_degrees) == c.N
    assert e.dim_H2 == c.N + e.m == len(e.h2_basis())
    assert len(e.delta2_basis) == c.g + e.m - 1
    assert f2.is_independent([v.bits for v in e.delta2_vectors()])
    for v in e.delta2_vectors():
        assert delta2_coordinates(e, v) is not None


def random_unit(e, coeffs):
    u = e.element(coeffs)
    return u if u.is_unit() else None


@settings(max_examples=100)
@given(admissible_curves(), st.data())
def test_square_class_homomorphism(c, data):
    e = build_etale(c.f)
    draw = lambda: data.draw(st.lists(st.integers(0, 7), min_size=c.N, max_size=c.N))
    u, v, w = (random_unit(e, draw()) for _ in range(3))
    assume(u is not None and v is not None and w is not None)
    cu, cv = square_class_coords(e, u), square_class_coords(e, v)
    assert square_class_coords(e, u * v) == cu + cv
    assert square_class_coords(e, u * w * w) == cu
    assert is_square_unit(e, w * w)
