import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from selchab import polyz
from selchab.errors import InputError

small_polys = st.lists(st.integers(-20, 20), min_size=1, max_size=8).map(polyz.trim)
big_polys = st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=8).map(polyz.trim)


def sylvester_resultant(a, b):
    """Determinant of the Sylvester matrix; an independent oracle."""
    m, n = len(a) - 1, len(b) - 1
    A, B = list(reversed(a)), list(reversed(b))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + A + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + B + [0] * (size - n - 1 - i))
    return int(sympy.Matrix(rows).det())


@given(big_polys, big_polys)
def test_kronecker_product_matches_schoolbook(a, b):
    assert polyz.mul_kronecker(a, b) == polyz.mul(a, b)


@given(small_polys, small_polys)
def test_divmod_exact_roundtrip(a, b):
    if not b or abs(polyz.lc(b)) != 1:
        b = polyz.add(b, polyz.monomial(len(b)))
    q, r = polyz.divmod_exact(a, b)
    assert polyz.add(polyz.mul(q, b), r) == polyz.trim(a)
    assert polyz.deg(r) < polyz.deg(b)


@given(small_polys.filter(lambda p: polyz.deg(p) >= 1),
       small_polys.filter(lambda p: polyz.deg(p) >= 1))
def test_resultant_matches_sylvester_determinant(a, b):
    assert polyz.resultant(a, b) == sylvester_resultant(a, b)


def test_resultant_known_case():
    a, b = [1, 1, 5, -3], [3, 5, 0, -4, 2, 5]
    assert polyz.resultant(a, b) == sylvester_resultant(a, b) == -319577


def test_resultant_linear():
    assert polyz.resultant([0, 1], [1, 1]) == 1


@given(small_polys.filter(lambda p: polyz.deg(p) >= 2))
def test_discriminant_matches_sympy(f):
    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(f))
    assert polyz.discriminant(f) == int(sympy.discriminant(expr, x))


def test_parse_and_print():
    assert polyz.parse_poly("x^3 - 2*x + 1") == [1, -2, 0, 1]
    assert polyz.parse_poly("(x+1)**2") == [1, 2, 1]
    assert polyz.parse_poly("theta^2 + 1", var="theta") == [1, 0, 1]
    assert polyz.to_string([1, -2, 0, 1]) == "x^3 - 2*x + 1"
    assert polyz.parse_poly(polyz.to_string([5, 0, -3, 7])) == [5, 0, -3, 7]


@pytest.mark.parametrize("bad", ["2x", "x^y", "x/2", "import os", "x + ", "1.5*x", "y + 1"])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        polyz.parse_poly(bad)


def test_reverse_and_compose():
    assert polyz.reverse([0, 1, 2], 2) == [2, 1]
    assert polyz.compose([0, 0, 1], [1, 1]) == [1, 2, 1]
