import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selchab import polyz
from selchab.dynamics import (
    FactsDB,
    cofactor,
    discriminant_check,
    divisors,
    irreducibility_chain,
    iter_poly,
    link_status,
    mobius,
    reduce_square_question,
    rigid_divisibility_check,
    three_adic_square_certificate,
    value_table,
)
from selchab.dynamics.discriminants import is_probable_prime, published_factors
from selchab.errors import IndexOutOfRange, NotMonic, OddDegree

A5_DISPLAY = [1, 8, 28, 60, 94, 116, 114, 94, 69, 44, 26, 14, 5, 2, 1, 1]


def is_squarefree(n):
    return all(n % (p * p) for p in range(2, int(n ** 0.5) + 1))


def is_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


def test_a5_matches_display():
    assert list(iter_poly("a", 5).poly) == A5_DISPLAY


@pytest.mark.parametrize("n", range(1, 9))
def test_a_is_reversal_of_A(n):
    A = list(iter_poly("A", n).poly)
    A += [0] * (2 ** (n - 1) + 1 - len(A))
    assert list(iter_poly("a", n).poly) == polyz.trim(A[::-1])


@pytest.mark.parametrize("n", range(1, 9))
def test_A_is_product_of_B(n):
    prod = [1]
    for d in divisors(n):
        prod = polyz.mul(prod, list(iter_poly("B", d).poly))
    assert prod == list(iter_poly("A", n).poly)
    assert iter_poly("A", n).degree == 2 ** (n - 1)


@given(st.integers(-50, 50), st.integers(1, 7))
def test_A_is_orbit_of_zero(c, n):
    x = 0
    for _ in range(n):
        x = x * x + c
    assert iter_poly("A", n)(c) == x


def test_mobius_values():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_value_tables():
    for n in range(1, 9):
        A = iter_poly("A", n)
        assert A(0) == 0
        assert A(-1) == (-1 if n % 2 else 0)
        assert A(-2) == (-2 if n == 1 else 2)
        dA = polyz.derivative(list(A.poly))
        assert polyz.evaluate(dA, 0) == 1
        assert polyz.evaluate(dA, -1) == (-1) ** (n - 1)
    table = value_table("B", 10)
    for n, row in table.items():
        assert row[0] == (0 if n == 1 else 1)
        assert row[-1] == {1: -1, 2: 0}.get(n, 1)
        assert row[-2] == (-2 if n == 1 else (-1 if is_squarefree(n) else 1))


@pytest.mark.parametrize("n", range(2, 8))
def test_resultants_are_units(n):
    for m in range(1, n):
        assert rigid_divisibility_check(m, n) in (1, -1)


def test_resultant_index_errors():
    with pytest.raises(IndexOutOfRange):
        rigid_divisibility_check(3, 3)
    with pytest.raises(IndexOutOfRange):
        rigid_divisibility_check(1, 9)
    with pytest.raises(IndexOutOfRange):
        iter_poly("A", 13)
    with pytest.raises(IndexOutOfRange):
        iter_poly("B", 0)


def test_three_adic_certificate():
    B = polyz.mul(list(iter_poly("B", 3).poly), list(iter_poly("B", 6).poly))
    cert = three_adic_square_certificate(B)
    assert cert and cert.degree == iter_poly("B", 3).degree + iter_poly("B", 6).degree == 30
    fails = three_adic_square_certificate([1, 0, 1])
    assert not fails and fails.residues == (1, 2, 2)
    assert three_adic_square_certificate([1])
    with pytest.raises(OddDegree):
        three_adic_square_certificate([0, 1])
    with pytest.raises(NotMonic):
        three_adic_square_certificate([1, 0, 2])


@given(st.integers(-30, 30), st.integers(1, 30))
def test_three_adic_certificate_is_sound(p, q):
    # B(c) for c = p/q must have even 3-valuation and unit part 1 mod 3
    B = cofactor(6, 2)
    d = len(B) - 1
    num = sum(b * p ** i * q ** (d - i) for i, b in enumerate(B))
    assert num != 0
    v = 0
    while num % 3 == 0:
        num //= 3
        v += 1
    w = 0
    while q % 3 == 0:
        q //= 3
        w += 1
    assert (v - d * w) % 2 == 0 and num * pow(q, d, 3) % 3 == 1


def test_cofactor():
    assert polyz.mul(cofactor(12, 4), list(iter_poly("A", 4).poly)) == list(iter_poly("A", 12).poly)
    with pytest.raises(ValueError):
        cofactor(9, 2)


def test_reduce_square_question():
    assert reduce_square_question(8).targets == ["A_4"]
    assert reduce_square_question(8).conclusion == "c in {0, -1}"
    assert reduce_square_question(9).targets == ["A_3"]
    assert reduce_square_question(10).targets == ["±A_5", "A_2"]
    assert reduce_square_question(15).targets == ["A_3", "A_5"]
    assert reduce_square_question(6).targets == ["±A_3", "A_2"]


def test_reduction_cases_are_necessary():
    # if A_n(c) is a square for some small c, each case must hold at c
    for n in range(2, 9):
        for c in range(-30, 31):
            val = iter_poly("A", n)(c)
            if not is_square(val):
                continue
            plan = reduce_square_question(n)
            if plan.conclusion == "c in {0, -1}":
                assert c in (0, -1)
            for case in plan.cases:
                a = iter_poly("A", case.index)(c)
                assert any(is_square(s * a) for s in case.signs)


def test_chain_statuses():
    expected = {3: "Unconditional", 6: "Unconditional", 7: "GRH", 8: "GRH",
                9: "GRH", 10: "GRH", 11: "Unknown"}
    for n, status in expected.items():
        assert irreducibility_chain(n)["status"] == status


def test_link_routes():
    facts = FactsDB.load()
    assert link_status(8, facts)["route"] == "reduction via A_4"
    assert link_status(9, facts)["route"] == "reduction via A_3"
    ten = link_status(10, facts)
    assert ten["route"] == "reduction via ±A_5"
    assert sorted(ten["facts"]) == ["-A5", "A5"]


def test_chain_needs_both_signs():
    facts = FactsDB.load()
    facts.facts = [f for f in facts.facts if f["id"] != "-A5"]
    assert link_status(10, facts)["status"] == "Unknown"


def test_discriminants():
    r5 = discriminant_check(5)
    assert r5["discriminant"] == 13 * 24554691821639909
    assert r5["all_prime"] and r5["pairwise_distinct"] and r5["squarefree"]
    r7 = discriminant_check(7)
    assert r7["product_matches"] and r7["all_prime"] and r7["pairwise_distinct"]
    assert len(published_factors("a7")) == 7
    assert not is_probable_prime(2 ** 61 * 3 + 3)
