from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from catalytic.laurent import (
    InexactDivision, LaurentPoly, catalan_ct, det_laurent, even_matrix, hyperoctahedral_sum,
    inv_count_ct, inv_count_fixed_ct, inv_count_fixed_ct_literal, inv_counts_ct,
    odd_matrix, signed_permutations,
)
from catalytic.oracle import brute_count_involutions

from known_values import CATALAN, MOTZKIN

exps2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
nonneg2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
plain2 = st.dictionaries(nonneg2, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(2, d))
polys2 = st.dictionaries(exps2, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(2, d))


def test_arithmetic_basics():
    x = LaurentPoly.var(2, 1)
    y = LaurentPoly.var(2, 2)
    p = (x + y) ** 2
    assert p.coefficient((1, 1)) == 2
    assert (x ** -2).coefficient((-2, 0)) == 1
    assert x * x ** -1 == 1
    assert (p - p) == 0
    with pytest.raises(ValueError):
        (x + y) ** -1


@given(polys2, polys2, polys2)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys2)
def test_evaluate_is_a_homomorphism(a):
    pt = (Fraction(2), Fraction(-3))
    assert (a * a).evaluate(pt) == a.evaluate(pt) ** 2


@given(plain2)
def test_divide_linear_inverts_multiplication(a):
    x, y = LaurentPoly.var(2, 1), LaurentPoly.var(2, 2)
    assert (a * (x - y)).divide_linear(1, 2) == a
    assert (a * (x - 1)).divide_linear(1, None) == a


def test_divide_linear_rejects_remainder():
    x = LaurentPoly.var(2, 1)
    with pytest.raises(InexactDivision):
        (x + 1).divide_linear(1, 2)


def test_signed_group_size_and_signs():
    group = list(signed_permutations(3))
    assert len(group) == 48
    assert sum(eps for *_, eps in group) == 0


def test_det_is_antisymmetric():
    # the numerator is B_2-antisymmetric, so its signed orbit sum is |B_2| = 8 times itself
    num = det_laurent(odd_matrix(2))
    assert hyperoctahedral_sum(num) == num * 8
    assert det_laurent([]) == 1
    assert det_laurent(even_matrix(1)) == LaurentPoly(1, {(0,): 1, (-1,): 1})


def test_catalan_ct():
    assert [catalan_ct(n) for n in range(11)] == CATALAN


def test_inv_counts_known_sequences():
    assert inv_counts_ct(2, 10) == [1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252]
    assert inv_counts_ct(3, 10) == MOTZKIN
    assert inv_count_ct(1, 5) == 1


def test_inv_counts_match_oracle():
    for m in range(2, 6):
        for n in range(9):
            assert inv_count_ct(m, n) == brute_count_involutions(m, n)[0].count


def test_fixed_point_routes():
    assert [inv_count_fixed_ct(2, 4, p) for p in range(5)] == [2, 0, 3, 0, 1]
    for m in (2, 4):
        for n in range(8):
            for p in range(n + 1):
                assert inv_count_fixed_ct(m, n, p) == inv_count_fixed_ct_literal(m, n, p)
    for m in (3, 5):
        split = brute_count_involutions(m, 7, by_fixed_points=True)
        assert {r.fixed_points: r.count for r in split} == {
            p: inv_count_fixed_ct(m, 7, p) for p in range(1, 8, 2)}
