from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from catalytic.gentree import (
    LabelError, LabelHistogram, assemble_F, assemble_G, count_involutions, count_perms,
    count_restricted, inv_children, involution_counts, perm_children,
    perm_counts, perm_levels, restricted_root, verify_inv_equation, verify_perm_equation,
)
from catalytic.laurent import LaurentPoly
from catalytic.oracle import iter_involutions, iter_words
from catalytic.permcore import fixed_point_count, inv_labels, lds_length, perm_labels

from known_values import AVOID_1234, CATALAN, MOTZKIN


def test_perm_children_examples():
    assert perm_children((1,)) == [(2,)]
    assert sorted(perm_children((2,))) == [(2,), (3,)]
    # a node with label ending a_m has a_m children
    assert len(perm_children((2, 4))) == 4
    with pytest.raises(LabelError):
        perm_children((3, 2))


def test_inv_children_examples():
    assert inv_children((1,), 2) == ((1,), [(2,)])
    assert inv_children((1,), 3) == ((2,), [(2,)])
    with pytest.raises(LabelError):
        inv_children((1, 1), 3)


def test_perm_counts():
    assert perm_counts(2, 10) == CATALAN
    assert perm_counts(3, 8) == AVOID_1234
    assert perm_counts(1, 6) == [1] * 7


def test_involution_counts():
    assert involution_counts(3, 10) == MOTZKIN
    assert involution_counts(2, 6) == [1, 1, 2, 3, 6, 10, 20]
    split = count_involutions(2, 4, by_fixed_points=True)
    assert {r.fixed_points: r.count for r in split} == {0: 2, 2: 3, 4: 1}


def test_restricted():
    assert restricted_root(3).counts == {(2, 3): 1}
    assert [count_restricted(3, n) for n in range(3, 9)] == [1, 3, 11, 47, 225, 1173]
    assert count_restricted(2, 4) == 5
    with pytest.raises(ValueError):
        count_restricted(3, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_levels_match_oracle_labels(m):
    # the tree histogram at level n is the label histogram of the avoiders of length n
    for h in perm_levels(m, 7):
        brute = Counter(perm_labels(w, m) for w in iter_words(h.level, m))
        assert h.counts == dict(brute)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_inv_levels_match_oracle_labels(m):
    from catalytic.gentree import inv_levels
    levels = inv_levels(m, 8, track_fixed_points=True)
    for n, h in enumerate(levels):
        brute = Counter((inv_labels(w, m), fixed_point_count(w))
                        for w in iter_involutions(n) if lds_length(w) <= m)
        assert h.counts == dict(brute)


def test_F_and_G_low_coefficients():
    F = assemble_F(2, 3)
    assert F[0] == 1
    assert F[1] == LaurentPoly(2, {(1, 0): 1})
    assert F.specialize_all_ones() == [1, 1, 2, 5]
    G_even = assemble_G(2, 1, with_s=True)
    assert G_even[1] == LaurentPoly(2, {(1, 1): 1})
    G_odd = assemble_G(3, 1, with_s=True)
    assert G_odd[1] == LaurentPoly(2, {(2, 1): 1})


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_perm_equation(m):
    assert verify_perm_equation(m, 7)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("with_s", [False, True])
def test_inv_equation(m, with_s):
    assert verify_inv_equation(m, 8, with_s)


def test_equation_detects_wrong_series():
    F = assemble_F(3, 5)
    F.coeffs[4] = F.coeffs[4] + LaurentPoly.var(3, 2)
    assert not verify_perm_equation(3, 5, F)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(0, 7))
def test_level_totals_are_consistent(m, n):
    *_, h = perm_levels(m, n)
    assert h.total() == count_perms(m, n)
    assert isinstance(h, LabelHistogram) and h.level == n


def test_mutated_rule_changes_counts():
    def bad_grow(h, m):
        # forget the last child of every node
        out = {}
        for label, c in h.counts.items():
            for kid in perm_children(label)[:-1] or perm_children(label):
                out[kid] = out.get(kid, 0) + c
        return LabelHistogram(h.level + 1, out)
    counts = [h.total() for h in perm_levels(2, 5, grow=bad_grow)]
    assert counts != CATALAN[:6]
