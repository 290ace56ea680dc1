import pytest
from hypothesis import given, strategies as st

from catalytic.laurent import catalan_ct
from catalytic.oracle import brute_count_involutions, brute_count_tableaux
from catalytic.tableaux import (
    PartitionShape, ShapeError, count_tableaux_dp, fraction_det, macmahon,
    macmahon_determinant, partitions, sum_by_height,
)


def test_shape_parse():
    lam = PartitionShape.parse("4,3,3")
    assert lam.parts == (4, 3, 3) and lam.weight == 10 and lam.height == 3
    assert str(lam) == "4,3,3"
    assert PartitionShape.parse("").parts == ()
    with pytest.raises(ShapeError):
        PartitionShape.parse("1,2")
    with pytest.raises(ShapeError):
        PartitionShape.parse("a,b")


def test_examples():
    assert count_tableaux_dp((5,)) == 1
    assert count_tableaux_dp((1, 1, 1)) == 1
    assert count_tableaux_dp((4, 3, 3)) == 210
    assert macmahon((2, 1)) == 2
    assert macmahon((4, 3, 3)) == 210
    assert macmahon_determinant((4, 3, 3)) == 210
    assert sum_by_height(4, 2) == 6
    assert sum_by_height(7, 1) == 1


def test_two_row_catalan():
    for n in range(9):
        assert macmahon((n, n)) == catalan_ct(n)


def test_zero_parts_do_not_matter():
    for lam in partitions(7):
        assert macmahon(lam) == macmahon(lam + (0,)) == macmahon(lam + (0, 0))


def test_routes_agree_up_to_nine():
    for n in range(10):
        for lam in partitions(n):
            v = macmahon(lam)
            assert v == count_tableaux_dp(lam) == macmahon_determinant(lam) == brute_count_tableaux(lam)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_height_sum_is_involution_count():
    for m in range(1, 5):
        for n in range(10):
            assert sum_by_height(n, m) == brute_count_involutions(m, n)[0].count


def test_fraction_det():
    assert fraction_det([[0, 1], [1, 0]]) == -1
    assert fraction_det([[2, 4], [1, 2]]) == 0


@given(st.lists(st.integers(0, 5), max_size=4))
def test_macmahon_sum_rule(parts):
    lam = tuple(sorted(parts, reverse=True))
    # f^lambda is the sum over removable corners
    total = 0
    for j, p in enumerate(lam):
        nxt = lam[j + 1] if j + 1 < len(lam) else 0
        if p > nxt:
            total += macmahon(lam[:j] + (p - 1,) + lam[j + 1:])
    if sum(lam):
        assert macmahon(lam) == total
