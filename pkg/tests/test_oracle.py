from math import factorial

import pytest

from catalytic.oracle import (
    CountRecord, OracleBoundError, brute_count_involutions, brute_count_perms,
    brute_count_restricted, brute_count_tableaux, iter_involutions, iter_words, lis_histogram,
)


def test_perm_counts_frozen():
    assert brute_count_perms(2, 3)[0].count == 5
    assert brute_count_perms(3, 6)[0].count == 513
    assert brute_count_perms(3, 7)[0].count == 2761
    for n in range(7):
        assert brute_count_perms(n or 1, n)[0].count == factorial(n)


def test_lis_histogram_frozen():
    assert lis_histogram(10) == {1: 1, 2: 16795, 3: 569794, 4: 1604098, 5: 1100902,
                                 6: 296326, 7: 38281, 8: 2521, 9: 81, 10: 1}


def test_by_label_sums_to_total():
    split = brute_count_perms(3, 6, by_label=True)
    assert sum(r.count for r in split) == 513
    assert all(len(r.label) == 2 for r in split)


def test_involutions_frozen():
    assert brute_count_involutions(2, 3)[0].count == 3
    split = brute_count_involutions(2, 4, by_fixed_points=True)
    assert {r.fixed_points: r.count for r in split} == {0: 2, 2: 3, 4: 1}
    total_inv = [1, 1, 2, 4, 10, 26, 76, 232]
    for n, t in enumerate(total_inv):
        assert brute_count_involutions(max(n, 1), n)[0].count == t
        assert sum(1 for _ in iter_involutions(n)) == t


def test_restricted_frozen():
    assert brute_count_restricted(2, 4).count == 5
    assert brute_count_restricted(3, 5).count == 11
    for m in range(1, 6):
        assert brute_count_restricted(m, m).count == 1


def test_tableaux_frozen():
    assert brute_count_tableaux((4, 3, 3)) == 210
    assert brute_count_tableaux((2, 1)) == 2
    assert brute_count_tableaux((5,)) == 1
    with pytest.raises(ValueError):
        brute_count_tableaux((1, 2))


def test_bounds_refuse():
    with pytest.raises(OracleBoundError):
        brute_count_perms(3, 12)
    with pytest.raises(OracleBoundError):
        brute_count_involutions(3, 15)
    with pytest.raises(OracleBoundError):
        brute_count_tableaux((9, 8))


def test_iter_words_pruned():
    words = list(iter_words(5, 2))
    assert len(words) == 42 and len(set(words)) == 42


def test_count_record_validation():
    with pytest.raises(ValueError):
        CountRecord(2, 3, -1)
    with pytest.raises(ValueError):
        CountRecord(2, 3, 1, fixed_points=2)
