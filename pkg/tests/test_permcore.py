import pytest
from hypothesis import given, strategies as st

from catalytic.permcore import (
    PatternError, Permutation, avoids_ascending, fixed_point_count, inv_labels,
    is_involution, lds_length, lis_length, perm_labels, sign,
)

FIG1 = (8, 5, 9, 6, 1, 3, 7, 4, 2)
FIG2 = (3, 2, 1, 12, 7, 9, 5, 8, 6, 11, 10, 4)

perms = st.integers(0, 9).flatmap(lambda n: st.permutations(range(1, n + 1)))


def test_parse_forms():
    assert Permutation.parse("8 5 9 6 1 3 7 4 2").word == FIG1
    assert Permutation.parse("1342").word == (1, 3, 4, 2)
    assert Permutation.parse("").word == ()
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_lis_lds():
    assert lis_length((1, 2, 3, 4, 5)) == 5
    assert lis_length((5, 4, 3, 2, 1)) == 1
    assert lis_length(FIG1) == 3
    assert lds_length((1, 2, 3)) == 1
    assert lds_length(FIG2) == 5
    assert lds_length(()) == 0


def test_avoids():
    assert not avoids_ascending((1, 2, 3), 2)
    assert avoids_ascending((2, 1), 1)
    assert avoids_ascending(FIG1, 3)


def test_perm_labels_examples():
    assert perm_labels(FIG1, 3) == (3, 7)
    assert perm_labels((), 3) == (1, 1)
    for m in range(1, 6):
        assert perm_labels(tuple(range(1, m + 1)), m) == tuple(range(2, m + 1))
    with pytest.raises(PatternError):
        perm_labels((1, 2, 3), 2)


def _label_by_scan(word, m):
    # a_j = smallest end position of an occurrence of 12...j
    n = len(word)
    out = []
    for j in range(2, m + 1):
        best = n + 1
        for end in range(1, n + 1):
            if lis_length(word[:end]) >= j:
                best = end
                break
        out.append(best)
    return tuple(out)


@given(perms, st.integers(1, 5))
def test_perm_labels_match_scan(word, m):
    if lis_length(word) > m:
        return
    assert perm_labels(word, m) == _label_by_scan(word, m)


def test_inv_labels_examples():
    assert inv_labels(FIG2, 5) == (3, 9)
    assert inv_labels((), 4) == (1, 1)
    assert inv_labels((), 5) == (1, 1)
    # one fixed point, m = 2: the chain tau(1) = 1 >= 1 gives a_1 = 2 - 1 = 1
    assert inv_labels((1,), 2) == (1,)
    assert inv_labels((1,), 3) == (2,)
    with pytest.raises(ValueError):
        inv_labels((2, 3, 1), 3)


def test_involution_basics():
    assert is_involution((1, 2, 3, 4)) and fixed_point_count((1, 2, 3, 4)) == 4
    assert is_involution((2, 1)) and fixed_point_count((2, 1)) == 0
    assert is_involution(FIG2) and fixed_point_count(FIG2) == 2
    assert not is_involution((2, 3, 1))


def test_sign():
    assert sign((1, 2, 3)) == 1
    assert sign((2, 1)) == -1
    assert sign((1, 3, 4, 2, 5)) == 1


@given(perms)
def test_sign_is_inversion_parity(word):
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    assert sign(word) == (-1) ** inv


@given(perms)
def test_reverse_swaps_lis_and_lds(word):
    p = Permutation(word)
    assert lis_length(p.reverse()) == lds_length(p)
    assert Permutation(word).inverse().inverse() == p
