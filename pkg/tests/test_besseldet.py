from fractions import Fraction

import pytest

from catalytic.besseldet import (
    TruncSeries, bessel_I, compositions, det_series, garsia_goupil, inv_count_det,
    inv_count_fixed, inv_fixed_point_series, leibniz_det, perm_count_bessel, perm_count_explicit,
)
from catalytic.oracle import brute_count_involutions

from known_values import CATALAN


def test_series_arithmetic():
    t = TruncSeries.monomial(1, 4)
    assert (t * t)[2] == 1
    assert (t * t * t * t * t) == TruncSeries.constant(0, 4)
    e = TruncSeries.exp(Fraction(1), 4)
    assert e[3] == Fraction(1, 6)
    with pytest.raises(IndexError):
        e[5]


def test_bessel_symmetry():
    for i in range(-4, 5):
        assert bessel_I(i, 12) == bessel_I(-i, 12)
    assert bessel_I(0, 4).coeffs == (1, 0, Fraction(1, 1), 0, Fraction(1, 4))


def test_det_series_matches_leibniz():
    m = [[bessel_I(i - j, 6) for j in range(3)] for i in range(3)]
    for k in range(7):
        scalar = [[entry[k] for entry in row] for row in m]
        if k == 0:
            assert det_series(m)[0] == leibniz_det(scalar)


def test_perm_routes():
    assert [perm_count_bessel(2, n) for n in range(11)] == CATALAN
    assert [perm_count_explicit(2, n) for n in range(11)] == CATALAN
    assert perm_count_bessel(3, 7) == 2761
    assert perm_count_explicit(3, 7) == 2761
    assert perm_count_bessel(1, 5) == 1


def test_involution_det():
    assert [inv_count_det(m, 8) for m in range(1, 7)] == [1, 70, 323, 588, 715, 756]


def test_fixed_point_split_sums():
    for m in range(2, 6):
        for n in range(9):
            total = sum(inv_count_fixed(m, n, p) for p in range(n + 1))
            assert total == inv_count_det(m, n)
    split = brute_count_involutions(3, 8, by_fixed_points=True)
    assert inv_fixed_point_series(3, 8) == {r.fixed_points: r.count for r in split}
    assert inv_count_fixed(3, 5, 2) == 0
    with pytest.raises(ValueError):
        inv_fixed_point_series(4, 4)


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(5, 3))) == 21
    assert list(compositions(0, 0)) == [()]


def test_garsia_goupil():
    assert garsia_goupil(2, 4) == 5
    assert garsia_goupil(3, 5) == 11
    assert garsia_goupil(4, 4) == 1
    with pytest.raises(ValueError):
        garsia_goupil(2, 5)
