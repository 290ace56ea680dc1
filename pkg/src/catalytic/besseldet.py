"""Truncated power series in ``t`` and the determinantal counting formulas.

Coefficients are exact (Fractions by default; any ring element that
supports ``+`` and ``*`` works, e.g. a :class:`~catalytic.laurent.LaurentPoly`
in a marker variable).  Factorial scaling always happens after the
coefficient has been extracted.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod
from typing import Sequence

from .permcore import sign


class FormulaError(ArithmeticError):
    """A determinant route produced a non-integral or negative count."""


class TruncSeries:
    """``c_0 + c_1 t + ... + c_N t^N`` modulo ``t^(N+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = list(coeffs[:order + 1])
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> "TruncSeries":
        coeffs = [Fraction(0)] * (order + 1)
        if k <= order:
            coeffs[k] = c
        return cls(coeffs, order)

    @classmethod
    def exp(cls, c, order: int) -> "TruncSeries":
        """``exp(c t)``; ``c`` may be any ring element."""
        return cls([c ** k * Fraction(1, factorial(k)) if k else c ** 0 for k in range(order + 1)],
                   order)

    def __getitem__(self, k: int):
        if k > self.order:
            raise IndexError(f"coefficient t^{k} is beyond the truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def _check(self, other: "TruncSeries") -> None:
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.order)
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.order)
        return self + (-other)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i, x in enumerate(a) if x]
        nz_b = [j for j, y in enumerate(b) if y]
        out = [Fraction(0)] * (self.order + 1)
        for i in nz_a:
            for j in nz_b:
                if i + j > self.order:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return TruncSeries(out, self.order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r})"


def bessel_I(i: int, order: int) -> TruncSeries:
    """``I_i = sum_{n >= max(0,-i)} t^(2n+i) / (n! (n+i)!)`` truncated at ``t^order``."""
    coeffs = [Fraction(0)] * (order + 1)
    n = max(0, -i)
    while 2 * n + i <= order:
        coeffs[2 * n + i] = Fraction(1, factorial(n) * factorial(n + i))
        n += 1
    return TruncSeries(coeffs, order)


def det_series(matrix: Sequence[Sequence[TruncSeries]], order: int | None = None) -> TruncSeries:
    """Exact determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        if order is None:
            raise ValueError("order is needed for the empty determinant")
        return TruncSeries.constant(Fraction(1), order)
    if order is None:
        order = matrix[0][0].order
    if any(entry.order != order for row in matrix for entry in row):
        raise ValueError("matrix entries must share one truncation order")

    def cofactor(rows: tuple[int, ...], cols: tuple[int, ...]) -> TruncSeries:
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        total = TruncSeries.constant(Fraction(0), order)
        for k, c in enumerate(cols):
            minor = cofactor(rows[1:], cols[:k] + cols[k + 1:])
            term = matrix[rows[0]][c] * minor
            total = total + term if k % 2 == 0 else total - term
        return total

    return cofactor(tuple(range(size)), tuple(range(size)))


def _as_count(value, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise FormulaError(f"{what} gave {value}, not a non-negative integer")
    return int(value)


def perm_count_bessel(m: int, n: int) -> int:
    """``(n!)^2 [t^(2n)] det(I_{i-j})_{1<=i,j<=m}``."""
    order = 2 * n
    matrix = [[bessel_I(i - j, order) for j in range(1, m + 1)] for i in range(1, m + 1)]
    coeff = det_series(matrix, order)[2 * n]
    return _as_count(coeff * factorial(n) ** 2, f"perm_count_bessel({m}, {n})")


def _inv_determinant(m: int, order: int) -> TruncSeries:
    ell, odd = divmod(m, 2)
    if odd:
        matrix = [[bessel_I(i - j, order) - bessel_I(i + j, order) for j in range(1, ell + 1)]
                  for i in range(1, ell + 1)]
    else:
        matrix = [[bessel_I(i - j, order) + bessel_I(i + j - 1, order) for j in range(1, ell + 1)]
                  for i in range(1, ell + 1)]
    return det_series(matrix, order)


def inv_count_det(m: int, n: int) -> int:
    """``n! [t^n]`` of ``e^t det(I_{i-j} - I_{i+j})`` (odd m) or ``det(I_{i-j} + I_{i+j-1})``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    series = _inv_determinant(m, n)
    if m % 2:
        series = TruncSeries.exp(Fraction(1), n) * series
    return _as_count(series[n] * factorial(n), f"inv_count_det({m}, {n})")


def inv_count_fixed(m: int, n: int, p: int) -> int:
    """Involutions of length ``n`` avoiding ``(m+1)...21`` with exactly ``p`` fixed points.

    Odd ``m``: ``n! [t^n] t^p/p! det(I_{i-j} - I_{i+j})``.  Even ``m``: the
    determinant whose first row is ``I_{p+l-j} - I_{p+l+j}`` and whose rows
    ``i >= 2`` are ``I_{i+j-1} - I_{i-j-1}``.  Returns 0 when ``n - p`` is odd
    or ``p`` is out of range.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if p < 0 or p > n or (n - p) % 2:
        return 0
    ell, odd = divmod(m, 2)
    if odd:
        series = TruncSeries.monomial(p, n, Fraction(1, factorial(p))) * _inv_determinant(m, n)
    else:
        first = [bessel_I(p + ell - j, n) - bessel_I(p + ell + j, n) for j in range(1, ell + 1)]
        rest = [[bessel_I(i + j - 1, n) - bessel_I(i - j - 1, n) for j in range(1, ell + 1)]
                for i in range(2, ell + 1)]
        series = det_series([first] + rest, n)
    return _as_count(series[n] * factorial(n), f"inv_count_fixed({m}, {n}, {p})")


def inv_fixed_point_series(m: int, n: int):
    """``n! [t^n] e^(st) det(I_{i-j} - I_{i+j})`` as a polynomial in ``s`` (odd ``m``).

    Returned as a dict ``p -> count``.
    """
    from .laurent import LaurentPoly

    if m % 2 == 0:
        raise ValueError("the exponential fixed-point series is the odd-m form")
    s = LaurentPoly.var(1, 1)
    one = LaurentPoly.constant(1)
    det = _inv_determinant(m, n)
    lifted = TruncSeries([one * c for c in det.coeffs], n)
    coeff = (TruncSeries.exp(s, n) * lifted)[n]
    out = {}
    if coeff:
        for (p,), c in coeff.items():
            out[p] = _as_count(c * factorial(n), f"inv_fixed_point_series({m}, {n})")
    return out


def compositions(n: int, parts: int):
    """Yield all tuples of ``parts`` non-negative integers summing to ``n`` (colex order)."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for last in range(n + 1):
        for head in compositions(n - last, parts - 1):
            yield head + (last,)


def perm_count_explicit(m: int, n: int) -> int:
    """``(n!)^2 sum_b prod_{i<j}(b_i - i - b_j + j) / prod_i b_i! (b_i - i + m)!`` over ``|b| = n``."""
    total = Fraction(0)
    for b in compositions(n, m):
        vandermonde = prod(b[i] - i - b[j] + j for i in range(m) for j in range(i + 1, m))
        if vandermonde:
            denom = prod(factorial(b[i]) * factorial(b[i] - (i + 1) + m) for i in range(m))
            total += Fraction(vandermonde, denom)
    return _as_count(total * factorial(n) ** 2, f"perm_count_explicit({m}, {n})")


def garsia_goupil(m: int, n: int) -> int:
    """``sum_{r=0}^{n-m} (-1)^r C(n-m, r) n!/(m+r)!``, valid for ``m <= n <= 2m``."""
    if not m <= n <= 2 * m:
        raise ValueError(f"the closed sum only holds for m <= n <= 2m (got m={m}, n={n})")
    nf = factorial(n)
    return sum((-1) ** r * comb(n - m, r) * (nf // factorial(m + r)) for r in range(n - m + 1))


def leibniz_det(matrix: Sequence[Sequence]) -> object:
    """Plain Leibniz determinant for small matrices of exact scalars."""
    size = len(matrix)
    total = 0
    for pi in permutations(range(size)):
        term = sign([v + 1 for v in pi])
        for i in range(size):
            term = term * matrix[i][pi[i]]
            if not term:
                break
        total += term
    return total
