"""Sparse multivariate Laurent polynomials and the constant-term routes.

The involution counts come out as a single monomial coefficient of
``det(...) * (power sum)**n``; the 123-avoiding warm-up is a constant term
in one variable.  Coefficients are Python ints or Fractions.
"""

from __future__ import annotations

from itertools import permutations, product
from math import comb
from typing import Iterable, Mapping, Sequence

from .permcore import sign


class InexactDivision(ArithmeticError):
    """A polynomial division left a non-zero remainder."""


Exponent = tuple[int, ...]


class LaurentPoly:
    """Finitely supported map from exponent vectors to exact coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, object] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} has wrong length for {nvars} variables")
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        # trusted constructor: no zero coefficients, correct lengths
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c=1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """``x_i ** power`` with 1-based ``i``."""
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(nvars, {tuple(exps): 1})

    # -- container protocol -------------------------------------------------
    def terms(self) -> dict[Exponent, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self._terms == LaurentPoly.constant(self.nvars, other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        # constants hash like the scalar they compare equal to
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and (0,) * self.nvars in self._terms:
            return hash(self._terms[(0,) * self.nvars])
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        parts = []
        for exps, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{e}" if e != 1 else f"x{i + 1}"
                            for i, e in enumerate(exps) if e)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPoly.constant(self.nvars, other)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if not other:
                return LaurentPoly._raw(self.nvars, {})
            return LaurentPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (exps, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are inverted")
            return LaurentPoly.monomial(tuple(e * n for e in exps), c ** (-n))
        result = LaurentPoly.constant(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- variable operations ------------------------------------------------
    def signed_permute(self, pi: Sequence[int], signs: Sequence[int]) -> "LaurentPoly":
        """Apply the signed permutation ``x_i -> x_{pi(i)} ** signs[i]``.

        ``pi`` is a 1-based one-line word.
        """
        out = {}
        for exps, c in self._terms.items():
            g = [0] * self.nvars
            for i, f in enumerate(exps):
                g[pi[i] - 1] = signs[i] * f
            out[tuple(g)] = c
        return LaurentPoly._raw(self.nvars, out)

    def substitute_variable(self, src: int, dst: int | None) -> "LaurentPoly":
        """Replace ``x_src`` by ``x_dst`` (1-based), or by 1 when ``dst`` is None."""
        out: dict[Exponent, object] = {}
        for exps, c in self._terms.items():
            g = list(exps)
            k = g[src - 1]
            g[src - 1] = 0
            if dst is not None:
                g[dst - 1] += k
            key = tuple(g)
            out[key] = out.get(key, 0) + c
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def divide_linear(self, a: int, b: int | None) -> "LaurentPoly":
        """Exact quotient by ``x_a - x_b`` (or ``x_a - 1`` when ``b`` is None).

        Synthetic division in ``x_a``; raises :class:`InexactDivision` when the
        remainder is non-zero.
        """
        by_power: dict[int, dict[Exponent, object]] = {}
        for exps, c in self._terms.items():
            k = exps[a - 1]
            if k < 0:
                raise ValueError("divide_linear needs non-negative powers of the divided variable")
            rest = exps[:a - 1] + (0,) + exps[a:]
            by_power.setdefault(k, {})[rest] = c
        if not by_power:
            return LaurentPoly._raw(self.nvars, {})
        top = max(by_power)
        shift = (lambda e: e) if b is None else (
            lambda e: e[:b - 1] + (e[b - 1] + 1,) + e[b:])
        quotient: dict[Exponent, object] = {}
        carry: dict[Exponent, object] = {}
        for k in range(top, -1, -1):
            # coefficient of x_a^k in P plus x_b times previous quotient slice
            cur = dict(by_power.get(k, {}))
            for e, c in carry.items():
                key = shift(e)
                cur[key] = cur.get(key, 0) + c
            cur = {e: c for e, c in cur.items() if c}
            if k == 0:
                if cur:
                    raise InexactDivision(f"remainder {cur} dividing by x{a} - {'1' if b is None else f'x{b}'}")
                break
            for e, c in cur.items():
                key = e[:a - 1] + (k - 1,) + e[a:]
                quotient[key] = c
            carry = cur
        return LaurentPoly._raw(self.nvars, quotient)

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(point, exps):
                term = term * x ** e
            total += term
        return total


def det_laurent(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by the Leibniz expansion (matrices here are at most 3x3 or so)."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return LaurentPoly.constant(0)
    nvars = matrix[0][0].nvars
    total = LaurentPoly.constant(nvars, 0)
    for pi in permutations(range(1, size + 1)):
        term = LaurentPoly.constant(nvars, sign(pi))
        for i in range(size):
            term = term * matrix[i][pi[i] - 1]
            if not term:
                break
        total = total + term
    return total


def signed_permutations(ell: int):
    """Yield ``(pi, signs, epsilon)`` over the hyperoctahedral group ``B_ell``."""
    for pi in permutations(range(1, ell + 1)):
        s = sign(pi)
        for signs in product((1, -1), repeat=ell):
            yield pi, signs, s * (-1) ** signs.count(-1)


def hyperoctahedral_sum(poly: LaurentPoly) -> LaurentPoly:
    """Signed orbit sum ``sum_{sigma in B_l} eps(sigma) sigma(poly)``."""
    total = LaurentPoly.constant(poly.nvars, 0)
    for pi, signs, eps in signed_permutations(poly.nvars):
        total = total + poly.signed_permute(pi, signs) * eps
    return total


def _x(ell: int, j: int, power: int) -> LaurentPoly:
    return LaurentPoly.var(ell, j, power)


def odd_matrix(ell: int) -> list[list[LaurentPoly]]:
    """``(x_j^i - xbar_j^i)`` for ``1 <= i, j <= ell``."""
    return [[_x(ell, j, i) - _x(ell, j, -i) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)]


def even_matrix(ell: int) -> list[list[LaurentPoly]]:
    """``(x_j^(i-1) + xbar_j^i)`` for ``1 <= i, j <= ell``."""
    return [[_x(ell, j, i - 1) + _x(ell, j, -i) for j in range(1, ell + 1)]
            for i in range(1, ell + 1)]


def fixed_point_matrix(ell: int) -> list[list[LaurentPoly]]:
    """``(xbar_j^i - x_j^i)`` for ``1 <= i, j <= ell``."""
    return [[-m for m in row] for row in odd_matrix(ell)]


def power_sum(ell: int, include_one: bool, n: int) -> LaurentPoly:
    """``(c + sum_i (x_i + xbar_i)) ** n`` with ``c = 1`` iff ``include_one``."""
    result = LaurentPoly.constant(ell)
    for _ in range(n):
        result = result * _kernel_numerator(ell, include_one)
    return result


def _kernel_numerator(ell: int, include_one: bool) -> LaurentPoly:
    base = LaurentPoly.constant(ell, 1 if include_one else 0)
    for j in range(1, ell + 1):
        base = base + _x(ell, j, 1) + _x(ell, j, -1)
    return base


def power_sums(ell: int, include_one: bool, n_max: int):
    """Yield ``power_sum(ell, include_one, n)`` for ``n = 0..n_max``."""
    step = _kernel_numerator(ell, include_one)
    cur = LaurentPoly.constant(ell)
    for n in range(n_max + 1):
        yield cur
        if n < n_max:
            cur = cur * step


def extract_product(left: LaurentPoly, right: LaurentPoly, target: Sequence[int]):
    """``[x^target](left * right)`` without forming the product."""
    total = 0
    for exps, c in left.items():
        need = tuple(t - e for t, e in zip(target, exps))
        total += c * right.coefficient(need)
    return total


def _involution_setup(m: int):
    if m < 1:
        raise ValueError("m must be >= 1")
    ell, odd = divmod(m, 2)
    if odd:
        numerator = det_laurent(odd_matrix(ell)) if ell else LaurentPoly.constant(0)
        target = tuple(range(1, ell + 1))
    else:
        numerator = det_laurent(even_matrix(ell))
        target = tuple(range(ell))
    return ell, bool(odd), numerator, target


def inv_counts_ct(m: int, n_max: int) -> list[int]:
    """``|I_n^(m)|`` for ``n = 0..n_max`` by monomial extraction."""
    ell, odd, numerator, target = _involution_setup(m)
    return [extract_product(numerator, power, target)
            for power in power_sums(ell, odd, n_max)]


def inv_count_ct(m: int, n: int) -> int:
    """Number of involutions of length ``n`` avoiding ``(m+1)...21``.

    Odd ``m``: ``[x_1 x_2^2 ... x_l^l] det(x_j^i - xbar_j^i) (1 + sum(x + xbar))^n``.
    Even ``m``: ``[x_1^0 x_2 ... x_l^(l-1)] det(x_j^(i-1) + xbar_j^i) (sum(x + xbar))^n``.
    """
    return inv_counts_ct(m, n)[n]


def inv_count_fixed_ct(m: int, n: int, p: int) -> int:
    """Involutions of length ``n`` avoiding ``(m+1)...21`` with ``p`` fixed points.

    Even ``m``: ``-[x_1^(p+l) x_2 ... x_l^(l-1)] det(xbar_j^i - x_j^i) (sum(x + xbar))^n``.
    For odd ``m`` the fixed points only enter the kernel through ``s t``, so
    the count is ``C(n, p)`` times the extraction at length ``n - p`` with the
    constant 1 dropped from the power sum.
    """
    if p < 0 or p > n or (n - p) % 2:
        return 0
    ell, odd = divmod(m, 2)
    if odd:
        if ell == 0:
            return 1 if p == n else 0
        numerator = det_laurent(odd_matrix(ell))
        target = tuple(range(1, ell + 1))
        return comb(n, p) * extract_product(numerator, power_sum(ell, False, n - p), target)
    numerator = det_laurent(fixed_point_matrix(ell))
    target = (p + ell,) + tuple(range(1, ell))
    return -extract_product(numerator, power_sum(ell, False, n), target)


def inv_count_fixed_ct_literal(m: int, n: int, p: int) -> int:
    """Even-``m`` fixed-point count with the non-negative-part operator materialised.

    Forms the full product, keeps ``x_1^a x_2 ... x_l^(l-1)`` for ``a >= 0``,
    multiplies by ``-xbar_1^l`` and reads off ``x_1^p``.  Slow; a guard for
    the single-coefficient shortcut in :func:`inv_count_fixed_ct`.
    """
    ell, odd = divmod(m, 2)
    if odd:
        raise ValueError("the literal extraction is the even-m route")
    product_ = det_laurent(fixed_point_matrix(ell)) * power_sum(ell, False, n)
    tail = tuple(range(1, ell))
    series_in_x1: dict[int, object] = {}
    for exps, c in product_.items():
        if exps[0] >= 0 and exps[1:] == tail:
            series_in_x1[exps[0]] = c
    # -(1/x_1^l) * sum_a c_a x_1^a, then the coefficient of x_1^p
    return -series_in_x1.get(p + ell, 0)


def catalan_ct(n: int) -> int:
    """``[x^0] (1 - xbar) xbar^n (1 + x)^(2n)``: the 123-avoiding count."""
    x = LaurentPoly.var(1, 1)
    xbar = LaurentPoly.var(1, 1, -1)
    expr = (1 - xbar) * xbar ** n * (1 + x) ** (2 * n)
    return expr.coefficient((0,))
