"""The Lambda functional on iterated Laurent series and the orbit-sum count of permutations.

Variables are ``z_1, ..., z_m`` with ``x_i = z_i - z_{i-1}`` (``z_0 = 0``).
Rational functions of the ``x_i`` are expanded first in ``z_1``, then in
``z_2``, and so on.  Lambda sums the coefficients of the non-positive
monomials whose zero exponents form a suffix.

Only what the permutation count needs is implemented: Lambda of a monomial,
the negative part and Lambda of ``1/x^e`` (closed forms plus a term-by-term
expansion as a check), the signed sum over the symmetric group, and the
resulting count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .besseldet import compositions
from .permcore import sign


class IdentityViolation(AssertionError):
    """Two evaluations that must agree did not."""


@dataclass(frozen=True)
class ExponentVector:
    """Integer exponent tuple tagged with its role: ``"e"``, ``"b"`` or ``"f"``."""
    entries: tuple[int, ...]
    role: str = "e"

    def __post_init__(self) -> None:
        if self.role not in ("e", "b", "f"):
            raise ValueError(f"unknown role {self.role!r}")
        object.__setattr__(self, "entries", tuple(int(v) for v in self.entries))
        if self.role == "b" and any(v < 0 for v in self.entries):
            raise ValueError(f"insertion profile must be non-negative: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def k(self) -> int:
        """``max{i : b_i > 0}``, 0 for the zero vector."""
        return max((i + 1 for i, v in enumerate(self.entries) if v > 0), default=0)


def _entries(v) -> tuple[int, ...]:
    return v.entries if isinstance(v, ExponentVector) else tuple(v)


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero unless ``0 <= b <= a``."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def lambda_monomial(e: Sequence[int]) -> int:
    """Lambda of ``z^e``: 1 iff all ``e_i <= 0`` and zeros only occur as a suffix."""
    seen_zero = False
    for v in _entries(e):
        if v > 0:
            return 0
        if v == 0:
            seen_zero = True
        elif seen_zero:
            return 0
    return 1


def negative_part(f: Sequence[int]) -> int:
    """``[z^<](1/x^f) = prod_i C(f_i + ... + f_k - 1, f_i - 1)``."""
    f = _entries(f)
    total = 1
    suffix = 0
    for fi in reversed(f):
        suffix += fi
        total *= binom(suffix - 1, fi - 1)
        if not total:
            return 0
    return total


def expansion_terms(f: Sequence[int], cap: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Terms ``(exponents, coefficient)`` of the expansion of ``1/x^f`` with every exponent ``<= cap``.

    Factor ``i >= 2`` is ``(z_i - z_{i-1})^(-f_i)``; taking ``z_{i-1}^n`` from
    it leaves ``z_i^(-f_i - n)`` with coefficient ``C(n + f_i - 1, n)`` when
    ``f_i > 0`` and ``(-1)^n C(-f_i, n)`` otherwise.  The exponent cap bounds
    every ``n``, so the enumeration is finite.  Terms are not merged.
    """
    f = _entries(f)
    k = len(f)
    if k == 0:
        yield (), 1
        return

    def factor_coeff(fi: int, n: int) -> int:
        if fi > 0:
            return comb(n + fi - 1, n)
        return (-1) ** n * binom(-fi, n)

    def rec(i: int, n_i: int, exps: tuple[int, ...], coeff: int):
        # 0-based i; n_i is the power of z_{i-1} taken from factor i
        if i == k - 1:
            g = -f[i] - n_i
            if g <= cap:
                yield exps + (g,), coeff
            return
        fn = f[i + 1]
        limit = cap + f[i] + n_i
        if fn <= 0:
            limit = min(limit, -fn)
        for n_next in range(0, limit + 1):
            c = factor_coeff(fn, n_next)
            if c:
                g = -f[i] - n_i + n_next
                yield from rec(i + 1, n_next, exps + (g,), coeff * c)

    yield from rec(0, 0, (), 1)


def negative_part_expansion(f: Sequence[int]) -> int:
    """Negative part summed term by term from the series expansion."""
    return sum(c for g, c in expansion_terms(f, -1) if all(v < 0 for v in g))


def lambda_inverse_power(e: Sequence[int]) -> int:
    """Lambda of ``1/x^e`` summed term by term from the series expansion."""
    return sum(c for g, c in expansion_terms(e, 0) if lambda_monomial(g))


def _inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    tau = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        tau[s - 1] = i
    return tuple(tau)


def sigma_exponents(b: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """``e_i = b_{tau(i)} - tau(i) + i`` with ``tau = sigma^-1``, so that ``1/x^e = sigma(M)/(M sigma(x^b))``."""
    b = _entries(b)
    tau = _inverse(sigma)
    return tuple(b[tau[i] - 1] - tau[i] + (i + 1) for i in range(len(b)))


def lambda_sigma_b(b: Sequence[int], sigma: Sequence[int]) -> int:
    """Lambda of ``sigma(M(x)) / (M(x) sigma(x^b))`` in closed form."""
    b = _entries(b)
    if any(v < 0 for v in b):
        raise ValueError(f"b must be non-negative: {b}")
    k = max((i + 1 for i, v in enumerate(b) if v > 0), default=0)
    if any(sigma[j - 1] != j for j in range(k + 1, len(b) + 1)):
        return 0
    e = sigma_exponents(b, sigma)
    return negative_part(e[:k])


def group_sum_closed(b: Sequence[int]) -> Fraction:
    """``|b|! / prod (b_i - i + m)! * prod_{i<j} (b_i - i - b_j + j)``."""
    b = _entries(b)
    m = len(b)
    vandermonde = prod(b[i] - i - b[j] + j for i in range(m) for j in range(i + 1, m))
    denom = prod(factorial(b[i] - (i + 1) + m) for i in range(m))
    return Fraction(factorial(sum(b)) * vandermonde, denom)


def group_sum_lambda(b: Sequence[int]) -> int:
    """``sum_{sigma in S_m} eps(sigma) Lambda(sigma(M)/(M sigma(x^b)))`` term by term.

    Only permutations fixing everything above ``k = max{i: b_i > 0}`` can
    contribute, so the sum runs over ``S_k`` embedded in ``S_m``.
    """
    b = _entries(b)
    m = len(b)
    k = max((i + 1 for i, v in enumerate(b) if v > 0), default=0)
    tail = tuple(range(k + 1, m + 1))
    total = 0
    for head in permutations(range(1, k + 1)):
        sigma = head + tail
        value = lambda_sigma_b(b, sigma)
        if value:
            total += sign(sigma) * value
    return total


def group_sum(b: Sequence[int]) -> int:
    """Signed Lambda sum over ``S_m``, checked against its product formula."""
    lam = group_sum_lambda(b)
    closed = group_sum_closed(b)
    if lam != closed:
        raise IdentityViolation(f"group sum for b={_entries(b)}: Lambda route {lam} != closed form {closed}")
    return lam


def perm_count_orbit(m: int, n: int, prune: bool = True) -> int:
    """``n! sum_{|b| = n} group_sum(b) / prod b_i!`` through the Lambda evaluations.

    ``prune`` skips compositions whose ``b_i - i`` values repeat; their
    signed sum is zero.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    total = Fraction(0)
    for b in compositions(n, m):
        if prune and len({v - i for i, v in enumerate(b)}) < m:
            continue
        s = group_sum_lambda(b)
        if s:
            total += Fraction(s, prod(factorial(v) for v in b))
    total *= factorial(n)
    if total.denominator != 1:
        raise IdentityViolation(f"orbit count for m={m}, n={n} is not an integer: {total}")
    return int(total)


# -- vanishing of non-identity orbit terms -------------------------------------

def _left_to_right_maxima(sigma: Sequence[int]) -> list[int]:
    out, best = [], 0
    for pos, v in enumerate(sigma, start=1):
        if v > best:
            out.append(pos)
            best = v
    return out


def vanishing_witnesses(sigma: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(j, [i, ...])``: the position of the largest non-fixed left-to-right
    maximum and every position ``i`` whose value is not a left-to-right maximum
    and satisfies ``sigma(i) <= i``."""
    lrm = _left_to_right_maxima(sigma)
    non_fixed = [p for p in lrm if sigma[p - 1] != p]
    if not non_fixed:
        raise ValueError("the identity has no witness")
    j = max(non_fixed, key=lambda p: sigma[p - 1])
    lrm_set = set(lrm)
    i_list = [p for p in range(1, len(sigma) + 1)
              if p not in lrm_set and sigma[p - 1] <= p]
    return j, i_list


def _linear_form(subset: Sequence[int]) -> dict[int, int]:
    """``sum_{a in subset} (z_a - z_{a-1})`` as ``{index: +-1}`` after cancellation."""
    coeffs: dict[int, int] = {}
    for a in subset:
        coeffs[a] = coeffs.get(a, 0) + 1
        if a > 1:
            coeffs[a - 1] = coeffs.get(a - 1, 0) - 1
    return {z: c for z, c in coeffs.items() if c}


def _power_exponent_range(form: dict[int, int], power: int, var: int,
                          truncation: int) -> tuple[int, int] | None:
    """Min and max exponent of ``z_var`` over the (truncated) expansion of ``form**power``.

    Negative powers expand in the smaller variables over the largest one;
    the multinomial terms of total degree ``N <= truncation`` are enumerated.
    Returns None when the factor is identically 1.
    """
    if power == 0 or not form:
        return None
    top = max(form)
    others = [z for z in form if z != top]
    if power > 0:
        if var == top:
            return (0, power) if others else (power, power)
        if var in form:
            return (0, power)
        return (0, 0)
    e = -power
    if var == top:
        return (-e - (truncation if others else 0), -e)
    if var in form:
        return (0, truncation)
    return (0, 0)


def verify_vanishing(sigma: Sequence[int], gaps: Sequence[int],
                     truncation: int | None = None) -> bool:
    """Check the sign pattern that makes a non-identity orbit term vanish under Lambda.

    For the fraction ``sigma(M / (x_1^{e_1} (x_1+x_2)^{e_2} ... )) / M`` with
    label gaps ``e = gaps``, the exponent of ``z_{sigma(i)}`` must be
    non-negative and that of ``z_{sigma(j)}`` negative in every term of the
    truncated expansion.  Both signs together force Lambda to vanish because
    ``sigma(i) < sigma(j)``.  The identity passes vacuously.
    """
    sigma = tuple(sigma)
    gaps = _entries(gaps)
    m = len(sigma)
    if len(gaps) != m or any(g < 0 for g in gaps):
        raise ValueError("gaps must be a non-negative vector of length m")
    if sigma == tuple(range(1, m + 1)):
        return True
    if truncation is None:
        truncation = (max(gaps, default=0) + m + 2) * m
    j, i_list = vanishing_witnesses(sigma)
    big = sigma[j - 1]
    tau = _inverse(sigma)
    # sigma(M)/M = prod_a x_a^(tau(a) - a); x_a = z_a - z_{a-1}
    factors = [(_linear_form([a]), tau[a - 1] - a) for a in range(1, m + 1)]
    factors += [(_linear_form(sigma[:ell]), -gaps[ell - 1]) for ell in range(1, m + 1)]

    def exponent_range(var: int) -> tuple[int, int]:
        lo = hi = 0
        for form, power in factors:
            r = _power_exponent_range(form, power, var, truncation)
            if r:
                lo += r[0]
                hi += r[1]
        return lo, hi

    if not i_list:
        return False
    if exponent_range(big)[1] >= 0:
        return False
    for i in i_list:
        small = sigma[i - 1]
        if small >= big or exponent_range(small)[0] < 0:
            return False
    return True


# -- partial-fraction identity ---------------------------------------------------

def partial_fraction_sides(x: Sequence[Fraction], u: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    """Both sides of the signed-sum identity at one rational point.

    Left: ``sum_tau eps(tau) tau(prod_{i<k} (x_i+u_i)...(x_i+u_k) / (x_i+u_i+...+x_k+u_k))``
    with ``tau`` permuting only the ``x``.  Right: ``prod_{i<j} (x_i - x_j)``.
    Raises ZeroDivisionError at a pole.
    """
    k = len(x)
    lhs = Fraction(0)
    for tau in permutations(range(k)):
        y = [x[t] for t in tau]
        term = Fraction(1)
        for i in range(k - 1):
            num = prod((y[i] + u[h] for h in range(i, k)), start=Fraction(1))
            den = sum(y[h] + u[h] for h in range(i, k))
            term *= num / den
        lhs += sign([t + 1 for t in tau]) * term
    rhs = prod((x[i] - x[j] for i in range(k) for j in range(i + 1, k)), start=Fraction(1))
    return lhs, rhs


def check_partial_fraction_identity(k: int, samples: int = 100, seed: int = 0,
                       points: Sequence | None = None) -> bool:
    """Evaluate the identity at ``samples`` random rational points (or the given ones)."""
    if k > 6:
        raise ValueError("k <= 6 keeps the k! sum cheap")
    if points is not None:
        return all(partial_fraction_sides(x, u)[0] == partial_fraction_sides(x, u)[1] for x, u in points)
    rng = random.Random(seed)

    def rational() -> Fraction:
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20))

    done = 0
    while done < samples:
        x = [rational() for _ in range(k)]
        u = [rational() for _ in range(k)]
        try:
            lhs, rhs = partial_fraction_sides(x, u)
        except ZeroDivisionError:
            continue
        if lhs != rhs:
            return False
        done += 1
    return True
