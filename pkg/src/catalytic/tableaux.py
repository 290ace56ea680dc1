"""Standard Young tableaux: the cell-insertion recursion and the product formula."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterator


class ShapeError(ValueError):
    """Parts are negative or not weakly decreasing."""


@dataclass(frozen=True)
class PartitionShape:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "PartitionShape":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ShapeError(f"cannot parse shape {text!r}") from exc

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return sum(1 for p in self.parts if p)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def _shape(lam) -> PartitionShape:
    return lam if isinstance(lam, PartitionShape) else PartitionShape(tuple(lam))


@cache
def _dp(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    total = 0
    for j, p in enumerate(parts):
        # the largest entry sits in a corner: row j may shrink unless row j+1 is as long
        nxt = parts[j + 1] if j + 1 < len(parts) else 0
        if p > nxt:
            smaller = parts[:j] + (p - 1,) + parts[j + 1:]
            total += _dp(tuple(x for x in smaller if x))
    return total


def count_tableaux_dp(lam) -> int:
    """``f^lambda`` by removing the cell holding the largest entry, memoized over shapes."""
    return _dp(tuple(p for p in _shape(lam).parts if p))


def macmahon(lam) -> int:
    """``n! / prod (l_i - i + m)! * prod_{i<j} (l_i - l_j - i + j)`` with ``m`` parts."""
    parts = _shape(lam).parts
    m = len(parts)
    num = factorial(sum(parts)) * prod(parts[i] - parts[j] - i + j
                                       for i in range(m) for j in range(i + 1, m))
    den = prod(factorial(parts[i] - (i + 1) + m) for i in range(m))
    q, r = divmod(num, den)
    if r or q < 0:
        raise ArithmeticError(f"product formula is not a count for {parts}")
    return q


def _inv_factorial(k: int) -> Fraction:
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def fraction_det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [list(map(Fraction, row)) for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            if a[r][col]:
                ratio = a[r][col] / a[col][col]
                for c in range(col, size):
                    a[r][c] -= ratio * a[col][c]
    return det


def macmahon_determinant(lam) -> int:
    """``n! det(1/(l_i - i + j)!)``, the determinant before the Vandermonde reduction."""
    parts = _shape(lam).parts
    m = len(parts)
    matrix = [[_inv_factorial(parts[i] - i + j) for j in range(m)] for i in range(m)]
    value = factorial(sum(parts)) * fraction_det(matrix)
    if value.denominator != 1:
        raise ArithmeticError(f"determinant is not integral for {parts}")
    return int(value)


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(n - first, rest_parts, first):
            yield (first,) + rest


def sum_by_height(n: int, m: int) -> int:
    """Sum of ``f^lambda`` over partitions of ``n`` with at most ``m`` rows."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    return sum(macmahon(lam) for lam in partitions(n, m))
