"""Brute-force reference enumerators.

Everything here enumerates the objects themselves and filters them, so it
shares no arithmetic with the generating-tree or series routes.  Costs grow
like ``n!`` (or the number of involutions), hence the configurable bounds.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from functools import cache
from typing import Iterator, Optional

from .permcore import fixed_point_count, lds_length, perm_labels

MAX_PERM_N = 11
MAX_INVOLUTION_N = 14
MAX_TABLEAU_SIZE = 16


class OracleBoundError(ValueError):
    """The requested size is above the enumeration bound."""


@dataclass(frozen=True, order=True)
class CountRecord:
    m: int
    n: int
    count: int
    fixed_points: Optional[int] = None
    label: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.fixed_points is not None and (self.n - self.fixed_points) % 2:
            raise ValueError("n - fixed_points must be even")


def _check_bound(n: int, bound: int, what: str) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise OracleBoundError(f"{what} enumeration refused for n={n} > bound {bound}")


def iter_words(n: int, max_lis: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield permutations of ``1..n`` whose LIS is at most ``max_lis``.

    Depth-first over prefixes, pruning a prefix as soon as its patience
    piles exceed ``max_lis``.
    """
    word: list[int] = []
    used = [False] * (n + 1)

    def rec(tails: list[int]) -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            k = bisect_left(tails, v)
            if k == len(tails):
                if max_lis is not None and k + 1 > max_lis:
                    continue
                new = tails + [v]
            else:
                new = tails[:]
                new[k] = v
            used[v] = True
            word.append(v)
            yield from rec(new)
            word.pop()
            used[v] = False

    return rec([])


@cache
def lis_histogram(n: int) -> dict[int, int]:
    """Map LIS length -> number of permutations of length ``n``."""
    hist: Counter[int] = Counter()
    used = [False] * (n + 1)

    def rec(depth: int, tails: list[int]) -> None:
        if depth == n:
            hist[len(tails)] += 1
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            k = bisect_left(tails, v)
            if k == len(tails):
                new = tails + [v]
            else:
                new = tails[:]
                new[k] = v
            used[v] = True
            rec(depth + 1, new)
            used[v] = False

    rec(0, [])
    return dict(hist)


def brute_count_perms(m: int, n: int, by_label: bool = False,
                      max_n: int = MAX_PERM_N) -> list[CountRecord]:
    """Count permutations of length ``n`` avoiding ``12...m(m+1)``.

    With ``by_label`` the count is split by generating-tree label.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_bound(n, max_n, "permutation")
    if not by_label:
        if m <= 3:
            # pruned enumeration visits few leaves when m is small
            total = sum(1 for _ in iter_words(n, m))
        else:
            total = sum(c for lis, c in lis_histogram(n).items() if lis <= m)
        return [CountRecord(m, n, total)]
    groups = Counter(perm_labels(w, m) for w in iter_words(n, m))
    return [CountRecord(m, n, c, label=lab) for lab, c in sorted(groups.items())]


def iter_involutions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all involutions of length ``n``.

    The largest element is either fixed or paired with a smaller one; the
    rest is built recursively.
    """
    word = [0] * n

    def rec(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(word)
            return
        top = free[-1]
        rest = free[:-1]
        word[top - 1] = top
        yield from rec(rest)
        for idx, other in enumerate(rest):
            word[top - 1], word[other - 1] = other, top
            yield from rec(rest[:idx] + rest[idx + 1:])

    return rec(list(range(1, n + 1)))


@cache
def involution_histogram(n: int) -> dict[tuple[int, int], int]:
    """Map ``(lds, fixed points)`` -> number of involutions of length ``n``."""
    hist: Counter[tuple[int, int]] = Counter()
    for w in iter_involutions(n):
        hist[lds_length(w), fixed_point_count(w)] += 1
    return dict(hist)


def brute_count_involutions(m: int, n: int, by_fixed_points: bool = False,
                            max_n: int = MAX_INVOLUTION_N) -> list[CountRecord]:
    """Count involutions of length ``n`` avoiding ``(m+1)m...21``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_bound(n, max_n, "involution")
    by_fp: Counter[int] = Counter()
    for (lds, fp), c in involution_histogram(n).items():
        if lds <= m:
            by_fp[fp] += c
    if not by_fixed_points:
        return [CountRecord(m, n, sum(by_fp.values()))]
    return [CountRecord(m, n, c, fixed_points=p) for p, c in sorted(by_fp.items())]


def brute_count_restricted(m: int, n: int, max_n: int = MAX_PERM_N) -> CountRecord:
    """Count avoiders of ``12...m(m+1)`` in which ``1, ..., m`` appear in order."""
    if n < m:
        raise ValueError("restricted class needs n >= m")
    _check_bound(n, max_n, "permutation")
    total = 0
    for w in iter_words(n, m):
        pos = [0] * (m + 1)
        for i, v in enumerate(w):
            if v <= m:
                pos[v] = i
        if all(pos[v] < pos[v + 1] for v in range(1, m)):
            total += 1
    return CountRecord(m, n, total)


def brute_count_tableaux(shape, max_size: int = MAX_TABLEAU_SIZE) -> int:
    """Count standard fillings of ``shape`` by placing 1, 2, ... one cell at a time."""
    parts = [int(x) for x in shape if x]
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {tuple(shape)}")
    size = sum(parts)
    _check_bound(size, max_size, "tableau")
    filled = [0] * len(parts)

    def rec(placed: int) -> int:
        if placed == size:
            return 1
        total = 0
        for r in range(len(parts)):
            if filled[r] < parts[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                total += rec(placed + 1)
                filled[r] -= 1
        return total

    return rec(0)
