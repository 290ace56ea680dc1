"""Permutation and involution primitives.

Permutations are words on ``1..n`` in one-line notation.  Most functions
accept any integer sequence so the enumerators can pass plain tuples; the
:class:`Permutation` wrapper validates and parses.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence


class PatternError(ValueError):
    """Raised when a permutation contains a pattern the caller forbade."""


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation: ``"8 5 9 6 1 3 7 4 2"``, or ``"13425"`` when n <= 9."""
        tokens = text.split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        return cls(tuple(int(tok) for tok in tokens))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def reverse(self) -> "Permutation":
        return Permutation(self.word[::-1])


def _words(p) -> tuple[int, ...]:
    return p.word if isinstance(p, Permutation) else tuple(p)


def lis_length(p: Sequence[int]) -> int:
    """Length of the longest ascending subsequence (patience sorting)."""
    tails: list[int] = []
    for v in _words(p):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def lds_length(p: Sequence[int]) -> int:
    """Length of the longest descending subsequence."""
    return lis_length([-v for v in _words(p)])


def avoids_ascending(p: Sequence[int], m: int) -> bool:
    """True iff ``p`` avoids ``12...m(m+1)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return lis_length(p) <= m


def perm_labels(p: Sequence[int], m: int) -> tuple[int, ...]:
    """Return the generating-tree label ``(a_2, ..., a_m)`` of ``p``.

    ``a_j`` is the smallest position at which an occurrence of ``12...j``
    ends, or ``n+1`` if there is none.  The LIS of the prefix ending at
    position ``i`` reaches ``j`` exactly at the first such position, so a
    single patience-sorting sweep gives every ``a_j``.  (``a_1`` is always 1
    and is not included.)
    """
    word = _words(p)
    n = len(word)
    first_end = [n + 1] * (m + 1)
    tails: list[int] = []
    for pos, v in enumerate(word, start=1):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
            if len(tails) > m:
                raise PatternError(f"{word} contains 12...{m + 1}")
            first_end[len(tails)] = pos
        else:
            tails[k] = v
    return tuple(first_end[2:m + 1])


def is_involution(p: Sequence[int]) -> bool:
    word = _words(p)
    return all(word[v - 1] == i for i, v in enumerate(word, start=1))


def fixed_point_count(p: Sequence[int]) -> int:
    word = _words(p)
    if not is_involution(word):
        raise ValueError(f"{word} is not an involution")
    return sum(1 for i, v in enumerate(word, start=1) if v == i)


def inv_labels(p: Sequence[int], m: int) -> tuple[int, ...]:
    """Return the label ``(a_1, ..., a_l)`` of an involution avoiding ``(m+1)...21``.

    With ``m = 2l + eps``, ``a_j = n + 1 - i_1`` where ``i_1`` is the largest
    start of a decreasing chain ``tau(i_1) > ... > tau(i_j) >= i_j + eps``,
    and ``a_j = n + 1`` when no such chain exists.  Every point of such a
    chain lies on or above the shifted diagonal, so chains are searched among
    those points only.
    """
    word = _words(p)
    if not is_involution(word):
        raise ValueError(f"{word} is not an involution")
    if lds_length(word) > m:
        raise PatternError(f"{word} contains {m + 1}...21")
    n = len(word)
    ell, eps = divmod(m, 2)
    top = [i for i in range(1, n + 1) if word[i - 1] >= i + eps]
    # longest decreasing chain starting at each point, scanning right to left
    chain: dict[int, int] = {}
    for idx in reversed(range(len(top))):
        i = top[idx]
        best = 0
        for k in top[idx + 1:]:
            if word[k - 1] < word[i - 1] and chain[k] > best:
                best = chain[k]
        chain[i] = best + 1
    labels = []
    for j in range(1, ell + 1):
        starts = [i for i in top if chain[i] >= j]
        labels.append(n + 1 - max(starts) if starts else n + 1)
    return tuple(labels)


def sign(p: Sequence[int]) -> int:
    """Sign of a permutation, ``(-1)**inversions``, via cycle decomposition."""
    word = _words(p)
    seen = [False] * len(word)
    parity = 0
    for start in range(len(word)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = word[i] - 1
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1
