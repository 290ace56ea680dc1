"""Generating-tree dynamic programming over label vectors.

A level of the tree is stored as a histogram ``label -> count``.  Growing
one level applies the succession rule to every label at once, so the cost
depends on the number of distinct labels rather than on the number of
permutations.  The truncated generating functions assembled from these
histograms are checked against the functional equations coefficientwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable

from .laurent import InexactDivision, LaurentPoly
from .oracle import CountRecord

Label = tuple[int, ...]
# involution histograms carry the fixed-point count next to the label
InvKey = tuple[Label, int]


class LabelError(ValueError):
    """A label vector is not weakly increasing or out of range."""


@dataclass
class LabelHistogram:
    level: int
    counts: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())


def _check_label(label: Label, start: int) -> None:
    prev = start
    for a in label:
        if a < prev:
            raise LabelError(f"label {label} is not weakly increasing from {start}")
        prev = a


def perm_children(label: Label) -> list[Label]:
    """Children labels of one node (one entry per child, ``a_m`` in all)."""
    _check_label(label, 1)
    a = (1,) + label
    m = len(a)
    kids = [tuple(x + 1 for x in label)]
    for j in range(2, m + 1):
        # 0-based: a[j-1] is a_j
        head = a[1:j - 1]
        tail = tuple(x + 1 for x in a[j:])
        for alpha in range(a[j - 2] + 1, a[j - 1] + 1):
            kids.append(head + (alpha,) + tail)
    return kids


def grow_perm_level(h: LabelHistogram, m: int) -> LabelHistogram:
    """Apply the permutation succession rule to a whole level."""
    out: dict[Label, int] = defaultdict(int)
    for label, c in h.counts.items():
        if len(label) != m - 1:
            raise LabelError(f"label {label} has wrong length for m={m}")
        for kid in perm_children(label):
            out[kid] += c
    return LabelHistogram(h.level + 1, dict(out))


def perm_levels(m: int, n_max: int, root: LabelHistogram | None = None,
                grow: Callable | None = None):
    """Yield the histograms from the root level up to ``n_max``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    grow = grow or grow_perm_level
    h = root or LabelHistogram(0, {(1,) * (m - 1): 1})
    while h.level <= n_max:
        yield h
        if h.level == n_max:
            break
        h = grow(h, m)


def inv_children(label: Label, m: int) -> tuple[Label, list[Label]]:
    """Return ``(fixed-point child, 2-cycle children)`` of an involution label."""
    ell = m // 2
    if len(label) != ell:
        raise LabelError(f"label {label} has wrong length for m={m}")
    _check_label(label, 1)
    if m % 2:
        fixed = tuple(x + 1 for x in label)
    else:
        fixed = (1,) + tuple(x + 1 for x in label[1:])
    a = (0,) + label
    cycles = []
    for j in range(1, ell + 1):
        head = tuple(x + 1 for x in a[1:j])
        tail = tuple(x + 2 for x in a[j + 1:])
        for alpha in range(a[j - 1] + 2, a[j] + 2):
            cycles.append(head + (alpha,) + tail)
    return fixed, cycles


def grow_inv_level(levels: list[LabelHistogram], m: int,
                   track_fixed_points: bool = True) -> LabelHistogram:
    """Build the histogram at length ``len(levels)`` from the two previous lengths.

    Keys are ``(label, fixed_points)``; with ``track_fixed_points`` False the
    fixed-point component is kept at 0.
    """
    n = len(levels)
    out: dict[InvKey, int] = defaultdict(int)
    if n >= 1:
        for (label, fp), c in levels[n - 1].counts.items():
            fixed, _ = inv_children(label, m)
            out[fixed, fp + 1 if track_fixed_points else 0] += c
    if n >= 2:
        for (label, fp), c in levels[n - 2].counts.items():
            _, cycles = inv_children(label, m)
            for kid in cycles:
                out[kid, fp] += c
    return LabelHistogram(n, dict(out))


def inv_levels(m: int, n_max: int, track_fixed_points: bool = True) -> list[LabelHistogram]:
    if m < 1:
        raise ValueError("m must be >= 1")
    levels = [LabelHistogram(0, {((1,) * (m // 2), 0): 1})]
    while len(levels) <= n_max:
        levels.append(grow_inv_level(levels, m, track_fixed_points))
    return levels


def count_perms(m: int, n: int) -> int:
    """Number of permutations of length ``n`` avoiding ``12...m(m+1)``."""
    *_, last = perm_levels(m, n)
    return last.total()


def perm_counts(m: int, n_max: int) -> list[int]:
    return [h.total() for h in perm_levels(m, n_max)]


def count_involutions(m: int, n: int, by_fixed_points: bool = False) -> list[CountRecord]:
    """Involutions of length ``n`` avoiding ``(m+1)...21``, optionally split by fixed points."""
    level = inv_levels(m, n, track_fixed_points=by_fixed_points)[n]
    if not by_fixed_points:
        return [CountRecord(m, n, level.total())]
    by_fp: dict[int, int] = defaultdict(int)
    for (_, fp), c in level.counts.items():
        by_fp[fp] += c
    return [CountRecord(m, n, c, fixed_points=p) for p, c in sorted(by_fp.items())]


def involution_counts(m: int, n_max: int) -> list[int]:
    return [h.total() for h in inv_levels(m, n_max, track_fixed_points=False)]


def restricted_root(m: int) -> LabelHistogram:
    """Level ``m`` holding only ``12...m``, whose label is ``(2, 3, ..., m)``."""
    return LabelHistogram(m, {tuple(range(2, m + 1)): 1})


def count_restricted(m: int, n: int) -> int:
    """Avoiders of ``12...m(m+1)`` of length ``n`` in which ``1..m`` occur in order."""
    if n < m:
        raise ValueError("restricted class needs n >= m")
    *_, last = perm_levels(m, n, root=restricted_root(m))
    return last.total()


# -- truncated generating functions -------------------------------------------

@dataclass
class MultiSeries:
    """Coefficients of ``t^0 .. t^order``, each a polynomial in the catalytic variables."""
    nvars: int
    coeffs: list[LaurentPoly]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return LaurentPoly.constant(self.nvars, 0)

    def specialize_all_ones(self) -> list[int]:
        return [sum(c for _, c in poly.items()) for poly in self.coeffs]


def perm_weight(label: Label, n: int) -> tuple[int, ...]:
    """Exponents ``(a_2 - 1, a_3 - a_2, ..., n + 1 - a_m)``."""
    a = (1,) + label + (n + 1,)
    return tuple(a[i + 1] - a[i] for i in range(len(a) - 1))


def inv_weight(label: Label) -> tuple[int, ...]:
    """Exponents ``(a_1, a_2 - a_1, ..., a_l - a_{l-1})``."""
    a = (0,) + label
    return tuple(a[i + 1] - a[i] for i in range(len(a) - 1))


def assemble_F(m: int, order: int, grow: Callable | None = None) -> MultiSeries:
    """``F(v_1, ..., v_m; t)`` truncated after ``t^order``."""
    coeffs = []
    for h in perm_levels(m, order, grow=grow):
        terms: dict = defaultdict(int)
        for label, c in h.counts.items():
            terms[perm_weight(label, h.level)] += c
        coeffs.append(LaurentPoly(m, terms))
    return MultiSeries(m, coeffs)


def assemble_G(m: int, order: int, with_s: bool = False) -> MultiSeries:
    """``G(v_1, ..., v_l; t)``, with the fixed-point marker ``s`` as a last variable if asked."""
    ell = m // 2
    nvars = ell + (1 if with_s else 0)
    coeffs = []
    for h in inv_levels(m, order, track_fixed_points=with_s):
        terms: dict = defaultdict(int)
        for (label, fp), c in h.counts.items():
            exps = inv_weight(label) + ((fp,) if with_s else ())
            terms[exps] += c
        coeffs.append(LaurentPoly(nvars, terms))
    return MultiSeries(nvars, coeffs)


def _divided_difference(poly: LaurentPoly, a: int, b: int | None) -> LaurentPoly:
    """``(P - P|_{v_a := v_b}) / (v_a - v_b)``; ``b`` None means ``v_b = 1``."""
    numerator = poly - poly.substitute_variable(a, b)
    return numerator.divide_linear(a, b)


def perm_equation_rhs(F: MultiSeries, m: int, k: int) -> LaurentPoly:
    """``[t^k]`` of ``1 + t v_1 F + t sum_j v_{j-1} v_j (F - F|_{v_{j-1}:=v_j}) / (v_{j-1} - v_j)``."""
    nv = F.nvars
    rhs = LaurentPoly.constant(nv, 1 if k == 0 else 0)
    if k == 0:
        return rhs
    prev = F[k - 1]
    rhs = rhs + LaurentPoly.var(nv, 1) * prev
    for j in range(2, m + 1):
        dd = _divided_difference(prev, j - 1, j)
        rhs = rhs + LaurentPoly.var(nv, j - 1) * LaurentPoly.var(nv, j) * dd
    return rhs


def verify_perm_equation(m: int, order: int, F: MultiSeries | None = None) -> bool:
    """Check the permutation functional equation coefficientwise up to ``t^order``."""
    F = F or assemble_F(m, order)
    try:
        return all(F[k] == perm_equation_rhs(F, m, k) for k in range(order + 1))
    except InexactDivision:
        return False


def inv_equation_rhs(G: MultiSeries, m: int, k: int, with_s: bool) -> LaurentPoly:
    """``[t^k]`` of the right-hand side of the involution equation.

    ``v_{l+1}`` is 1, which matches the change of variables that maps it to
    ``1/(1 - t*0)``.
    """
    ell = m // 2
    nv = G.nvars
    s = LaurentPoly.var(nv, nv) if with_s else LaurentPoly.constant(nv, 1)
    v = [None] + [LaurentPoly.var(nv, i) for i in range(1, ell + 1)]
    one = LaurentPoly.constant(nv, 1)
    zero = LaurentPoly.constant(nv, 0)
    rhs = v[1] if (k == 0 and ell) else (one if k == 0 else zero)
    if k == 0:
        return rhs
    if ell == 0:
        # m = 1: only fixed points, G = 1 + s t G
        return s * G[k - 1]
    if m % 2:
        rhs = rhs + s * v[1] * G[k - 1]
    else:
        shifted = G[k - 1].substitute_variable(1, 2 if ell >= 2 else None)
        rhs = rhs + s * v[1] * shifted
    if k >= 2:
        prev = G[k - 2]
        for j in range(1, ell + 1):
            nxt = j + 1 if j < ell else None
            vj1 = v[nxt] if nxt else one
            dd = _divided_difference(prev, j, nxt)
            rhs = rhs + v[1] * v[j] * vj1 * dd
    return rhs


def verify_inv_equation(m: int, order: int, with_s: bool = False) -> bool:
    """Check the involution functional equation (optionally s-refined) up to ``t^order``."""
    G = assemble_G(m, order, with_s)
    try:
        return all(G[k] == inv_equation_rhs(G, m, k, with_s) for k in range(order + 1))
    except InexactDivision:
        return False
