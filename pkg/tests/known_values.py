"""Reference sequences, each confirmed by the brute-force enumerators in ``catalytic.oracle``."""

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
# permutations avoiding 1234, n = 0..8
AVOID_1234 = [1, 1, 2, 6, 23, 103, 513, 2761, 15767]
