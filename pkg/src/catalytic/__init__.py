"""Exact enumeration of permutations and involutions with bounded monotone subsequences.

Several independent routes (brute force, generating trees, Bessel
determinants, constant-term extraction, the Lambda orbit sum) compute the
same numbers and are cross-checked against each other.
"""

from .gentree import count_involutions, count_perms, count_restricted
from .permcore import Permutation

__all__ = ["Permutation", "count_perms", "count_involutions", "count_restricted"]
__version__ = "0.1.0"
