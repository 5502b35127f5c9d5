"""The exact rational type used for every coordinate and letter value.

``gmpy2.mpq`` is a drop-in for :class:`fractions.Fraction` (same ``p/q``
printing, same hash, mixed comparisons work) and several times faster,
which matters for the exhaustive move searches.
"""
from fractions import Fraction

from gmpy2 import mpq as Rat

RAT_TYPES = (type(Rat(0)), Fraction)

__all__ = ["Rat", "RAT_TYPES"]
