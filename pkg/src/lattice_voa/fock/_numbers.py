"""Exact rationals for the Fock engine.

gmpy2's ``mpq`` behaves like ``fractions.Fraction`` (it compares and hashes
equal to it) but is an order of magnitude faster on the long sums here.
"""

from gmpy2 import mpq as Q

__all__ = ["Q"]
