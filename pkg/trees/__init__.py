"""
Shuffle Tree Monomials

This package holds the combinatorial core of the project: tree monomials of
the free shuffle operad, their composition, divisibility (occurrences and
overlaps) and exhaustive enumeration by arity, plus the textual syntax
``mu(1, lam(2, 3))`` used by the CLI and the test fixtures.
"""

__version__ = "0.1.0"
