"""
Admissible Monomial Orders on Shuffle Trees

This module provides orders built from stages (word operad images,
path-lexicographic comparison, permutations), the Poisson order coming from
the quantum monomials monoid, an order-spec syntax for the command line and
the admissibility harness.
"""

__version__ = "0.1.0"
