"""
Ordered Monoids for the Word Operad Construction

This module provides the monoids that monomial orders are built from: the
abstract ordered-monoid contract, the free monoid with its length-lex order,
and the quantum monomials monoid QM with its rewriting system and law
harnesses.
"""

__version__ = "0.1.0"
