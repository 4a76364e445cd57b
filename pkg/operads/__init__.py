"""
Word Operads and Tree Morphisms

This module provides the word operad W_M over any monoid, its shuffle
composition, and the morphisms from free shuffle operads into it: path
sequences, permutations and arbitrary generator assignments such as the
psi map of the Poisson order.
"""

__version__ = "0.1.0"
