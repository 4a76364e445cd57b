"""
Groebner Bases for Shuffle Operads

This module provides tree polynomials with exact rational coefficients,
operadic division, bounded Buchberger completion with a JSON report and the
two dimension counts (normal forms and the exact-rank ideal oracle) used to
cross-check a basis.
"""

__version__ = "0.1.0"
