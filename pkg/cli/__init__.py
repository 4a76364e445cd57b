"""
Command-Line Interface

This module provides the ``wordorders`` command: Groebner completion,
dimension tables, property suites, stage-by-stage comparison of trees and
normal forms of polynomials, with text or JSON reports.
"""

__version__ = "0.1.0"
