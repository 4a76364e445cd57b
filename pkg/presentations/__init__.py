"""
Operad Presentations

This module provides the built-in presentations (com, ass, lie, pois), the
expansion of symmetric relations on binary generators into shuffle relations
and the presentation file format read by the command line.
"""

__version__ = "0.1.0"
