"""
Separators and disjoint branches decompositions.
"""

from . import compute_db, separator  # noqa: F401
