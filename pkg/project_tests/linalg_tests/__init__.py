"""
Exact Linear Algebra Testing Package

Testing suite for rationals, row reduction, subspaces and quotients.
"""

from .test_exact_linalg import main as run_linalg_tests

__all__ = [
    "run_linalg_tests",
]
