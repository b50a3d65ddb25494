"""
Algebra Core Testing Package

Testing suite for structure constants and axiom checkers.
"""

from .test_algebra_core import main as run_algebra_tests

__all__ = [
    "run_algebra_tests",
]
