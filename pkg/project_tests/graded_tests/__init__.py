"""
Graded Structures Testing Package

Testing suite for filtrations and graded Poisson dialgebras.
"""

from .test_graded import main as run_graded_tests

__all__ = [
    "run_graded_tests",
]
