"""
Homotopy Structures Testing Package

Testing suite for two-term homotopy structures.
"""

from .test_homotopy import main as run_homotopy_tests

__all__ = [
    "run_homotopy_tests",
]
