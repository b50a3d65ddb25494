"""
Constructions Testing Package

Testing suite for quotients, LM objects, adjunctions and operator constructions.
"""

from .test_constructions import main as run_construction_tests

__all__ = [
    "run_construction_tests",
]
