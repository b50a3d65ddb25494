"""
Documents and CLI Testing Package

Testing suite for the document layer and the command-line surface.
"""

from .test_cli import main as run_cli_tests

__all__ = [
    "run_cli_tests",
]
