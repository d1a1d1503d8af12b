"""
Command-line frontend: argument parsing, dispatch and report rendering.

The entry point is ``src.cli.main.main``; this package does not re-export it,
so ``src.cli.main`` stays the module.
"""

from src.cli.main import build_parser, run

__all__ = ["build_parser", "run"]
