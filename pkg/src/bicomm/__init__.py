"""Exact computations in the free bicommutative algebra and its subvarieties."""

__version__ = "0.1.0"
