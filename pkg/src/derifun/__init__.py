"""Exact evaluation of derived functors of non-additive functors."""
__version__ = "0.1.0"
