"""Exact bar-construction calculus over the rationals and odd prime fields."""

__version__ = "0.1.0"
