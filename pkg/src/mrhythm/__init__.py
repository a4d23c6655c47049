"""Marked rhythm CLI - smoothing rhythms by reformation and checking the theory."""

__version__ = "0.1.0"
