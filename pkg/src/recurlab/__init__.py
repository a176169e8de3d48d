"""Exact-arithmetic experiments on sets of multiplicative recurrence."""

__version__ = "0.1.0"
