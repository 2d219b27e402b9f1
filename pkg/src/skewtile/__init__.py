"""Skew-gentle triples, skew-tilings and their combinatorial invariants."""

__version__ = "0.1.0"
