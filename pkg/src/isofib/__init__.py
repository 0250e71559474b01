"""Isotrivial fibrations with infinite automorphism groups: exact computations
in positive characteristic."""

__version__ = "0.1.0"
