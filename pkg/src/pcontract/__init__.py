"""Parabolic contractions of simple Lie algebras and their semi-invariants."""

__version__ = "0.1.0"
