"""Noncommutative Groebner bases, Hilbert series and A-infinity structure
equations for graded algebras on two generators."""

__version__ = "0.1.0"
