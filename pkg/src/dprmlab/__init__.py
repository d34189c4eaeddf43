"""Executable computability toolkit: mu-recursion, listable presentations,
positive-existential formulas and a function-field Diophantine lab."""

__version__ = "0.1.0"
