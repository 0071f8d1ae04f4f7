"""Invariants of right-angled Coxeter groups, their Artin groups and the
adjoint groups of their Coxeter quandles."""

__version__ = "0.1.0"
