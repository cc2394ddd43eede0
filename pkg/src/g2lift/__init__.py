"""Exact-arithmetic realization of split G2 with the level-one
modular-form pipeline feeding quaternionic lift Fourier coefficients."""

__version__ = "0.1.0"
