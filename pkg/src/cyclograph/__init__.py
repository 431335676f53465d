"""Cyclotomic Hermitian matrices over Z, Z[i] and Z[omega] as charged graphs."""

__version__ = "0.1.0"
