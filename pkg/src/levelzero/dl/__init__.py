"""Coxeter Deligne-Lusztig variety arithmetic.

Point counts over finite field towers, the mu_{q^d-1} action, Frobenius
eigenvalues on cohomology, dimension data for elliptic constituents, and
the Lefschetz reconciliation between geometric and spectral counts.
"""

from .ff import FiniteField
from .characters import CharacterData, character_orbits, is_primitive
from .variety import (moore_determinant, count_points, count_points_naive,
                      fixed_points, BudgetExceeded)
from .eigen import FrobeniusEigenvalue, frobenius_eigenvalue
from .dims import dimension, UnsupportedCase, supported_pairs
from .lefschetz import lefschetz_reconcile, spectral_breakdown

__all__ = [
    "FiniteField", "CharacterData", "character_orbits", "is_primitive",
    "moore_determinant", "count_points", "count_points_naive",
    "fixed_points", "BudgetExceeded", "FrobeniusEigenvalue",
    "frobenius_eigenvalue", "dimension", "UnsupportedCase",
    "supported_pairs", "lefschetz_reconcile", "spectral_breakdown",
]
