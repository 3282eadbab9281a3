"""Iwahori-Hecke algebra of the symmetric group and hook combinatorics."""

from .partitions import (partitions_of, conjugate, dominates, is_hook,
                         hook_index)
from .hecke import HeckeElement, Poly, t_basis, hecke_mul, x_mu, poincare_poly
from .kostka import kostka, kostka_matrix, elliptic_coefficients, specht_dim
from .descents import ascent_set, descent_count, descent_table, is_interval

__all__ = [
    "partitions_of", "conjugate", "dominates", "is_hook", "hook_index",
    "HeckeElement", "Poly", "t_basis", "hecke_mul", "x_mu", "poincare_poly",
    "kostka", "kostka_matrix", "elliptic_coefficients", "specht_dim",
    "ascent_set", "descent_count", "descent_table", "is_interval",
]
