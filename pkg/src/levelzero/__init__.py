"""Exact computations around lattice buildings for GL_d over a p-adic field,
orbit coefficient systems and their homology, point counts on a twisted
Frobenius variety over finite fields, and the combinatorial bookkeeping
(Hecke algebras, Kostka matrices, character tables) that ties them together.

Everything is computed with exact arithmetic: Python integers, fractions,
prime fields, and cyclotomic integers.  No floating point enters any
result.
"""

__version__ = "0.1.0"
