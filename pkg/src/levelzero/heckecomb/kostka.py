"""Kostka numbers by tableau enumeration and the elliptic coefficients.

The transition matrix between induced-trivial modules and Specht modules
is the Kostka matrix, unitriangular for dominance; its inverse transpose
gives the coefficients a_{lam,mu} expressing a Specht class as an integer
combination of induced classes. The column at mu = (e) is supported
exactly on hooks.
"""

from fractions import Fraction
from functools import lru_cache

from .partitions import partitions_of


def _ssyt_count(shape, content):
    """Number of semistandard tableaux of given shape and content.

    Entries weakly increase along rows, strictly down columns; content[i]
    copies of value i+1. Filled cell by cell, row by row, with pruning via
    remaining counts.
    """
    rows = len(shape)
    values = len(content)

    def rec(cells, remaining):
        if not cells:
            return 1
        (r, c) = cells[0]
        total = 0
        for v in range(values):
            if remaining[v] == 0:
                continue
            if c > 0 and grid[r][c - 1] > v:
                continue
            if r > 0 and grid[r - 1][c] >= v:
                continue
            grid[r][c] = v
            remaining[v] -= 1
            total += rec(cells[1:], remaining)
            remaining[v] += 1
            grid[r][c] = None
        return total

    grid = [[None] * shape[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(shape[r])]
    return rec(cells, list(content))


def kostka(lam, mu):
    """K_{lam,mu}: semistandard tableaux of shape lam, content mu."""
    assert sum(lam) == sum(mu)
    return _ssyt_count(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def kostka_matrix(e):
    """Kostka matrix over partitions of e in reverse lex order."""
    parts = partitions_of(e)
    return parts, [[kostka(lam, mu) for mu in parts] for lam in parts]


@lru_cache(maxsize=None)
def elliptic_coefficients(e):
    """Matrix a_{lam,mu} with [S_lam] = sum_mu a_{lam,mu} [Ind_mu 1].

    The Kostka relation reads [Ind_mu 1] = sum_lam K_{lam,mu} [S_lam], so
    a is the inverse transpose of the Kostka matrix; unitriangularity
    makes the inverse integral.
    """
    parts, K = kostka_matrix(e)
    n = len(parts)
    # invert K^T over the rationals, then cast to int
    m = [[Fraction(K[j][i]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = 1 / m[col][col]
        m[col] = [x * scale for x in m[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - c * y for x, y in zip(inv[r], inv[col])]
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row)
        out.append([int(x) for x in row])
    return parts, out


def elliptic_coefficient(lam, mu):
    e = sum(lam)
    parts, a = elliptic_coefficients(e)
    return a[parts.index(tuple(lam))][parts.index(tuple(mu))]


def specht_dim(lam):
    """Hook length formula: n! / prod of hooks."""
    from math import factorial
    lam = tuple(lam)
    n = sum(lam)
    conj = [sum(1 for part in lam if part > c) for c in range(lam[0])] \
        if lam else []
    prod = 1
    for r, part in enumerate(lam):
        for c in range(part):
            prod *= (part - c) + (conj[c] - r) - 1
    assert factorial(n) % prod == 0
    return factorial(n) // prod
