"""Homothety classes of lattices over Z localized at p.

A lattice in Q^d is given by d column vectors with rational entries whose
denominators and unit parts only matter up to the prime p.  The canonical
representative of a homothety class is the column Hermite form over the
localization: upper triangular, diagonal entries powers of p, off-diagonal
entries reduced to integer residues, and the minimal diagonal exponent
normalized to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def val_p(x, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _residue_mod_ppow(x, p: int, k: int) -> int:
    """Canonical residue in [0, p^k) of a p-integral rational."""
    x = Fraction(x)
    m = p ** k
    den = x.denominator % m
    return x.numerator * pow(den, -1, m) % m


def _hnf_local(cols, p):
    """Column Hermite form over Z_(p).

    cols is a list of d columns (lists of Fractions).  Returns the reduced
    matrix as a list of rows of ints together with the diagonal exponents.
    Column operations only, so the lattice spanned is unchanged.
    """
    d = len(cols)
    cols = [[Fraction(x) for x in col] for col in cols]
    exps = [0] * d
    for row in range(d - 1, -1, -1):
        piv = None
        pval = None
        for j in range(row + 1):
            x = cols[j][row]
            if x == 0:
                continue
            v = val_p(x, p)
            if pval is None or v < pval:
                pval, piv = v, j
        if piv is None:
            raise ValueError("columns do not span a full lattice")
        cols[row], cols[piv] = cols[piv], cols[row]
        unit = Fraction(p) ** pval / cols[row][row]
        cols[row] = [unit * x for x in cols[row]]
        exps[row] = pval
        for j in range(row):
            x = cols[j][row]
            if x != 0:
                c = x / cols[row][row]
                cols[j] = [a - c * b for a, b in zip(cols[j], cols[row])]
    # reduce off-diagonal entries to canonical residues
    for k in range(d):
        for j in range(k - 1, -1, -1):
            x = cols[k][j]
            r = _residue_mod_ppow(x, p, exps[j])
            c = (x - r) / Fraction(p) ** exps[j]
            cols[k] = [a - c * b for a, b in zip(cols[k], cols[j])]
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            x = cols[j][i]
            assert x.denominator % p != 0
            row.append(_residue_mod_ppow(x, p, exps[i]) if i != j
                       else p ** exps[i])
        rows.append(tuple(row))
    return rows, exps


@dataclass(frozen=True, order=True)
class LatticeClass:
    """A vertex of the building: a lattice class in canonical Hermite form."""
    d: int
    p: int
    rep: tuple

    def rep_fractions(self):
        return [[Fraction(x) for x in row] for row in self.rep]

    def diagonal_exponents(self):
        return tuple(val_p(self.rep[i][i], self.p) for i in range(self.d))

    def __repr__(self):
        return f"LatticeClass(d={self.d}, p={self.p}, rep={self.rep})"


def canonicalize(columns, p: int) -> LatticeClass:
    """Canonical class representative of the lattice spanned by columns."""
    d = len(columns)
    if any(len(c) != d for c in columns):
        raise ValueError("expected a square system of columns")
    cols = [[Fraction(x) for x in col] for col in columns]
    # scale to p-integral entries so all Hermite pivots have exponent >= 0
    vmin = min((val_p(x, p) for col in cols for x in col if x != 0),
               default=None)
    if vmin is None:
        raise ValueError("columns do not span a full lattice")
    if vmin < 0:
        scale = Fraction(p) ** (-vmin)
        cols = [[scale * x for x in col] for col in cols]
    rows, _ = _hnf_local(cols, p)
    # the minimal elementary divisor is the gcd of all entries
    m = min(val_p(x, p) for row in rows for x in row if x != 0)
    if m != 0:
        scale = Fraction(1, p ** m)
        cols = [[scale * Fraction(rows[i][j]) for i in range(d)]
                for j in range(d)]
        rows, _ = _hnf_local(cols, p)
        assert min(val_p(x, p) for row in rows for x in row if x != 0) == 0
    return LatticeClass(d=d, p=p, rep=tuple(rows))


def standard_vertex(d: int, p: int) -> LatticeClass:
    """Class of the standard lattice."""
    rep = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    return LatticeClass(d=d, p=p, rep=rep)
