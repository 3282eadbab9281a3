"""Relative position of two lattice classes and adapted frames.

The relative position is the tuple of elementary divisor exponents of the
change of basis matrix, diagonalized over the localization at p with a
deterministic pivot rule (smallest valuation, ties broken lexicographically
by row then column).  The tuple is normalized so its last entry is 0, which
makes it an invariant of the homothety classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ring import QQ, mat_inv, mat_mul
from .lattice import LatticeClass, canonicalize, val_p


@dataclass(frozen=True, order=True)
class RelativePosition:
    """Weakly decreasing exponent tuple (a_1 >= ... >= a_d = 0)."""
    a: tuple

    def __post_init__(self):
        if any(self.a[i] < self.a[i + 1] for i in range(len(self.a) - 1)):
            raise ValueError("exponents must be weakly decreasing")
        if self.a[-1] != 0:
            raise ValueError("exponents must be normalized to a_d = 0")

    @property
    def d(self):
        return len(self.a)

    def reversed(self):
        """Relative position of the pair taken in the other order."""
        a1 = self.a[0]
        return RelativePosition(tuple(a1 - x for x in reversed(self.a)))


def _smith_local(mat, p):
    """Diagonalize over Z_(p) by unimodular row and column operations.

    Returns (exponents by diagonal position, Pinv) where the input equals
    P^-1 . diag(p^exponents) . Q^-1 and Pinv is returned as a matrix of
    Fractions.  Pivot rule: minimal valuation, ties by (row, col).
    """
    d = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    pinv = [[Fraction(1) if i == j else Fraction(0) for j in range(d)]
            for i in range(d)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in pinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]

    def row_addmul(i, j, c):
        # R_i <- R_i - c R_j ; Pinv gets col_j += c col_i
        a[i] = [x - c * y for x, y in zip(a[i], a[j])]
        for r in pinv:
            r[j] += c * r[i]

    def row_scale(i, u):
        a[i] = [u * x for x in a[i]]
        uinv = 1 / u
        for r in pinv:
            r[i] *= uinv

    exps = [0] * d
    for k in range(d):
        piv = None
        pval = None
        for i in range(k, d):
            for j in range(k, d):
                if a[i][j] == 0:
                    continue
                v = val_p(a[i][j], p)
                if pval is None or v < pval:
                    pval, piv = v, (i, j)
        if piv is None:
            raise ValueError("matrix is singular")
        i0, j0 = piv
        if i0 != k:
            row_swap(k, i0)
        if j0 != k:
            col_swap(k, j0)
        row_scale(k, Fraction(p) ** pval / a[k][k])
        exps[k] = pval
        for i in range(d):
            if i != k and a[i][k] != 0:
                row_addmul(i, k, a[i][k] / a[k][k])
        for j in range(k + 1, d):
            if a[k][j] != 0:
                c = a[k][j] / a[k][k]
                for i in range(d):
                    a[i][j] -= c * a[i][k]
    # sort exponents descending by simultaneous row/col permutation
    order = sorted(range(d), key=lambda k: (-exps[k], k))
    perm_exps = [exps[k] for k in order]
    pinv_sorted = [[row[k] for k in order] for row in pinv]
    return perm_exps, pinv_sorted


def smith_valuations(mat, p):
    """Elementary divisor exponents, sorted weakly decreasing."""
    exps, _ = _smith_local(mat, p)
    return tuple(exps)


def _check_pair(x: LatticeClass, y: LatticeClass):
    if x.d != y.d or x.p != y.p:
        raise ValueError("lattice classes live in different buildings")


def relative_position(x: LatticeClass, y: LatticeClass) -> RelativePosition:
    _check_pair(x, y)
    xinv = mat_inv(QQ, x.rep_fractions())
    a = mat_mul(QQ, xinv, y.rep_fractions())
    exps = smith_valuations(a, x.p)
    last = exps[-1]
    return RelativePosition(tuple(e - last for e in exps))


def distance(x: LatticeClass, y: LatticeClass) -> int:
    return relative_position(x, y).a[0]


def adjacent(x: LatticeClass, y: LatticeClass) -> bool:
    return x != y and distance(x, y) <= 1


def adapted_frame(x: LatticeClass, y: LatticeClass):
    """Common frame for a pair of classes.

    Returns (frame, a) where frame is a matrix of Fractions whose columns
    span a representative of x, and scaling column i by p^{a_i} yields a
    representative of y.  a is the normalized relative position.
    """
    _check_pair(x, y)
    xmat = x.rep_fractions()
    xinv = mat_inv(QQ, xmat)
    a = mat_mul(QQ, xinv, y.rep_fractions())
    exps, pinv = _smith_local(a, x.p)
    frame = mat_mul(QQ, xmat, pinv)
    last = exps[-1]
    return frame, tuple(e - last for e in exps)


def vertex_at(frame, coords, p: int) -> LatticeClass:
    """Class of the lattice spanned by frame columns scaled by p^coords."""
    d = len(frame)
    cols = [[frame[i][j] * Fraction(p) ** coords[j] for i in range(d)]
            for j in range(d)]
    return canonicalize(cols, p)
