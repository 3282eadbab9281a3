"""Exact scalar rings (rationals, prime fields) and dense matrix helpers.

Matrices are lists of lists of ring elements.  Rationals are represented by
fractions.Fraction, prime field elements by ints in [0, ell).  All pivoting
is deterministic (first nonzero entry in row-major order) so that every
computation is reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction


class Rationals:
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def conv(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, ell: int):
        if ell < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.ell = ell
        self.name = f"F{ell}"
        self.zero = 0
        self.one = 1 % ell

    def conv(self, x):
        x = Fraction(x)
        den = x.denominator % self.ell
        if den == 0:
            raise ZeroDivisionError(
                f"denominator of {x} is not invertible mod {self.ell}")
        return x.numerator * pow(den, -1, self.ell) % self.ell

    def add(self, a, b):
        return (a + b) % self.ell

    def sub(self, a, b):
        return (a - b) % self.ell

    def mul(self, a, b):
        return (a * b) % self.ell

    def neg(self, a):
        return (-a) % self.ell

    def inv(self, a):
        if a % self.ell == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.ell)

    def is_zero(self, a):
        return a % self.ell == 0

    def __repr__(self):
        return self.name


QQ = Rationals()


def ring_by_name(name: str):
    """Map a ring tag like "QQ" or "F5" to a ring object."""
    if name == "QQ":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown ring tag {name!r}")


# ---------------------------------------------------------------- matrices


def mat_convert(ring, rows):
    return [[ring.conv(x) for x in row] for row in rows]


def mat_identity(ring, n):
    return [[ring.one if i == j else ring.zero for j in range(n)]
            for i in range(n)]


def mat_zero(ring, n, m):
    return [[ring.zero] * m for _ in range(n)]


def mat_mul(ring, a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    assert all(len(row) == k for row in a) or not a
    out = []
    for i in range(n):
        ai = a[i]
        row = [ring.zero] * m
        for t in range(k):
            c = ai[t]
            if ring.is_zero(c):
                continue
            bt = b[t]
            for j in range(m):
                if not ring.is_zero(bt[j]):
                    row[j] = ring.add(row[j], ring.mul(c, bt[j]))
        out.append(row)
    return out


def mat_add(ring, a, b):
    return [[ring.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(ring, a, b):
    return [[ring.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(ring, c, a):
    return [[ring.mul(c, x) for x in row] for row in a]


def mat_trace(ring, a):
    t = ring.zero
    for i in range(len(a)):
        t = ring.add(t, a[i][i])
    return t


def mat_eq(ring, a, b):
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not ring.is_zero(ring.sub(x, y)):
                return False
    return True


def mat_is_zero(ring, a):
    return all(ring.is_zero(x) for row in a for x in row)


def mat_rank(ring, a):
    """Rank by Gaussian elimination with deterministic pivoting."""
    m = [row[:] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if not ring.is_zero(m[r][col]):
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = ring.inv(m[row][col])
        m[row] = [ring.mul(inv, x) for x in m[row]]
        for r in range(nrows):
            if r != row and not ring.is_zero(m[r][col]):
                c = m[r][col]
                m[r] = [ring.sub(x, ring.mul(c, y))
                        for x, y in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def mat_inv(ring, a):
    n = len(a)
    m = [row[:] + ident_row for row, ident_row in
         zip(a, mat_identity(ring, n))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not ring.is_zero(m[r][col]):
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = ring.inv(m[col][col])
        m[col] = [ring.mul(inv, x) for x in m[col]]
        for r in range(n):
            if r != col and not ring.is_zero(m[r][col]):
                c = m[r][col]
                m[r] = [ring.sub(x, ring.mul(c, y))
                        for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


class QuotientBasis:
    """Coordinates on the cokernel of a matrix.

    Given the columns of a map into R^n, fixes the deterministic echelon
    basis of the image and presents the quotient on the complementary
    standard coordinates (the non-pivot rows, in increasing order).
    """

    def __init__(self, ring, columns, n):
        self.ring = ring
        self.n = n
        # echelon[pivot_row] = column normalized to 1 at pivot_row and 0 at
        # earlier pivot rows
        self.echelon = {}
        for col in columns:
            v = self._reduce(list(col))
            piv = None
            for i in range(n):
                if not ring.is_zero(v[i]):
                    piv = i
                    break
            if piv is None:
                continue
            inv = ring.inv(v[piv])
            self.echelon[piv] = [ring.mul(inv, x) for x in v]
        self.pivots = sorted(self.echelon)
        self.free = [i for i in range(n) if i not in self.echelon]

    def _reduce(self, v):
        ring = self.ring
        for piv in sorted(getattr(self, "echelon", {})):
            c = v[piv]
            if ring.is_zero(c):
                continue
            e = self.echelon[piv]
            v = [ring.sub(x, ring.mul(c, y)) for x, y in zip(v, e)]
        return v

    def coords(self, v):
        """Quotient coordinates of a vector, length = len(self.free)."""
        ring = self.ring
        w = list(v)
        changed = True
        while changed:
            changed = False
            for piv in self.pivots:
                if not ring.is_zero(w[piv]):
                    c = w[piv]
                    e = self.echelon[piv]
                    w = [ring.sub(x, ring.mul(c, y)) for x, y in zip(w, e)]
                    changed = True
        return [w[i] for i in self.free]

    @property
    def dim(self):
        return len(self.free)

    def quotient_matrix(self):
        """Matrix of the quotient projection R^n -> R^h."""
        cols = [self.coords([self.ring.one if i == j else self.ring.zero
                             for i in range(self.n)]) for j in range(self.n)]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.dim)]

    def section_matrix(self):
        """Matrix of the section R^h -> R^n on the free coordinates."""
        ring = self.ring
        out = mat_zero(ring, self.n, self.dim)
        for k, i in enumerate(self.free):
            out[i][k] = ring.one
        return out
