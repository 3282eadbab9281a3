"""Exact arithmetic in rings of cyclotomic integers Z[zeta_n].

Elements are integer polynomials reduced modulo the n-th cyclotomic
polynomial, which is computed by exact division of x^n - 1 by the
cyclotomic polynomials of the proper divisors of n.
"""

from __future__ import annotations

from functools import lru_cache


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_monic(a, b):
    """Divide by a monic integer polynomial; stays in Z[x]."""
    assert b and b[-1] == 1
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1]
        if c == 0:
            a.pop()
            continue
        deg = len(a) - len(b)
        q[deg] = c
        for i, y in enumerate(b):
            a[deg + i] -= c * y
        _poly_trim(a)
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficient tuple of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [0] * n + [1]
    num[0] = -1  # x^n - 1
    rem = num
    for d in range(1, n):
        if n % d == 0:
            rem, r = _poly_divmod_monic(rem, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(rem)


class CycInt:
    """An element of Z[zeta_n], reduced modulo the cyclotomic polynomial."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        phi = cyclotomic_polynomial(n)
        c = list(coeffs)
        if len(c) >= len(phi):
            _, c = _poly_divmod_monic(c, list(phi))
        c += [0] * (len(phi) - 1 - len(c))
        self.n = n
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, n):
        return cls(n, [])

    @classmethod
    def integer(cls, n, k):
        return cls(n, [k])

    @classmethod
    def root_power(cls, n, k):
        """zeta_n^k as an element of Z[zeta_n]."""
        k %= n
        return cls(n, [0] * k + [1])

    def __add__(self, other):
        other = self._coerce(other)
        return CycInt(self.n, [x + y for x, y in
                               zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._coerce(other)
        return CycInt(self.n, [x - y for x, y in
                               zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycInt(self.n, [-x for x in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        return CycInt(self.n, _poly_mul(list(self.coeffs),
                                        list(other.coeffs)))

    __radd__ = __add__
    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.n != self.n:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, int):
            return CycInt.integer(self.n, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.n, other)
        return (isinstance(other, CycInt) and self.n == other.n
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def as_int(self):
        """Return the rational integer this element equals, if any."""
        if any(c for c in self.coeffs[1:]):
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = f"z{self.n}" if i == 1 else f"z{self.n}^{i}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"
