"""Finite field towers with reproducible element encodings.

Elements of F_{p^n} are integers in [0, p^n) encoding polynomial
coefficients base p (least significant digit = constant term), reduced
modulo the lexicographically smallest monic irreducible of degree n.
Multiplication goes through discrete log tables against a certified
generator, so the fields here are meant for small sizes only.
"""

import itertools
from functools import lru_cache


def _poly_mulmod(a, b, mod, p):
    """Product of coefficient tuples a, b reduced mod the monic tuple mod."""
    n = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * mod[j]) % p
    return tuple(out[:n]) + (0,) * (n - len(out))


def _poly_powmod(a, e, mod, p):
    n = len(mod) - 1
    r = (1,) + (0,) * (n - 1)
    base = tuple(a) + (0,) * (n - len(a))
    while e:
        if e & 1:
            r = _poly_mulmod(r, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return r


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)

    def deg(f):
        d = len(f) - 1
        while d >= 0 and f[d] % p == 0:
            d -= 1
        return d

    while deg(b) >= 0:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db], -1, p)
        while deg(a) >= db:
            da = deg(a)
            c = a[da] * inv % p
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        a, b = b, a
    d = deg(a)
    return tuple(x % p for x in a[:d + 1])


def _is_irreducible(mod, p):
    """Rabin test: x^{p^n} = x and gcd(x^{p^{n/l}} - x, mod) = 1."""
    n = len(mod) - 1
    assert n >= 2
    x = (0, 1)
    if _poly_powmod(x, p ** n, mod, p) != (0, 1) + (0,) * (n - 2):
        return False
    for ell in set(_prime_factors(n)):
        h = _poly_powmod(x, p ** (n // ell), mod, p)
        diff = tuple((h[i] - (1 if i == 1 else 0)) % p for i in range(n))
        g = _poly_gcd(diff, mod, p)
        if len(g) - 1 != 0:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _find_modulus(p, n):
    """Lexicographically smallest monic irreducible of degree n over F_p."""
    if n == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=n):
        mod = tuple(low) + (1,)
        if mod[0] == 0:
            continue
        if _is_irreducible(mod, p):
            return mod
    raise RuntimeError("no irreducible polynomial found")


class FiniteField:
    """F_{p^n} with log/exp tables; elements are ints in [0, p^n)."""

    def __init__(self, p, n):
        self.p = p
        self.n = n
        self.size = p ** n
        self.modulus = _find_modulus(p, n)
        self._tuples = [self._int_to_tuple(i) for i in range(self.size)]
        self.generator = self._find_generator()
        self._build_tables()

    def _int_to_tuple(self, i):
        out = []
        for _ in range(self.n):
            out.append(i % self.p)
            i //= self.p
        return tuple(out)

    def _tuple_to_int(self, t):
        out = 0
        for c in reversed(t):
            out = out * self.p + c
        return out

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        ta, tb = self._tuples[a], self._tuples[b]
        return self._tuple_to_int(tuple((x + y) % self.p
                                        for x, y in zip(ta, tb)))

    def neg(self, a):
        return self._tuple_to_int(tuple((-x) % self.p
                                        for x in self._tuples[a]))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _raw_mul(self, a, b):
        return self._tuple_to_int(_poly_mulmod(
            self._tuples[a], self._tuples[b], self.modulus, self.p))

    def _element_order(self, a):
        ord_ = 1
        x = a
        while x != 1:
            x = self._raw_mul(x, a)
            ord_ += 1
        return ord_

    def _find_generator(self):
        target = self.size - 1
        for a in range(2, self.size):
            if self._element_order(a) == target:
                return a
        if self.size == 2:
            return 1
        raise RuntimeError("multiplicative group not cyclic?")

    def _build_tables(self):
        self._exp = [1] * (self.size - 1)
        self._log = {1: 0}
        x = 1
        for k in range(1, self.size - 1):
            x = self._raw_mul(x, self.generator)
            self._exp[k] = x
            self._log[x] = k
        assert len(self._log) == self.size - 1, "generator not certified"

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        k = self._log[a] + self._log[b]
        return self._exp[k % (self.size - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of 0")
            return 0
        return self._exp[(self._log[a] * e) % (self.size - 1)]

    def dlog(self, a):
        """Exponent of a against the certified generator."""
        if a == 0:
            raise ValueError("dlog of 0")
        return self._log[a]

    def minus_one(self):
        return self.neg(1)

    def elements(self):
        return range(self.size)

    def units(self):
        return range(1, self.size)

    def from_prime_subfield(self, c):
        """Embed an integer mod p (constant polynomial)."""
        return c % self.p

    def subfield_generator(self, m):
        """Generator of the subfield of size p^m, m | n."""
        assert self.n % m == 0
        if self.p ** m == 2:
            return 1
        return self.pow(self.generator,
                        (self.size - 1) // (self.p ** m - 1))

    def degree_over(self, a, q):
        """Degree of a over the subfield of size q (orbit size of x -> x^q)."""
        x = self.pow(a, q)
        deg = 1
        while x != a:
            x = self.pow(x, q)
            deg += 1
        return deg

    def __repr__(self):
        return f"FiniteField(p={self.p}, n={self.n})"


@lru_cache(maxsize=None)
def get_field(p, n):
    return FiniteField(p, n)


def split_prime_power(q):
    """Return (p, r) with q = p^r, or raise ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, r
    raise ValueError(f"{q} is not a prime power")
