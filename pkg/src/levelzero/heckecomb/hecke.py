"""Generic Iwahori-Hecke algebra H_t(S_n) in the T-basis.

Coefficients are integer polynomials in the parameter t; specializing
t = 1 recovers the group algebra of S_n. Products are computed by the
generator relations

    T_s T_w = T_{sw}               if l(sw) > l(w),
    T_s T_w = t T_{sw} + (t-1) T_w otherwise,

applied along a reduced word of the left factor.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache


class Poly:
    """Integer polynomial in t, coefficient tuple, constant term first."""

    __slots__ = ("c",)

    def __init__(self, c=()):
        c = tuple(c)
        while c and c[-1] == 0:
            c = c[:-1]
        self.c = c

    @staticmethod
    def const(n):
        return Poly((n,))

    @staticmethod
    def t():
        return Poly((0, 1))

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + (b[i] if i < len(b) else 0)
                          for i, x in enumerate(a)))

    def __neg__(self):
        return Poly(tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.c or not other.c:
            return Poly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(other.c):
                out[i + j] += x * y
        return Poly(out)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def __call__(self, value):
        out = 0
        for coef in reversed(self.c):
            out = out * value + coef
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            if i == 0:
                terms.append(str(x))
            elif i == 1:
                terms.append(f"{x}*t" if x != 1 else "t")
            else:
                terms.append(f"{x}*t^{i}" if x != 1 else f"t^{i}")
        return " + ".join(terms)


def perm_identity(n):
    return tuple(range(n))


def perm_compose(u, v):
    """(u*v)(i) = u(v(i))."""
    return tuple(u[v[i]] for i in range(len(u)))


def perm_length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def simple_reflection(n, i):
    """Transposition of positions i, i+1 (0-based i < n-1)."""
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def reduced_word(w):
    """A reduced word for w as a list of simple reflection indices."""
    w = list(w)
    word = []
    n = len(w)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                # s_i * (current) is shorter; record from the left
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i)
                changed = True
    # word applied right-to-left rebuilds w
    word.reverse()
    return word


@dataclass(frozen=True)
class HeckeElement:
    n: int
    coeffs: tuple  # tuple of (permutation, Poly), sorted by permutation

    @staticmethod
    def from_dict(n, d):
        items = tuple(sorted((w, c) for w, c in d.items() if c))
        return HeckeElement(n, items)

    def as_dict(self):
        return dict(self.coeffs)

    def __add__(self, other):
        assert self.n == other.n
        d = self.as_dict()
        for w, c in other.coeffs:
            d[w] = d.get(w, Poly()) + c
        return HeckeElement.from_dict(self.n, d)

    def scale(self, poly):
        return HeckeElement.from_dict(
            self.n, {w: poly * c for w, c in self.coeffs})

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.n == other.n and self.coeffs == other.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*T_{list(w)}" for w, c in self.coeffs)


def t_basis(n, w):
    return HeckeElement.from_dict(n, {tuple(w): Poly.const(1)})


def _mul_generator(n, i, elem):
    """T_{s_i} * elem."""
    s = simple_reflection(n, i)
    out = {}
    t = Poly.t()
    one = Poly.const(1)
    for w, c in elem.coeffs:
        sw = perm_compose(s, w)
        if perm_length(sw) > perm_length(w):
            out[sw] = out.get(sw, Poly()) + c
        else:
            out[sw] = out.get(sw, Poly()) + t * c
            out[w] = out.get(w, Poly()) + (t - one) * c
    return HeckeElement.from_dict(n, out)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the T-basis via reduced-word recursion on a."""
    assert a.n == b.n
    n = a.n
    acc = HeckeElement.from_dict(n, {})
    for w, c in a.coeffs:
        term = b
        for i in reversed(reduced_word(w)):
            term = _mul_generator(n, i, term)
        acc = acc + term.scale(c)
    return acc


def young_subgroup(mu):
    """Elements of S_mu inside S_n, n = |mu|."""
    n = sum(mu)
    blocks = []
    start = 0
    for part in mu:
        blocks.append(list(range(start, start + part)))
        start += part
    perms = [()]
    for block in blocks:
        new = []
        for prefix in perms:
            for sigma in itertools.permutations(block):
                new.append(prefix + sigma)
        perms = new
    # perms list the images block by block; positions are the sorted blocks
    out = []
    positions = [i for block in blocks for i in block]
    for images in perms:
        w = [0] * n
        for pos, img in zip(positions, images):
            w[pos] = img
        out.append(tuple(w))
    return out


def x_mu(mu):
    """Sum of T_w over the Young subgroup S_mu."""
    n = sum(mu)
    return HeckeElement.from_dict(
        n, {w: Poly.const(1) for w in young_subgroup(mu)})


def poincare_poly(mu):
    """Sum of t^{l(w)} over the Young subgroup."""
    acc = Poly()
    for w in young_subgroup(mu):
        ell = perm_length(w)
        acc = acc + Poly((0,) * ell + (1,))
    return acc


@lru_cache(maxsize=None)
def symmetric_group(n):
    return tuple(itertools.permutations(range(n)))


def ideal_rank(mu, t_value):
    """Rank of the right ideal x_mu * H at the specialization t = t_value.

    Computed as the rank of the span of {x_mu * T_w} over the rationals.
    """
    from fractions import Fraction
    n = sum(mu)
    group = symmetric_group(n)
    index = {w: i for i, w in enumerate(group)}
    xmu = x_mu(mu)
    rows = []
    for w in group:
        prod = hecke_mul(xmu, t_basis(n, w))
        vec = [Fraction(0)] * len(group)
        for u, c in prod.coeffs:
            vec[index[u]] = Fraction(c(t_value))
        rows.append(vec)
    # rational row rank
    rank = 0
    cols = len(group)
    pivot_col = 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
