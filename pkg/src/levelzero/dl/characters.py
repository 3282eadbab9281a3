"""Multiplicative characters of finite fields, stored as exponents.

A character of F_{q^f}^x sends the certified generator g to zeta_n^k with
n = q^f - 1; only the exponent k is stored. A character is f-primitive
when it does not factor through the norm to any proper subfield of the
q-power tower.
"""

from dataclasses import dataclass

from ..cyclotomic import CycInt
from .ff import get_field, split_prime_power


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


@dataclass(frozen=True)
class CharacterData:
    """Character of F_{q^f}^x given by its exponent against the generator."""
    q: int
    f: int
    k: int  # generator g maps to zeta_n^k, n = q^f - 1

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.modulus)

    @property
    def modulus(self):
        return self.q ** self.f - 1

    def field(self):
        p, r = split_prime_power(self.q)
        return get_field(p, r * self.f)

    def value_exponent(self, a):
        """Exponent of the value at field element a, against zeta_n."""
        F = self.field()
        return (self.k * F.dlog(a)) % self.modulus

    def value(self, a):
        """Value at a as an exact cyclotomic integer."""
        return CycInt.root_power(self.modulus, self.value_exponent(a))

    def value_at_minus_one(self):
        """theta(-1) in {+1, -1}, as a Python integer."""
        F = self.field()
        e = self.value_exponent(F.minus_one())
        n = self.modulus
        if e == 0:
            return 1
        assert 2 * e == n, "theta(-1) must square to 1"
        return -1

    def primitivity_level(self):
        """Smallest f' | f such that the character factors through the norm.

        theta factors through N_{F_{q^f}/F_{q^{f'}}} iff its exponent k is
        divisible by (q^f-1)/(q^{f'}-1), the dlog image of the norm map.
        """
        n = self.modulus
        for fp in _divisors(self.f):
            if self.k % (n // (self.q ** fp - 1)) == 0:
                return fp
        raise AssertionError("unreachable: f' = f always works")

    def is_primitive(self):
        return self.primitivity_level() == self.f

    def frobenius_twist(self):
        """The character theta o Frob, exponent k*q mod n."""
        return CharacterData(self.q, self.f, self.k * self.q)

    def descend(self, f):
        """The character of F_{q^f}^x through which theta factors.

        Requires f >= primitivity level; inverts theta = theta' o Norm on
        exponents, where the norm multiplies dlogs by (q^f0-1)/(q^f-1)
        with f0 the current level.
        """
        n = self.modulus
        step = n // (self.q ** f - 1)
        if self.k % step != 0:
            raise ValueError(f"character does not factor through F_q^{f}")
        return CharacterData(self.q, f, self.k // step)


def is_primitive(q, f, k):
    return CharacterData(q, f, k).is_primitive()


def character_orbits(d, q):
    """Frobenius orbits of characters of F_{q^d}^x.

    Returns a list of (representative CharacterData, f) with f the
    primitivity level; the orbit size equals f and the representative has
    the smallest exponent in its orbit.
    """
    n = q ** d - 1
    seen = set()
    out = []
    for k in range(n):
        if k in seen:
            continue
        orbit = set()
        j = k
        while j not in orbit:
            orbit.add(j)
            j = (j * q) % n
        seen |= orbit
        theta = CharacterData(q, d, k)
        f = theta.primitivity_level()
        assert len(orbit) == f, "orbit size must equal primitivity level"
        out.append((theta, f))
    return out


def enumerate_primitive(f, q):
    """Count of f-primitive characters of F_{q^f}^x by divisor sieve."""
    n = q ** f - 1
    count = 0
    for k in range(n):
        if all(k % (n // (q ** fp - 1)) != 0
               for fp in _divisors(f) if fp != f):
            count += 1
    return count
