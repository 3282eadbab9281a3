"""Tame characters of the degree-f unramified extension and their
transfer to the division algebra side.

A tame character is trivial on the principal units, so it is determined
by its restriction to the residue field units (a CharacterData) together
with its value at a fixed uniformizer. The canonical extension attached
to an e-fold product sends the uniformizer to theta((-1)^{e-1}).
"""

from dataclasses import dataclass

from ..cyclotomic import CycInt
from ..dl.characters import CharacterData


@dataclass(frozen=True)
class TameCharacter:
    residue: CharacterData
    pi_value: int  # value at the uniformizer, +1 or -1

    def __post_init__(self):
        assert self.pi_value in (1, -1)

    @property
    def f(self):
        return self.residue.f

    @property
    def q(self):
        return self.residue.q

    def value(self, unit, pi_power=0):
        """Value at unit * pi^pi_power as a cyclotomic integer."""
        v = self.residue.value(unit)
        if self.pi_value == -1 and pi_power % 2 == 1:
            return v * (-1)
        return v


@dataclass(frozen=True)
class AdmissiblePair:
    f: int
    theta: TameCharacter

    def __post_init__(self):
        assert self.theta.f == self.f
        assert self.theta.residue.is_primitive(), \
            "admissible pairs require a primitive residue character"


def extend_tame(residue: CharacterData, e: int) -> TameCharacter:
    """Canonical extension: uniformizer maps to theta((-1)^{e-1})."""
    if (e - 1) % 2 == 0:
        pi_value = 1
    else:
        pi_value = residue.value_at_minus_one()
    return TameCharacter(residue=residue, pi_value=pi_value)


def theta_on_D(pair: AdmissiblePair, e: int):
    """Character values of Theta on the named division algebra elements.

    Theta is trivial on principal units; on an element whose e-th power is
    congruent to alpha times the uniformizer it evaluates through the
    reduced norm as theta((-1)^{e-1} * frob^i(alpha) * pi). The value at
    the f-th power of the canonical uniformizer of D must be 1.
    """
    theta = pair.theta
    F = theta.residue.field()
    minus1 = F.minus_one() if (e - 1) % 2 == 1 else F.one()
    # Theta(Pi_D^f) = theta((-1)^{e-1} * pi)
    pi_d_f = theta.value(minus1, pi_power=1)
    assert pi_d_f == CycInt.integer(theta.residue.modulus, 1), \
        "Theta must be trivial on the f-th uniformizer power"

    def on_elliptic(alpha, i=0):
        a = F.pow(alpha, theta.q ** i)
        return theta.value(F.mul(minus1, a), pi_power=1)

    return {
        "unit": CycInt.integer(theta.residue.modulus, 1),
        "pi_d_f": pi_d_f,
        "elliptic": on_elliptic,
    }
