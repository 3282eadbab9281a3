"""The JL character sum and the elliptic character identity.

The character of the division algebra representation at a regular
elliptic element with residue alpha is, up to sign, the Galois-orbit sum
sum_j theta(frob^j(alpha)). The identity cross-checks two routes to the
same value: the GL side assembled from a permutation sign, a Koszul sign
and the Deligne-Lusztig trace, against the D side carrying the sign
(-1)^{d-1+i}.
"""

from dataclasses import dataclass

from ..cyclotomic import CycInt
from .tame import AdmissiblePair


def jl_character(pair: AdmissiblePair, alpha) -> CycInt:
    """sum_{j=0}^{f-1} theta(frob^j(alpha)), alpha generating F_{q^f}/F_q."""
    theta = pair.theta
    F = theta.residue.field()
    if F.degree_over(alpha, theta.q) != pair.f:
        raise ValueError("alpha must generate the degree-f extension")
    acc = CycInt.zero(theta.residue.modulus)
    a = alpha
    for _ in range(pair.f):
        acc = acc + theta.residue.value(a)
        a = F.pow(a, theta.q)
    return acc


def find_witness(pair: AdmissiblePair):
    """Some alpha generating F_{q^f}/F_q with jl_character != 0."""
    F = pair.theta.residue.field()
    for a in F.units():
        if F.degree_over(a, pair.theta.q) != pair.f:
            continue
        if not jl_character(pair, a).is_zero():
            return a
    raise RuntimeError("no witness found; primitivity violated?")


@dataclass
class IdentityReport:
    lhs: CycInt
    rhs: CycInt
    equal: bool
    nonzero: bool

    @property
    def ok(self):
        return self.equal and self.nonzero


def elliptic_character_identity(d, f, i, pair: AdmissiblePair,
                                alpha) -> IdentityReport:
    """Check the two independently assembled character values.

    GL side: (-1)^{e-1-i} (wedge permutation) * (-1)^{(f-1)^2(e-1)}
    (Koszul) * (-1)^{f-1} * trace sum.
    D side: (-1)^{d-1+i} times the orbit sum of the full tame character on
    (-1)^{e-1} alpha pi, whose uniformizer contributions square away.
    """
    assert d % f == 0 and pair.f == f
    e = d // f
    assert 0 <= i <= e - 1
    theta = pair.theta
    F = theta.residue.field()
    n = theta.residue.modulus

    trace = jl_character(pair, alpha)
    sign_lhs = ((-1) ** (e - 1 - i)
                * (-1) ** ((f - 1) ** 2 * (e - 1))
                * (-1) ** (f - 1))
    lhs = trace * sign_lhs

    minus1 = F.minus_one() if (e - 1) % 2 == 1 else F.one()
    orbit = CycInt.zero(n)
    a = alpha
    for _ in range(f):
        orbit = orbit + theta.value(F.mul(minus1, a), pi_power=1)
        a = F.pow(a, theta.q)
    rhs = orbit * ((-1) ** (d - 1 + i))

    return IdentityReport(lhs=lhs, rhs=rhs, equal=lhs == rhs,
                          nonzero=not lhs.is_zero())
