"""Frobenius eigenvalues on the cohomology of the variety.

For f | d, e = d/f and 0 <= i <= e-1, the eigenvalue of the f-th
Frobenius power on the degree d-1+i part attached to an f-primitive
character theta is

    (-1)^{e(f-1)} * theta((-1)^{e-1}) * (q^f)^{(d-e)/2 + i}.

Since (-1)^{e-1} squares to 1, theta evaluates to a sign and the whole
eigenvalue is a signed integer power of q; it is stored exactly.
"""

from dataclasses import dataclass

from .characters import CharacterData


@dataclass(frozen=True)
class FrobeniusEigenvalue:
    """sign * q^t, with t = f*((d-e)/2 + i) a nonnegative integer."""
    q: int
    sign: int
    t: int  # exponent of q

    def as_int(self):
        return self.sign * self.q ** self.t

    def __str__(self):
        s = "-" if self.sign < 0 else "+"
        return f"{s}q^{self.t}"

    def negated(self):
        return FrobeniusEigenvalue(self.q, -self.sign, self.t)


def frobenius_eigenvalue(d, f, i, theta: CharacterData) -> FrobeniusEigenvalue:
    if d % f != 0:
        raise ValueError(f"f = {f} must divide d = {d}")
    e = d // f
    if not 0 <= i <= e - 1:
        raise ValueError(f"i = {i} out of range for e = {e}")
    assert theta.f == f, "character must live on F_{q^f}"
    two_t = f * (d - e) + 2 * f * i
    assert two_t % 2 == 0, "f(d-e) is always even"
    t = two_t // 2
    sign = (-1) ** (e * (f - 1))
    if (e - 1) % 2 == 1:
        sign *= theta.value_at_minus_one()
    ev = FrobeniusEigenvalue(theta.q, sign, t)
    # purity guard: |eigenvalue| = (q^f)^{(d-e)/2 + i}
    assert abs(ev.as_int()) == theta.q ** t
    return ev
