"""Lefschetz reconciliation: geometric point count vs spectral sum.

The m-th Frobenius power fixed-point count of the variety equals the
alternating sum of traces on cohomology. Frobenius permutes the
components indexed by a character orbit of size f, so an orbit
contributes only when f | m, and then each of its f characters
contributes the same trace:

    spectral(m) = sum over orbits with f | m of
                  f * sum_{i=0}^{e-1} (-1)^{d-1+i} * dim(d,f,i,q)
                        * lambda_i^{m/f}.
"""

from dataclasses import dataclass, field

from .characters import character_orbits
from .dims import dimension
from .eigen import frobenius_eigenvalue
from .variety import count_points


@dataclass
class LefschetzReport:
    d: int
    q: int
    m: int
    geometric: int
    spectral: int
    rows: list = field(default_factory=list)

    @property
    def match(self):
        return self.geometric == self.spectral


def spectral_breakdown(d, q, m, negate_lambda0=False):
    """Per-(orbit, i) contributions to the spectral side.

    Rows are (f, orbit representative exponent, i, degree, dim,
    eigenvalue, contribution). negate_lambda0 flips the sign of every
    i = 0 eigenvalue; it is a deliberate corruption used as a negative
    control.
    """
    rows = []
    for theta, f in character_orbits(d, q):
        if m % f != 0:
            continue
        e = d // f
        theta_f = theta.descend(f)
        for i in range(e):
            lam = frobenius_eigenvalue(d, f, i, theta_f)
            if negate_lambda0 and i == 0:
                lam = lam.negated()
            dim = dimension(d, f, i, q)
            contrib = f * (-1) ** (d - 1 + i) * dim * lam.as_int() ** (m // f)
            rows.append((f, theta.k, i, d - 1 + i, dim, lam, contrib))
    return rows


def lefschetz_reconcile(d, q, m, budget=10 ** 8,
                        negate_lambda0=False) -> LefschetzReport:
    rows = spectral_breakdown(d, q, m, negate_lambda0=negate_lambda0)
    spectral = sum(r[-1] for r in rows)
    geometric = count_points(d, q, m, budget=budget)
    return LefschetzReport(d=d, q=q, m=m, geometric=geometric,
                           spectral=spectral, rows=rows)
