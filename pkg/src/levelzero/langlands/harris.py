"""Summary tables for the elliptic parameter bookkeeping.

One row per cohomology slot i: the degree, the two possible interval
labels (the local theory does not decide between them), the Weil datum
(dimension f, inertia exponent, Frobenius-power eigenvalue), and the
Grothendieck-group transfer sign (-1)^i. The i = 0 row is the discrete
series member matching the classical correspondence.
"""

from dataclasses import dataclass

from ..dl.dims import dimension
from ..dl.eigen import frobenius_eigenvalue
from .tame import AdmissiblePair


@dataclass(frozen=True)
class EllipticParameter:
    d: int
    f: int
    i: int
    interval_options: tuple  # the two candidate subsets, kept unresolved

    @property
    def e(self):
        return self.d // self.f


@dataclass(frozen=True)
class WeilDatum:
    f: int
    theta_exponent: int
    eigenvalue: object  # FrobeniusEigenvalue of the f-th Frobenius power


@dataclass
class HarrisRow:
    i: int
    degree: int
    parameter: EllipticParameter
    weil: WeilDatum
    dim: int
    lj_sign: int
    tag: str = ""


def _interval_options(e, i):
    initial = tuple(range(1, i + 1))
    terminal = tuple(range(e - i, e))
    return (initial,) if initial == terminal else (initial, terminal)


def harris_summary(d, q, pair: AdmissiblePair):
    """Rows for i = 0..e-1 attached to an admissible pair."""
    f = pair.f
    assert d % f == 0
    assert pair.theta.q == q
    e = d // f
    rows = []
    for i in range(e):
        opts = _interval_options(e, i)
        assert all(len(I) == i for I in opts)
        lam = frobenius_eigenvalue(d, f, i, pair.theta.residue)
        row = HarrisRow(
            i=i,
            degree=d - 1 + i,
            parameter=EllipticParameter(d=d, f=f, i=i,
                                        interval_options=opts),
            weil=WeilDatum(f=f, theta_exponent=pair.theta.residue.k,
                           eigenvalue=lam),
            dim=dimension(d, f, i, q),
            lj_sign=(-1) ** i,
            tag="discrete series, JL match" if i == 0 else "",
        )
        assert d - 1 <= row.degree <= 2 * (d - 1)
        rows.append(row)
    return rows
