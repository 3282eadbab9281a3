"""Coefficient systems on a convex complex and their chain complexes.

A coefficient system assigns a free module V_sigma to every simplex and a
restriction map V_sigma -> V_tau to every face inclusion tau < sigma,
compatibly with composition.  The boundary uses the global vertex order
(canonical representatives sorted lexicographically) to orient simplices:
removing the j-th vertex contributes the sign (-1)^j.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..ring import (mat_convert, mat_is_zero, mat_mul,
                    mat_rank, mat_zero)


@dataclass
class CoefficientSystem:
    ring: object
    complex: object
    rank: dict
    restriction: dict  # (sigma, tau) -> matrix of V_sigma -> V_tau
    averaging: dict    # (tau, sigma) -> matrix of V_tau -> V_sigma

    def restriction_to(self, sigma, tau):
        return self.restriction[(tuple(sigma), tuple(tau))]

    def averaging_to(self, tau, sigma):
        return self.averaging[(tuple(tau), tuple(sigma))]


def _proper_subsets(s):
    import itertools
    out = []
    for k in range(1, len(s)):
        out.extend(itertools.combinations(s, k))
    return out


def to_coefficient_system(os, ring) -> CoefficientSystem:
    """Materialize an orbit system over a ring."""
    rank = {}
    restriction = {}
    averaging = {}
    for sigma in os.complex.simplices:
        rank[sigma] = os.rank(sigma)
    for sigma in os.complex.simplices:
        for tau in _proper_subsets(sigma):
            restriction[(sigma, tau)] = mat_convert(
                ring, os.restriction_matrix(sigma, tau))
            averaging[(tau, sigma)] = mat_convert(
                ring, os.averaging_matrix(tau, sigma))
    return CoefficientSystem(ring=ring, complex=os.complex, rank=rank,
                             restriction=restriction, averaging=averaging)


def constant_system(cx, ring) -> CoefficientSystem:
    """Rank-one system with identity restrictions."""
    one = [[ring.one]]
    rank = {}
    restriction = {}
    averaging = {}
    for sigma in cx.simplices:
        rank[sigma] = 1
        for tau in _proper_subsets(sigma):
            restriction[(sigma, tau)] = [row[:] for row in one]
            averaging[(tau, sigma)] = [row[:] for row in one]
    return CoefficientSystem(ring=ring, complex=cx, rank=rank,
                             restriction=restriction, averaging=averaging)


@dataclass
class ChainComplex:
    ring: object
    system: object
    degrees: list            # list of lists of simplices per degree
    offsets: list            # per degree: {simplex: column offset}
    dims: list               # per degree: total dimension
    boundaries: list         # boundaries[k]: matrix C_k -> C_{k-1}, k >= 1
    corrupted: bool = False

    def boundary_squares_zero(self) -> bool:
        for k in range(2, len(self.degrees)):
            prod = mat_mul(self.ring, self.boundaries[k - 1],
                           self.boundaries[k])
            if not mat_is_zero(self.ring, prod):
                return False
        return True


def chain_complex(system: CoefficientSystem, corrupt_sign=False)\
        -> ChainComplex:
    ring = system.ring
    cx = system.complex
    top = cx.top_dim
    degrees = [cx.simplices_of_dim(k) for k in range(top + 1)]
    offsets = []
    dims = []
    for k in range(top + 1):
        off = {}
        pos = 0
        for s in degrees[k]:
            off[s] = pos
            pos += system.rank[s]
        offsets.append(off)
        dims.append(pos)
    boundaries = [None]
    first_flip = corrupt_sign
    for k in range(1, top + 1):
        mat = mat_zero(ring, dims[k - 1], dims[k])
        for sigma in degrees[k]:
            col0 = offsets[k][sigma]
            for j in range(len(sigma)):
                tau = sigma[:j] + sigma[j + 1:]
                sign = (-1) ** j
                if first_flip:
                    sign = -sign
                    first_flip = False
                block = system.restriction_to(sigma, tau)
                row0 = offsets[k - 1][tau]
                for r in range(len(block)):
                    for c in range(len(block[0])):
                        entry = block[r][c]
                        if sign < 0:
                            entry = ring.neg(entry)
                        mat[row0 + r][col0 + c] = entry
        boundaries.append(mat)
    cc = ChainComplex(ring=ring, system=system, degrees=degrees,
                      offsets=offsets, dims=dims, boundaries=boundaries,
                      corrupted=corrupt_sign)
    if not corrupt_sign and not cc.boundary_squares_zero():
        raise AssertionError("boundary does not square to zero")
    return cc


def homology(cc: ChainComplex):
    """Ranks of the homology in each degree."""
    ring = cc.ring
    top = len(cc.degrees) - 1
    rank_b = {k: mat_rank(ring, cc.boundaries[k]) for k in range(1, top + 1)}
    out = []
    for k in range(top + 1):
        out.append(cc.dims[k] - rank_b.get(k, 0) - rank_b.get(k + 1, 0))
    return out
