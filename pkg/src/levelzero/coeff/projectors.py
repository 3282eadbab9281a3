"""Projector family on the degree-zero homology of a coefficient system.

For each vertex x the maps

    p_x : H_0 -> V_x   (transport every vertex component to x and add)
    i_x : V_x -> H_0   (include as a vertex component, pass to homology)

compose to an idempotent e_x = i_x p_x on H_0.  Products over the vertices
of a simplex give simplex projectors, and alternating sums over the
simplices of a convex subcomplex give the partition-of-unity operators u.
H_0 is presented on the non-pivot coordinates of the echelon form of the
first boundary matrix, taken in canonical simplex order.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..ring import (QuotientBasis, mat_identity, mat_mul, mat_rank,
                    mat_trace, mat_zero, mat_add, mat_sub)
from .local_maps import epsilon_local
from .systems import chain_complex
from ..building.complexes import tight_path


class ProjectorFamily:
    def __init__(self, system):
        cx = system.complex
        if not cx.convex:
            raise ValueError("projectors need a convex complex")
        self.system = system
        self.ring = system.ring
        self.cx = cx
        self.cc = chain_complex(system)
        n0 = self.cc.dims[0]
        d1 = self.cc.boundaries[1] if len(self.cc.boundaries) > 1 else None
        cols = ([[d1[i][j] for i in range(n0)]
                 for j in range(len(d1[0]))] if d1 else [])
        self.basis = QuotientBasis(self.ring, cols, n0)
        self.h = self.basis.dim
        self.qmat = self.basis.quotient_matrix()      # h x n0
        self.smat = self.basis.section_matrix()       # n0 x h
        self._eps_cache = {}
        self._factor_cache = {}

    # -------------------------------------------------------- building maps

    def _eps_to(self, target_idx):
        """All transport matrices V_y -> V_target, y over the vertices."""
        if target_idx in self._eps_cache:
            return self._eps_cache[target_idx]
        cx = self.cx
        x = cx.vertices[target_idx]
        out = {}
        for iy, y in enumerate(cx.vertices):
            path = tight_path(y, x)
            out[iy] = epsilon_local(self.system, path)
        self._eps_cache[target_idx] = out
        return out

    def p_matrix(self, target_idx):
        """Matrix of p_x : C_0 -> V_x (kills boundaries)."""
        ring = self.ring
        eps = self._eps_to(target_idx)
        r = self.system.rank[(target_idx,)]
        out = mat_zero(ring, r, self.cc.dims[0])
        for iy in range(len(self.cx.vertices)):
            off = self.cc.offsets[0][(iy,)]
            block = eps[iy]
            for i in range(r):
                for j in range(len(block[0])):
                    out[i][off + j] = block[i][j]
        return out

    def i_matrix(self, source_idx):
        """Matrix of the inclusion V_x -> C_0."""
        ring = self.ring
        r = self.system.rank[(source_idx,)]
        out = mat_zero(ring, self.cc.dims[0], r)
        off = self.cc.offsets[0][(source_idx,)]
        for j in range(r):
            out[off + j][j] = ring.one
        return out

    def factors(self, vertex_idx):
        """(A, B) with e_x = A B on H_0, A: h x r and B: r x h."""
        if vertex_idx not in self._factor_cache:
            a = mat_mul(self.ring, self.qmat, self.i_matrix(vertex_idx))
            b = mat_mul(self.ring, self.p_matrix(vertex_idx), self.smat)
            self._factor_cache[vertex_idx] = (a, b)
        return self._factor_cache[vertex_idx]

    # ------------------------------------------------------------ operators

    def e_vertex(self, vertex_idx):
        a, b = self.factors(vertex_idx)
        return mat_mul(self.ring, a, b)

    def e_simplex(self, simplex):
        """Product of the vertex projectors of a simplex, as an h x h matrix."""
        simplex = tuple(simplex)
        out = None
        for v in simplex:
            m = self.e_vertex(v)
            out = m if out is None else mat_mul(self.ring, out, m)
        return out

    def rank_e_simplex(self, simplex):
        """Rank of the simplex projector, via its small factorization."""
        simplex = tuple(simplex)
        a0, _ = self.factors(simplex[0])
        if mat_rank(self.ring, a0) != len(a0[0]):
            return mat_rank(self.ring, self.e_simplex(simplex))
        # middle product: B_{x_k} ... chained through small modules
        mid = None
        for prev, nxt in zip(simplex, simplex[1:]):
            _, b_prev = self.factors(prev)
            a_nxt, _ = self.factors(nxt)
            small = mat_mul(self.ring, b_prev, a_nxt)
            mid = small if mid is None else mat_mul(self.ring, mid, small)
        _, b_last = self.factors(simplex[-1])
        tail = mat_mul(self.ring, mid, b_last) if mid is not None else b_last
        return mat_rank(self.ring, tail)

    def trace_e_simplex(self, simplex):
        """Trace of the simplex projector via cyclic reordering."""
        simplex = tuple(simplex)
        _, b_last = self.factors(simplex[-1])
        a_first, _ = self.factors(simplex[0])
        closing = mat_mul(self.ring, b_last, a_first)
        mid = None
        for prev, nxt in zip(simplex, simplex[1:]):
            _, b_prev = self.factors(prev)
            a_nxt, _ = self.factors(nxt)
            small = mat_mul(self.ring, b_prev, a_nxt)
            mid = small if mid is None else mat_mul(self.ring, mid, small)
        total = closing if mid is None else mat_mul(self.ring, mid, closing)
        return mat_trace(self.ring, total)

    def u_operator(self, simplices=None):
        """Alternating sum of simplex projectors over a simplex family."""
        if simplices is None:
            simplices = self.cx.simplices
        ring = self.ring
        out = mat_zero(ring, self.h, self.h)
        for s in simplices:
            term = self.e_simplex(s)
            if (len(s) - 1) % 2 == 1:
                out = mat_sub(ring, out, term)
            else:
                out = mat_add(ring, out, term)
        return out

    def i_simplex_matrix(self, simplex):
        """Matrix of the natural map V_sigma -> H_0 (through any vertex)."""
        simplex = tuple(simplex)
        x = simplex[0]
        if len(simplex) == 1:
            incl = mat_identity(self.ring, self.system.rank[simplex])
        else:
            incl = self.system.restriction_to(simplex, (x,))
        via_c0 = mat_mul(self.ring, self.i_matrix(x), incl)
        return mat_mul(self.ring, self.qmat, via_c0)

    def identity(self):
        return mat_identity(self.ring, self.h)


def projectors(system) -> ProjectorFamily:
    return ProjectorFamily(system)


@dataclass
class ReconstructionRow:
    simplex: tuple
    rank_v: int
    rank_e: int
    injective: bool

    @property
    def ok(self):
        return self.rank_v == self.rank_e and self.injective


def verify_level0_reconstruction(system):
    """Per-simplex certificate that projector images recover the system."""
    fam = ProjectorFamily(system)
    rows = []
    for s in system.complex.simplices:
        rank_v = system.rank[s]
        rank_e = fam.rank_e_simplex(s)
        inj = mat_rank(fam.ring, fam.i_simplex_matrix(s)) == rank_v
        rows.append(ReconstructionRow(simplex=s, rank_v=rank_v,
                                      rank_e=rank_e, injective=inj))
    return fam, rows


def subcomplex_simplices(cx, vertex_subset):
    """Simplices of a complex supported on a subset of vertex indices."""
    vset = set(vertex_subset)
    return [s for s in cx.simplices if set(s) <= vset]


def is_convex_subset(cx, vertex_subset):
    """Whether a vertex index subset is hull-closed within the complex."""
    import itertools
    vs = [cx.vertices[i] for i in vertex_subset]
    vset = set(vs)
    from ..building.complexes import enclos
    for a, b in itertools.combinations(vs, 2):
        if not set(enclos(a, b)) <= vset:
            return False
    return True
