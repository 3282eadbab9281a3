"""Orbit partitions of a finite-level projective or flag space.

For a vertex x, the relevant compact group acts on lines (or full flags)
with orbits equal to the fibers of reduction-mod-p in the frame of x.  For
a simplex the group is generated by the vertex groups, so its orbits are
the join of the vertex partitions, computed here by union-find on a finite
model: points of the projective (or flag) space at level M, i.e. modulo
p^M.  The level must exceed the largest elementary divisor spread between
vertices by 2; a certificate method checks stability under M -> M + 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from ..ring import QQ, mat_inv
from ..building.lattice import val_p
from ..building.position import distance


class LevelTooSmall(RuntimeError):
    """Raised when the finite level cannot resolve a label exactly."""


def _canonical_point(v, p, M):
    """Canonical representative of a primitive vector mod p^M up to units."""
    mod = p ** M
    piv = None
    for i, x in enumerate(v):
        if x % p:
            piv = i
            break
    if piv is None:
        return None
    inv = pow(v[piv], -1, mod)
    return tuple(x * inv % mod for x in v)


def projective_points(p, M, d):
    """Canonical primitive vectors mod p^M, one per point, sorted."""
    mod = p ** M
    pts = []
    for piv in range(d):
        lead_ranges = [range(0, mod, p)] * piv
        tail_ranges = [range(mod)] * (d - 1 - piv)
        for lead in itertools.product(*lead_ranges):
            for tail in itertools.product(*tail_ranges):
                pts.append(lead + (1,) + tail)
    pts.sort()
    return pts


def flag_points(p, M, d):
    """Canonical (line, hyperplane) incident pairs mod p^M, sorted.

    For d <= 3 a full flag is determined by these two members.
    """
    if d > 3:
        raise ValueError("flag space model only supports d <= 3")
    mod = p ** M
    lines = projective_points(p, M, d)
    covs = projective_points(p, M, d)
    pts = []
    for v in lines:
        for phi in covs:
            if sum(a * b for a, b in zip(v, phi)) % mod == 0:
                pts.append((v, phi))
    pts.sort()
    return pts


def _integral_inverse_frame(x):
    """x.rep^-1 scaled by the power of p that makes it integral, min val 0."""
    inv = mat_inv(QQ, x.rep_fractions())
    vals = [val_p(e, x.p) for row in inv for e in row if e != 0]
    t = min(vals)
    scale = Fraction(x.p) ** (-t)
    out = []
    for row in inv:
        r = []
        for e in row:
            e = e * scale
            assert e.denominator == 1
            r.append(e.numerator)
        out.append(r)
    return out


def _line_label(w, p, M):
    """Reduce an integral coordinate vector mod p to a canonical line."""
    mod = p ** M
    w = [x % mod for x in w]
    if all(x == 0 for x in w):
        raise LevelTooSmall("vector vanishes at this level")
    m = min(_vp_int(x, p, M) for x in w if x)
    u = [(x // p ** m) % p for x in w]
    if all(c == 0 for c in u):
        raise LevelTooSmall("no unit coordinate left after clearing p")
    piv = next(i for i, c in enumerate(u) if c)
    inv = pow(u[piv], -1, p)
    return tuple(c * inv % p for c in u)


def _vp_int(x, p, M):
    v = 0
    while x % p == 0 and v < M:
        x //= p
        v += 1
    return v


@dataclass
class OrbitSystem:
    """Orbit data for every simplex of a convex complex at a finite level."""
    complex: object
    space: str
    level: int
    points: list
    labels: list = field(default_factory=list)  # per vertex: point -> label id
    # per simplex (tuple of vertex indices): assignment point -> class id,
    # class sizes in points, and one representative point per class
    assign: dict = field(default_factory=dict)
    sizes: dict = field(default_factory=dict)
    reps: dict = field(default_factory=dict)

    def rank(self, simplex):
        return len(self.sizes[tuple(simplex)])

    def restriction_matrix(self, sigma, tau):
        """0/1 inclusion matrix for the map V_sigma -> V_tau, tau < sigma."""
        sigma, tau = tuple(sigma), tuple(tau)
        assert set(tau) <= set(sigma)
        rows = self.rank(tau)
        cols = self.rank(sigma)
        out = [[0] * cols for _ in range(rows)]
        a_sig = self.assign[sigma]
        for c, rep in enumerate(self.reps[tau]):
            out[c][a_sig[rep]] = 1
        return out

    def fiber_counts(self, simplex, base_vertex):
        """Number of base-vertex labels inside each class of a simplex.

        The stabilizer group of a simplex is integral in the frame of any of
        its vertices, so the invariant measure of a class is proportional to
        the number of fibers of that vertex it contains.
        """
        simplex = tuple(simplex)
        assign = self.assign[simplex]
        labs = self.labels[base_vertex]
        seen = [set() for _ in range(self.rank(simplex))]
        for idx, cls in enumerate(assign):
            seen[cls].add(labs[idx])
        return [len(s) for s in seen]

    def averaging_matrix(self, tau, sigma):
        """Averaging map V_tau -> V_sigma, tau < sigma.

        Sends an orbit indicator to its share of the coarse orbit it lies
        in, measured by the invariant measure; the weights are fiber count
        ratios with respect to a vertex of tau, always powers of p.
        """
        sigma, tau = tuple(sigma), tuple(tau)
        assert set(tau) <= set(sigma)
        base = tau[0]
        p = self.complex.p
        fine = self.fiber_counts(tau, base)
        coarse = self.fiber_counts(sigma, base)
        rows = self.rank(sigma)
        cols = self.rank(tau)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        a_sig = self.assign[sigma]
        for c, rep in enumerate(self.reps[tau]):
            C = a_sig[rep]
            ratio = Fraction(fine[c], coarse[C])
            den = ratio.denominator
            while den % p == 0:
                den //= p
            assert ratio.numerator == 1 and den == 1, \
                "orbit measure ratio is not a power of p"
            out[C][c] = ratio
        return out


def _enumerate_points(space, p, M, d):
    if space == "projective":
        return projective_points(p, M, d)
    if space == "flag":
        return flag_points(p, M, d)
    raise ValueError("space must be 'projective' or 'flag'")


def _vertex_labels(x, points, space, M):
    p = x.p
    A = _integral_inverse_frame(x)
    d = x.d
    xmat = [[int(e) for e in row] for row in x.rep]
    labels = []
    for pt in points:
        if space == "projective":
            v = pt
            w = [sum(A[i][j] * v[j] for j in range(d)) for i in range(d)]
            labels.append(_line_label(w, p, M))
        else:
            v, phi = pt
            w = [sum(A[i][j] * v[j] for j in range(d)) for i in range(d)]
            u = [sum(phi[i] * xmat[i][j] for i in range(d)) for j in range(d)]
            labels.append((_line_label(w, p, M), _line_label(u, p, M)))
    return labels


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            if rj < ri:
                ri, rj = rj, ri
            self.parent[rj] = ri


def build_orbit_system(cx, space="projective", level=None) -> OrbitSystem:
    """Compute the orbit system of a convex complex at a finite level."""
    vs = cx.vertices
    p, d = cx.p, cx.d
    spread = max((distance(a, b) for a, b in
                  itertools.combinations(vs, 2)), default=0)
    min_level = spread + 2
    if level is None:
        level = min_level
    if level < min_level:
        raise ValueError(
            f"level {level} too small; pair spread {spread} needs "
            f">= {min_level}")
    points = _enumerate_points(space, p, level, d)
    n = len(points)
    labels = [_vertex_labels(x, points, space, level) for x in vs]
    os = OrbitSystem(complex=cx, space=space, level=level, points=points,
                     labels=labels)
    for simplex in cx.simplices:
        uf = _UnionFind(n)
        for vi in simplex:
            groups = {}
            for idx, lab in enumerate(labels[vi]):
                groups.setdefault(lab, []).append(idx)
            for members in groups.values():
                for a, b in zip(members, members[1:]):
                    uf.union(a, b)
        class_of_root = {}
        assign = [0] * n
        sizes = []
        reps = []
        for idx in range(n):
            r = uf.find(idx)
            if r not in class_of_root:
                class_of_root[r] = len(sizes)
                sizes.append(0)
                reps.append(idx)
            c = class_of_root[r]
            assign[idx] = c
            sizes[c] += 1
        key = tuple(simplex)
        os.assign[key] = assign
        os.sizes[key] = sizes
        os.reps[key] = reps
    return os


def stabilization_certificate(cx, space="projective", level=None) -> bool:
    """Check that the orbit partitions at level M pull back from M+1.

    Points at level M+1 reduce mod p^M to canonical points at level M; the
    certificate holds when every simplex partition at M+1 is exactly the
    preimage of the one at M.
    """
    os_m = build_orbit_system(cx, space, level)
    M = os_m.level
    os_m1 = build_orbit_system(cx, space, M + 1)
    p = cx.p
    mod = p ** M
    index_m = {pt: i for i, pt in enumerate(os_m.points)}

    def reduce_pt(pt):
        if space == "projective":
            return tuple(x % mod for x in pt)
        return (tuple(x % mod for x in pt[0]),
                tuple(x % mod for x in pt[1]))

    proj = [index_m[reduce_pt(pt)] for pt in os_m1.points]
    for key in os_m.assign:
        fine = os_m1.assign[key]
        coarse = os_m.assign[key]
        pair_map = {}
        for idx, cls in enumerate(fine):
            tgt = coarse[proj[idx]]
            if cls in pair_map:
                if pair_map[cls] != tgt:
                    return False
            else:
                pair_map[cls] = tgt
        if len(set(pair_map.values())) != len(pair_map):
            return False
        if len(pair_map) != len(os_m.sizes[key]):
            return False
    return True
