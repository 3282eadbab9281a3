"""Convex pieces of the building: hulls of pairs, balls, tight paths.

All constructions go through an adapted frame for a pair of vertices, in
which both classes are diagonal.  Integer coordinate tuples in that frame
(one exponent per frame column, weakly decreasing, last entry 0) describe
the vertices of the apartment containing the pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..ring import QQ, mat_inv, mat_mul
from .lattice import LatticeClass, canonicalize
from .position import adapted_frame, adjacent, distance, vertex_at


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its candidate budget."""


def _hull_coords(a):
    """Integer coordinate tuples of the hull of (origin, a) in a frame.

    A tuple v (weakly decreasing, v_d = 0) belongs to the hull of the pair
    iff a - v is also weakly decreasing with nonnegative last difference.
    """
    d = len(a)
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == d - 1:
            v = tuple(prefix) + (0,)
            diffs = [a[j] - v[j] for j in range(d)]
            if all(diffs[j] >= diffs[j + 1] for j in range(d - 1)):
                out.append(v)
            return
        hi = a[0] if i == 0 else prefix[i - 1]
        for x in range(0, hi + 1):
            rec(prefix + [x])

    rec([])
    return out


def enclos(x: LatticeClass, y: LatticeClass):
    """Vertex set of the convex hull of a pair, as a sorted list."""
    frame, a = adapted_frame(x, y)
    seen = {vertex_at(frame, v, x.p) for v in _hull_coords(a)}
    return sorted(seen)


def tight_path(y: LatticeClass, x: LatticeClass):
    """The canonical geodesic from y to x.

    Steps lower every positive coordinate by one, which stays inside the
    hull of the pair and moves between adjacent vertices.
    """
    frame, a = adapted_frame(x, y)
    path = []
    cur = a
    while True:
        path.append(vertex_at(frame, cur, x.p))
        if all(c == 0 for c in cur):
            break
        cur = tuple(max(c - 1, 0) for c in cur)
    assert path[0] == y and path[-1] == x
    return path


def enumerate_tight_paths(y: LatticeClass, x: LatticeClass, limit=10000):
    """All geodesics from y to x whose steps stay in the hull of (x, .)."""
    dist = distance(x, y)
    hull = set(enclos(x, y))
    paths = []

    def rec(path):
        cur = path[-1]
        if cur == x:
            paths.append(list(path))
            if len(paths) > limit:
                raise BudgetExceeded("too many geodesics")
            return
        for w in sorted(set(enclos(x, cur))):
            if w == cur:
                continue
            if not adjacent(cur, w):
                continue
            if distance(x, w) != distance(x, cur) - 1:
                continue
            path.append(w)
            rec(path)
            path.pop()

    rec([y])
    for p in paths:
        assert len(p) == dist + 1
        assert all(v in hull for v in p)
    return paths


def ball(center: LatticeClass, r: int, budget: int = 10 ** 6):
    """All classes at distance <= r from the center, sorted."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    d, p = center.d, center.p
    count = 1
    for exps in itertools.product(range(r + 1), repeat=d):
        size = 1
        for i in range(d):
            size *= p ** (exps[i] * (d - 1 - i))
        count += size
        if count > budget:
            raise BudgetExceeded(
                f"ball enumeration needs more than {budget} candidates")
    cmat = center.rep_fractions()
    out = {center}
    for exps in itertools.product(range(r + 1), repeat=d):
        ranges = []
        for i in range(d):
            for j in range(i + 1, d):
                ranges.append((i, j, p ** exps[i]))
        for offs in itertools.product(*(range(m) for _, _, m in ranges)):
            h = [[0] * d for _ in range(d)]
            for i in range(d):
                h[i][i] = p ** exps[i]
            for (i, j, _), o in zip(ranges, offs):
                h[i][j] = o
            cols = [[Fraction(sum(cmat[i][k] * h[k][j] for k in range(d)))
                     for i in range(d)] for j in range(d)]
            v = canonicalize(cols, p)
            if distance(center, v) <= r:
                out.add(v)
    return sorted(out)


def convex_hull(vertices, budget: int = 10 ** 6):
    """Closure of a vertex set under pairwise hulls."""
    current = set(vertices)
    while True:
        new = set(current)
        for x, y in itertools.combinations(sorted(current), 2):
            new.update(enclos(x, y))
            if len(new) > budget:
                raise BudgetExceeded("hull closure exceeded budget")
        if new == current:
            return sorted(current)
        current = new


# ------------------------------------------------------------- simplices


def _rref_gfp(rows, p):
    """Reduced row echelon form over F_p; returns tuple of pivot rows."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0]) if m else 0
    out = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [inv * x % p for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] % p:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[row])]
        row += 1
    return tuple(tuple(r) for r in m[:row])


def residue_subspace(x: LatticeClass, y: LatticeClass):
    """Image of the rep of y between p*x and x, as a subspace mod p.

    Returns the row echelon basis of the subspace of F_p^d spanned by the
    columns of the adapted representative of y in the frame of x.
    """
    if not adjacent(x, y):
        raise ValueError("vertices are not adjacent")
    frame, a = adapted_frame(x, y)
    p = x.p
    xinv = mat_inv(QQ, x.rep_fractions())
    rel = mat_mul(QQ, xinv, frame)
    d = x.d
    cols = []
    for j in range(d):
        if a[j] != 0:
            continue
        col = [rel[i][j] for i in range(d)]
        cols.append([_frac_mod_p(c, p) for c in col])
    return _rref_gfp(cols, p)


def _frac_mod_p(x, p):
    x = Fraction(x)
    den = x.denominator % p
    return x.numerator * pow(den, -1, p) % p


def is_simplex(vertices):
    """Whether a vertex set carries a simplex (a lattice chain)."""
    vs = sorted(set(vertices))
    if not vs:
        return False
    if len(vs) == 1:
        return True
    x = vs[0]
    if len(vs) > x.d:
        return False
    spaces = []
    for y in vs[1:]:
        if not adjacent(x, y):
            return False
        spaces.append(residue_subspace(x, y))
    spaces.sort(key=len)
    for w1, w2 in zip(spaces, spaces[1:]):
        if len(w1) >= len(w2):
            return False
        span = _rref_gfp(list(w1) + list(w2), x.p)
        if len(span) != len(w2):
            return False
    return True


def residue_flag(sigma, x: LatticeClass):
    """Flag of subspaces mod p cut out by a simplex at one of its vertices.

    Returns (flag, type_vector): the echelon bases of the proper nonzero
    subspaces in increasing order, and the jump sizes including the jumps
    from zero and to the full space.
    """
    vs = sorted(set(sigma))
    if x not in vs:
        raise ValueError("vertex does not belong to the simplex")
    if not is_simplex(vs):
        raise ValueError("vertex set is not a simplex")
    spaces = sorted((residue_subspace(x, y) for y in vs if y != x), key=len)
    dims = [0] + [len(w) for w in spaces] + [x.d]
    type_vector = tuple(dims[i + 1] - dims[i] for i in range(len(dims) - 1))
    return list(spaces), type_vector


@dataclass(frozen=True)
class Simplex:
    """A simplex given by its vertices in canonical (sorted) order."""
    vertices: tuple

    def __post_init__(self):
        assert list(self.vertices) == sorted(self.vertices)

    @property
    def dim(self):
        return len(self.vertices) - 1

    def faces(self):
        """Codimension-one faces with their incidence signs."""
        out = []
        for j in range(len(self.vertices)):
            face = self.vertices[:j] + self.vertices[j + 1:]
            out.append((Simplex(face), (-1) ** j))
        return out

    def type_vector(self):
        _, tv = residue_flag(self.vertices, min(self.vertices))
        return tv

    def is_f_facet(self, f: int):
        return all(e % f == 0 for e in self.type_vector())


@dataclass(frozen=True)
class ConvexComplex:
    """A finite subcomplex: sorted vertices and all chains among them."""
    vertices: tuple
    simplices: tuple  # tuples of vertex indices, sorted by (dim, indices)
    convex: bool

    @property
    def d(self):
        return self.vertices[0].d

    @property
    def p(self):
        return self.vertices[0].p

    def simplex_vertices(self, s):
        return tuple(self.vertices[i] for i in s)

    def simplices_of_dim(self, k):
        return [s for s in self.simplices if len(s) == k + 1]

    @property
    def top_dim(self):
        return max(len(s) for s in self.simplices) - 1


def complex_from_vertices(vertices, check_convex=True) -> ConvexComplex:
    """Build the chain complex support spanned by a vertex set."""
    vs = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    adj = {}
    for i, j in itertools.combinations(range(n), 2):
        if adjacent(vs[i], vs[j]) and is_simplex((vs[i], vs[j])):
            adj.setdefault(i, set()).add(j)
    simplices = [(i,) for i in range(n)]
    frontier = [(i,) for i in range(n)]
    while frontier:
        nxt = []
        for s in frontier:
            cands = set(range(s[-1] + 1, n))
            for i in s:
                cands &= adj.get(i, set())
            for j in sorted(cands):
                cand = s + (j,)
                if is_simplex(tuple(vs[i] for i in cand)):
                    nxt.append(cand)
        simplices.extend(nxt)
        frontier = nxt
    simplices.sort(key=lambda s: (len(s), s))
    convex = True
    if check_convex:
        vset = set(vs)
        for x, y in itertools.combinations(vs, 2):
            if not set(enclos(x, y)) <= vset:
                convex = False
                break
    return ConvexComplex(vertices=vs, simplices=tuple(simplices),
                         convex=convex)


def common_enclos_neighbor(x, y, z):
    """A vertex adjacent to x inside both hulls H(x,y) and H(x,z).

    Exists whenever y and z are adjacent and both lie at distance >= 2
    from x; returns the smallest such vertex.
    """
    hy = set(enclos(x, y))
    hz = set(enclos(x, z))
    for w in sorted(hy & hz):
        if adjacent(x, w):
            return w
    return None
