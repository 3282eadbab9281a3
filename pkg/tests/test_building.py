"""Building-layer tests: canonical forms, positions, hulls, balls.

Oracles: lattice equality by mutual containment, elementary divisors by
minor gcds, tree distances by breadth-first search.
"""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelzero.building import (
    canonicalize, standard_vertex, relative_position, distance,
    adjacent, adapted_frame, vertex_at, enclos, tight_path,
    enumerate_tight_paths, ball, convex_hull, complex_from_vertices,
    is_simplex, residue_flag, BudgetExceeded,
)
from levelzero.building.position import smith_valuations
from levelzero.building.serialize import (vertex_to_json, vertex_from_json,
                                          complex_to_json, complex_from_json)


def val_p(x, p):
    x = Fraction(x)
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


# ---------------------------------------------------------------- oracles

def lattices_equal_oracle(cols_a, cols_b, p):
    """Mutual containment of Z_(p)-lattices up to p-power homothety.

    Solves A x = b for each column b of B and checks p-integrality, after
    normalizing both to minimal entry valuation 0.
    """
    def normalize(cols):
        m = min(val_p(x, p) for col in cols for x in col if x != 0)
        return [[Fraction(x) / Fraction(p) ** m for x in col]
                for col in cols]

    def contains(A, B):
        # solve A X = B over Q, check entries are p-integral
        d = len(A)
        aug = [[A[j][i] for j in range(d)] + [B[j][i] for j in range(d)]
               for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(d):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
        sol = [row[d:] for row in aug]
        return all(val_p(x, p) >= 0 for row in sol for x in row if x != 0)

    A, B = normalize(cols_a), normalize(cols_b)
    return contains(A, B) and contains(B, A)


def elementary_divisors_oracle(mat, p):
    """Valuations of gcds of k x k minors, differenced."""
    d = len(mat)
    # clear denominators by a power of p
    s = -min(min((val_p(x, p) for x in row if x != 0), default=0)
             for row in mat)
    s = max(s, 0)
    m = [[Fraction(x) * Fraction(p) ** s for x in row] for row in mat]

    def minor_val(k):
        best = None
        for rows in itertools.combinations(range(d), k):
            for cols in itertools.combinations(range(d), k):
                sub = [[m[r][c] for c in cols] for r in rows]
                det = _det(sub)
                if det != 0:
                    v = val_p(det, p)
                    best = v if best is None else min(best, v)
        assert best is not None
        return best

    prev = 0
    exps = []
    for k in range(1, d + 1):
        cur = minor_val(k)
        exps.append(cur - prev - s)
        prev = cur
    exps.sort(reverse=True)
    return tuple(e - exps[-1] for e in exps)


def _det(m):
    d = len(m)
    if d == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det(
        [row[:j] + row[j + 1:] for row in m[1:]]) for j in range(d))


def random_basis_change(rng, cols, p):
    """Apply random column operations preserving the Z_(p)-lattice."""
    d = len(cols)
    out = [list(c) for c in cols]
    for _ in range(6):
        op = rng.randrange(3)
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if op == 0 and i != j:
            c = rng.randrange(-2, 3)
            out[i] = [x + c * y for x, y in zip(out[i], out[j])]
        elif op == 1:
            out[i], out[j] = out[j], out[i]
        else:
            # scale a column by a p-unit
            unit = rng.choice([u for u in range(1, p + 3)
                               if u % p != 0])
            out[i] = [x * unit for x in out[i]]
    k = rng.randrange(-1, 2)
    return [[x * Fraction(p) ** k for x in col] for col in out]


# ------------------------------------------------------------ canonical form

def test_index_two_sublattices_canonical():
    p = 2
    reps = set()
    for cols in ([[1, 0], [0, 2]], [[2, 0], [0, 1]], [[1, 1], [0, 2]]):
        v = canonicalize([[Fraction(x) for x in c] for c in cols], p)
        reps.add(v.rep)
    assert len(reps) == 3
    # frozen canonical forms
    forms = sorted(tuple(tuple(int(x) for x in row) for row in r)
                   for r in reps)
    assert forms == [((1, 0), (0, 2)), ((2, 0), (0, 1)), ((2, 1), (0, 1))]
    # each canonical form spans the same lattice as its input
    assert lattices_equal_oracle(
        [[1, 1], [0, 2]],
        [list(col) for col in zip(*canonicalize([[1, 1], [0, 2]], p).rep)],
        p)


def test_canonical_form_is_basis_invariant():
    rng = random.Random(7)
    for p in (2, 3):
        for d in (2, 3):
            for _ in range(25):
                cols = [[Fraction(rng.randrange(-8, 9)) for _ in range(d)]
                        for _ in range(d)]
                if _det([[cols[j][i] for j in range(d)]
                         for i in range(d)]) == 0:
                    continue
                v1 = canonicalize(cols, p)
                cols2 = random_basis_change(rng, cols, p)
                v2 = canonicalize(cols2, p)
                assert v1 == v2
                assert lattices_equal_oracle(cols, cols2, p)


def test_distinct_lattices_distinct_forms():
    # index-p sublattices of the standard lattice are pairwise distinct
    p = 3
    reps = set()
    for j in range(p):
        reps.add(canonicalize([[1, j], [0, p]], p).rep)
    reps.add(canonicalize([[p, 0], [0, 1]], p).rep)
    assert len(reps) == p + 1


def test_unit_offdiagonal_normalization():
    # the minimal elementary divisor, not the minimal diagonal entry,
    # fixes the homothety representative
    v = canonicalize([[4, 0], [1, 2]], 2)
    exps = tuple(val_p(v.rep[i][i], 2) for i in range(2))
    assert min(val_p(x, 2) for row in v.rep for x in row if x != 0) == 0
    assert exps == v.diagonal_exponents()


# ------------------------------------------------------------ positions

def test_relative_position_examples():
    x = standard_vertex(2, 2)
    y = canonicalize([[1, 0], [0, 2]], 2)
    z = canonicalize([[1, 0], [0, 4]], 2)
    assert relative_position(x, y).a == (1, 0)
    assert relative_position(x, z).a == (2, 0)
    assert distance(x, y) == 1 and distance(x, z) == 2
    assert adjacent(x, y) and not adjacent(x, z)
    assert not adjacent(x, x)


def test_position_symmetry_is_reversal():
    rng = random.Random(3)
    for _ in range(30):
        d, p = rng.choice([(2, 2), (2, 3), (3, 2)])
        cols = [[Fraction(rng.randrange(-6, 7)) for _ in range(d)]
                for _ in range(d)]
        if _det([[cols[j][i] for j in range(d)] for i in range(d)]) == 0:
            continue
        x = standard_vertex(d, p)
        y = canonicalize(cols, p)
        a = relative_position(x, y)
        b = relative_position(y, x)
        assert b == a.reversed()
        assert distance(x, y) == distance(y, x)


def test_smith_matches_minor_gcd_oracle():
    rng = random.Random(11)
    checked = 0
    while checked < 40:
        d, p = rng.choice([(2, 2), (2, 3), (3, 2), (3, 3)])
        mat = [[Fraction(rng.randrange(-9, 10)) for _ in range(d)]
               for _ in range(d)]
        if _det(mat) == 0:
            continue
        exps = smith_valuations(mat, p)
        norm = tuple(e - exps[-1] for e in sorted(exps, reverse=True))
        assert norm == elementary_divisors_oracle(mat, p)
        checked += 1


def test_adapted_frame_recovers_position():
    x = standard_vertex(3, 2)
    y = canonicalize([[4, 0, 0], [0, 2, 0], [0, 0, 1]], 2)
    frame, coords = adapted_frame(x, y)
    assert coords == relative_position(x, y).a
    assert vertex_at(frame, (0,) * 3, 2) == x
    assert vertex_at(frame, coords, 2) == y


# ------------------------------------------------------------ hulls, paths

def test_enclos_example():
    x = standard_vertex(3, 2)
    y = canonicalize([[4, 0, 0], [0, 2, 0], [0, 0, 1]], 2)
    hull = enclos(x, y)
    assert len(hull) == 4
    assert x in hull and y in hull


def test_tight_path_and_geodesics():
    x = standard_vertex(3, 2)
    y = canonicalize([[4, 0, 0], [0, 2, 0], [0, 0, 1]], 2)
    path = tight_path(y, x)
    assert path[0] == y and path[-1] == x
    assert len(path) == distance(x, y) + 1
    paths = enumerate_tight_paths(y, x)
    assert len(paths) == 2
    assert all(len(pp) == len(path) for pp in paths)
    hull = set(enclos(x, y))
    for pp in paths:
        assert set(pp) <= hull


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from([2, 3]))
def test_tree_segment_has_unique_geodesic(a, b, p):
    x = canonicalize([[p ** a, 0], [0, 1]], p)
    y = canonicalize([[1, 0], [0, p ** b]], p)
    paths = enumerate_tight_paths(x, y)
    assert len(paths) == 1
    assert len(paths[0]) == distance(x, y) + 1


def test_tree_distance_matches_bfs():
    p = 2
    verts = ball(standard_vertex(2, p), 2)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if adjacent(verts[i], verts[j]):
                adj[i].append(j)
                adj[j].append(i)
    for src in range(n):
        dist = {src: 0}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        for dst in range(n):
            assert distance(verts[src], verts[dst]) == dist[dst]


# ------------------------------------------------------------ balls, hulls

def test_ball_counts():
    assert len(ball(standard_vertex(2, 2), 1)) == 4
    assert len(ball(standard_vertex(3, 2), 1)) == 15
    assert len(ball(standard_vertex(2, 3), 1)) == 5
    assert len(ball(standard_vertex(2, 2), 2)) == 10


def test_ball_budget():
    with pytest.raises(BudgetExceeded):
        ball(standard_vertex(2, 2), 3, budget=5)


def test_hull_of_singleton_and_pair():
    x = standard_vertex(2, 2)
    assert convex_hull([x]) == [x]
    y = canonicalize([[4, 0], [0, 1]], 2)
    hull = convex_hull([x, y])
    assert set(hull) == set(enclos(x, y))


# ------------------------------------------------------------ simplices

def test_simplex_recognition():
    x = standard_vertex(2, 2)
    y = canonicalize([[1, 0], [0, 2]], 2)
    z = canonicalize([[2, 0], [0, 1]], 2)
    assert is_simplex((x, y))
    # two distinct neighbors of x at mutual distance 2 are not a chain
    assert distance(y, z) == 2
    assert not is_simplex((x, y, z))


def test_residue_flag_types():
    x = standard_vertex(3, 2)
    y = canonicalize([[2, 0, 0], [0, 1, 0], [0, 0, 1]], 2)
    z = canonicalize([[2, 0, 0], [0, 2, 0], [0, 0, 1]], 2)
    assert is_simplex((x, y, z))
    _, tv = residue_flag((x, y, z), min((x, y, z)))
    assert sum(tv) == 3 and len(tv) == 3


def test_complex_from_ball():
    cx = complex_from_vertices(ball(standard_vertex(2, 2), 1))
    assert len(cx.vertices) == 4
    assert len(cx.simplices_of_dim(1)) == 3
    assert cx.convex
    assert cx.top_dim == 1


def test_serialize_round_trip():
    v = canonicalize([[4, 2], [0, 1]], 2)
    assert vertex_from_json(vertex_to_json(v)) == v
    cx = complex_from_vertices(ball(standard_vertex(2, 2), 1))
    cx2 = complex_from_json(complex_to_json(cx))
    assert cx2.vertices == cx.vertices
    assert cx2.simplices == cx.simplices
