"""Acceptance suite: one test per criterion, exact checks, wall-clock caps.

Run with -v to get one pass/fail line per criterion.
"""

import functools
import itertools
import random
import time

from levelzero.building import (standard_vertex, canonicalize, ball,
                                convex_hull, complex_from_vertices, distance,
                                relative_position, enclos, tight_path,
                                enumerate_tight_paths)
from levelzero.coeff import (build_orbit_system, to_coefficient_system,
                             chain_complex, homology, epsilon_local,
                             projectors, verify_level0_reconstruction)
from levelzero.coeff.projectors import subcomplex_simplices, is_convex_subset
from levelzero.ring import (QQ, ring_by_name, mat_mul, mat_add, mat_sub,
                            mat_eq, mat_rank)
from levelzero.dl import CharacterData, lefschetz_reconcile
from levelzero.heckecomb import (partitions_of, is_hook, hook_index,
                                 descent_table)
from levelzero.heckecomb.kostka import elliptic_coefficient
from levelzero.langlands import (AdmissiblePair, extend_tame, theta_on_D,
                                 find_witness, elliptic_character_identity)
from levelzero.cyclotomic import CycInt

F3 = ring_by_name("F3")
F5 = ring_by_name("F5")


def _diag_pair(d, p, k):
    """Standard vertex and the diagonal vertex at distance k."""
    x = standard_vertex(d, p)
    cols = [[p ** k if i == j == 0 else (1 if i == j else 0)
             for i in range(d)] for j in range(d)]
    return x, canonicalize(cols, p)


@functools.lru_cache(maxsize=None)
def _cx(kind, d, p, arg):
    if kind == "ball":
        return complex_from_vertices(ball(standard_vertex(d, p), arg))
    x, y = _diag_pair(d, p, arg)
    return complex_from_vertices(convex_hull([x, y]))


@functools.lru_cache(maxsize=None)
def _orbits(kind, d, p, arg):
    return build_orbit_system(_cx(kind, d, p, arg))


@functools.lru_cache(maxsize=None)
def _sys(kind, d, p, arg, ring_name):
    ring = {"QQ": QQ, "F3": F3, "F5": F5}[ring_name]
    return to_coefficient_system(_orbits(kind, d, p, arg), ring)


def _d2_instances():
    out = []
    for p in (2, 3):
        rings = ("QQ", "F3", "F5") if p == 2 else ("QQ", "F5")
        for r in (1, 2, 3):
            out.append(("ball", 2, p, r, rings))
        for k in (1, 2, 3, 4):
            out.append(("hull", 2, p, k, rings))
    return out


def _d3_instances():
    out = [("ball", 3, 2, 1, ("QQ", "F5"))]
    # hulls of all distance <= 2 relative positions
    for a in ((1, 0), (1, 1), (2, 0), (2, 1), (2, 2)):
        x = standard_vertex(3, 2)
        cols = [[2 ** a[j] if i == j else 0 for i in range(3)]
                if j < 2 else [0, 0, 1] for j in range(3)]
        y = canonicalize(cols, 2)
        assert relative_position(x, y).a[0] <= 2
        cx = complex_from_vertices(convex_hull([x, y]))
        out.append(("pairhull", cx, ("QQ", "F5"), a))
    return out


@functools.lru_cache(maxsize=None)
def _d3_systems():
    """(complex, {ring_name: system}) for every d = 3 instance."""
    out = []
    for inst in _d3_instances():
        if inst[0] == "ball":
            kind, d, p, arg, rings = inst
            cx = _cx(kind, d, p, arg)
            os = _orbits(kind, d, p, arg)
        else:
            _, cx, rings, _ = inst
            os = build_orbit_system(cx)
        systems = {rn: to_coefficient_system(
            os, {"QQ": QQ, "F3": F3, "F5": F5}[rn]) for rn in rings}
        out.append((cx, systems))
    return out


# -----------------------------------------------------------------------
# 1. rank-2 balls (radius <= 3) and hulls (distance <= 4), acyclic in
#    positive degrees over QQ and over prime fields away from p
# -----------------------------------------------------------------------

def test_criterion_01_rank2_acyclicity():
    start = time.monotonic()
    for kind, d, p, arg, rings in _d2_instances():
        for rn in rings:
            system = _sys(kind, d, p, arg, rn)
            ranks = homology(chain_complex(system))
            assert all(r == 0 for r in ranks[1:]), (kind, p, arg, rn, ranks)
            assert ranks[0] > 0
    assert time.monotonic() - start < 120


# -----------------------------------------------------------------------
# 2. rank-3 hulls (distance <= 2) and the radius-1 ball: H1 = H2 = 0
# -----------------------------------------------------------------------

def test_criterion_02_rank3_acyclicity():
    start = time.monotonic()
    for cx, systems in _d3_systems():
        for rn, system in systems.items():
            ranks = homology(chain_complex(system))
            assert all(r == 0 for r in ranks[1:]), (len(cx.vertices), rn,
                                                    ranks)
            assert ranks[0] > 0
    assert time.monotonic() - start < 600


# -----------------------------------------------------------------------
# 3. level-zero reconstruction on every instance of criteria 1 and 2
# -----------------------------------------------------------------------

def test_criterion_03_reconstruction_everywhere():
    count = 0
    for kind, d, p, arg, _ in _d2_instances():
        system = _sys(kind, d, p, arg, "QQ")
        fam, rows = verify_level0_reconstruction(system)
        assert all(r.ok for r in rows), (kind, p, arg)
        assert mat_eq(QQ, fam.u_operator(), fam.identity())
        count += 1
    for cx, systems in _d3_systems():
        fam, rows = verify_level0_reconstruction(systems["QQ"])
        assert all(r.ok for r in rows)
        assert mat_eq(QQ, fam.u_operator(), fam.identity())
        count += 1
    assert count == len(_d2_instances()) + len(_d3_systems())


# -----------------------------------------------------------------------
# 4. projector calculus: idempotence, adjacent commutation, hull
#    absorption, and inclusion-exclusion over convex decompositions
# -----------------------------------------------------------------------

def _branch_decompositions(cx, center_idx):
    """Covers of a tree ball by two convex subtrees meeting in the center."""
    n = len(cx.vertices)
    center = cx.vertices[center_idx]
    branches = {}
    for i in range(n):
        if i == center_idx:
            continue
        path = tight_path(cx.vertices[i], center)
        branches.setdefault(cx.vertices.index(path[-2]), set()).add(i)
    keys = sorted(branches)
    out = []
    for size in range(1, len(keys)):
        for left in itertools.combinations(keys, size):
            plus = {center_idx} | set().union(*(branches[k] for k in left))
            rest = [k for k in keys if k not in left]
            minus = {center_idx} | set().union(*(branches[k] for k in rest))
            out.append((frozenset(plus), frozenset(minus)))
    return out


def test_criterion_04_projector_calculus():
    system = _sys("ball", 2, 2, 2, "QQ")
    fam = projectors(system)
    cx = fam.cx
    n = len(cx.vertices)

    # (a) each vertex projector is idempotent
    for i in range(n):
        e = fam.e_vertex(i)
        assert mat_eq(QQ, mat_mul(QQ, e, e), e)

    # (b) projectors of adjacent vertices commute
    for s in cx.simplices_of_dim(1):
        a, b = fam.e_vertex(s[0]), fam.e_vertex(s[1])
        assert mat_eq(QQ, mat_mul(QQ, a, b), mat_mul(QQ, b, a))

    # (c) hull absorption: z in H(x, y) adjacent to x gives
    #     e_x e_z e_y = e_x e_y
    checked = 0
    for ix, iy in itertools.combinations(range(n), 2):
        x, y = cx.vertices[ix], cx.vertices[iy]
        if distance(x, y) != 2:
            continue
        for z in enclos(x, y):
            if z in (x, y) or distance(x, z) != 1:
                continue
            iz = cx.vertices.index(z)
            lhs = mat_mul(QQ, fam.e_vertex(ix),
                          mat_mul(QQ, fam.e_vertex(iz), fam.e_vertex(iy)))
            rhs = mat_mul(QQ, fam.e_vertex(ix), fam.e_vertex(iy))
            assert mat_eq(QQ, lhs, rhs)
            checked += 1
    assert checked >= 5

    # (d) the alternating sum over the whole complex is the identity
    assert mat_eq(QQ, fam.u_operator(), fam.identity())

    # (e) inclusion-exclusion over at least five convex decompositions
    center_idx = cx.vertices.index(standard_vertex(2, 2))
    decomps = _branch_decompositions(cx, center_idx)
    assert len(decomps) >= 5
    ident = fam.identity()
    for plus, minus in decomps:
        meet = plus & minus
        assert plus | minus == set(range(n))
        for part in (plus, minus, meet):
            assert is_convex_subset(cx, part)
        u_plus = fam.u_operator(subcomplex_simplices(cx, plus))
        u_minus = fam.u_operator(subcomplex_simplices(cx, minus))
        u_meet = fam.u_operator(subcomplex_simplices(cx, meet))
        for u in (u_plus, u_minus, u_meet):
            assert mat_eq(QQ, mat_mul(QQ, u, u), u)
        # u_S = u_+ + u_- - u_0 and u_+ u_- = u_- u_+ = u_0
        total = mat_sub(QQ, mat_add(QQ, u_plus, u_minus), u_meet)
        assert mat_eq(QQ, total, ident)
        assert mat_eq(QQ, mat_mul(QQ, u_plus, u_minus), u_meet)
        assert mat_eq(QQ, mat_mul(QQ, u_minus, u_plus), u_meet)
        # im u_+ \cap im u_- = im u_0, as a rank computation
        joint = [row_p + row_m for row_p, row_m in zip(u_plus, u_minus)]
        dim_sum = mat_rank(QQ, joint)
        dim_cap = (mat_rank(QQ, u_plus) + mat_rank(QQ, u_minus) - dim_sum)
        assert dim_cap == mat_rank(QQ, u_meet)


# -----------------------------------------------------------------------
# 5. transport: path independence on seeded pairs with several
#    geodesics, and composition through hull waypoints
# -----------------------------------------------------------------------

def _random_unimodular(rng, d):
    m = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(8):
        i, j = rng.sample(range(d), 2)
        c = rng.randrange(-2, 3)
        for r in range(d):
            m[r][i] += c * m[r][j]
    return m


def test_criterion_05_transport_path_independence():
    rng = random.Random(20260826)
    d, p = 3, 2
    pairs_done = 0
    triples_done = 0
    while pairs_done < 50:
        g = _random_unimodular(rng, d)
        x = canonicalize([[g[i][j] for i in range(d)] for j in range(d)], p)
        cols = [[g[i][j] * (p ** (2 if j == 0 else (1 if j == 1 else 0)))
                 for i in range(d)] for j in range(d)]
        y = canonicalize(cols, p)
        if relative_position(x, y).a != (2, 1, 0):
            continue
        cx = complex_from_vertices(convex_hull([x, y]))
        system = to_coefficient_system(build_orbit_system(cx), QQ)
        paths = enumerate_tight_paths(y, x)
        assert len(paths) >= 2
        mats = [epsilon_local(system, pp) for pp in paths]
        for m in mats[1:]:
            assert mat_eq(QQ, mats[0], m)
        pairs_done += 1
        # composition through every interior hull vertex
        direct = epsilon_local(system, tight_path(y, x))
        for z in enclos(x, y):
            if z in (x, y):
                continue
            via = mat_mul(QQ, epsilon_local(system, tight_path(z, x)),
                          epsilon_local(system, tight_path(y, z)))
            assert mat_eq(QQ, via, direct)
            triples_done += 1
    assert pairs_done >= 50 and triples_done >= 50


# -----------------------------------------------------------------------
# 6. distances: metric = position exponent = geodesic length, for all
#    pairs in radius-3 balls, with every enumerated geodesic tight
# -----------------------------------------------------------------------

def test_criterion_06_distance_consistency():
    for d, p, r in ((2, 2, 3), (2, 3, 3), (3, 2, 1)):
        verts = ball(standard_vertex(d, p), r)
        for x, y in itertools.combinations(verts, 2):
            dist = distance(x, y)
            assert dist == relative_position(x, y).a[0]
            assert len(tight_path(y, x)) == dist + 1
            paths = enumerate_tight_paths(y, x)
            assert paths
            assert all(len(pp) == dist + 1 for pp in paths)
            if d == 2:
                assert len(paths) == 1  # trees have unique geodesics


# -----------------------------------------------------------------------
# 7. trace formula: geometric vs spectral counts over the whole grid
# -----------------------------------------------------------------------

def test_criterion_07_lefschetz_grid():
    start = time.monotonic()
    cases = 0
    for d, q in ((2, 2), (2, 3), (2, 4), (3, 2)):
        for m in range(1, 7):
            rep = lefschetz_reconcile(d, q, m)
            assert rep.match, (d, q, m, rep.geometric, rep.spectral)
            cases += 1
    assert cases == 24
    assert time.monotonic() - start < 300


# -----------------------------------------------------------------------
# 8. hook support: the top elliptic coefficient is (-1)^leg on hooks
#    and zero otherwise, for e <= 8
# -----------------------------------------------------------------------

def test_criterion_08_hook_criterion():
    for e in range(2, 9):
        for lam in partitions_of(e):
            c = elliptic_coefficient(lam, (e,))
            if is_hook(lam):
                assert c == (-1) ** (e - 1 - hook_index(lam))
            else:
                assert c == 0


# -----------------------------------------------------------------------
# 9. descent counts: binomial exactly on initial/terminal intervals,
#    with an explicit failing profile for every e
# -----------------------------------------------------------------------

def test_criterion_09_descent_identity():
    for e in range(4, 8):
        table = descent_table(e)
        for row in table:
            if row["interval"]:
                assert row["count"] == row["binomial"]
        bad = [row for row in table
               if not row["interval"] and row["count"] != row["binomial"]]
        assert bad, e


# -----------------------------------------------------------------------
# 10. character identities: both sides of the elliptic identity agree
#     and are nonzero across the grid; the extension is trivial on the
#     f-th power of the division algebra uniformizer
# -----------------------------------------------------------------------

def _primitive_orbit_reps(q, f):
    """Smallest exponent of each Frobenius orbit of f-primitive characters."""
    n = q ** f - 1
    reps = []
    for k in range(n):
        orbit = set()
        j = k
        while j not in orbit:
            orbit.add(j)
            j = (j * q) % n
        if k == min(orbit) and CharacterData(q, f, k).is_primitive():
            reps.append(k)
    return reps


def test_criterion_10_character_identities():
    checked = 0
    for q in (2, 3):
        for d in (1, 2, 3, 4):
            for f in (f for f in range(1, d + 1) if d % f == 0):
                e = d // f
                n = q ** f - 1
                for k in _primitive_orbit_reps(q, f):
                    theta = CharacterData(q, f, k)
                    pair = AdmissiblePair(f=f, theta=extend_tame(theta, e))
                    vals = theta_on_D(pair, e)
                    assert vals["pi_d_f"] == CycInt.integer(n, 1)
                    alpha = find_witness(pair)
                    for i in range(e):
                        rep = elliptic_character_identity(d, f, i, pair,
                                                          alpha)
                        assert rep.ok, (d, q, f, k, i)
                        checked += 1
    assert checked == 73


# -----------------------------------------------------------------------
# 11. negative controls: a flipped boundary sign breaks d^2 = 0, and a
#     flipped bottom eigenvalue breaks the trace formula
# -----------------------------------------------------------------------

def test_criterion_11_negative_controls():
    system = _sys("ball", 3, 2, 1, "QQ")
    good = chain_complex(system)
    assert good.boundary_squares_zero()
    bad = chain_complex(system, corrupt_sign=True)
    assert not bad.boundary_squares_zero()
    rep = lefschetz_reconcile(2, 2, 2, negate_lambda0=True)
    assert not rep.match
    assert lefschetz_reconcile(2, 2, 2).match
