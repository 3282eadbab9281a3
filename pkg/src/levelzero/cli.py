"""Batch command line front end.

Subcommand groups: building (distances, hulls, balls), homology (chain
complex reports with pass/fail flags), dl (point counts and Lefschetz
reconciliation), tables (combinatorial and summary tables). Configuration
comes from an optional TOML file plus flags; flags win. Reports are
byte-deterministic: no timestamps, explicit seeds in headers.

Exit codes: 0 success, 2 invalid input, 3 budget exhausted.
"""

import argparse
import json
import sys

try:
    import tomllib as tomli
except ImportError:
    import tomli

from .building import (standard_vertex, ball, enclos, tight_path, distance,
                       convex_hull, complex_from_vertices)
from .building.serialize import vertex_from_obj, vertex_to_obj
from .building.complexes import BudgetExceeded as BuildingBudget
from .coeff import (build_orbit_system, to_coefficient_system, chain_complex,
                    homology)
from .coeff.projectors import verify_level0_reconstruction
from .ring import QQ, ring_by_name
from .dl import (count_points, count_points_naive, fixed_points,
                 lefschetz_reconcile, BudgetExceeded as DlBudget)
from .dl.characters import CharacterData, enumerate_primitive
from .heckecomb import kostka_matrix, elliptic_coefficients, descent_table
from .heckecomb.hecke import symmetric_group, simple_reflection, t_basis, \
    hecke_mul
from .langlands import AdmissiblePair, extend_tame, harris_summary


class InvalidInput(Exception):
    pass


CONFIG_KEYS = ("p", "q", "d", "ring", "level", "radius", "budget", "seed",
               "format", "jobs")


def load_config(path):
    if path is None:
        return {}
    with open(path, "rb") as fh:
        data = tomli.load(fh)
    cfg = data.get("defaults", data)
    unknown = set(cfg) - set(CONFIG_KEYS)
    if unknown:
        raise InvalidInput(f"unknown config keys: {sorted(unknown)}")
    return cfg


def setting(args, cfg, key, default=None):
    val = getattr(args, key, None)
    if val is not None:
        return val
    return cfg.get(key, default)


def validate_pq(p, q):
    if p is None or q is None:
        return
    m = q
    while m % p == 0:
        m //= p
    if m != 1:
        raise InvalidInput(f"q = {q} is not a power of p = {p}")


def header(cmd, seed, params):
    lines = [f"# levelzero {cmd}", f"# seed={seed}"]
    for k in sorted(params):
        lines.append(f"# {k}={params[k]}")
    return lines


def csv_lines(columns, rows):
    out = [",".join(columns)]
    for row in rows:
        out.append(",".join(str(x) for x in row))
    return out


def emit(args, lines):
    text = "\n".join(lines) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_vertex(text, p):
    obj = json.loads(text)
    if isinstance(obj, dict):
        return vertex_from_obj(obj)
    # bare matrix: columns of a lattice basis over Z
    return vertex_from_obj({"d": len(obj), "p": p, "hnf": obj})


# ---------------------------------------------------------------- building

def cmd_building(args, cfg):
    p = setting(args, cfg, "p")
    if p is None:
        raise InvalidInput("p is required")
    seed = setting(args, cfg, "seed", 0)
    sub = args.building_cmd
    if sub in ("distance", "enclos", "tight-path"):
        x = parse_vertex(args.x, p)
        y = parse_vertex(args.y, p)
        if sub == "distance":
            lines = header("building distance", seed, {"p": p})
            lines.append(str(distance(x, y)))
        elif sub == "enclos":
            verts = enclos(x, y)
            lines = header("building enclos", seed, {"p": p})
            lines.append(json.dumps([vertex_to_obj(v) for v in verts],
                                    sort_keys=True))
        else:
            path = tight_path(y, x)
            lines = header("building tight-path", seed, {"p": p})
            lines.append(json.dumps([vertex_to_obj(v) for v in path],
                                    sort_keys=True))
        return lines
    if sub == "ball":
        d = setting(args, cfg, "d")
        if args.center:
            center = parse_vertex(args.center, p)
        else:
            if d is None:
                raise InvalidInput("need --center or --d")
            center = standard_vertex(d, p)
        budget = setting(args, cfg, "budget", 10 ** 6)
        verts = ball(center, args.radius, budget=budget)
        lines = header("building ball", seed,
                       {"p": p, "radius": args.radius, "count": len(verts)})
        lines.append(json.dumps([vertex_to_obj(v) for v in verts],
                                sort_keys=True))
        return lines
    if sub == "hull":
        vs = [vertex_from_obj(o) if isinstance(o, dict)
              else vertex_from_obj({"d": len(o), "p": p, "hnf": o})
              for o in json.loads(args.vertices)]
        hull = convex_hull(vs)
        lines = header("building hull", seed, {"p": p, "count": len(hull)})
        lines.append(json.dumps([vertex_to_obj(v) for v in hull],
                                sort_keys=True))
        return lines
    raise InvalidInput(f"unknown building subcommand {sub}")


# ---------------------------------------------------------------- homology

def cmd_homology(args, cfg):
    p = setting(args, cfg, "p")
    d = setting(args, cfg, "d")
    if p is None or d is None:
        raise InvalidInput("p and d are required")
    ring_name = setting(args, cfg, "ring", "QQ")
    ring = ring_by_name(ring_name)
    if getattr(ring, "ell", None) == p:
        raise InvalidInput(f"coefficient prime must differ from p = {p}")
    seed = setting(args, cfg, "seed", 0)
    level = setting(args, cfg, "level")
    space = args.space
    if args.pair:
        xs = json.loads(args.pair)
        x = parse_vertex(json.dumps(xs[0]), p)
        y = parse_vertex(json.dumps(xs[1]), p)
        vertices = convex_hull([x, y])
    else:
        radius = setting(args, cfg, "radius")
        if radius is None:
            raise InvalidInput("need --pair or --radius")
        budget = setting(args, cfg, "budget", 10 ** 6)
        vertices = ball(standard_vertex(d, p), radius, budget=budget)
    cx = complex_from_vertices(vertices)
    os = build_orbit_system(cx, space=space, level=level)
    system = to_coefficient_system(os, ring)
    cc = chain_complex(system, corrupt_sign=args.corrupt_sign)
    flags = []
    if not cc.boundary_squares_zero():
        flags.append(("boundary-squared", "FAIL"))
        ranks = []
    else:
        flags.append(("boundary-squared", "PASS"))
        ranks = homology(cc)
        acyclic = all(r == 0 for r in ranks[1:])
        flags.append(("acyclicity", "PASS" if acyclic else "FAIL"))
        euler = sum((-1) ** k * dim for k, dim in enumerate(cc.dims))
        alt = sum((-1) ** k * r for k, r in enumerate(ranks))
        flags.append(("euler", "PASS" if euler == alt else "FAIL"))
        if ring is QQ and not args.corrupt_sign:
            sys_q = system
            fam, rows = verify_level0_reconstruction(sys_q)
            ok = all(r.ok for r in rows)
            flags.append(("reconstruction", "PASS" if ok else "FAIL"))
            uid = fam.u_operator() == fam.identity()
            flags.append(("projector-identity", "PASS" if uid else "FAIL"))
    lines = header("homology", seed,
                   {"p": p, "d": d, "ring": ring_name, "space": space,
                    "level": os.level, "vertices": len(cx.vertices)})
    lines += csv_lines(["degree", "rank"],
                       [(k, r) for k, r in enumerate(ranks)])
    lines += csv_lines(["check", "status"], flags)
    if any(status == "FAIL" for _, status in flags):
        lines.append("# RESULT: FAIL")
    else:
        lines.append("# RESULT: PASS")
    return lines


# ---------------------------------------------------------------- dl

def cmd_dl(args, cfg):
    seed = setting(args, cfg, "seed", 0)
    q = setting(args, cfg, "q")
    d = setting(args, cfg, "d")
    if q is None or d is None:
        raise InvalidInput("d and q are required")
    p = setting(args, cfg, "p")
    validate_pq(p, q)
    budget = setting(args, cfg, "budget", 10 ** 8)
    sub = args.dl_cmd
    if sub == "count":
        fn = count_points_naive if args.naive else count_points
        n = fn(d, q, args.m, budget=budget)
        lines = header("dl count", seed, {"d": d, "q": q, "m": args.m})
        lines.append(str(n))
        return lines
    if sub == "lefschetz":
        rows = []
        all_match = True
        for m in range(1, args.mmax + 1):
            rep = lefschetz_reconcile(d, q, m, budget=budget,
                                      negate_lambda0=args.negate_lambda0)
            rows.append((d, q, m, rep.geometric, rep.spectral,
                         "PASS" if rep.match else "FAIL"))
            all_match = all_match and rep.match
        lines = header("dl lefschetz", seed,
                       {"d": d, "q": q, "mmax": args.mmax})
        lines += csv_lines(["d", "q", "m", "geometric", "spectral", "match"],
                           rows)
        lines.append("# RESULT: " + ("PASS" if all_match else "FAIL"))
        return lines
    if sub == "fixed":
        g = json.loads(args.g) if args.g else None
        n = fixed_points(d, q, args.m, g=g, zeta_exp=args.zeta_exp,
                         n=args.n, budget=budget)
        lines = header("dl fixed", seed,
                       {"d": d, "q": q, "m": args.m,
                        "zeta_exp": args.zeta_exp})
        lines.append(str(n))
        return lines
    raise InvalidInput(f"unknown dl subcommand {sub}")


# ---------------------------------------------------------------- tables

def cmd_tables(args, cfg):
    seed = setting(args, cfg, "seed", 0)
    sub = args.tables_cmd
    if sub == "hecke":
        n = args.n
        rows = []
        for i in range(n - 1):
            s = simple_reflection(n, i)
            for w in symmetric_group(n):
                prod = hecke_mul(t_basis(n, s), t_basis(n, w))
                rows.append((i, list(w), repr(prod)))
        lines = header("tables hecke", seed, {"n": n})
        lines += csv_lines(["s", "w", "product"],
                           [(i, json.dumps(w).replace(",", " "), f'"{r}"')
                            for i, w, r in rows])
        return lines
    if sub == "kostka":
        parts, mat = (elliptic_coefficients(args.e) if args.inverse
                      else kostka_matrix(args.e))
        name = "elliptic-coefficients" if args.inverse else "kostka"
        lines = header(f"tables {name}", seed, {"e": args.e})
        cols = ["shape"] + [str(list(mu)).replace(",", " ") for mu in parts]
        rows = [[str(list(lam)).replace(",", " ")] + list(r)
                for lam, r in zip(parts, mat)]
        lines += csv_lines(cols, rows)
        return lines
    if sub == "descent":
        rows = descent_table(args.e)
        lines = header("tables descent", seed, {"e": args.e})
        lines += csv_lines(
            ["I", "count", "binomial", "interval"],
            [(json.dumps(list(r["I"])).replace(",", " "), r["count"],
              r["binomial"], r["interval"]) for r in rows])
        return lines
    if sub == "harris":
        q = setting(args, cfg, "q")
        d = setting(args, cfg, "d")
        if q is None or d is None:
            raise InvalidInput("d and q are required")
        f = args.f
        theta = CharacterData(q, f, args.theta)
        if not theta.is_primitive():
            raise InvalidInput(
                f"exponent {args.theta} is not {f}-primitive over q={q}")
        e = d // f
        pair = AdmissiblePair(f, extend_tame(theta, e))
        rows = harris_summary(d, q, pair)
        lines = header("tables harris", seed,
                       {"d": d, "q": q, "f": f, "theta": args.theta})
        lines += csv_lines(
            ["d", "q", "f", "theta", "i", "degree", "I_options", "dim",
             "lambda", "lj_sign", "tag"],
            [(d, q, f, args.theta, r.i, r.degree,
              json.dumps([list(I) for I in r.parameter.interval_options]
                         ).replace(",", " "),
              r.dim, str(r.weil.eigenvalue), r.lj_sign, f'"{r.tag}"')
             for r in rows])
        return lines
    if sub == "primitive":
        q = setting(args, cfg, "q")
        if q is None:
            raise InvalidInput("q is required")
        count = enumerate_primitive(args.f, q)
        lines = header("tables primitive", seed, {"f": args.f, "q": q})
        lines.append(str(count))
        return lines
    raise InvalidInput(f"unknown tables subcommand {sub}")


# ---------------------------------------------------------------- parser

def build_parser():
    ap = argparse.ArgumentParser(
        prog="levelzero",
        description="exact computations on buildings, coefficient systems, "
                    "and finite field varieties")
    ap.add_argument("--config", help="TOML config file")
    ap.add_argument("--out", help="write the report to this file")
    ap.add_argument("--seed", type=int, help="seed recorded in the header")
    sub = ap.add_subparsers(dest="group", required=True)

    b = sub.add_parser("building")
    b.set_defaults(func=cmd_building)
    bs = b.add_subparsers(dest="building_cmd", required=True)
    for name in ("distance", "enclos", "tight-path"):
        sp = bs.add_parser(name)
        sp.add_argument("--p", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--x", required=True)
        sp.add_argument("--y", required=True)
    sp = bs.add_parser("ball")
    sp.add_argument("--p", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--center")
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp = bs.add_parser("hull")
    sp.add_argument("--p", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--vertices", required=True)

    h = sub.add_parser("homology")
    h.set_defaults(func=cmd_homology)
    h.add_argument("--p", type=int)
    h.add_argument("--d", type=int)
    h.add_argument("--ring")
    h.add_argument("--space", default="projective",
                   choices=("projective", "flag"))
    h.add_argument("--level", type=int)
    h.add_argument("--radius", type=int)
    h.add_argument("--pair", help="JSON [matrix, matrix]")
    h.add_argument("--budget", type=int)
    h.add_argument("--corrupt-sign", action="store_true",
                   help="negative control: flip one boundary sign")

    dl = sub.add_parser("dl")
    dl.set_defaults(func=cmd_dl)
    ds = dl.add_subparsers(dest="dl_cmd", required=True)
    sp = ds.add_parser("count")
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--naive", action="store_true")
    sp = ds.add_parser("lefschetz")
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--mmax", type=int, required=True)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--negate-lambda0", action="store_true",
                    help="negative control: flip the i=0 eigenvalues")
    sp = ds.add_parser("fixed")
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--g", help="JSON integer matrix over the prime field")
    sp.add_argument("--zeta-exp", type=int, default=0)
    sp.add_argument("--n", type=int)
    sp.add_argument("--budget", type=int)

    t = sub.add_parser("tables")
    t.set_defaults(func=cmd_tables)
    ts = t.add_subparsers(dest="tables_cmd", required=True)
    sp = ts.add_parser("hecke")
    sp.add_argument("--n", type=int, required=True)
    sp = ts.add_parser("kostka")
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--inverse", action="store_true")
    sp = ts.add_parser("descent")
    sp.add_argument("--e", type=int, required=True)
    sp = ts.add_parser("harris")
    sp.add_argument("--d", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--theta", type=int, required=True)
    sp = ts.add_parser("primitive")
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--q", type=int)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = load_config(args.config)
        lines = args.func(args, cfg)
    except (BuildingBudget, DlBudget) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidInput, ValueError, KeyError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(args, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
