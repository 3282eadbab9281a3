"""JSON round-trips for vertices and complexes."""

from __future__ import annotations

import json

from .complexes import ConvexComplex, complex_from_vertices
from .lattice import LatticeClass, canonicalize


def vertex_to_obj(v: LatticeClass):
    return {"d": v.d, "p": v.p, "hnf": [list(row) for row in v.rep]}


def vertex_from_obj(obj) -> LatticeClass:
    d, p = int(obj["d"]), int(obj["p"])
    rows = obj["hnf"]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ValueError("hnf matrix has wrong shape")
    cols = [[rows[i][j] for i in range(d)] for j in range(d)]
    v = canonicalize(cols, p)
    return v


def vertex_to_json(v: LatticeClass) -> str:
    return json.dumps(vertex_to_obj(v), sort_keys=True)


def vertex_from_json(s: str) -> LatticeClass:
    return vertex_from_obj(json.loads(s))


def complex_to_obj(c: ConvexComplex):
    return {
        "vertices": [vertex_to_obj(v) for v in c.vertices],
        "simplices": [list(s) for s in c.simplices],
        "convex": c.convex,
    }


def complex_from_obj(obj) -> ConvexComplex:
    vertices = [vertex_from_obj(o) for o in obj["vertices"]]
    return complex_from_vertices(vertices)


def complex_to_json(c: ConvexComplex) -> str:
    return json.dumps(complex_to_obj(c), sort_keys=True)


def complex_from_json(s: str) -> ConvexComplex:
    return complex_from_obj(json.loads(s))
