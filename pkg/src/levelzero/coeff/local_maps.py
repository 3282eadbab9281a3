"""Transport maps between vertex modules along geodesics.

A single step from y to an adjacent z averages a function over the edge
orbits and re-reads it on the orbits of z.  Composites along any geodesic
from y to x that stays in the hull of the pair give the same map; tests
exercise this path independence and the hull composition rule.
"""

from __future__ import annotations

from ..building.complexes import enclos
from ..building.position import adjacent
from ..ring import mat_identity, mat_mul


def _vertex_index(cx, v):
    try:
        return cx.vertices.index(v)
    except ValueError:
        raise ValueError("vertex does not belong to the complex") from None


def epsilon_step(system, y, z):
    """Matrix of the one-step transport V_y -> V_z for adjacent y, z."""
    cx = system.complex
    iy, iz = _vertex_index(cx, y), _vertex_index(cx, z)
    edge = tuple(sorted((iy, iz)))
    if edge not in system.rank:
        raise ValueError("edge does not belong to the complex")
    avg = system.averaging_to((iy,), edge)
    incl = system.restriction_to(edge, (iz,))
    return mat_mul(system.ring, incl, avg)


def epsilon_local(system, path):
    """Matrix of the transport V_y -> V_x along a geodesic path y -> x.

    The path must be a geodesic whose every vertex lies in the hull of
    (x, previous vertex); otherwise a ValueError is raised.
    """
    if not path:
        raise ValueError("empty path")
    x = path[-1]
    for a, b in zip(path, path[1:]):
        if not adjacent(a, b):
            raise ValueError("path steps must be adjacent")
        if b not in enclos(x, a):
            raise ValueError("path leaves the hull; not a geodesic")
    cx = system.complex
    iy = _vertex_index(cx, path[0])
    total = mat_identity(system.ring, system.rank[(iy,)])
    for a, b in zip(path, path[1:]):
        total = mat_mul(system.ring, epsilon_step(system, a, b), total)
    return total
