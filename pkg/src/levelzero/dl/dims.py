"""Dimension table for the elliptic constituents, backed by fixtures.

The dimensions of the hook constituents attached to an f-primitive
character depend only on (d, f, i, q). They are not computed here: the
shipped fixture file data/gl_dims.json is generated once per (d, q) by
scripts/gen_dimension_fixtures.py, which decomposes induced characters of
GL_d(F_q) by inner products summed over the full group.
"""

import json
from functools import lru_cache
from importlib import resources


class UnsupportedCase(Exception):
    pass


@lru_cache(maxsize=None)
def _table():
    text = (resources.files("levelzero") / "data" / "gl_dims.json").read_text()
    raw = json.loads(text)
    out = {}
    for key, val in raw.items():
        d, q, f, i = (int(x) for x in key.split(","))
        out[(d, q, f, i)] = val
    return out


def supported_pairs():
    """Sorted list of (d, q) pairs present in the fixture table."""
    return sorted({(d, q) for (d, q, _, _) in _table()})


def dimension(d, f, i, q):
    """Dimension of the i-th hook constituent for an f-primitive character."""
    if d % f != 0:
        raise UnsupportedCase(f"f = {f} must divide d = {d}")
    e = d // f
    if not 0 <= i <= e - 1:
        raise UnsupportedCase(f"i = {i} out of range for e = {e}")
    try:
        return _table()[(d, q, f, i)]
    except KeyError:
        raise UnsupportedCase(f"no dimension data for d={d}, q={q}, f={f}")
