"""Ascent-set counting for permutations, 1-based window convention.

For w in S_e acting on {0, ..., e-1} in one-line notation, the profile of
w is I(w) = {i in {1, ..., e-1} : w(i-1) < w(i)}. The count of
permutations with profile I equals binomial(e-1, |I|) exactly when I is
an initial or terminal interval.
"""

import itertools
from math import comb


def ascent_set(w):
    return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])


def descent_count(e, I):
    """Number of w in S_e with ascent profile exactly I."""
    I = frozenset(I)
    assert all(1 <= i <= e - 1 for i in I)
    return sum(1 for w in itertools.permutations(range(e))
               if ascent_set(w) == I)


def is_interval(e, I):
    """I = {1, ..., i} or {e-i, ..., e-1} (including empty)."""
    I = sorted(I)
    if not I:
        return True
    contiguous = I == list(range(I[0], I[0] + len(I)))
    return contiguous and (I[0] == 1 or I[-1] == e - 1)


def descent_table(e):
    """All profiles I with their counts, the binomial value, and the
    interval flag; sorted by (|I|, sorted elements)."""
    rows = []
    for size in range(e):
        for I in itertools.combinations(range(1, e), size):
            rows.append({
                "I": I,
                "count": descent_count(e, I),
                "binomial": comb(e - 1, size),
                "interval": is_interval(e, I),
            })
    assert sum(r["count"] for r in rows) == _factorial(e)
    return rows


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
