"""Integer partitions, dominance order, hooks."""

from functools import lru_cache


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i)
                 for i in range(lam[0]))


def dominates(lam, mu):
    """lam >= mu in dominance: partial sums of lam weakly exceed mu's."""
    assert sum(lam) == sum(mu)
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def is_hook(lam):
    """lam = (a, 1, 1, ..., 1)."""
    return len(lam) <= 1 or all(part == 1 for part in lam[1:])


def hook_index(lam):
    """The i with lam = (i+1, 1^(e-1-i)), or None if lam is not a hook."""
    if not is_hook(lam):
        return None
    return lam[0] - 1 if lam else 0
