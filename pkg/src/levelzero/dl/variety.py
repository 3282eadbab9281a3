"""Point counts for the variety det((X_i^{q^j}))^{q-1} = (-1)^{d-1}.

The defining polynomial is the (q-1)-st power of the Moore determinant.
Solutions over F_{q^m} are counted either naively (full exhaustion, used
as an oracle at tiny sizes) or through the scaling action: replacing X by
tX multiplies the Moore determinant by t^{(q^d-1)/(q-1)}, so the count
decomposes over projective classes, with each class contributing either 0
or gcd(q^d - 1, q^m - 1) scalars.
"""

import itertools
from math import gcd

from .ff import get_field, split_prime_power


class BudgetExceeded(Exception):
    pass


def _ambient_field(q, m):
    p, r = split_prime_power(q)
    return get_field(p, r * m)


def moore_determinant(F, q, xs):
    """det of the d x d matrix with entries xs[i]^{q^j} over field F."""
    d = len(xs)
    rows = [[F.pow(x, q ** j) for j in range(d)] for x in xs]
    return _det(F, rows)


def _det(F, rows):
    d = len(rows)
    rows = [list(r) for r in rows]
    det = F.one()
    sign = 1
    for col in range(d):
        piv = next((r for r in range(col, d) if rows[r][col] != 0), None)
        if piv is None:
            return F.zero()
        if piv != col:
            rows[piv], rows[col] = rows[col], rows[piv]
            sign = -sign
        det = F.mul(det, rows[col][col])
        inv = F.inv(rows[col][col])
        for r in range(col + 1, d):
            c = F.mul(rows[r][col], inv)
            if c:
                for j in range(col, d):
                    rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[col][j]))
    if sign < 0:
        det = F.neg(det)
    return det


def _target(F, d):
    """(-1)^{d-1} as an element of F."""
    return F.one() if d % 2 == 1 else F.minus_one()


def count_points_naive(d, q, m, budget=10 ** 8):
    """Exhaustive count over all tuples in F_{q^m}^d."""
    if q ** (m * d) > budget:
        raise BudgetExceeded(f"q^(m*d) = {q ** (m * d)} exceeds {budget}")
    F = _ambient_field(q, m)
    target = _target(F, d)
    count = 0
    for xs in itertools.product(F.elements(), repeat=d):
        v = moore_determinant(F, q, xs)
        if F.pow(v, q - 1) == target:
            count += 1
    return count


def _projective_reps(F, d):
    """One representative per scaling class of F^d \\ {0}.

    Canonical form: first nonzero coordinate equals 1.
    """
    for pivot in range(d):
        head = (0,) * pivot + (1,)
        for tail in itertools.product(F.elements(), repeat=d - pivot - 1):
            yield head + tail


def count_points(d, q, m, budget=10 ** 8):
    """Count solutions via the scaling action on projective classes."""
    if q ** (m * (d - 1)) * d > budget:
        raise BudgetExceeded("projective enumeration exceeds budget")
    F = _ambient_field(q, m)
    n_amb = F.size - 1
    g = gcd(q ** d - 1, n_amb)
    target = _target(F, d)
    count = 0
    for xs in _projective_reps(F, d):
        v = moore_determinant(F, q, xs)
        if v == 0:
            continue
        a = F.pow(v, q - 1)
        # t ranges over F^x; t^{q^d-1} a = target has g solutions iff
        # target/a is a (q^d-1)-st power, i.e. killed by n_amb/g
        ratio = F.mul(target, F.inv(a))
        if F.pow(ratio, n_amb // g) == F.one():
            count += g
    return count


def _matrix_embed(F, q, g):
    """Embed an integer matrix (entries mod p, q = p assumed for non-scalar
    use) into F via the prime subfield."""
    return [[F.from_prime_subfield(c) for c in row] for row in g]


def fixed_points(d, q, m, g=None, zeta_exp=0, n=None, budget=10 ** 8):
    """Count variety points fixed by X -> zeta * g * X^{q^m}.

    g is a d x d integer matrix over the prime field (identity when None);
    zeta = the canonical generator of mu_{q^d-1} raised to zeta_exp. The
    count runs over F_{q^{m*n}} where n (default d) must satisfy
    d | m*n so that mu_{q^d-1} embeds.

    The map is additive, so its fixed locus is the kernel of an F_p-linear
    operator; the kernel is enumerated and filtered by the variety
    equation.
    """
    if n is None:
        n = d
    if (q ** (m * n) - 1) % (q ** d - 1) != 0:
        raise ValueError("need q^d - 1 | q^{mn} - 1 to house mu_{q^d-1}")
    p, r = split_prime_power(q)
    F = _ambient_field(q, m * n)
    if g is None:
        g = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    gF = _matrix_embed(F, q, g)
    zeta = F.pow(F.generator, zeta_exp * (F.size - 1) // (q ** d - 1))

    def T(vec):
        out = []
        for i in range(d):
            acc = F.zero()
            for j in range(d):
                acc = F.add(acc, F.mul(gF[i][j], F.pow(vec[j], q ** m)))
            out.append(F.mul(zeta, acc))
        return out

    # F_p-basis of F^d: p-power multiples of the generator powers in each
    # coordinate; build the matrix of T - id over F_p and solve.
    nn = F.n  # degree over F_p
    dim = d * nn
    basis = []
    for i in range(d):
        for k in range(nn):
            vec = [F.zero()] * d
            vec[i] = F._tuple_to_int(tuple(1 if t == k else 0
                                           for t in range(nn)))
            basis.append(vec)

    def to_coords(vec):
        out = []
        for x in vec:
            out.extend(F._tuples[x])
        return out

    cols = []
    for b in basis:
        tb = T(b)
        diff = [F.sub(tb[i], b[i]) for i in range(d)]
        cols.append(to_coords(diff))
    # kernel of the dim x dim matrix with columns cols, over F_p
    mat = [[cols[c][rr] for c in range(dim)] for rr in range(dim)]

    def from_coords(coords):
        return [F._tuple_to_int(tuple(coords[i * nn:(i + 1) * nn]))
                for i in range(d)]

    free = [from_coords(v) for v in _kernel_basis(mat, p)]
    if p ** len(free) * d > budget:
        raise BudgetExceeded("kernel too large to enumerate")
    target = _target(F, d)
    count = 0
    for coeffs in itertools.product(range(p), repeat=len(free)):
        vec = [F.zero()] * d
        for c, kv in zip(coeffs, free):
            if c:
                for i in range(d):
                    for _ in range(c):
                        vec[i] = F.add(vec[i], kv[i])
        v = moore_determinant(F, q, vec)
        if F.pow(v, q - 1) == target:
            count += 1
    return count


def _kernel_basis(mat, p):
    """Kernel basis of a square matrix over F_p, as coordinate lists."""
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col] % p != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(n):
            if r != rank and m[r][col] % p != 0:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[rank])]
        pivots[col] = rank
        rank += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-m[pr][col]) % p
        basis.append(vec)
    return basis
