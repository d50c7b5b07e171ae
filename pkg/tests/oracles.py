"""Independent reference computations used only by the tests.

Each one is deliberately naive (full enumeration) and shares no code with
the library routines it checks.
"""

import itertools
import random

from heegaard_cert.heegaard import HeegaardDiagram, IntersectionPoint
from heegaard_cert.signs import Sign, SignMatrix

# a sign as the set of signs of real numbers it may stand for
SIGN_SETS = {
    Sign.ZERO: frozenset({0}),
    Sign.PLUS: frozenset({1}),
    Sign.MINUS: frozenset({-1}),
    Sign.STAR: frozenset({-1, 1}),
}
FROM_SET = {v: k for k, v in SIGN_SETS.items()}


def oracle_mul(a, b):
    return FROM_SET[frozenset(x * y for x in SIGN_SETS[a] for y in SIGN_SETS[b])]


def inversion_sign(sigma):
    inv = sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j])
    return -1 if inv % 2 else 1


def leibniz_det(a):
    n = len(a)
    total = 0
    for sigma in itertools.permutations(range(n)):
        term = inversion_sign(sigma)
        for i in range(n):
            term *= a[i][sigma[i]]
        total += term
    return total


def permanent(c):
    n = len(c)
    total = 0
    for sigma in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term *= c[i][sigma[i]]
        total += term
    return total


def summands(m):
    """(sigma, entries, integer sign or None for *) for every nonzero summand."""
    n = m.rows
    out = []
    for sigma in itertools.permutations(range(n)):
        entries = [m[i, sigma[i]] for i in range(n)]
        if any(e is Sign.ZERO for e in entries):
            continue
        if any(e is Sign.STAR for e in entries):
            out.append((sigma, entries, None))
            continue
        s = inversion_sign(sigma)
        for e in entries:
            s *= 1 if e is Sign.PLUS else -1
        out.append((sigma, entries, s))
    return out


def column_ok(col):
    vals = {s for s in col if s is not Sign.ZERO}
    return vals in ({Sign.PLUS}, {Sign.MINUS})


def bruteforce_holds(m):
    """Row-scaling criterion by plain enumeration using the set-valued product."""
    for d in itertools.product((Sign.ZERO, Sign.PLUS, Sign.MINUS), repeat=m.rows):
        if all(x is Sign.ZERO for x in d):
            continue
        scaled = [[oracle_mul(d[i], m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
        if not any(column_ok([scaled[i][j] for i in range(m.rows)]) for j in range(m.cols)):
            return False
    return True


def all_sign_matrices(n):
    signs = list(Sign)
    for entries in itertools.product(signs, repeat=n * n):
        yield SignMatrix(n, n, entries)


def random_sign_matrix(rng, n, weights=None):
    signs = list(Sign)
    return SignMatrix(n, n, tuple(rng.choices(signs, weights=weights, k=n * n)))


def random_diagram(rng, max_genus=4, max_points=6):
    g = rng.randint(1, max_genus)
    words = []
    for _ in range(g):
        k = rng.randint(0, max_points)
        words.append(tuple(IntersectionPoint(rng.randrange(g), rng.choice((1, -1))) for _ in range(k)))
    return HeegaardDiagram(g, tuple(words))


def random_diagrams(seed, count, **kw):
    rng = random.Random(seed)
    return [random_diagram(rng, **kw) for _ in range(count)]


def matching_count(a_count, b_count, pairs):
    """Perfect matchings of a bipartite multigraph by brute force over bijections."""
    if a_count != b_count:
        return 0
    mult = {}
    for a, b in pairs:
        mult[a, b] = mult.get((a, b), 0) + 1
    total = 0
    for sigma in itertools.permutations(range(b_count)):
        term = 1
        for a in range(a_count):
            term *= mult.get((a, sigma[a]), 0)
        total += term
    return total


def random_graph_pairs(rng, max_side=6, max_edges=20):
    a = rng.randint(1, max_side)
    b = a if rng.random() < 0.9 else rng.randint(1, max_side)
    k = rng.randint(0, max_edges)
    return a, b, [(rng.randrange(a), rng.randrange(b)) for _ in range(k)]
