"""Weight combinatorics for Sp(2g), g <= 3.

Used to split explicit invariant subspaces of exterior algebras into
irreducible symplectic pieces: the ambient spaces carry a torus grading by
monomial weights, graded subspaces decompose weight by weight, and characters
of irreducibles come from Freudenthal's recursion.  Everything is exact.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def positive_roots(g):
    roots = []
    for i in range(g):
        for j in range(i + 1, g):
            a = [0] * g
            a[i], a[j] = 1, -1
            roots.append(tuple(a))
            b = [0] * g
            b[i], b[j] = 1, 1
            roots.append(tuple(b))
    for i in range(g):
        c = [0] * g
        c[i] = 2
        roots.append(tuple(c))
    return tuple(roots)


def rho(g):
    return tuple(range(g, 0, -1))


def sp_dim(g, lam):
    """Dimension of the irreducible representation with highest weight lam
    (a weakly decreasing partition with at most g nonnegative parts)."""
    lam = tuple(lam)
    if len(lam) > g or any(l < 0 for l in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"malformed highest weight {lam} for rank {g}")
    lam = lam + (0,) * (g - len(lam))
    r = rho(g)
    num = 1
    den = 1
    for a in positive_roots(g):
        num *= _dot([x + y for x, y in zip(lam, r)], a)
        den *= _dot(r, a)
    if num % den:
        raise AssertionError("Weyl dimension is not integral")
    return num // den


@lru_cache(maxsize=None)
def weight_multiplicities(g, lam):
    """Weight multiplicity table of the irreducible with highest weight lam,
    by Freudenthal's recursion."""
    lam = tuple(lam) + (0,) * (g - len(lam))
    pos = positive_roots(g)
    r = rho(g)
    lam_rho = [x + y for x, y in zip(lam, r)]
    c_lam = _dot(lam_rho, lam_rho)

    # candidate weights: lam minus nonnegative combinations of positive roots,
    # bounded by the weight polytope; generate by saturation from lam
    weights = {lam}
    frontier = [lam]
    while frontier:
        new = []
        for w in frontier:
            for a in pos:
                v = tuple(x - y for x, y in zip(w, a))
                if v not in weights and _dot(v, v) <= _dot(lam, lam):
                    weights.add(v)
                    new.append(v)
        frontier = new

    # process in decreasing height (dot with rho)
    order = sorted(weights, key=lambda w: (-_dot(w, r), w))
    mult = {lam: 1}
    kmax = 2 * sum(lam) + 2 * g + 2
    for mu in order[1:]:
        mu_rho = [x + y for x, y in zip(mu, r)]
        denom = c_lam - _dot(mu_rho, mu_rho)
        total = 0
        for a in pos:
            for k in range(1, kmax):
                v = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(v, 0)
                if m:
                    total += 2 * m * _dot(v, a)
        if denom <= 0:
            continue
        if total % denom:
            raise AssertionError("Freudenthal recursion failed")
        m = total // denom
        if m:
            mult[mu] = m
    if sum(mult.values()) != sp_dim(g, lam):
        raise AssertionError("weight multiplicities do not sum to the dimension")
    return {k: v for k, v in mult.items() if v}


def dominant(w):
    return tuple(sorted((abs(x) for x in w), reverse=True))


def decompose_character(g, weight_dims):
    """Decompose a character (weight -> multiplicity) into highest weights.

    Greedy subtraction of irreducible characters from the largest remaining
    weight; raises if any multiplicity ever turns negative.
    """
    rem = {tuple(k): v for k, v in weight_dims.items() if v}
    r = rho(g)
    out = {}
    while rem:
        mu = max(rem, key=lambda w: (_dot(w, r), w))
        lam = dominant(mu)
        m = rem[mu]
        if m < 0:
            raise AssertionError("character is not a nonnegative sum of irreducibles")
        table = weight_multiplicities(g, lam)
        for w, k in table.items():
            nv = rem.get(w, 0) - m * k
            if nv:
                rem[w] = nv
            else:
                rem.pop(w, None)
        out[lam] = out.get(lam, 0) + m
    if any(v < 0 for v in out.values()):
        raise AssertionError("negative multiplicity in decomposition")
    return out


def subspace_character(basis_vectors, monomial_weights):
    """Weight -> dimension for a torus-graded subspace.

    basis_vectors: rows spanning the subspace in a monomial basis whose i-th
    monomial has weight monomial_weights[i]; the subspace must be graded
    (guaranteed when it is cut out by equivariant conditions).
    """
    from . import intlinalg as la

    weights = sorted(set(monomial_weights))
    out = {}
    total = 0
    for w in weights:
        cols = [i for i, mw in enumerate(monomial_weights) if mw == w]
        sub = [[row[i] for i in cols] for row in basis_vectors]
        d = la.rank_int(sub) if basis_vectors else 0
        if d:
            out[w] = d
            total += d
    if basis_vectors and total != la.rank_int([list(r) for r in basis_vectors]):
        raise AssertionError("subspace is not graded by the torus weights")
    return out
