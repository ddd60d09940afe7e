"""Finite stabilizers in GL(g,Z), cone equivalence and orbit classification.

Every "up to the group action" statement in the package routes through here.
The search container is always the (finite) isometry group of the positive
definite generator-sum form, enumerated by backtracking over short vectors
with prescribed Gram products.
"""

from fractions import Fraction
from functools import lru_cache

from . import intlinalg as la
from .cones import Cone, ConeError, face_generator_sets, gen_sum, interior_rank, named_cone
from .symquad import QuadForm, act, rank1


class FiniteMatrixGroup:
    """Finite subgroup of GL(g,Z): full element list plus a small generating set."""

    def __init__(self, g, elements):
        self.g = g
        self.elements = sorted(set(elements))
        self.order = len(self.elements)
        self._elemset = frozenset(self.elements)
        self.generators = _reduce_generators(self.elements)

    def __contains__(self, u):
        return tuple(tuple(r) for r in u) in self._elemset

    def intersect(self, other):
        return FiniteMatrixGroup(self.g, [e for e in self.elements if e in other._elemset])

    def to_json(self):
        return {
            "g": self.g,
            "order": self.order,
            "generators": [[x for row in gen for x in row] for gen in self.generators],
        }


def _tuple_mat(m):
    return tuple(tuple(r) for r in m)


def _mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def closure(gens, limit=100000):
    """Group closure of a set of unimodular matrices (BFS on products)."""
    g = len(gens[0])
    ident = _tuple_mat(la.identity(g))
    gens = [_tuple_mat(x) for x in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for h in gens:
                y = _mul(x, h)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    if len(seen) > limit:
                        raise ValueError("closure exceeds desk-scale limit")
        frontier = new
    return seen


def _reduce_generators(elements):
    """Greedy small generating set; deterministic for a sorted element list."""
    g = len(elements[0])
    ident = _tuple_mat(la.identity(g))
    have = {ident}
    gens = []
    for e in elements:
        if e not in have:
            gens.append(e)
            have = closure(gens)
            if len(have) == len(elements):
                break
    return gens


# -- short vector enumeration -------------------------------------------------

def _ldl(q):
    """q = L D L^T with unit lower-triangular L; exact rationals, q pos. def."""
    n = len(q)
    a = [[Fraction(q[i][j]) for j in range(n)] for i in range(n)]
    low = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        d[j] = a[j][j] - sum(low[j][k] ** 2 * d[k] for k in range(j))
        if d[j] <= 0:
            raise ValueError("form is not positive definite")
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            low[i][j] = (a[i][j] - sum(low[i][k] * low[j][k] * d[k] for k in range(j))) / d[j]
    return low, d


def short_vectors(q, norm):
    """All integer vectors v != 0 with v^T q v == norm (both signs included)."""
    n = len(q)
    low, d = _ldl(q)
    # q(x) = sum_j d_j (x_j + sum_{i>j} L_ij x_i)^2 ; enumerate from the last coord.
    out = []
    x = [0] * n

    def rec(j, remaining):
        if j < 0:
            if remaining == 0 and any(x):
                out.append(tuple(x))
            return
        shift = sum(low[i][j] * x[i] for i in range(j + 1, n))
        # d_j (x_j + shift)^2 <= remaining; widen by 1 and filter exactly below
        s = _sqrt_floor_frac(Fraction(remaining) / d[j]) + 1
        lo = _ceil(-s - shift)
        hi = _floor(s - shift)
        for v in range(lo, hi + 1):
            val = d[j] * (v + shift) ** 2
            if val <= remaining:
                x[j] = v
                rec(j - 1, remaining - val)
        x[j] = 0

    rec(n - 1, Fraction(norm))
    return sorted(out)


def _sqrt_floor_frac(f):
    """Largest integer k with k^2 <= f (f a nonnegative Fraction)."""
    if f < 0:
        return -1
    k = int(f) + 1
    while k * k > f:
        k -= 1
    return k


def _ceil(f):
    return -(-f.numerator // f.denominator) if isinstance(f, Fraction) else -(-f // 1)


def _floor(f):
    return f.numerator // f.denominator if isinstance(f, Fraction) else f // 1


# -- isometry search ----------------------------------------------------------

def isometries(q1, q2):
    """Generator of all U in GL(n,Z) with U q1 U^T == q2 (pos. def. forms)."""
    n = len(q1)
    if n == 0:
        yield ()
        return
    if la.det([list(r) for r in q1]) != la.det([list(r) for r in q2]):
        return
    norms = sorted({q2[i][i] for i in range(n)})
    cand = {m: short_vectors(q1, m) for m in norms}
    q1rows = {v: tuple(sum(q1[i][j] * v[j] for j in range(n)) for i in range(n)) for m in norms for v in cand[m]}

    rows = [None] * n

    def rec(i):
        if i == n:
            yield tuple(rows)
            return
        for v in cand[q2[i][i]]:
            qv = q1rows[v]
            ok = True
            for j in range(i):
                if sum(rows[j][t] * qv[t] for t in range(n)) != q2[i][j]:
                    ok = False
                    break
            if ok:
                rows[i] = v
                yield from rec(i + 1)
        rows[i] = None

    yield from rec(0)


def orth_group(q):
    """Integral isometry group {U : U q U^T = q} of a positive definite form."""
    if isinstance(q, QuadForm):
        if not q.is_positive_definite():
            raise ValueError("orth_group needs a positive definite form")
        mat = q.mat
    else:
        mat = _tuple_mat(q)
    return FiniteMatrixGroup(len(mat), list(isometries(mat, mat)))


# -- reduction of degenerate cones to their support genus ----------------------

class _Reduction:
    """Quotient of a cone by the common kernel of its generators."""

    __slots__ = ("cone", "reduced", "proj", "basis")

    def __init__(self, cone, reduced, proj, basis):
        self.cone = cone
        self.reduced = reduced
        self.proj = proj      # r x g matrix C: reduced form = C A C^T
        self.basis = basis    # full unimodular [K; C]


def reduce_cone(c):
    g = c.g
    r = interior_rank(c)
    if r == g:
        return _Reduction(c, c, la.identity(g), la.identity(g))
    q0 = gen_sum(c)
    kern = la.kernel_basis_saturated(q0)
    full = la.complete_to_unimodular(kern)
    proj = full[len(kern):]
    red_gens = []
    for a in c.gens:
        m = la.mat_mul(la.mat_mul(proj, [list(row) for row in a.mat]), la.transpose(proj))
        if a.vector is not None:
            red_gens.append(rank1(la.mat_vec(proj, list(a.vector))))
        else:
            red_gens.append(QuadForm(m))
    return _Reduction(c, Cone(red_gens, validate=False), proj, full)


def _lift_witness(red1, red2, u_red):
    """Lift a reduced-genus witness to GL(g,Z) (identity on the kernel part)."""
    g = red1.cone.g
    r = len(u_red)
    if r == g:
        return [list(row) for row in u_red]
    k = g - r
    block = [[1 if (i == j and i < k) else 0 for j in range(g)] for i in range(g)]
    for i in range(r):
        for j in range(r):
            block[k + i][k + j] = u_red[i][j]
    b1 = red1.basis
    b2 = red2.basis
    # beta_1(S v) = u_red^T beta_2(v) with S = B1^T blockdiag(I, u_red^T) B2^-T
    s = la.mat_mul(
        la.mat_mul(la.transpose(b1), la.transpose(block)),
        la.transpose(la.inverse_unimodular(b2)),
    )
    return la.transpose(s)


def fingerprint(c):
    """Cheap GL(g,Z)-invariants used to bucket cones before exact search."""
    red = reduce_cone(c)
    q = gen_sum(red.reduced)
    counts = []
    for m in (1, 2, 3, 4):
        counts.append(len(short_vectors(q, m)))
    return (
        c.g,
        c.dim(),
        len(c.gens),
        tuple(sorted(qf.rank() for qf in c.gens)),
        interior_rank(c),
        tuple(la.elementary_divisors(c.coord_matrix)),
        la.det(q),
        tuple(counts),
    )


def are_equivalent(c1, c2):
    """Unimodular witness with act(U, .) mapping gens(c1) onto gens(c2), or None.

    Exhaustive: the search runs over all isometries of the positive definite
    generator-sum forms (after quotienting degenerate cones by their common
    kernel), so absence of a witness proves inequivalence.
    """
    if c1.g != c2.g:
        raise ValueError("cones of different genus")
    if fingerprint(c1) != fingerprint(c2):
        return None
    red1 = reduce_cone(c1)
    red2 = reduce_cone(c2)
    q1 = gen_sum(red1.reduced)
    q2 = gen_sum(red2.reduced)
    target = frozenset(red2.reduced.gens)
    for u in isometries(_tuple_mat(q1), _tuple_mat(q2)):
        if frozenset(act(u, a) for a in red1.reduced.gens) == target:
            full = _lift_witness(red1, red2, u)
            assert frozenset(act(full, a) for a in c1.gens) == frozenset(c2.gens)
            return full
    return None


def stabilizer(c, transposed=False):
    """Full stabilizer of the generator set inside GL(g,Z).

    Only defined for cones whose interior contains full-rank forms; the
    generator sum is then positive definite and every stabilizing element is
    one of its finitely many isometries.
    """
    r = interior_rank(c)
    if r != c.g:
        raise ConeError(
            f"stabilizer needs interior rank {c.g}, got {r}: "
            "degenerate cones have infinite stabilizer"
        )
    q0 = _tuple_mat(gen_sum(c))
    gset = frozenset(c.gens)
    elems = []
    for u in isometries(q0, q0):
        # transposed convention: A -> U^T A U instead of U A U^T
        v = la.transpose(u) if transposed else u
        if frozenset(act(v, a) for a in c.gens) == gset:
            elems.append(_tuple_mat(u))
    return FiniteMatrixGroup(c.g, elems)


def act_cone(u, c):
    return Cone([act(u, a) for a in c.gens], validate=False)


# -- orbit classification -----------------------------------------------------

class OrbitCensus:
    """Result of classify(): orbit representatives with their members."""

    def __init__(self, orbits):
        # orbits: list of (representative Cone, list of member Cones)
        self.orbits = orbits

    def representatives(self):
        return [rep for rep, _ in self.orbits]

    def counts_by_dim(self, dims=None):
        out = {}
        for rep, _ in self.orbits:
            out[rep.dim()] = out.get(rep.dim(), 0) + 1
        if dims is None:
            return out
        return tuple(out.get(d, 0) for d in dims)

    def __len__(self):
        return len(self.orbits)


def classify(cone_list):
    """Partition cones into GL(g,Z)-orbits.

    The representative of each orbit is the member whose sorted generator
    coordinate list is lexicographically minimal, so output is deterministic.
    """
    buckets = {}
    orbits = []  # (fingerprint, rep, members)
    for c in sorted(cone_list, key=lambda x: (x.dim(), len(x.gens), tuple(q.coords for q in x.gens))):
        f = fingerprint(c)
        placed = False
        for idx in buckets.get(f, []):
            rep = orbits[idx][1]
            if are_equivalent(c, rep) is not None:
                orbits[idx][2].append(c)
                placed = True
                break
        if not placed:
            buckets.setdefault(f, []).append(len(orbits))
            orbits.append((f, c, [c]))
    final = []
    for _, _, members in orbits:
        rep = min(members, key=lambda x: tuple(q.coords for q in x.gens))
        final.append((rep, members))
    final.sort(key=lambda pair: (pair[0].dim(), tuple(q.coords for q in pair[0].gens)))
    return OrbitCensus(final)


# -- fan censuses -------------------------------------------------------------

def _gen_permutations(cone, group):
    """Permutation of generator indices induced by each group generator."""
    index = {q: i for i, q in enumerate(cone.gens)}
    perms = []
    for u in group.generators:
        perms.append(tuple(index[act(u, q)] for q in cone.gens))
    return perms


def _orbit_reps_of_faces(cone, group, include_top=True):
    """Representative generator-index-sets of face orbits under a finite group."""
    perms = _gen_permutations(cone, group)
    all_faces = face_generator_sets(cone)
    if not include_top:
        all_faces = {s for s in all_faces if len(s) != len(cone.gens)}
    seen = set()
    reps = []
    for s in sorted(all_faces, key=lambda s: (len(s), sorted(s))):
        if s in seen:
            continue
        reps.append(s)
        frontier = [s]
        seen.add(s)
        while frontier:
            new = []
            for f in frontier:
                for p in perms:
                    img = frozenset(p[i] for i in f)
                    if img not in seen:
                        seen.add(img)
                        new.append(img)
            frontier = new
    return reps


@lru_cache(maxsize=None)
def stabilizer_of_top(name):
    return stabilizer(named_cone(name))


@lru_cache(maxsize=None)
def perfect_face_representatives():
    """Orbit reps (as cones) of all faces of the two top perfect cones."""
    out = []
    for name in ("Pi1", "Pi2"):
        top = named_cone(name)
        grp = stabilizer_of_top(name)
        for s in _orbit_reps_of_faces(top, grp):
            out.append(Cone([top.gens[i] for i in sorted(s)], validate=False))
    return out


@lru_cache(maxsize=None)
def perfect_census():
    """GL(4,Z)-orbit census of the perfect fan in genus 4."""
    return classify(perfect_face_representatives())


@lru_cache(maxsize=None)
def voronoi_extra_representatives():
    """Orbit reps of the cones added by the refinement (all contain the ray).

    Any equivalence between two refinement cones fixes the unique full-rank
    generator, hence normalizes the non-basic top cone; classification thus
    reduces to orbits of its proper faces under its stabilizer.
    """
    from .symquad import central_ray
    from .cones import cone_with_ray

    pi2 = named_cone("Pi2")
    grp = stabilizer_of_top("Pi2")
    ray = central_ray()
    reps = [Cone([ray], name="e")]
    for s in _orbit_reps_of_faces(pi2, grp, include_top=False):
        face = Cone([pi2.gens[i] for i in sorted(s)], validate=False)
        reps.append(cone_with_ray(face, ray))
    return reps


def voronoi_census_counts(dims=range(1, 11)):
    """Per-dimension orbit counts of the refined fan."""
    perf = perfect_census()
    extra = voronoi_extra_representatives()
    counts = dict(perf.counts_by_dim())
    pi2 = named_cone("Pi2")
    counts[pi2.dim()] -= 1  # the non-basic top cone is subdivided away
    for c in extra:
        counts[c.dim()] = counts.get(c.dim(), 0) + 1
    return tuple(counts.get(d, 0) for d in dims)


def random_unimodular(g, rng, steps=12):
    """Random product of elementary matrices; |det| = 1 by construction."""
    m = la.identity(g)
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(g)
        j = rng.randrange(g)
        e = la.identity(g)
        if kind == 0 and i != j:
            e[i][j] = rng.choice([-2, -1, 1, 2])
        elif kind == 1:
            e[i][i] = -1
        else:
            if i != j:
                e[i][i] = 0
                e[j][j] = 0
                e[i][j] = 1
                e[j][i] = 1
        m = la.mat_mul(m, e)
    return m
