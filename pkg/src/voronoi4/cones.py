"""Rational polyhedral cones in the lattice of integral quadratic forms.

Cones are given by their extremal ray generators (QuadForm objects).  Face
enumeration works by double description at desk scale: facet normals are found
among kernels of generator subsets, and the face lattice is the closure of the
facet set under intersection.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import intlinalg as la
from . import lp
from .symquad import QuadForm, central_ray, rank1, sym_dim

MAX_GENS = 16
MAX_DIM = 10


class ConeError(ValueError):
    pass


class Cone:
    """Pointed rational cone spanned by deduplicated extremal generators."""

    __slots__ = ("g", "gens", "name", "_dim")

    def __init__(self, gens, name=None, validate=True):
        if not gens:
            raise ConeError("a cone needs at least one generator")
        g = gens[0].g
        seen = []
        for q in gens:
            if q.g != g:
                raise ConeError("mixed genus generators")
            if q not in seen:
                seen.append(q)
        seen.sort(key=lambda q: q.coords)
        if len(seen) > MAX_GENS:
            raise ConeError(f"too many generators ({len(seen)} > {MAX_GENS}); desk-scale guard")
        self.g = g
        self.gens = tuple(seen)
        self.name = name
        self._dim = None
        if validate:
            self._check_primitive()
            self._check_extremal()

    def _check_primitive(self):
        for q in self.gens:
            if la.vec_gcd(list(q.coords)) != 1:
                raise ConeError(f"generator {list(q.coords)} is not primitive")

    def _check_extremal(self):
        vecs = [list(q.coords) for q in self.gens]
        for i in range(len(vecs)):
            others = vecs[:i] + vecs[i + 1:]
            if others and lp.in_cone(others, vecs[i]):
                raise ConeError(f"generator {vecs[i]} is redundant")

    @property
    def coord_matrix(self):
        """Generators as rows, in form coordinates."""
        return [list(q.coords) for q in self.gens]

    def __eq__(self, other):
        return isinstance(other, Cone) and self.g == other.g and self.gens == other.gens

    def __hash__(self):
        return hash((self.g, self.gens))

    def __repr__(self):
        label = self.name or f"{len(self.gens)} gens"
        return f"Cone(g={self.g}, {label}, dim={self.dim()})"

    def dim(self):
        if self._dim is None:
            self._dim = la.rank_int(self.coord_matrix)
        return self._dim

    def gen_vectors(self):
        """Primitive vectors of the rank-1 generators (None for higher rank)."""
        return [q.vector for q in self.gens]

    def to_json(self):
        out = {"g": self.g, "generators": [q.to_json() for q in self.gens]}
        if self.name:
            out["name"] = self.name
        return out

    @staticmethod
    def from_json(obj):
        gens = [QuadForm.from_json(x) for x in obj["generators"]]
        return Cone(gens, name=obj.get("name"))


class FaceLattice:
    """All faces of a cone, grouped by dimension, with the face-of relation."""

    def __init__(self, cone, faces_by_dim, face_sets):
        self.cone = cone
        self.by_dim = faces_by_dim          # dim -> list of Cone
        self._sets = face_sets              # frozenset of generator indices per face
        self._incidence = None

    def all_faces(self):
        out = []
        for d in sorted(self.by_dim):
            out.extend(self.by_dim[d])
        return out

    def incidence(self):
        """Set of (sub, super) generator-index pairs with sub a proper face."""
        if self._incidence is None:
            sets = sorted(self._sets, key=lambda s: (len(s), sorted(s)))
            self._incidence = {(a, b) for a in sets for b in sets if a < b}
        return self._incidence

    def f_vector(self):
        top = self.cone.dim()
        return tuple(len(self.by_dim.get(d, ())) for d in range(1, top + 1))

    def facet_count(self):
        return len(self.by_dim.get(self.cone.dim() - 1, ()))


def dim(c):
    return c.dim()


def interior_rank(c):
    """Rank of a generic form in the relative interior (= rank of the sum).

    For positive semidefinite generators the kernel of the sum is the common
    kernel, so the sum realizes the generic interior rank.
    """
    for q in c.gens:
        if not q.is_psd():
            raise ConeError("interior_rank needs positive semidefinite generators")
    g = c.g
    s = [[sum(q.mat[i][j] for q in c.gens) for j in range(g)] for i in range(g)]
    return la.rank_int(s)


def gen_sum(c):
    g = c.g
    return [[sum(q.mat[i][j] for q in c.gens) for j in range(g)] for i in range(g)]


def is_basic(c):
    """Do the generators extend to a lattice basis (simplicial + unimodular)?"""
    if len(c.gens) != c.dim():
        return False
    divs = la.elementary_divisors(c.coord_matrix)
    return all(x == 1 for x in divs)


def perp_lattice(c):
    """Saturated basis of the annihilator of the cone span in the dual lattice."""
    return la.kernel_basis_saturated(c.coord_matrix)


def facet_data(c):
    """Facet normals (in the span) and their generator index sets.

    Normals are integer vectors n with <n, A> = 0 on the facet, > 0 on the
    other generators, and <n, .> = 0 on the orthogonal complement of span(c).
    """
    gens = c.coord_matrix
    k = len(gens)
    m = c.dim()
    d = len(gens[0])
    if m == 1:
        return []
    perp = perp_lattice(c)
    facets = {}
    for sub in combinations(range(k), m - 1):
        rows = [gens[i] for i in sub] + perp
        if la.rank_int(rows) != d - 1:
            continue
        ker = la.kernel_basis_saturated(rows)
        if len(ker) != 1:
            continue
        n = ker[0]
        vals = [sum(n[t] * gens[i][t] for t in range(d)) for i in range(k)]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            n = [-x for x in n]
            vals = [-v for v in vals]
        else:
            continue
        on_facet = tuple(i for i in range(k) if vals[i] == 0)
        facets[on_facet] = tuple(n)
    return [(idx, n) for idx, n in sorted(facets.items())]


def faces(c):
    """Full face lattice by closing the facet set under intersection."""
    if c.dim() > MAX_DIM or len(c.gens) > MAX_GENS:
        raise ConeError("cone too large for face enumeration; desk-scale guard")
    k = len(c.gens)
    top = frozenset(range(k))
    facet_sets = [frozenset(idx) for idx, _ in facet_data(c)]
    all_sets = {top}
    frontier = set(facet_sets)
    while frontier:
        all_sets |= frontier
        new = set()
        for f in frontier:
            for h in facet_sets:
                g = f & h
                if g and g not in all_sets:
                    new.add(g)
        frontier = new
    faces_by_dim = {}
    for s in all_sets:
        face = Cone([c.gens[i] for i in sorted(s)], validate=False)
        faces_by_dim.setdefault(face.dim(), []).append(face)
    for d in faces_by_dim:
        faces_by_dim[d].sort(key=lambda f: tuple(q.coords for q in f.gens))
    return FaceLattice(c, faces_by_dim, frozenset(all_sets))


def face_generator_sets(c):
    """Frozensets of generator indices for every nonzero face (fast path)."""
    lattice = faces(c)
    out = set()
    for fs in lattice.all_faces():
        idx = frozenset(c.gens.index(q) for q in fs.gens)
        out.add(idx)
    return out


# ---------------------------------------------------------------------------
# Built-in cones.  Generators are given by the primitive vectors of their
# rank-1 squared linear forms; vertex 0 of the associated graph corresponds to
# the squares x_i^2 themselves and vertex i to the variable x_i.


def _v(g, *entries):
    vec = [0] * g
    for i, val in entries:
        vec[i] = val
    return tuple(vec)


def _sq(g, i):
    return _v(g, (i, 1))


def _diff(g, i, j):
    return _v(g, (i, 1), (j, -1))


_G3 = {
    # Perfect-fan orbit representatives in genus 3, keyed by dimension.
    "P3-3": [_sq(3, 0), _sq(3, 1), _sq(3, 2)],
    "P3-4A": [_sq(3, 0), _sq(3, 1), _sq(3, 2), _diff(3, 1, 2)],
    "P3-4B": [_sq(3, 0), _sq(3, 1), _diff(3, 1, 2), _diff(3, 0, 2)],
    "P3-5": [_sq(3, 0), _sq(3, 1), _sq(3, 2), _diff(3, 1, 2), _diff(3, 0, 2)],
    "P3-6": [_sq(3, 0), _sq(3, 1), _sq(3, 2), _diff(3, 1, 2), _diff(3, 0, 2), _diff(3, 0, 1)],
}

_G4 = {
    "Pi1": [_sq(4, i) for i in range(4)] + [_diff(4, i, j) for i in range(4) for j in range(i + 1, 4)],
    "Pi2": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2), _sq(4, 3),
        _diff(4, 0, 2), _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 1, 3), _diff(4, 2, 3),
        _v(4, (0, 1), (1, 1), (2, -1)),
        _v(4, (0, 1), (1, 1), (3, -1)),
        _v(4, (0, 1), (1, 1), (2, -1), (3, -1)),
    ],
    "K33": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2), _sq(4, 3),
        _diff(4, 0, 2), _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 1, 3),
        _v(4, (0, 1), (1, 1), (2, -1), (3, -1)),
    ],
    "K5-1-1": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2), _sq(4, 3),
        _diff(4, 0, 2), _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 1, 3),
    ],
    "K5-2": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2), _sq(4, 3),
        _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 1, 3), _diff(4, 2, 3),
    ],
    "K5-2-1": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2),
        _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 1, 3), _diff(4, 2, 3),
    ],
    "C2221": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2), _sq(4, 3),
        _diff(4, 0, 3), _diff(4, 1, 3), _diff(4, 2, 3),
    ],
    "C222": [
        _sq(4, 0), _sq(4, 1), _sq(4, 2),
        _diff(4, 0, 3), _diff(4, 1, 3), _diff(4, 2, 3),
    ],
    "C321": [
        _sq(4, 0), _sq(4, 1), _sq(4, 3),
        _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 2, 3),
    ],
    "C5": [
        _sq(4, 0), _sq(4, 1),
        _diff(4, 0, 3), _diff(4, 1, 2), _diff(4, 2, 3),
    ],
}

_ALIASES = {"K5": "Pi1", "K5-1-1b": "K5-1-1", "K5-2-1b": "K5-2-1"}


@lru_cache(maxsize=None)
def named_cone(name):
    """Built-in cone registry; raises KeyError for unknown names."""
    key = _ALIASES.get(name, name)
    if key == "e":
        return Cone([central_ray()], name="e")
    if key in _G3:
        return Cone([rank1(v) for v in _G3[key]], name=key)
    if key in _G4:
        return Cone([rank1(v) for v in _G4[key]], name=key)
    raise KeyError(f"unknown cone name: {name}")


def registry_names():
    return sorted(_G3) + sorted(_G4) + ["e"]


def cone_with_ray(face_cone, ray_form=None):
    """Span of a face of the non-basic top cone with the central ray."""
    ray = ray_form if ray_form is not None else central_ray()
    return Cone(list(face_cone.gens) + [ray], validate=False)


@lru_cache(maxsize=None)
def star_of_e():
    """The central ray together with its spans with every proper face of Pi2.

    Returns a list of cones: <e> first, then <F, e> over all proper faces F of
    the non-basic 10-dimensional cone.  dim <F, e> = dim F + 1 throughout.
    """
    pi2 = named_cone("Pi2")
    ray = central_ray()
    out = [Cone([ray], name="e")]
    top = frozenset(range(len(pi2.gens)))
    for s in sorted(face_generator_sets(pi2), key=sorted):
        if s == top:
            continue
        face = Cone([pi2.gens[i] for i in sorted(s)], validate=False)
        span = cone_with_ray(face, ray)
        if span.dim() != face.dim() + 1:
            raise AssertionError("central ray lies in a proper face span")
        out.append(span)
    return out
