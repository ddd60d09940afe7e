"""Integral quadratic forms in g variables and the GL(g,Z) action.

The lattice of integral symmetric g x g matrices is identified with Z^d,
d = g(g+1)/2, via the fixed coordinate order

    (m_11, ..., m_gg, m_12, m_13, ..., m_{1g}, m_23, ..., m_{g-1,g}).

The group acts by congruence, act(U, A) = U A U^T, so that vectors transform
covariantly: rank1(U l) == act(U, rank1(l)).  The dual pairing on coordinates
is the standard dot product; dual actions use the contragredient of
rep_matrix(U).
"""

from fractions import Fraction

from . import intlinalg as la


def sym_dim(g):
    return g * (g + 1) // 2


def coord_pairs(g):
    """Index pairs in the fixed coordinate order: diagonal first, then upper."""
    pairs = [(i, i) for i in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            pairs.append((i, j))
    return pairs


def mat_to_coords(mat):
    g = len(mat)
    return tuple(mat[i][j] for i, j in coord_pairs(g))


def coords_to_mat(g, vec):
    mat = [[0] * g for _ in range(g)]
    for (i, j), x in zip(coord_pairs(g), vec):
        mat[i][j] = x
        mat[j][i] = x
    return mat


class QuadForm:
    """Integral symmetric g x g matrix, i.e. a point of the form lattice.

    Rank-1 forms built by rank1() also carry their primitive, sign-normalized
    vector in .vector.
    """

    __slots__ = ("g", "mat", "vector")

    def __init__(self, mat, vector=None):
        g = len(mat)
        for row in mat:
            if len(row) != g:
                raise ValueError("matrix must be square")
        for i in range(g):
            for j in range(g):
                if mat[i][j] != mat[j][i]:
                    raise ValueError("matrix must be symmetric")
                if not isinstance(mat[i][j], int):
                    raise ValueError("entries must be integers")
        self.g = g
        self.mat = tuple(tuple(row) for row in mat)
        self.vector = tuple(vector) if vector is not None else None

    @property
    def coords(self):
        return mat_to_coords(self.mat)

    def rank(self):
        return la.rank_int([list(r) for r in self.mat])

    def is_psd(self):
        """Positive semidefiniteness via nonnegativity of all principal minors."""
        g = self.g
        from itertools import combinations

        for k in range(1, g + 1):
            for sub in combinations(range(g), k):
                minor = [[self.mat[i][j] for j in sub] for i in sub]
                if la.det(minor) < 0:
                    return False
        return True

    def is_positive_definite(self):
        g = self.g
        for k in range(1, g + 1):
            lead = [[self.mat[i][j] for j in range(k)] for i in range(k)]
            if la.det(lead) <= 0:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, QuadForm) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"QuadForm(g={self.g}, coords={list(self.coords)})"

    def to_json(self):
        if self.vector is not None:
            return {"g": self.g, "vector": list(self.vector)}
        return {"g": self.g, "coords": list(self.coords)}

    @staticmethod
    def from_json(obj):
        g = obj["g"]
        if "vector" in obj:
            return rank1(obj["vector"])
        return QuadForm(coords_to_mat(g, obj["coords"]))


def normalize_primitive(l):
    """Divide by the gcd and make the first nonzero entry positive."""
    l = list(l)
    g = la.vec_gcd(l)
    if g == 0:
        raise ValueError("zero vector")
    l = [x // g for x in l]
    for x in l:
        if x != 0:
            if x < 0:
                l = [-y for y in l]
            break
    return tuple(l)


def rank1(l):
    """The squared linear form l*l^T for a primitive, sign-normalized l."""
    l = normalize_primitive(l)
    g = len(l)
    mat = [[l[i] * l[j] for j in range(g)] for i in range(g)]
    return QuadForm(mat, vector=l)


def check_unimodular(u):
    if la.det([list(r) for r in u]) not in (1, -1):
        raise ValueError("matrix is not unimodular")


def act(u, a):
    """Congruence action U A U^T; rejects non-unimodular U."""
    check_unimodular(u)
    m = la.mat_mul(la.mat_mul([list(r) for r in u], [list(r) for r in a.mat]), la.transpose([list(r) for r in u]))
    if a.vector is not None:
        return QuadForm(m, vector=normalize_primitive(la.mat_vec([list(r) for r in u], list(a.vector))))
    return QuadForm(m)


def rep_matrix(u):
    """Matrix of act(U, .) on form coordinates; d x d with d = g(g+1)/2.

    Multiplicative: rep_matrix(U1 U2) = rep_matrix(U1) rep_matrix(U2).
    """
    check_unimodular(u)
    g = len(u)
    d = sym_dim(g)
    pairs = coord_pairs(g)
    cols = []
    for (i, j) in pairs:
        basis = [[0] * g for _ in range(g)]
        basis[i][j] = 1
        basis[j][i] = 1
        m = la.mat_mul(la.mat_mul([list(r) for r in u], basis), la.transpose([list(r) for r in u]))
        cols.append(mat_to_coords(m))
    # cols[k] is the image of the k-th basis form; assemble column-wise
    return [[cols[k][r] for k in range(d)] for r in range(d)]


def contragredient(u):
    """Inverse-transpose of rep_matrix(U): the action on the dual lattice."""
    r = rep_matrix(u)
    return la.transpose(la.inverse_unimodular(r))


def pullback_dual(u):
    """Transpose of rep_matrix(U): pullback action on coordinate functionals."""
    return la.transpose(rep_matrix(u))


def central_ray(g=4):
    """Distinguished positive definite ray subdividing the non-basic top cone.

    Three times the generator equals the sum of the twelve generators of that
    cone, which pins the matrix uniquely.
    """
    if g != 4:
        raise ValueError("the central ray lives in genus 4")
    vs = _second_top_cone_vectors()
    s = [[0] * 4 for _ in range(4)]
    for l in vs:
        for i in range(4):
            for j in range(4):
                s[i][j] += l[i] * l[j]
    if any(s[i][j] % 3 for i in range(4) for j in range(4)):
        raise AssertionError("generator sum is not divisible by 3")
    e = [[s[i][j] // 3 for j in range(4)] for i in range(4)]
    return QuadForm(e)


def _second_top_cone_vectors():
    e1, e2, e3, e4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    return [
        e1, e2, e3, e4,
        sub(e1, e3), sub(e1, e4), sub(e2, e3), sub(e2, e4), sub(e3, e4),
        sub(add(e1, e2), e3), sub(add(e1, e2), e4), sub(add(e1, e2), add(e3, e4)),
    ]
