"""Cohomology of torus-orbit quotients attached to fan cones.

For a cone c with full-rank interior, the orbit is an n-torus modulo the
finite stabilizer, n = g(g+1)/2 - dim(c).  Its character lattice is the
annihilator of the cone span; the stabilizer acts by the contragredient of
the coordinate representation.  Everything this module reports is either a
Hodge-Euler polynomial in L or an exact invariant-subspace dimension, and the
two are computed along independent paths and cross-checked.
"""

from fractions import Fraction
from functools import lru_cache

from . import intlinalg as la
from . import exterior as ext
from .cones import ConeError, perp_lattice, sym_dim
from .stabilizers import FiniteMatrixGroup, stabilizer
from .symquad import rep_matrix
from .tatepoly import TatePoly


class OrbitRep:
    """Character lattice of a torus orbit with the stabilizer action on it."""

    def __init__(self, cone, group, lattice, action):
        self.cone = cone
        self.group = group
        self.lattice = lattice            # rows: saturated basis inside Z^d
        self.action = action              # element (tuple mat) -> n x n int matrix
        self.n = len(lattice)

    def action_of(self, element):
        return self.action[element]

    def generator_actions(self):
        return [self.action[e] for e in self.group.generators]


def _restrict_to_rows(basis, inv_sub_t, cols_idx, mat10):
    """Coordinates of mat10 * basis_row^T in the given row basis.

    inv_sub_t is the transposed inverse of the basis restricted to cols_idx,
    so that coefficients m solve B_S^T m = img_S.
    """
    out = []
    d = len(mat10)
    for row in basis:
        img = [sum(mat10[i][j] * row[j] for j in range(d)) for i in range(d)]
        sub = [img[i] for i in cols_idx]
        coeffs = la.mat_vec(inv_sub_t, sub)
        out.append(coeffs)
    return out


def orbit_rep(c, group=None):
    """Build the orbit data; requires a full-rank interior (finite stabilizer)."""
    grp = group if group is not None else stabilizer(c)
    basis = perp_lattice(c)
    n = len(basis)
    d = sym_dim(c.g)
    if n == 0:
        return OrbitRep(c, grp, [], {e: [] for e in grp.elements})
    # invertible coordinate subset of the basis, for fast restriction
    cols_idx = _pivot_columns(basis)
    sub = [[Fraction(basis[i][j]) for j in cols_idx] for i in range(n)]
    inv_sub_t = la.transpose(_fraction_inverse(sub))
    action = {}
    for e in grp.elements:
        einv = la.inverse_unimodular([list(r) for r in e])
        dual = la.transpose(rep_matrix(einv))  # contragredient: R(e)^-T = R(e^-1)^T
        rows = _restrict_to_rows(basis, inv_sub_t, cols_idx, dual)
        mat = []
        for row in rows:
            irow = []
            for x in row:
                if x.denominator != 1:
                    raise AssertionError("lattice is not stable under the action")
                irow.append(int(x))
            mat.append(irow)
        # verify on the original coordinates (cheap full check)
        for bi, row in zip(basis, mat):
            img = [sum(dual[i][j] * bi[j] for j in range(d)) for i in range(d)]
            rec = [sum(row[k] * basis[k][j] for k in range(n)) for j in range(d)]
            if img != rec:
                raise AssertionError("restriction check failed")
        action[e] = la.transpose(mat)  # columns = images of basis vectors
    return OrbitRep(c, grp, basis, action)


def _pivot_columns(basis):
    n = len(basis)
    d = len(basis[0])
    cols = []
    m = [[Fraction(basis[i][j]) for j in range(d)] for i in range(n)]
    r = 0
    for c in range(d):
        piv = None
        for i in range(r, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        cols.append(c)
        r += 1
        if r == n:
            break
    return cols


def _fraction_inverse(m):
    n = len(m)
    aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if aug[i][c] != 0:
                piv = i
                break
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def molien_ec(c, rep=None):
    """Hodge-Euler polynomial of the orbit quotient: the average over the
    stabilizer of det(L*Id - action) on the character lattice."""
    rep = rep if rep is not None else orbit_rep(c)
    n = rep.n
    if n == 0:
        return TatePoly.const(1)
    total = {}
    for e in rep.group.elements:
        p = la.charpoly(rep.action[e])
        for k, v in enumerate(p):
            if v:
                total[k] = total.get(k, 0) + v
    order = rep.group.order
    coeffs = {}
    for k, v in total.items():
        if v % order:
            raise AssertionError("Molien average is not integral")
        coeffs[k] = v // order
    return TatePoly(coeffs)


def molien_series_dims(c, rep=None):
    """Dimensions of invariant exterior powers via the Molien series
    (1/|G|) sum det(Id + t*action): independent of the fixed-space path."""
    rep = rep if rep is not None else orbit_rep(c)
    n = rep.n
    if n == 0:
        return [1]
    total = [0] * (n + 1)
    for e in rep.group.elements:
        p = la.charpoly(rep.action[e])  # det(xI - M) = sum p[k] x^k
        # det(I + tM) = t^n * q(1/t) with q(x) = det(xI + M) = (-1)^n p(-x)
        for k, v in enumerate(p):
            total[n - k] += v * (-1) ** (n - k)
    order = rep.group.order
    dims = []
    for k in range(n + 1):
        if total[k] % order:
            raise AssertionError("Molien series is not integral")
        dims.append(total[k] // order)
    return dims


def molien_summary(c, rep=None):
    """(Euler polynomial, invariant dims, hc profile) in one pass over the
    group; the profile uses the Molien dimensions only."""
    rep = rep if rep is not None else orbit_rep(c)
    ec = molien_ec(c, rep)
    dims = molien_series_dims(c, rep)
    if ec_from_dims(dims) != ec:
        raise AssertionError("Molien polynomial and series disagree")
    n = rep.n
    prof = sorted((2 * n - j, 2 * (n - j), d) for j, d in enumerate(dims) if d)
    return ec, dims, prof


def invariant_spaces(c, rep=None):
    """For each j, a saturated basis of the invariant subspace of the j-th
    exterior power of the character lattice (explicit fixed-space path)."""
    rep = rep if rep is not None else orbit_rep(c)
    n = rep.n
    gens = rep.generator_actions()
    out = []
    for j in range(n + 1):
        if j == 0:
            out.append([[1]])
            continue
        if not gens:
            size = len(ext.subsets(n, j))
            out.append(la.identity(size))
            continue
        lams = [ext.lam_matrix(g, j) for g in gens]
        out.append(ext.fixed_space(lams))
    return out


def invariant_dims(c, rep=None):
    """Dimensions d_j = dim (Lambda^j W)^G, cross-checked against the Molien
    series; the two independent computations must agree."""
    rep = rep if rep is not None else orbit_rep(c)
    via_fixed = [len(b) for b in invariant_spaces(c, rep)]
    via_molien = molien_series_dims(c, rep)
    if via_fixed != via_molien:
        raise AssertionError(
            f"invariant dimension mismatch: fixed-space {via_fixed} vs Molien {via_molien}"
        )
    return via_fixed


def ec_from_dims(dims):
    """Reassemble the Euler polynomial sum (-1)^j d_j L^(n-j) from dimensions."""
    n = len(dims) - 1
    return TatePoly({n - j: ((-1) ** j) * d for j, d in enumerate(dims) if d})


def hc_profile(c, rep=None):
    """Compact-support profile [(degree, weight, dim)] of the orbit quotient.

    H^j of the n-torus is pure of weight 2j; duality on the finite smooth
    cover places the invariants of Lambda^j in degree 2n-j and weight 2(n-j).
    """
    rep = rep if rep is not None else orbit_rep(c)
    dims = invariant_dims(c, rep)
    n = rep.n
    out = []
    for j, d in enumerate(dims):
        if d:
            out.append((2 * n - j, 2 * (n - j), d))
    out.sort()
    return out


def gysin_rank(face, cone, gamma, j, rep_cone=None, rep_face=None, u_index=0):
    """Rank of the equivariant connecting map between adjacent orbit strata.

    face must be a facet of cone (dim cone = dim face + 1).  The map takes
    invariant j-forms on the small torus (of cone) to invariant (j+1)-forms on
    the big torus (of face) by wedging with a class spanning the quotient of
    the character lattices, then averaging over gamma.  The rank does not
    depend on the splitting; u_index selects among valid splittings for the
    invariance cross-check.
    """
    if cone.dim() != face.dim() + 1:
        raise ConeError("gysin_rank needs a facet pair")
    if not set(face.gens) <= set(cone.gens):
        raise ConeError("face generators must be a subset of the cone generators")
    w_cone = perp_lattice(cone)
    w_face = perp_lattice(face)
    n_c = len(w_cone)
    n_f = len(w_face)
    if n_f != n_c + 1:
        raise AssertionError("character lattices are not adjacent")
    # coordinates of W_cone inside W_face
    incl = []
    for row in w_cone:
        sol = la.solve_exact(la.transpose(w_face), row)
        incl.append([int(x) for x in sol])
    full = la.complete_to_unimodular(incl) if incl else la.identity(n_f)
    u_coords = full[n_c + u_index] if n_c + u_index < n_f else full[n_f - 1]

    # gamma action on W_face coordinates
    gamma_mats = []
    for e in gamma.elements:
        einv = la.inverse_unimodular([list(r) for r in e])
        dual = la.transpose(rep_matrix(einv))
        rows = []
        for bi in w_face:
            img = [sum(dual[a][b] * bi[b] for b in range(len(bi))) for a in range(len(bi))]
            sol = la.solve_exact(la.transpose(w_face), img)
            rows.append([int(x) for x in sol])
        gamma_mats.append(la.transpose(rows))

    # invariant j-forms on the small lattice, pushed into W_face coordinates
    sub_mats = []
    for e_mat in gamma_mats:
        # restrict the action to the sublattice spanned by incl
        rows = []
        for v in incl:
            img = la.mat_vec(e_mat, v)
            sol = la.solve_exact(la.transpose(incl), img)
            rows.append([int(x) for x in sol])
        sub_mats.append(la.transpose(rows))
    if j == 0:
        inv_small = [[1]]
    else:
        lams = [ext.lam_matrix(m, j) for m in sub_mats]
        inv_small = ext.fixed_space(lams) if sub_mats else la.identity(len(ext.subsets(n_c, j)))

    subs_small = ext.subsets(n_c, j)
    subs_big = ext.subsets(n_f, j + 1)
    idx_big = {s: i for i, s in enumerate(subs_big)}
    u_mv = ext.vector_to_mv(u_coords)
    images = []
    order = gamma.order
    lam_big = [ext.lam_matrix(m, j + 1) for m in gamma_mats]
    for vec in inv_small:
        # build the multivector of the pushed-forward invariant form
        if j == 0:
            pushed = {(): vec[0]}
        else:
            pushed = {}
            for coeff, s in zip(vec, subs_small):
                if not coeff:
                    continue
                wedge = None
                for i in s:
                    w = ext.vector_to_mv(incl[i])
                    wedge = w if wedge is None else ext.mv_wedge(wedge, w)
                for t, val in (wedge or {}).items():
                    pushed[t] = pushed.get(t, 0) + coeff * val
        wedged = ext.mv_wedge(u_mv, pushed) if pushed else {}
        col = ext.mv_to_coords(wedged, idx_big, len(subs_big))
        # Reynolds average over gamma
        acc = [Fraction(0)] * len(subs_big)
        for lm in lam_big:
            img = la.mat_vec(lm, col)
            acc = [a + Fraction(x) for a, x in zip(acc, img)]
        acc = [a / order for a in acc]
        images.append(acc)
    return ext.rank_of_vectors(images)
