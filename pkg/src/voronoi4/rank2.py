"""Fibre computations for the torus-rank-2 stratum.

The fibre over a point of the surface moduli is glued from an open part (a
punctured line-bundle quotient over the square of an abelian surface) and a
closed part (the square modulo three involutions).  Both reduce to exact
linear algebra on the exterior algebra of an eight-dimensional space: letters
f_1..f_4 span H^1 of the first factor, f_5..f_8 of the second.

The three involutions act by sign flip, factor swap, and the shear
(x, y) -> (x + y, -y); the residual involution from the one-torus direction
negates the first factor only.  The connecting map into the open part wedges
with the circle class and keeps the part alternating under that residual
involution.
"""

from fractions import Fraction
from functools import lru_cache

from . import intlinalg as la
from . import exterior as ext
from .symplectic import decompose_character, subspace_character

N = 8

I1 = [[-(i == j) for j in range(N)] for i in range(N)]
I2 = [[1 if (j == (i + 4) % 8) else 0 for j in range(N)] for i in range(N)]
# shear (x, y) -> (x + y, -y): cohomology pullback sends the first-factor
# letters to f_i + f_{i+4} and negates the second-factor letters.  This is
# the variance under which the product classes of v_basis() are invariant.
I3 = la.transpose([
    [1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
])
KAPPA = [[(1 if i >= 4 else -1) * (i == j) for j in range(N)] for i in range(N)]

# symplectic weights of the letters: factor pairs (f1,f2),(f3,f4) and again
_WEIGHTS = [(1, 0), (-1, 0), (0, 1), (0, -1)] * 2

# c1 of the normalized line bundle on the product of the two factors
C1 = {
    (1, 4): 1, (0, 5): -1,
    (3, 6): 1, (2, 7): -1,
}


def _lam(mat, k):
    return ext.lam_matrix(mat, k)


def _fixed(mats, k):
    if k == 0:
        return [[1]]
    return ext.fixed_space([_lam(m, k) for m in mats])


def _monomial_weights(k):
    out = []
    for s in ext.subsets(N, k):
        w = [0, 0]
        for i in s:
            w[0] += _WEIGHTS[i][0]
            w[1] += _WEIGHTS[i][1]
        out.append(tuple(w))
    return out


def _character(vs, k):
    return subspace_character([list(v) for v in vs], _monomial_weights(k))


def _decompose(vs, k):
    if not vs:
        return {}
    return decompose_character(2, _character(vs, k))


@lru_cache(maxsize=None)
def invariants_12(k):
    """Joint (i1, i2)-invariants of the k-th exterior power."""
    return _fixed([I1, I2], k)


@lru_cache(maxsize=None)
def invariants_123(k):
    return _fixed([I1, I2, I3], k)


def _kappa_split(basis, k):
    """Split a kappa-stable space into (+1, -1) eigenspaces."""
    if not basis:
        return [], []
    lam_k = _lam(KAPPA, k)
    plus_rows = []
    minus_rows = []
    n = len(basis[0])
    # solve within the span: kappa action in the basis coordinates
    cols_idx = _pivot_cols(basis)
    sub = [[Fraction(basis[i][j]) for j in cols_idx] for i in range(len(basis))]
    inv_sub_t = la.transpose(_frac_inv(sub))
    act = []
    for b in basis:
        img = la.mat_vec(lam_k, list(b))
        coeffs = la.mat_vec(inv_sub_t, [Fraction(img[i]) for i in cols_idx])
        act.append([int(x) for x in coeffs])
    act = la.transpose(act)
    m = len(basis)
    plus = la.kernel_basis_saturated([[act[i][j] - (i == j) for j in range(m)] for i in range(m)])
    minus = la.kernel_basis_saturated([[act[i][j] + (i == j) for j in range(m)] for i in range(m)])

    def expand(combos):
        out = []
        for c in combos:
            v = [0] * n
            for coef, b in zip(c, basis):
                if coef:
                    v = [x + coef * y for x, y in zip(v, b)]
            out.append(v)
        return out

    return expand(plus), expand(minus)


def _pivot_cols(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    nrow, ncol = len(m), len(m[0])
    cols = []
    r = 0
    for c in range(ncol):
        piv = None
        for i in range(r, nrow):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(nrow):
            if i != r and m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        cols.append(c)
        r += 1
        if r == nrow:
            break
    return cols


def _frac_inv(m):
    n = len(m)
    aug = [row[:] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def square_table():
    """Per degree: ((i1,i2)-invariant dim, kappa-invariant, kappa-alternating),
    with the symplectic decomposition of each kappa part."""
    out = {}
    for k in range(0, N + 1):
        inv = invariants_12(k)
        plus, minus = _kappa_split(inv, k)
        out[k] = {
            "dim": len(inv),
            "kappa_plus": (len(plus), _decompose(plus, k)),
            "kappa_minus": (len(minus), _decompose(minus, k)),
        }
    return out


@lru_cache(maxsize=None)
def discriminant_fibre():
    """Cohomology of the closed fibre part: degree -> decomposition."""
    out = {}
    for k in range(0, N + 1):
        inv = invariants_123(k)
        if inv:
            out[k] = _decompose(inv, k)
    return out


def discriminant_dims():
    return {k: sum_mult(v) for k, v in discriminant_fibre().items()}


def sum_mult(dec):
    from .symplectic import sp_dim

    return sum(m * sp_dim(2, lam) for lam, m in dec.items())


@lru_cache(maxsize=None)
def open_fibre_ss():
    """The two-row spectral sequence of the punctured-bundle fibre.

    Row 0 carries the kappa-invariant part, row 1 the kappa-alternating part
    (tensored by the circle class); the second differential wedges with C1.
    Returns per (p, row): dict with E2 and Einf bases.
    """
    table = {}
    c1_mv = dict(C1)
    for p in range(0, N + 1):
        inv = invariants_12(p)
        plus, minus = _kappa_split(inv, p)
        table[(p, 0)] = {"E2": plus}
        table[(p, 1)] = {"E2": minus}
    # d2: (p,1) -> (p+2,0); compute matrices and ranks
    ranks = {}
    kernels = {}
    images = {}
    subs_idx = {k: {s: i for i, s in enumerate(ext.subsets(N, k))} for k in range(N + 1)}
    for p in range(0, N + 1):
        src = table[(p, 1)]["E2"]
        if not src or p + 2 > N:
            ranks[p] = 0
            kernels[p] = src
            images[p] = []
            continue
        imgs = []
        for v in src:
            mv = {s: c for s, c in zip(ext.subsets(N, p), v) if c}
            w = ext.mv_wedge(mv, c1_mv)
            imgs.append(ext.mv_to_coords(w, subs_idx[p + 2], len(subs_idx[p + 2])))
        r = ext.rank_of_vectors(imgs)
        ranks[p] = r
        # kernel combinations
        if imgs and imgs[0]:
            kerc = la.kernel_basis_saturated(la.transpose(imgs))
        else:
            kerc = la.identity(len(src))
        kern = []
        for comb in kerc:
            v = [0] * len(src[0])
            for c, b in zip(comb, src):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            kern.append(v)
        kernels[p] = kern
        images[p] = imgs
    einf = {}
    for p in range(0, N + 1):
        einf[(p, 1)] = kernels.get(p, table[(p, 1)]["E2"])
        # row 0 at p: quotient by image from (p-2,1); report character only
        base_ch = _character(table[(p, 0)]["E2"], p) if table[(p, 0)]["E2"] else {}
        im = images.get(p - 2, [])
        im_ch = _character(im, p) if im else {}
        ch = {w: base_ch.get(w, 0) - im_ch.get(w, 0) for w in set(base_ch) | set(im_ch)}
        if any(v < 0 for v in ch.values()):
            raise AssertionError("negative dimension in the open-fibre page")
        einf[(p, 0)] = {w: v for w, v in ch.items() if v}
    return {"table": table, "ranks": ranks, "einf": einf}


def open_fibre_einf_decomposition():
    """(p, row) -> symplectic decomposition of the surviving page."""
    data = open_fibre_ss()
    out = {}
    for (p, row), val in sorted(data["einf"].items()):
        if row == 1:
            dec = _decompose(val, p) if val else {}
        else:
            dec = decompose_character(2, val) if val else {}
        if dec:
            out[(p, row)] = dec
    return out


def v_basis():
    """The six product classes spanning the degree-6 part of the closed fibre."""
    out = {}
    pairs = [((1, 2), (3, 4)), ((3, 4), (1, 2)), ((1, 3), (2, 4)),
             ((2, 4), (1, 3)), ((1, 4), (2, 3)), ((2, 3), (1, 4))]
    for (i, j), (k, l) in pairs:
        pref = {}
        base = None
        for idx in (i - 1, j - 1, i + 3, j + 3):
            v = {(idx,): 1}
            base = v if base is None else ext.mv_wedge(base, v)
        brk = {}
        for s, c in [((k - 1, l - 1), 2), ((k + 3, l + 3), 2), ((k - 1, l + 3), 1), ((k + 3, l - 1), 1)]:
            brk[tuple(sorted(s))] = c * _sort_sign(s)
        out[(i, j, k, l)] = ext.mv_wedge(base, brk)
    return out


def _sort_sign(s):
    a, b = s
    return 1 if a < b else -1


def delta2_images():
    """Leading terms of the connecting images of the v-classes: the circle
    class times the kappa-alternating part."""
    out = {}
    subs6 = {s: i for i, s in enumerate(ext.subsets(N, 6))}
    lamk = _lam(KAPPA, 6)
    for key, mv in v_basis().items():
        coords = ext.mv_to_coords(mv, subs6, len(subs6))
        img = la.mat_vec(lamk, coords)
        alt = [Fraction(x - y, 2) for x, y in zip(coords, img)]
        out[key] = [int(a) if a.denominator == 1 else a for a in alt]
    return out


@lru_cache(maxsize=None)
def _h1_group():
    """Image on cohomology of the group generated by the three involutions."""
    from .stabilizers import closure

    return sorted(closure([I1, I2, I3]))


def delta2_transfer():
    """The dual of the connecting map, computed by transfer.

    The degree-7 cohomology of the open fibre is the kernel of wedging with
    the bundle class on the kappa-alternating degree-6 part; averaging over
    the involution group carries it into the closed-part invariants.  Returns
    (kernel basis, averaged images, coordinates of images in the v-basis).
    """
    data = open_fibre_ss()
    kerbasis = data["einf"][(6, 1)]
    group = _h1_group()
    lam6 = [_lam([list(r) for r in g], 6) for g in group]
    imgs = []
    for v in kerbasis:
        acc = [Fraction(0)] * len(v)
        for lm in lam6:
            img = la.mat_vec(lm, list(v))
            acc = [a + Fraction(x) for a, x in zip(acc, img)]
        imgs.append([a / len(group) for a in acc])
    # express images in the basis of printed product classes
    subs6 = {s: i for i, s in enumerate(ext.subsets(N, 6))}
    vrows = [ext.mv_to_coords(mv, subs6, len(subs6)) for mv in v_basis().values()]
    coords = []
    for im in imgs:
        sol = la.solve_exact(la.transpose(vrows), im)
        if sol is None:
            raise AssertionError("transfer image is not a combination of the product classes")
        coords.append(sol)
    return kerbasis, imgs, coords


def delta2_surjective():
    """Surjectivity of the connecting map onto the degree-7 open-part classes.

    Equivalent to injectivity of the transfer dual; also checks that the
    image avoids the trivial isotypic piece, so the kernel of the connecting
    map is exactly the polarization class.
    """
    kerbasis, imgs, coords = delta2_transfer()
    rank = ext.rank_of_vectors(coords)
    ok = rank == len(kerbasis)
    ch = _character(imgs, 6)
    no_trivial_excess = sum(ch.values()) == rank and decompose_character(2, ch) == {(1, 1): 1}
    return ok and no_trivial_excess, rank, len(kerbasis)


# -- fibre of the rank-2 stratum over the surface moduli -----------------------

def fibre_local_systems():
    """H_c of the full rank-2 fibre: list of (degree, weight, lam, mult).

    Open part by duality from the two-row page (complex dimension 5), closed
    part as is; the only nonzero connecting map is the surjection in degree 2
    with kernel the polarization class.
    """
    out = []
    open_dec = open_fibre_einf_decomposition()
    # H^j(open) pieces -> H_c^(10-j) with dual weight
    for (p, row), dec in open_dec.items():
        j = p + row
        w = p + 2 * row
        for lam, m in dec.items():
            wt = sum(lam)
            out.append((10 - j, 10 - w, lam, m))
    # closed part, compact
    for k, dec in discriminant_fibre().items():
        for lam, m in dec.items():
            out.append((k, k, lam, m))
    # gluing: the degree-2 closed classes map onto the degree-3 open classes;
    # the surjection kills the nontrivial system on both sides
    ker = delta2_surjective()
    if not ker[0]:
        raise AssertionError("connecting map is not surjective")
    def remove(deg, w, lam, m):
        out.remove((deg, w, lam, m))
    remove(2, 2, (1, 1), 1)
    remove(3, 2, (1, 1), 1)
    merged = {}
    for (d, w, lam, m) in out:
        merged[(d, w, lam)] = merged.get((d, w, lam), 0) + m
    return sorted((d, w, lam, m) for (d, w, lam), m in merged.items() if m)
