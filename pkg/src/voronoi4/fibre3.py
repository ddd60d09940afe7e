"""Fibre computations for the torus-rank-3 strata.

Each stratum is a torus bundle over the triple elliptic product, modulo the
finite stabilizer of a genus-3 cone.  The cohomology of the fibre is computed
as the invariant part of a two-variable exterior algebra (six base classes
f_1..f_6, one per H^1 of a factor, and up to three fiber classes), with the
second-page differential given by substituting the first Chern classes of the
line bundles that the torus bundle splits into.

Base classes transform like the coordinates tau_{i,4}: a stabilizer element U
(acting on forms by A -> U A U^T) sends f-pairs by the rows of U.  Fiber
classes are coordinate functionals on the form lattice and transform by the
pullback (transpose) of the coordinate representation.
"""

from fractions import Fraction
from functools import lru_cache

from . import intlinalg as la
from .bigraded import (
    BigradedAlg,
    FibAction,
    el_add,
    el_scale,
    el_wedge,
    fiber_element,
    from_base_mv,
    in_span,
    invariant_basis,
    koszul_differential,
    element_coords,
    rank_of_elements,
    reynolds,
)
from .cones import named_cone
from .stabilizers import stabilizer
from .symplectic import decompose_character, subspace_character
from .symquad import rep_matrix
from .tatepoly import TatePoly

# coordinate order in genus 3: (m11, m22, m33, m12, m13, m23)
_Q1 = (0, 0, 0, 0, 0, -1)
_Q2 = (0, 0, 0, 0, -1, 0)
_Q3 = (0, 0, 0, -1, 0, 0)
_R = (0, 0, 1, 0, 1, 1)

SUITES = {
    "P3-3": {"fiber": [_Q1, _Q2, _Q3], "names": ["Q1", "Q2", "Q3"]},
    "P3-4A": {"fiber": [_Q2, _Q3], "names": ["Q2", "Q3"]},
    "P3-4B": {"fiber": [_Q3, _R], "names": ["Q3", "R"]},
    "P3-5": {"fiber": [_Q3], "names": ["Q3"]},
    "P3-6": {"fiber": [], "names": []},
}


def algebra(suite):
    data = SUITES[suite]
    return BigradedAlg(6, len(data["fiber"]), fiber_names=data["names"])


def substitution_matrix(rows):
    """U for the variable substitution x_i -> rows[i]; forms map by U A U^T."""
    return la.transpose([list(r) for r in rows])


def c1_pair(i, j):
    """First Chern class of the pullback of the normalized line bundle on the
    (i,j) factor pair (1-indexed): f_{2i} ^ f_{2j-1} - f_{2i-1} ^ f_{2j}."""
    return {
        (2 * i - 1, 2 * j - 2): 1,
        (2 * i - 2, 2 * j - 1): -1,
    }


def c1_pullback(h1_map):
    """c1 of the pullback along a map to a product of two elliptic factors.

    h1_map is the 2 x 3 integer matrix of the induced map on the factor
    lattice; the H^1 pullback of the target letters follows by transpose.
    """
    pulls = []
    for s in range(2):
        for eps in range(2):
            vec = [0] * 6
            for t in range(3):
                vec[2 * t + eps] = h1_map[s][t]
            pulls.append(vec)
    # target c1 = b1 ^ a2 - a1 ^ b2 in (a1, b1, a2, b2) letters
    def mv(vec):
        return {(i,): x for i, x in enumerate(vec) if x}

    def wedge(u, v):
        from .exterior import mv_wedge

        return mv_wedge(u, v)

    a1, b1, a2, b2 = pulls
    out = {}
    for term, sign in ((wedge(mv(b1), mv(a2)), 1), (wedge(mv(a1), mv(b2)), -1)):
        for k, v in term.items():
            nv = out.get(k, 0) + sign * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


PHI = {k: -v for k, v in c1_pullback([[1, 1, 1], [0, 0, 1]]).items()}  # phi = -c1(q*P)
PSI = {k: -v for k, v in c1_pair(1, 2).items()}                        # psi = -c1(p12*P)

# d2 substitutions, with the printed sign choices
_SUBSTITUTIONS = {
    "P3-3": lambda: [c1_pair(2, 3), c1_pair(1, 3), c1_pair(1, 2)],
    "P3-4A": lambda: [c1_pair(1, 3), c1_pair(1, 2)],
    "P3-4B": lambda: [PSI, {k: -v for k, v in PHI.items()}],
    "P3-5": lambda: [PSI],
    "P3-6": lambda: [],
}


def action_from_glz(u, suite):
    """Induced action on the fibre algebra of a stabilizer element u."""
    cone = named_cone(suite)
    data = SUITES[suite]
    from .symquad import act

    gset = frozenset(cone.gens)
    if frozenset(act(u, a) for a in cone.gens) != gset:
        raise ValueError("matrix does not stabilize the cone")
    base = [[0] * 6 for _ in range(6)]
    for i in range(3):
        for eps in range(2):
            for m in range(3):
                base[2 * i + eps][2 * m + eps] = u[i][m]
    rep_t = la.transpose(rep_matrix(u))
    fiber_vs = data["fiber"]
    fiber = []
    for v in fiber_vs:
        img = la.mat_vec(rep_t, list(v))
        if fiber_vs:
            sol = la.solve_exact(la.transpose([list(x) for x in fiber_vs]), img)
            if sol is None:
                raise AssertionError("fiber space not preserved")
            row = []
            for x in sol:
                if x.denominator != 1:
                    raise AssertionError("fiber action is not integral")
                row.append(int(x))
            fiber.append(row)
    return FibAction(algebra(suite), base, fiber)


@lru_cache(maxsize=None)
def suite_actions(suite):
    """Deduplicated algebra actions of the full stabilizer (the image group)."""
    cone = named_cone(suite)
    grp = stabilizer(cone)
    seen = {}
    for e in grp.elements:
        a = action_from_glz([list(r) for r in e], suite)
        seen[a.key()] = a
    return tuple(seen.values())


@lru_cache(maxsize=None)
def suite_action_generators(suite):
    """Actions of a generating set only (enough for fixed-space computations)."""
    cone = named_cone(suite)
    grp = stabilizer(cone)
    return tuple(action_from_glz([list(r) for r in e], suite) for e in grp.generators)


@lru_cache(maxsize=None)
def invariants_bigraded(suite):
    """(p,q) -> invariant basis (list of elements) of the fibre algebra."""
    alg = algebra(suite)
    actions = list(suite_action_generators(suite))
    out = {}
    for p in range(7):
        for q in range(alg.k + 1):
            basis = invariant_basis(alg, actions, p, q)
            if basis:
                out[(p, q)] = basis
    return out


def invariant_dims(suite):
    return {pq: len(b) for pq, b in invariants_bigraded(suite).items()}


@lru_cache(maxsize=None)
def chern_d2(suite):
    """Per-bidegree ranks of the Chern-substitution differential on invariants.

    Returns {(p,q): rank of d2: E2^(p,q) -> E2^(p+2,q-1)}.
    """
    alg = algebra(suite)
    subs = _SUBSTITUTIONS[suite]()
    inv = invariants_bigraded(suite)
    ranks = {}
    for (p, q), basis in sorted(inv.items()):
        if q == 0:
            continue
        images = [koszul_differential(alg, subs, el) for el in basis]
        images = [im for im in images if im]
        target = inv.get((p + 2, q - 1), [])
        for im in images:
            if not in_span(alg, im, target, p + 2, q - 1):
                raise AssertionError("differential image leaves the invariant subspace")
        r = rank_of_elements(alg, images, p + 2, q - 1)
        if r or (p, q) in inv:
            ranks[(p, q)] = r
    return ranks


def _monomial_weights(alg, p, q):
    ws = []
    for b, f in alg.basis(p, q):
        w = 0
        for i in b:
            w += 1 if i % 2 == 0 else -1
        ws.append((w,))
    return ws


@lru_cache(maxsize=None)
def fibre_einf(suite):
    """E3 = Einf of the fibre spectral sequence with local-system structure.

    Returns {(p,q): {m: mult}} where m is the symmetric-power weight of the
    modular local system carried by the piece (m = 0 is the constant system).
    """
    alg = algebra(suite)
    subs = _SUBSTITUTIONS[suite]()
    inv = invariants_bigraded(suite)
    chars = {}
    for (p, q), basis in inv.items():
        vecs = [element_coords(alg, el, p, q) for el in basis]
        chars[(p, q)] = subspace_character(vecs, _monomial_weights(alg, p, q))

    def char_of_kernel(p, q):
        """Character of ker(d2) on the invariant subspace at (p,q)."""
        basis = inv.get((p, q), [])
        if not basis:
            return {}
        if q == 0 or not alg.basis(p + 2, q - 1):
            return dict(chars[(p, q)])
        images = [koszul_differential(alg, subs, el) for el in basis]
        rows = [element_coords(alg, im, p + 2, q - 1) for im in images]
        # combinations c with sum c_i * image_i = 0
        kerc = la.kernel_basis_saturated(la.transpose(rows))
        vecs = []
        for comb in kerc:
            el = {}
            for c, b in zip(comb, basis):
                if c:
                    el = el_add(el, el_scale(b, c))
            vecs.append(element_coords(alg, el, p, q))
        return subspace_character(vecs, _monomial_weights(alg, p, q))

    out = {}
    for (p, q), ch in chars.items():
        # E3 character = ker(outgoing) minus image(incoming), gradedwise
        ker_ch = char_of_kernel(p, q)
        src = (p - 2, q + 1)
        if src in inv:
            src_ch = chars[src]
            src_ker = char_of_kernel(*src)
            im_ch = {w: src_ch.get(w, 0) - src_ker.get(w, 0)
                     for w in set(src_ch) | set(src_ker)}
        else:
            im_ch = {}
        e3 = {w: ker_ch.get(w, 0) - im_ch.get(w, 0) for w in set(ker_ch) | set(im_ch)}
        if any(v < 0 for v in e3.values()):
            raise AssertionError("negative dimension on the third page")
        e3 = {w: v for w, v in e3.items() if v}
        if e3:
            dec = decompose_character(1, e3)
            out[(p, q)] = {lam[0]: m for lam, m in dec.items()}
    return out


def fibre_hc_profile(suite):
    """Compact-support profile of the fibre: list of (degree, weight, m, mult).

    Duality on the smooth fibre of complex dimension 3 + (fiber rank) converts
    the Einf table; a piece of symmetric-power weight m in H^j sits in
    H_c^(2D-j) with Hodge weight 2D - (p + 2q).
    """
    alg = algebra(suite)
    dim = 3 + alg.k
    out = []
    for (p, q), dec in sorted(fibre_einf(suite).items()):
        j = p + q
        w = p + 2 * q
        for m, mult in sorted(dec.items()):
            out.append((2 * dim - j, 2 * dim - w, m, mult))
    out.sort()
    return out


# cohomology with compact support of the modular curve: V_0 in degree 2 with a
# Tate twist, Sym^2 in degree 1 with weight 0 (classical; nothing else occurs)
_MODULAR_HC = {
    0: [(2, 1)],   # m=0: (degree, extra twist)
    2: [(1, 0)],
}


def stratum_hc(suite):
    """H_c of the stratum over the modular curve: list of (degree, weight, mult).

    All entries are Tate; the pairing with the curve cohomology eliminates the
    symmetric-power systems.
    """
    out = {}
    for (deg, w, m, mult) in fibre_hc_profile(suite):
        if m not in _MODULAR_HC:
            raise AssertionError(f"no curve cohomology on file for Sym^{m}")
        twist = (w - m) // 2
        for (a, extra) in _MODULAR_HC[m]:
            key = (deg + a, 2 * (twist + extra))
            out[key] = out.get(key, 0) + mult
    return sorted((d, w, c) for (d, w), c in out.items())


def beta3_gysin_images():
    """Images of the degree-(2,1) invariants of the 4A suite under the
    connecting map into the (2,2) invariants of the minimal-cone suite."""
    alg3 = algebra("P3-3")
    inv4 = invariants_bigraded("P3-4A")[(2, 1)]
    actions = list(suite_actions("P3-3"))
    images = []
    for el in inv4:
        lifted = {}
        for (b, f), x in el.items():
            nf = tuple(i + 1 for i in f)  # Q2,Q3 of the face are Q2,Q3 upstairs
            lifted[(b, nf)] = x
        wedged = el_wedge(fiber_element([1, 0, 0]), lifted)
        images.append(reynolds(alg3, actions, wedged))
    return inv4, images


def beta3_gysin_rank():
    """Rank of the rank-3 connecting map; surjective onto the 3-dim target."""
    alg3 = algebra("P3-3")
    inv4, images = beta3_gysin_images()
    target = invariants_bigraded("P3-3")[(2, 2)]
    for im in images:
        if not in_span(alg3, im, target, 2, 2):
            raise AssertionError("connecting image is not invariant")
    return rank_of_elements(alg3, images, 2, 2)


def g_generators():
    """The four degree-(2,1) invariant generators of the 4A suite, in the
    normal form used throughout: ((Q2+2Q3) f_{j+2} + (2Q2+Q3) f_{j+4}) ^ f_i."""
    alg = algebra("P3-4A")
    out = {}
    for i in (1, 2):
        for j in (1, 2):
            q_part1 = el_add(fiber_element([1, 0]), el_scale(fiber_element([0, 1]), 2))
            q_part2 = el_add(el_scale(fiber_element([1, 0]), 2), fiber_element([0, 1]))
            t1 = el_wedge(q_part1, {((j + 1,), ()): 1})
            t2 = el_wedge(q_part2, {((j + 3,), ()): 1})
            el = el_wedge(el_add(t1, t2), {((i - 1,), ()): 1})
            out[(i, j)] = el
    return out


def paper_gysin_formula(i, j):
    """(2/3) sum_{k,l} Q_{k+1} ^ Q_{l+1} (x) f_{2k+i} ^ f_{2l+j}."""
    alg3 = algebra("P3-3")
    acc = {}
    for k in range(3):
        for l in range(3):
            if k == l:
                continue
            fk = [0, 0, 0]
            fk[k] = 1
            fl = [0, 0, 0]
            fl[l] = 1
            term = el_wedge(
                el_wedge(fiber_element(fk), fiber_element(fl)),
                el_wedge({((2 * k + i - 1,), ()): 1}, {((2 * l + j - 1,), ()): 1}),
            )
            acc = el_add(acc, term)
    return {k: Fraction(2, 3) * v for k, v in acc.items()}
