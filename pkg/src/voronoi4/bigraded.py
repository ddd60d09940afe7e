"""Bigraded exterior algebra on base generators f_1..f_m and fiber generators.

Elements are dicts (base_tuple, fiber_tuple) -> Fraction, the tuples being
sorted index tuples.  All generators are odd for the total degree, so the sign
of a product interleaves base and fiber letters; monomials are normalized to
"base letters first".
"""

from fractions import Fraction

from . import intlinalg as la
from .exterior import subsets, wedge_tuples


class BigradedAlg:
    def __init__(self, base_dim, fiber_dim, base_names=None, fiber_names=None):
        self.m = base_dim
        self.k = fiber_dim
        self.base_names = base_names or [f"f{i+1}" for i in range(base_dim)]
        self.fiber_names = fiber_names or [f"Q{i+1}" for i in range(fiber_dim)]

    def basis(self, p, q):
        return [(b, f) for b in subsets(self.m, p) for f in subsets(self.k, q)]

    def monomial_str(self, key):
        b, f = key
        letters = [self.base_names[i] for i in b] + [self.fiber_names[i] for i in f]
        return "^".join(letters) if letters else "1"

    def element_str(self, el):
        if not el:
            return "0"
        parts = []
        for key in sorted(el):
            c = el[key]
            if c == 0:
                continue
            mono = self.monomial_str(key)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def el_scale(el, c):
    if not c:
        return {}
    return {k: v * c for k, v in el.items()}


def el_add(a, b):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def el_wedge(a, b):
    """Product with total-degree Koszul signs, output in normal form."""
    out = {}
    for (b1, f1), x in a.items():
        for (b2, f2), y in b.items():
            sb, bm = wedge_tuples(b1, b2)
            if not sb:
                continue
            sf, fm = wedge_tuples(f1, f2)
            if not sf:
                continue
            # moving the f1 block past the b2 block costs |f1|*|b2| swaps
            sign = sb * sf * (-1) ** (len(f1) * len(b2))
            key = (bm, fm)
            nv = out.get(key, 0) + sign * x * y
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def base_element(vec):
    return {((i,), ()): x for i, x in enumerate(vec) if x}


def fiber_element(vec):
    return {((), (i,)): x for i, x in enumerate(vec) if x}


def from_base_mv(mv):
    """Lift a plain multivector on the base letters into the bigraded algebra."""
    return {(s, ()): c for s, c in mv.items()}


class FibAction:
    """Algebra endomorphism determined by images of degree-1 generators."""

    def __init__(self, alg, base_matrix, fiber_matrix):
        self.alg = alg
        self.base_matrix = [tuple(r) for r in base_matrix]    # rows: image coeffs of f_i
        self.fiber_matrix = [tuple(r) for r in fiber_matrix]  # rows: image coeffs of gen_i

    def key(self):
        return (tuple(self.base_matrix), tuple(self.fiber_matrix))

    def apply(self, el):
        out = {}
        for (b, f), x in el.items():
            img = {((), ()): x}
            for i in b:
                img = el_wedge(img, base_element(self.base_matrix[i]))
                if not img:
                    break
            if img:
                for i in f:
                    img = el_wedge(img, fiber_element(self.fiber_matrix[i]))
                    if not img:
                        break
            for k, v in img.items():
                nv = out.get(k, 0) + v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def compose(self, other):
        """self after other, as matrices on generators."""
        bm = la.mat_mul([list(r) for r in other.base_matrix], [list(r) for r in self.base_matrix])
        fm = la.mat_mul([list(r) for r in other.fiber_matrix], [list(r) for r in self.fiber_matrix])
        return FibAction(self.alg, bm, fm)


def action_matrix_on_bidegree(alg, action, p, q):
    """Matrix of the action on the (p,q) monomial basis; columns are images."""
    basis = alg.basis(p, q)
    index = {k: i for i, k in enumerate(basis)}
    cols = []
    for key in basis:
        img = action.apply({key: 1})
        col = [0] * len(basis)
        for k, v in img.items():
            col[index[k]] = v
        cols.append(col)
    return la.transpose(cols)


def invariant_basis(alg, actions, p, q):
    """Saturated basis (as elements) of the joint fixed space in bidegree (p,q)."""
    basis = alg.basis(p, q)
    if not basis:
        return []
    if not actions:
        return [{k: 1} for k in basis]
    stacked = []
    n = len(basis)
    for a in actions:
        m = action_matrix_on_bidegree(alg, a, p, q)
        for i in range(n):
            stacked.append([m[i][j] - (1 if i == j else 0) for j in range(n)])
    ker = la.kernel_basis_saturated(stacked)
    out = []
    for vec in ker:
        out.append({basis[i]: c for i, c in enumerate(vec) if c})
    return out


def element_coords(alg, el, p, q):
    basis = alg.basis(p, q)
    index = {k: i for i, k in enumerate(basis)}
    v = [0] * len(basis)
    for k, c in el.items():
        v[index[k]] = c
    return v


def in_span(alg, el, basis_els, p, q):
    from . import intlinalg

    if not basis_els:
        return not el
    rows = [element_coords(alg, b, p, q) for b in basis_els]
    target = element_coords(alg, el, p, q)
    return intlinalg.solve_exact(intlinalg.transpose(rows), target) is not None


def reynolds(alg, group_actions, el):
    """Exact average of el over a list of algebra actions."""
    acc = {}
    for a in group_actions:
        acc = el_add(acc, a.apply(el))
    n = len(group_actions)
    return {k: Fraction(v, 1) / n for k, v in acc.items() if v}


def koszul_differential(alg, substitution, el):
    """Odd derivation killing base letters and sending fiber generator i to
    the degree-(2,0) base class substitution[i]."""
    out = {}
    for (b, f), x in el.items():
        for pos, i in enumerate(f):
            sign = (-1) ** (len(b) + pos)
            rest = (b, tuple(t for t in f if t != i))
            term = el_wedge({rest: sign * x}, from_base_mv(substitution[i]))
            for k, v in term.items():
                nv = out.get(k, 0) + v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
    return out


def rank_of_elements(alg, els, p, q):
    if not els:
        return 0
    rows = [element_coords(alg, e, p, q) for e in els]
    return la.rank_int(rows)
