"""Exterior power utilities over exact scalars.

Multivectors are dicts mapping sorted index tuples to scalars (int or
Fraction).  Index tuples refer to a fixed ordered basis of the underlying
space.
"""

from fractions import Fraction
from itertools import combinations

from . import intlinalg as la


def subsets(n, k):
    return list(combinations(range(n), k))


def wedge_tuples(s, t):
    """(sign, merged) for basis wedge e_s ^ e_t, or (0, None) on overlap."""
    if set(s) & set(t):
        return 0, None
    merged = tuple(sorted(s + t))
    # count inversions of the concatenation s+t relative to sorted order
    seq = list(s) + list(t)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return (-1) ** inv, merged


def mv_add(a, b):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def mv_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def mv_wedge(a, b):
    out = {}
    for s, x in a.items():
        for t, y in b.items():
            sign, merged = wedge_tuples(s, t)
            if sign:
                nv = out.get(merged, 0) + sign * x * y
                if nv:
                    out[merged] = nv
                else:
                    out.pop(merged, None)
    return out


def vector_to_mv(v):
    return {(i,): x for i, x in enumerate(v) if x}


def lam_matrix(mat, k):
    """Matrix of the k-th exterior power on the basis of sorted k-subsets.

    Entry [T][S] is the (T,S) minor, so columns are images of basis wedges.
    """
    n = len(mat)
    subs = subsets(n, k)
    index = {s: i for i, s in enumerate(subs)}
    out = [[0] * len(subs) for _ in subs]
    cols = la.transpose(mat)
    for sj, s in enumerate(subs):
        img = None
        for i in s:
            v = vector_to_mv(cols[i])
            img = v if img is None else mv_wedge(img, v)
            if not img:
                break
        if img is None:
            img = {(): 1}
        if not img:
            continue
        for t, val in img.items():
            out[index[t]][sj] = val
    return out


def apply_matrix_mv(mat, mv):
    """Apply a linear map (columns = images of basis vectors) to a multivector."""
    cols = la.transpose(mat)
    out = {}
    for s, x in mv.items():
        img = None
        for i in s:
            v = vector_to_mv(cols[i])
            img = v if img is None else mv_wedge(img, v)
            if not img:
                break
        if img is None:
            img = {(): 1}
        for t, val in img.items():
            nv = out.get(t, 0) + x * val
            if nv:
                out[t] = nv
            else:
                out.pop(t, None)
    return out


def mv_to_coords(mv, subs_index, size):
    v = [0] * size
    for s, x in mv.items():
        v[subs_index[s]] = x
    return v


def fixed_space(mats):
    """Basis of the common fixed space of square matrices (exact, saturated).

    Restricts matrix by matrix, so the working dimension collapses quickly.
    """
    if not mats:
        raise ValueError("no matrices")
    n = len(mats[0])
    basis = la.identity(n)
    for m in mats:
        if not basis:
            return []
        # rows of (M - I) * basis^T = obstruction to fixedness of combinations
        k = len(basis)
        obstruction = []
        for i in range(n):
            row = []
            mi = m[i]
            for b in basis:
                row.append(sum(mi[j] * b[j] for j in range(n)) - b[i])
            obstruction.append(row)
        combos = la.kernel_basis_saturated(obstruction)
        new_basis = []
        for c in combos:
            vec = [0] * n
            for coef, b in zip(c, basis):
                if coef:
                    vec = [x + coef * y for x, y in zip(vec, b)]
            new_basis.append(vec)
        basis = la.saturate_rowspan(new_basis) if new_basis else []
    return basis


def rank_of_vectors(vectors):
    if not vectors:
        return 0
    return la.rank_int([list(v) for v in vectors])
