"""Exact dense linear algebra over Z and Q.

Matrices are plain lists of lists holding Python ints (arbitrary precision)
or fractions.Fraction.  Everything here is exact; no floating point is used
anywhere in this package.
"""

from fractions import Fraction


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_mat(a):
    return [row[:] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0])
    bt = transpose(b)
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in bt] for ra in a]


def mat_vec(a, v):
    return [sum(r[j] * v[j] for j in range(len(v))) for r in a]


def vec_mat(v, a):
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def mat_eq(a, b):
    return a == b


def mat_neg(a):
    return [[-x for x in row] for row in a]


def is_identity(a):
    n = len(a)
    return all(len(r) == n for r in a) and all(
        a[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
    )


def det(a):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_mat(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_int(a):
    """Rank of a matrix with integer or Fraction entries."""
    if not a or not a[0]:
        return 0
    if any(isinstance(x, Fraction) for row in a for x in row):
        scaled = []
        for row in a:
            lcm = 1
            for x in row:
                d = Fraction(x).denominator
                lcm = lcm * d // _gcd(lcm, d)
            scaled.append([int(Fraction(x) * lcm) for x in row])
        a = scaled
    ech, _ = row_echelon_int(a)
    return len(ech)


def rank_mod_p(a, p):
    """Rank over GF(p); used only as an independent probabilistic cross-check."""
    if not a or not a[0]:
        return 0
    m = [[x % p for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(r + 1, rows):
            if m[i][c]:
                f = (m[i][c] * inv) % p
                for j in range(c, cols):
                    m[i][j] = (m[i][j] - f * m[r][j]) % p
        r += 1
        if r == rows:
            break
    return r


def smith_normal_form(a):
    """Smith normal form with transforms.

    Returns (U, D, V) with U*a*V = D, U and V unimodular and D diagonal with
    each diagonal entry dividing the next.  Diagonal entries are nonnegative.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = copy_mat(a)
    u = identity(m)
    v = identity(n)

    def row_op(i, j, q):  # row i -= q*row j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q*col j
        for r in range(m):
            d[r][i] -= q * d[r][j]
        for r in range(n):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(m):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def make_pivot_positive(t):
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero entry in the remaining block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                    best = abs(d[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        make_pivot_positive(t)
        # Each column/row swap strictly shrinks the pivot, so this terminates.
        changed = True
        while changed:
            changed = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    row_op(i, t, q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        make_pivot_positive(t)
                        changed = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    col_op(j, t, q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        make_pivot_positive(t)
                        changed = True
            if changed:
                continue
            # row/col clear: enforce divisibility of the remaining block
            for i in range(t + 1, m):
                if any(d[i][j] % d[t][t] for j in range(t + 1, n)):
                    row_op(t, i, -1)
                    changed = True
                    break
        t += 1
    return u, d, v


def elementary_divisors(a):
    _, d, _ = smith_normal_form(a)
    out = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    return [x for x in out if x != 0]


def row_echelon_int(a):
    """Fraction-free integer row echelon with per-row gcd normalization.

    Returns (rows, pivot_cols); rows are primitive integer vectors.
    """
    rows = []
    for r in a:
        g = vec_gcd(r)
        if g:
            rows.append([x // g for x in r])
    if not rows:
        return [], []
    n = len(rows[0])
    ech = []
    pivots = []
    for row in rows:
        cur = row[:]
        for prow, pc in zip(ech, pivots):
            if cur[pc]:
                pv = prow[pc]
                cv = cur[pc]
                g = _gcd(pv, cv)
                a1, b1 = pv // g, cv // g
                cur = [a1 * x - b1 * y for x, y in zip(cur, prow)]
        g = vec_gcd(cur)
        if g == 0:
            continue
        cur = [x // g for x in cur]
        pc = next(i for i, x in enumerate(cur) if x)
        ech.append(cur)
        pivots.append(pc)
    order = sorted(range(len(ech)), key=lambda i: pivots[i])
    return [ech[i] for i in order], [pivots[i] for i in order]


def rational_kernel(a):
    """Basis of the rational kernel (integer-scaled rows, not saturated)."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0 or n == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    ech, pivots = row_echelon_int(a)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    # back-substitute over Q for each free column
    out = []
    for fc in free:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for i in range(len(ech) - 1, -1, -1):
            pc = pivots[i]
            s = sum((ech[i][j] * x[j] for j in range(pc + 1, n)), Fraction(0))
            x[pc] = -s / ech[i][pc]
        lcm = 1
        for v in x:
            lcm = lcm * v.denominator // _gcd(lcm, v.denominator)
        vec = [int(v * lcm) for v in x]
        g = vec_gcd(vec)
        out.append([v // g for v in vec])
    return out


def saturate_rowspan(rows):
    """Saturated basis of the row span: rows of U*M divided by the divisors."""
    if not rows:
        return []
    u, d, _ = smith_normal_form([r[:] for r in rows])
    um = mat_mul(u, rows)
    out = []
    for i in range(len(rows)):
        di = d[i][i] if i < len(d[0]) else 0
        if di == 0:
            break
        if any(x % di for x in um[i]):
            raise AssertionError("saturation division failed")
        out.append([x // di for x in um[i]])
    return out


def kernel_basis_saturated(a):
    """Basis of {x : a*x = 0} over Z, saturated (primitive lattice basis).

    Rational kernel by fraction-free elimination, then saturation of the
    small spanning set via the Smith form on the short side.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0 or n == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    kq = rational_kernel(a)
    if not kq:
        return []
    return saturate_rowspan(kq)


def rank_and_kernel(a):
    """(rank, saturated kernel basis) for a matrix with int/Fraction entries."""
    if not a or not a[0]:
        return 0, []
    scaled = []
    for row in a:
        dens = [Fraction(x).denominator for x in row]
        lcm = 1
        for dd in dens:
            lcm = lcm * dd // _gcd(lcm, dd)
        scaled.append([int(Fraction(x) * lcm) for x in row])
    ker = kernel_basis_saturated(scaled)
    return len(a[0]) - len(ker), ker


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def vec_gcd(v):
    g = 0
    for x in v:
        g = _gcd(g, x)
    return g


def solve_exact(a, b):
    """Solve a*x = b exactly over Q; returns None if inconsistent.

    a: m x n, b: length-m vector.  If the system is underdetermined one
    solution is returned (free variables set to 0).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def inverse_unimodular(a):
    """Inverse of a matrix with det +-1; result is integral."""
    n = len(a)
    dt = det(a)
    if dt not in (1, -1):
        raise ValueError("matrix is not unimodular")
    inv = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        col = solve_exact(a, e)
        inv.append([int(x) for x in col])
    return transpose(inv)


def charpoly(a):
    """Characteristic polynomial det(x*I - a) by the Berkowitz algorithm.

    Returns coefficients [c_0, ..., c_n] with c_n = 1, i.e.
    p(x) = sum c_k x^k.  Division free, exact on ints.
    """
    n = len(a)
    if n == 0:
        return [1]
    # Berkowitz: iteratively build the coefficient vector.
    # polys[k] holds charpoly coefficients (highest first) of leading k x k block.
    vec = [1, -a[0][0]]
    for k in range(1, n):
        r = [a[k][j] for j in range(k)]      # row below the block
        c = [a[j][k] for j in range(k)]      # column right of the block
        blk = [row[:k] for row in a[:k]]
        # toeplitz coefficients: t_0 = 1, t_1 = -a[k][k], t_{i+2} = -(r * blk^i * c)
        t = [1, -a[k][k]]
        cur = c[:]
        for _ in range(k):
            t.append(-sum(r[i] * cur[i] for i in range(k)))
            cur = mat_vec(blk, cur)
        new = [0] * (k + 2)
        for i, tv in enumerate(t):
            if tv == 0:
                continue
            for j, vv in enumerate(vec):
                if i + j <= k + 1:
                    new[i + j] += tv * vv
        vec = new
    vec.reverse()  # lowest degree first
    return vec


def charpoly_eval_sym(a):
    """Coefficients of det(L*I - a) as {power: int}, dropping zeros."""
    return {k: c for k, c in enumerate(charpoly(a)) if c != 0}


def hnf_column_style(a):
    """Column-style Hermite form helper used for unimodular completion."""
    u, d, v = smith_normal_form(a)
    return u, d, v


def complete_to_unimodular(rows):
    """Extend linearly independent primitive rows to a basis of Z^n.

    rows must span a saturated sublattice (gcd of maximal minors 1); this is
    guaranteed for SNF kernel output.  Returns an n x n unimodular matrix whose
    first len(rows) rows are the input.
    """
    k = len(rows)
    n = len(rows[0])
    u, d, v = smith_normal_form([row[:] for row in rows])
    for i in range(k):
        if d[i][i] != 1:
            raise ValueError("rows do not span a saturated sublattice")
    # rows = U^-1 * D * V^-1 -> candidate complement: last n-k rows of V^-1.
    vinv = inverse_unimodular(v)
    comp = [vinv[i] for i in range(k, n)]
    full = [list(r) for r in rows] + comp
    if det(full) not in (1, -1):
        raise ValueError("completion failed")
    return full


def saturation_basis(rows):
    """Basis of the saturation of the row span inside Z^n."""
    if not rows:
        return []
    m = len(rows)
    n = len(rows[0])
    u, d, v = smith_normal_form([row[:] for row in rows])
    r = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    vinv = inverse_unimodular(v)
    return [vinv[i] for i in range(r)]


def in_lattice_span_saturated(basis, vec):
    """Does vec lie in the Q-span of basis?"""
    if not basis:
        return all(x == 0 for x in vec)
    sol = solve_exact(transpose(basis), vec)
    return sol is not None
