"""Tiny exact rational LP feasibility solver (phase-1 simplex, Bland's rule).

Only used for desk-scale cone membership questions (<= 16 variables), so
simplicity beats speed.
"""

from fractions import Fraction


def nonneg_solve(a, b):
    """Find x >= 0 with a*x = b, exactly; returns list[Fraction] or None.

    Phase-1 simplex: minimize the sum of artificial variables.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    rows = [[Fraction(x) for x in row] for row in a]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # tableau columns: n structural + m artificial
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # objective row: minimize sum of artificials -> reduced costs
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            obj[j] += tab[i][j]
    while True:
        enter = None
        for j in range(n + m):
            if obj[j] > 0 and j not in basis:
                enter = j  # Bland: smallest index with positive reduced cost
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded cannot happen in phase 1, guard anyway
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = tab[i][-1]
        elif tab[i][-1] != 0:
            return None  # artificial stuck at positive level
    return x


def in_cone(gens, target):
    """Is target a nonnegative rational combination of the generator vectors?"""
    if not gens:
        return all(x == 0 for x in target)
    a = [[gens[j][i] for j in range(len(gens))] for i in range(len(target))]
    return nonneg_solve(a, list(target)) is not None
