"""Acceptance checks: every headline table recomputed and compared exactly.

Each check returns (name, passed, detail).  run_all() executes the whole
battery; the command-line `verify` subcommand and the acceptance test module
both route through here so there is exactly one source of truth.
"""

import random
from collections import Counter

from . import cones, fibre3, ledger, rank2, stabilizers as st, torus
from .tatepoly import Coeff, parse_tatepoly

# Euler polynomials of the rank-4-interior perfect-cone orbits, by dimension
PERFECT_TABLE = {
    10: ["1", "1"],
    9: ["L", "L - 1"],
    8: ["L^2", "L^2 - L"],
    7: ["L^3 - L^2", "L^3", "L^3", "L^3"],
    6: ["L^4 - L^3", "L^4 + 1", "L^4", "L^4"],
    5: ["L^5 - 1", "L^5", "L^5 + L"],
    4: ["L^6"],
}

# Euler polynomials of the refinement orbits (all contain the central ray).
# One printed dimension-8 entry is reproduced as L^2 instead of L^2 + L: the
# latter is impossible for a two-torus quotient (it forces a negative
# invariant dimension) and contradicts the printed total row, which we match.
VORONOI_TABLE = {
    10: ["1", "1"],
    9: ["L - 1", "L"],
    8: ["L^2 - L", "L^2", "L^2 - L", "L^2", "L^2"],
    7: ["L^3 - L^2", "L^3 - L^2 + L - 1", "L^3 - 2*L^2 + L", "L^3 - L^2", "L^3", "L^3", "L^3"],
    6: ["L^4 - L^3 + L^2 - L", "L^4 + 1", "L^4 - L^3 - L + 1", "L^4 - L^3", "L^4 - L^3",
        "L^4 - 2*L^3 + 2*L^2 - 2*L + 1"],
    5: ["L^5 + L^3 - L^2 + L", "L^5 - L^4 + L^3 - 3*L^2 + 2*L",
        "L^5 - L^4 + L^3 - L^2 + L - 1", "L^5 - L^4", "L^5 - 2*L^4 + L^3 - L^2 + 2*L - 1"],
    4: ["L^6 - 2*L^5 + 2*L^4 - 4*L^3 + 5*L^2 - 2*L", "L^6 + 2*L^2", "L^6 + L^2",
        "L^6 - L^5 - L^3 + 2*L^2 - L"],
    3: ["L^7 - L^6 + L^5 - L^4 + 4*L^3 - 4*L^2", "L^7 + 2*L^3 - L^2"],
    2: ["L^8 + 2*L^4 - 3*L^3"],
    1: ["L^9 - L^4"],
}

TOTAL_ROW = "L^9 + L^8 + 2*L^7 + 3*L^6 + 3*L^5 + 3*L^4 + 3*L^3 + 2*L^2 + L + 1"

EXPECTED_EINFTY = {
    # (p, q) -> nonzero Tate multiplicity at the pure weight, p + q <= 9
    (1, -1): 1, (2, 0): 1, (1, 1): 2, (3, 1): 1, (2, 2): 1, (4, 2): 1,
    (1, 3): 3, (3, 3): 2, (5, 3): 1, (2, 4): 2, (4, 4): 2,
    (1, 5): 6, (3, 5): 3, (2, 6): 4, (1, 7): 7,
}


def _c(n):
    return Coeff.of(n)


def check_census():
    perf = st.perfect_census()
    got_p = perf.counts_by_dim(range(1, 11))
    got_v = st.voronoi_census_counts()
    ok = (
        got_p == (1, 1, 2, 3, 4, 5, 4, 2, 2, 2)
        and sum(got_p) == 26
        and got_v == (2, 2, 4, 7, 9, 11, 11, 7, 4, 3)
        and sum(got_v) == 60
    )
    return ("orbit census (perfect and refined fans)", ok,
            f"perfect {got_p}, refined {got_v}")


def check_perfect_euler_table():
    data = ledger.rank4_data()["perfect"]
    got = {}
    for entry in data:
        got.setdefault(entry["dim"], []).append(str(entry["euler"]))
    ok = len(data) == 18
    detail = []
    for d in sorted(set(got) | set(PERFECT_TABLE)):
        a = sorted(got.get(d, []))
        b = sorted(str(parse_tatepoly(s)) for s in PERFECT_TABLE.get(d, []))
        if a != b:
            ok = False
            detail.append(f"dim {d}: {a} != {b}")
    # the unambiguous named representatives
    names = {"C321": "L^4 + 1", "C5": "L^5 - 1", "C222": "L^4 - L^3",
             "K5-2": "L^2", "K5-1-1": "L^2 - L", "K5-2-1": "L^3 - L^2",
             "C2221": "L^3", "Pi1": "1", "Pi2": "1"}
    for name, expect in names.items():
        val = str(torus.molien_ec(cones.named_cone(name)))
        if val != str(parse_tatepoly(expect)):
            ok = False
            detail.append(f"{name}: {val} != {expect}")
    return ("Euler polynomials of the 18 full-rank perfect orbits", ok,
            "; ".join(detail) or "all 18 match")


def check_voronoi_euler_table():
    from .tatepoly import TatePoly

    data = ledger.rank4_data()["extra"]
    got = {}
    tot = TatePoly()
    for entry in data:
        got.setdefault(entry["dim"], []).append(str(entry["euler"]))
        tot = tot + entry["euler"]
    ok = len(data) == 35
    detail = []
    for d in sorted(set(got) | set(VORONOI_TABLE)):
        a = sorted(got.get(d, []))
        b = sorted(str(parse_tatepoly(s)) for s in VORONOI_TABLE.get(d, []))
        if a != b:
            ok = False
            detail.append(f"dim {d}: {a} != {b}")
    if str(tot) != str(parse_tatepoly(TOTAL_ROW)):
        ok = False
        detail.append(f"total row {tot}")
    _, e_betti = ledger.exceptional_divisor()
    row = tuple(e_betti.get(2 * k, _c(0)).constant() for k in range(10))
    if row != (1, 1, 2, 3, 3, 3, 3, 2, 1, 1):
        ok = False
        detail.append(f"divisor Betti {row}")
    if any(e_betti.get(2 * k, _c(0)) != e_betti.get(18 - 2 * k, _c(0)) for k in range(10)):
        ok = False
        detail.append("divisor row is not symmetric")
    return ("Euler polynomials of the 35 refinement orbits, total row, divisor Betti",
            ok, "; ".join(detail) or "all 35 match; total row and Betti row exact")


def check_rank4_betti():
    ranks = ledger.gysin_ranks()
    ok = set(ranks.values()) == {1}
    detail = [f"connecting ranks {ranks}"]
    perf_row, _ = ledger.beta4_perf_row()
    got_p = tuple(perf_row.get(2 * k, _c(0)).constant() for k in range(7))
    if got_p != (1, 1, 1, 4, 4, 3, 1):
        ok = False
        detail.append(f"perfect stratum Betti {got_p}")
    if any(perf_row.get(2 * k + 1, _c(0)) for k in range(9)):
        ok = False
        detail.append("odd Betti nonzero")
    vor_row, _ = ledger.beta4_voronoi_row()
    got_v = tuple(vor_row.get(2 * k, _c(0)).constant() for k in range(10))
    if got_v != (1, 2, 3, 7, 7, 6, 4, 2, 1, 1):
        ok = False
        detail.append(f"refined stratum Betti {got_v}")
    w2 = ledger.beta4_voronoi_weight2_degree()
    if w2 != [(6, 2, Coeff.of(1))]:
        ok = False
        detail.append(f"weight-2 slots {w2}")
    return ("connecting ranks and rank-4 stratum Betti rows", ok, "; ".join(detail))


def check_rank3_suite():
    ok = True
    detail = []
    dims = fibre3.invariant_dims("P3-3")
    expect = {(0, 0): 1, (2, 0): 1, (2, 1): 1, (2, 2): 3,
              (4, 0): 1, (4, 1): 1, (4, 2): 3, (6, 0): 1}
    if dims != expect:
        ok = False
        detail.append(f"minimal-cone dims {dims}")
    d2 = {
        "P3-3": {(2, 1): 1, (2, 2): 0, (4, 1): 1, (4, 2): 0},
        "P3-4A": {(2, 1): 1, (2, 2): 3, (4, 1): 1, (4, 2): 0},
        "P3-4B": {(2, 1): 1, (4, 1): 1},
        "P3-5": {(2, 1): 1, (4, 1): 1},
    }
    for s, exp in d2.items():
        got = fibre3.chern_d2(s)
        if got != exp:
            ok = False
            detail.append(f"{s} differential ranks {got}")
    if fibre3.beta3_gysin_rank() != 3:
        ok = False
        detail.append("connecting map not surjective")
    row, _ = ledger.beta3_row()
    got = {d: m.constant() for d, m in row.items()}
    if got != {2: 1, 4: 1, 5: 1, 6: 2, 7: 1, 8: 4, 10: 4, 12: 3, 14: 1}:
        ok = False
        detail.append(f"stratum Betti {got}")
    return ("rank-3 suite: invariant table, differential ranks, stratum Betti", ok,
            "; ".join(detail) or "table, ranks and Betti row exact")


def check_rank2_suite():
    ok = True
    detail = []
    dims = rank2.discriminant_dims()
    if dims != {0: 1, 2: 6, 4: 21, 6: 6, 8: 1}:
        ok = False
        detail.append(f"closed-fibre dims {dims}")
    if any(dims[k] != dims[8 - k] for k in dims):
        ok = False
        detail.append("no Poincare symmetry")
    surj, rank, n = rank2.delta2_surjective()
    if not surj:
        ok = False
        detail.append(f"connecting map rank {rank} of {n}")
    row, _ = ledger.beta2_row()
    got = {d: str(m) for d, m in sorted(row.items())}
    expect = {4: "1", 6: "2", 7: "1 + r", 8: "4 + r", 9: "1 + r",
              10: "5 + r", 11: "1", 12: "5", 14: "3", 16: "1"}
    if got != {k: v for k, v in expect.items()}:
        ok = False
        detail.append(f"stratum Betti {got}")
    return ("rank-2 suite: fibre dims, connecting surjectivity, stratum Betti", ok,
            "; ".join(detail) or "dims, surjectivity and symbolic Betti row exact")


def check_final_assembly():
    ok = True
    detail = []
    betti = ledger.final_betti()
    expect_low = {0: "1", 2: "3", 4: "5", 6: "11", 8: "17"}
    for d, e in expect_low.items():
        if str(betti.get(d, _c(0))) != e:
            ok = False
            detail.append(f"b_{d} = {betti.get(d)}")
    if str(betti.get(10)) != "10 + eA4":
        ok = False
        detail.append(f"b_10 = {betti.get(10)}")
    for d in (12, 14, 16, 18, 20):
        if betti.get(d) != betti.get(20 - d):
            ok = False
            detail.append(f"duality fails at {d}")
    if any(betti.get(d) for d in range(21) if d % 2):
        ok = False
        detail.append("odd Betti nonzero")
    if ledger.boundary_euler_sum() != 84:
        ok = False
        detail.append(f"boundary Euler {ledger.boundary_euler_sum()}")
    igusa = ledger.igusa_betti_low()
    got = tuple(igusa[d].constant() for d in range(10))
    if got != (1, 0, 2, 0, 3, 0, 8, 0, 14, 0):
        ok = False
        detail.append(f"perfect-model row {got}")
    pure, _ = ledger.einfty_table()
    got_table = {}
    for (p, q), pieces in pure.items():
        m = pieces.total()
        if m:
            got_table[(p, q)] = m.constant()
    if got_table != EXPECTED_EINFTY:
        ok = False
        detail.append(f"pure page {sorted(got_table.items())}")
    return ("final assembly: Betti rows of both compactifications, pure page, boundary total",
            ok, "; ".join(detail) or "rows, pure page and boundary total 84 exact")


def check_property_suites():
    ok = True
    detail = []
    # Molien vs fixed-space agreement on every orbit cone (the expensive
    # dual-route computation runs exactly once, here)
    data = ledger.rank4_data()
    count = 0
    for entry in data["perfect"] + data["extra"]:
        c = entry["cone"]
        rep = torus.orbit_rep(c)
        try:
            dims = torus.invariant_dims(c, rep)  # raises on disagreement
            if dims != entry["dims"]:
                ok = False
                detail.append(f"{c}: ledger dims differ")
        except AssertionError as exc:
            ok = False
            detail.append(f"{c}: {exc}")
        count += 1
    detail.append(f"dual-route invariants agree on {count} orbit cones")
    # group-action homomorphism fuzz
    from .symquad import rank1, act, rep_matrix
    from . import intlinalg as la

    rng = random.Random(20260811)
    a = rank1([1, -1, 0, 2])
    for _ in range(200):
        u1 = st.random_unimodular(4, rng)
        u2 = st.random_unimodular(4, rng)
        if act(la.mat_mul(u1, u2), a) != act(u1, act(u2, a)):
            ok = False
            detail.append("action homomorphism fails")
            break
        if rep_matrix(la.mat_mul(u1, u2)) != la.mat_mul(rep_matrix(u1), rep_matrix(u2)):
            ok = False
            detail.append("coordinate representation fails")
            break
    # duality involution
    p = parse_tatepoly("L^3 - 2*L + 7")
    if p.duality(9).duality(9) != p:
        ok = False
        detail.append("duality is not an involution")
    # Euler additivity of every assembled page
    for name, builder in (("rank1", ledger.beta1_row), ("rank2", ledger.beta2_row),
                          ("rank3", ledger.beta3_row), ("jac", ledger.jbar4_row)):
        row, page = builder()
        lhs = Coeff()
        for (pp, q), pieces in page.items():
            s = pieces.total()
            lhs = lhs + (s if (pp + q) % 2 == 0 else -s)
        rhs = Coeff()
        for d, m in row.items():
            rhs = rhs + (m if d % 2 == 0 else -m)
        if lhs != rhs:
            ok = False
            detail.append(f"{name} Euler additivity fails")
    perf_pre = ledger.beta4_perf_page()
    perf_row, _ = ledger.beta4_perf_row()
    lhs = Coeff()
    for (pp, q), pieces in perf_pre.items():
        s = pieces.total()
        lhs = lhs + (s if (pp + q) % 2 == 0 else -s)
    rhs = Coeff()
    for d, m in perf_row.items():
        rhs = rhs + (m if d % 2 == 0 else -m)
    if lhs != rhs:
        ok = False
        detail.append("rank-4 page Euler additivity fails")
    # stabilizer order invariance under the transposed convention
    for name in ("K33", "C2221", "P3-4B"):
        c = cones.named_cone(name)
        if st.stabilizer(c).order != st.stabilizer(c, transposed=True).order:
            ok = False
            detail.append(f"transpose convention changes the stabilizer of {name}")
    return ("property suites: dual-route invariants, fuzz, duality, additivity, conventions",
            ok, "; ".join(detail))


ALL_CHECKS = [
    check_census,
    check_perfect_euler_table,
    check_voronoi_euler_table,
    check_rank4_betti,
    check_rank3_suite,
    check_rank2_suite,
    check_final_assembly,
    check_property_suites,
]


def run_all(verbose=True):
    results = []
    for i, check in enumerate(ALL_CHECKS, 1):
        name, ok, detail = check()
        results.append((name, ok, detail))
        if verbose:
            status = "PASS" if ok else "FAIL"
            print(f"[{status}] criterion {i}: {name}")
            if detail and (not ok or verbose):
                print(f"       {detail}")
    return results
