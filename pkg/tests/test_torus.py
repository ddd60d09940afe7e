import pytest

from voronoi4 import torus
from voronoi4.cones import Cone, named_cone
from voronoi4.stabilizers import FiniteMatrixGroup, stabilizer
from voronoi4.symquad import rank1
from voronoi4.tatepoly import parse_tatepoly
from voronoi4 import intlinalg as la


def test_orbit_rep_point():
    rep = torus.orbit_rep(named_cone("Pi1"))
    assert rep.n == 0
    assert torus.molien_ec(named_cone("Pi1"), rep) == parse_tatepoly("1")


def test_orbit_rep_k33_character():
    c = named_cone("K33")
    rep = torus.orbit_rep(c)
    assert rep.n == 1
    chars = {rep.action[e][0][0] for e in rep.group.elements}
    assert chars == {1, -1}


def test_orbit_rep_actions_unimodular_and_homomorphic():
    c = named_cone("C321")
    rep = torus.orbit_rep(c)
    for e in rep.group.generators:
        assert abs(la.det(rep.action[e])) == 1
    # homomorphism on a pair of generators
    gens = rep.group.generators
    if len(gens) >= 2:
        prod = tuple(tuple(r) for r in la.mat_mul(gens[0], gens[1]))
        assert rep.action[prod] == la.mat_mul(rep.action[gens[0]], rep.action[gens[1]])


def test_molien_golden_values():
    assert str(torus.molien_ec(named_cone("C321"))) == "L^4 + 1"
    assert str(torus.molien_ec(named_cone("C5"))) == "L^5 - 1"
    assert str(torus.molien_ec(named_cone("K5-1-1"))) == "L^2 - L"


def test_molien_central_ray():
    assert str(torus.molien_ec(named_cone("e"))) == "L^9 - L^4"


def test_molien_trivial_group_full_torus():
    # a basic 8-dim cone in genus 4 whose stabilizer acts trivially would give
    # (L-1)^n; instead check the defining identity on a small synthetic case:
    # the trivial group on a rank-2 lattice gives (L-1)^2
    c = named_cone("K5-2")
    rep = torus.orbit_rep(c)
    ident = tuple(tuple(r) for r in la.identity(4))
    triv = FiniteMatrixGroup(4, [ident])
    rep2 = torus.orbit_rep(c, group=triv)
    assert torus.molien_ec(c, rep2) == parse_tatepoly("L^2 - 2*L + 1")


def test_invariant_dims_cross_check():
    for name in ("K33", "K5-2", "C222", "C321", "C5", "e"):
        c = named_cone(name)
        rep = torus.orbit_rep(c)
        dims = torus.invariant_dims(c, rep)  # raises on Molien mismatch
        assert dims[0] == 1
        ec = torus.ec_from_dims(dims)
        assert ec == torus.molien_ec(c, rep)


def test_hc_profile_point():
    assert torus.hc_profile(named_cone("Pi2")) == [(0, 0, 1)]


def test_hc_profile_duality_shape():
    c = named_cone("C5")
    prof = torus.hc_profile(c)
    assert (10, 10, 1) in prof  # the fundamental-class slot is always there
    n = 5
    for (deg, w, d) in prof:
        assert w == 2 * (deg - n)
        assert d > 0


def test_gysin_ranks_all_one():
    from voronoi4.ledger import gysin_ranks

    assert set(gysin_ranks().values()) == {1}


def test_gysin_rank_split_independence():
    from voronoi4.cones import named_cone

    face = named_cone("C222")
    cone = named_cone("C2221")
    gamma = stabilizer(face).intersect(stabilizer(cone))
    r0 = torus.gysin_rank(face, cone, gamma, 0, u_index=0)
    r1 = torus.gysin_rank(face, cone, gamma, 0, u_index=1)
    assert r0 == r1 == 1


def test_gysin_rank_zero_on_empty_source():
    face = named_cone("C222")
    cone = named_cone("C2221")
    gamma = stabilizer(face).intersect(stabilizer(cone))
    # degree one of the small lattice carries no invariants at all
    assert torus.gysin_rank(face, cone, gamma, 1) == 0


def test_gysin_requires_facet_pair():
    from voronoi4.cones import ConeError

    with pytest.raises(ConeError):
        torus.gysin_rank(named_cone("C5"), named_cone("C2221"), stabilizer(named_cone("C5")), 0)
