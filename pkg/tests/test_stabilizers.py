import random

import pytest

from voronoi4 import intlinalg as la
from voronoi4 import stabilizers as st
from voronoi4.cones import Cone, ConeError, named_cone
from voronoi4.symquad import act, central_ray, rank1


def test_orth_group_orders():
    assert st.orth_group(la.identity(3)).order == 48
    assert st.orth_group(la.identity(4)).order == 384


def test_orth_group_central_ray():
    grp = st.orth_group(central_ray())
    # regression constant; at least as large as the top-cone stabilizer
    assert grp.order == 1152


def test_stabilizer_minimal_genus3_cone():
    grp = st.stabilizer(named_cone("P3-3"))
    assert grp.order == 48


def test_stabilizer_printed_generators_g4():
    # -Id and the two printed coordinate substitutions generate order 16
    c = named_cone("K5-1-1")
    grp = st.stabilizer(c)
    assert grp.order == 16
    neg = [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    swap_pairs = [[0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0]]
    swap_34 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    for u in (neg, swap_pairs, swap_34):
        assert tuple(tuple(r) for r in u) in grp
    assert len(st.closure([neg, swap_pairs, swap_34])) == 16


def test_stabilizer_contains_printed_genus3_substitutions():
    # the four substitutions generating the stabilizer of the 4A cone
    subs = [
        [[1, 0, 0], [0, 1, -1], [0, 0, -1]],
        [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[-1, 0, 0], [0, -1, 0], [0, 0, -1]],
    ]
    grp = st.stabilizer(named_cone("P3-4A"))
    for s in subs:
        u = la.transpose(s)
        assert tuple(tuple(r) for r in u) in grp
    assert len(st.closure([la.transpose(s) for s in subs])) == grp.order


def test_stabilizer_rejects_degenerate():
    c = Cone([rank1([1, 0, 0, 0]), rank1([0, 1, 0, 0])])
    with pytest.raises(ConeError):
        st.stabilizer(c)


def test_stabilizer_transpose_convention_same_order():
    for name in ("P3-3", "K5-2", "C2221"):
        c = named_cone(name)
        assert st.stabilizer(c).order == st.stabilizer(c, transposed=True).order


def test_are_equivalent_translate():
    rng = random.Random(23)
    c = named_cone("C222")
    for _ in range(3):
        u = st.random_unimodular(4, rng)
        moved = st.act_cone(u, c)
        w = st.are_equivalent(c, moved)
        assert w is not None
        assert frozenset(act(w, a) for a in c.gens) == frozenset(moved.gens)


def test_are_equivalent_distinguishes_genus3_pair():
    assert st.are_equivalent(named_cone("P3-4A"), named_cone("P3-4B")) is None


def test_are_equivalent_is_equivalence():
    rng = random.Random(29)
    c = named_cone("C5")
    u = st.random_unimodular(4, rng)
    b = st.act_cone(u, c)
    v = st.random_unimodular(4, rng)
    d = st.act_cone(v, b)
    w1 = st.are_equivalent(c, b)
    w2 = st.are_equivalent(b, d)
    assert w1 is not None and w2 is not None
    comp = la.mat_mul(w2, w1)
    assert frozenset(act(comp, a) for a in c.gens) == frozenset(d.gens)
    assert st.are_equivalent(c, c) is not None
    assert st.are_equivalent(b, c) is not None


def test_are_equivalent_degenerate_reduction():
    # two 3-dim cones of interior rank 2 in genus 3: equivalent ones found
    a = Cone([rank1([1, 0, 0]), rank1([0, 1, 0]), rank1([1, -1, 0])], validate=False)
    b = Cone([rank1([0, 1, 0]), rank1([0, 0, 1]), rank1([0, 1, -1])], validate=False)
    assert st.are_equivalent(a, b) is not None
    # and a basic simplicial one is not equivalent to the triangle
    c = Cone([rank1([1, 0, 0]), rank1([0, 1, 0]), rank1([0, 0, 1])], validate=False)
    assert st.are_equivalent(a, c) is None


def test_k5_1_1b_is_a_face_orbit_of_pi2():
    pi2 = named_cone("Pi2")
    from voronoi4.cones import face_generator_sets

    target = named_cone("K5-1-1")
    found = False
    for s in face_generator_sets(pi2):
        if len(s) == 8:
            f = Cone([pi2.gens[i] for i in sorted(s)], validate=False)
            if f.dim() == 8 and st.are_equivalent(f, target) is not None:
                found = True
                break
    assert found


def test_perfect_census_counts():
    census = st.perfect_census()
    assert census.counts_by_dim(range(1, 11)) == (1, 1, 2, 3, 4, 5, 4, 2, 2, 2)
    assert len(census.orbits) == 26


def test_voronoi_census_counts():
    assert st.voronoi_census_counts() == (2, 2, 4, 7, 9, 11, 11, 7, 4, 3)


def test_extra_representative_count_and_dims():
    from collections import Counter

    extra = st.voronoi_extra_representatives()
    assert len(extra) == 35
    cnt = Counter(c.dim() for c in extra)
    assert [cnt.get(d, 0) for d in range(1, 11)] == [1, 1, 2, 4, 5, 6, 7, 5, 2, 2]


def test_central_ray_isometries_stabilize_top_cone():
    # the isometry group of the central ray equals the top-cone stabilizer
    grp = st.orth_group(central_ray())
    assert grp.order == st.stabilizer_of_top("Pi2").order
    pi2 = named_cone("Pi2")
    gset = frozenset(pi2.gens)
    for e in grp.generators:
        assert frozenset(act(e, a) for a in pi2.gens) == gset


def test_stabilizer_fixes_central_ray():
    e = central_ray()
    for u in st.stabilizer_of_top("Pi2").generators:
        assert act(u, e) == e


def test_face_stabilizer_compatibility():
    # elements stabilizing both a cone and a face land in the face stabilizer
    face = named_cone("C222")
    cone = named_cone("C2221")
    g_face = st.stabilizer(face)
    g_cone = st.stabilizer(cone)
    inter = g_face.intersect(g_cone)
    assert inter.order >= 1
    for e in inter.elements:
        assert e in g_face


def test_group_json():
    grp = st.stabilizer(named_cone("P3-3"))
    js = grp.to_json()
    assert js["order"] == 48
    assert all(len(g) == 9 for g in js["generators"])
