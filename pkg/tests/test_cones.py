import pytest

from voronoi4 import cones
from voronoi4.cones import Cone, ConeError, faces, interior_rank, is_basic, named_cone, perp_lattice
from voronoi4.symquad import central_ray, rank1


def test_dims_of_named_cones():
    assert named_cone("Pi2").dim() == 10
    assert named_cone("Pi1").dim() == 10
    assert named_cone("P3-5").dim() == 5
    assert named_cone("e").dim() == 1


def test_rank_examples():
    # the principal cone generators span the full ten-dimensional lattice
    from voronoi4 import intlinalg as la

    assert la.rank_int(named_cone("Pi1").coord_matrix) == 10
    assert la.rank_int(named_cone("K33").coord_matrix) == 9


def test_basicness():
    assert is_basic(named_cone("Pi1"))
    assert not is_basic(named_cone("Pi2"))
    assert is_basic(named_cone("K33"))


def test_snf_divisor_examples():
    from voronoi4 import intlinalg as la

    assert la.elementary_divisors(named_cone("P3-3").coord_matrix) == [1, 1, 1]
    divs = la.elementary_divisors(named_cone("Pi2").coord_matrix)
    assert not all(x == 1 for x in divs)


def test_all_nine_dim_faces_of_pi2_basic():
    pi2 = named_cone("Pi2")
    lattice = faces(pi2)
    nine = lattice.by_dim[9]
    assert len(nine) == 64
    assert all(is_basic(f) for f in nine)


def test_interior_rank():
    assert interior_rank(named_cone("P3-3")) == 3
    assert interior_rank(named_cone("Pi1")) == 4
    assert interior_rank(Cone([rank1([1, 0, 0, 0])])) == 1


def test_interior_rank_monotone_on_chain():
    pi1 = named_cone("Pi1")
    chain = [Cone(list(pi1.gens[: k + 1]), validate=False) for k in range(4)]
    ranks = [interior_rank(c) for c in chain]
    assert ranks == sorted(ranks)


def test_perp_lattice_ranks():
    assert len(perp_lattice(named_cone("e"))) == 9
    assert len(perp_lattice(named_cone("P3-6"))) == 0
    assert len(perp_lattice(named_cone("Pi1"))) == 0


def test_perp_lattice_containment():
    pi2 = named_cone("Pi2")
    from voronoi4 import intlinalg as la

    face = Cone(list(pi2.gens[:6]), validate=False)
    big = perp_lattice(face)
    small = perp_lattice(pi2)
    for row in small:
        assert la.solve_exact(la.transpose(big), row) is not None


def test_simplicial_face_count():
    lat = faces(named_cone("P3-3"))
    # all seven nonzero faces of a simplicial 3-cone
    assert sum(len(v) for v in lat.by_dim.values()) == 7
    assert lat.f_vector() == (3, 3, 1)


def test_faces_of_top_genus3_cone_contain_named_reps():
    from voronoi4.stabilizers import are_equivalent

    top = named_cone("P3-6")
    lat = faces(top)
    for name in ("P3-3", "P3-4A", "P3-4B", "P3-5"):
        target = named_cone(name)
        hits = [f for f in lat.by_dim[target.dim()] if are_equivalent(f, target) is not None]
        assert hits, f"no face equivalent to {name}"


def test_face_generators_are_subsets():
    pi2 = named_cone("Pi2")
    lat = faces(pi2)
    gens = set(pi2.gens)
    for f in lat.all_faces():
        assert set(f.gens) <= gens


def test_oversize_guard():
    vecs = [[1, k, 0, 0] for k in range(17)]
    with pytest.raises(ConeError):
        Cone([rank1(v) for v in vecs])


def test_extremality_rejection():
    from voronoi4.symquad import QuadForm

    a = rank1([1, 0])
    b = rank1([0, 1])
    redundant = QuadForm([[1, 0], [0, 1]])  # the sum of the two rays
    with pytest.raises(ConeError):
        Cone([a, b, redundant])
    assert len(Cone([a, b]).gens) == 2


def test_star_of_e_dimensions():
    star = cones.star_of_e()
    assert star[0].dim() == 1
    for c in star[1:]:
        # every span has the ray plus a proper face, one dimension up
        assert any(q.rank() == 4 for q in c.gens)
    from collections import Counter

    cnt = Counter(c.dim() for c in star)
    assert cnt[1] == 1


def test_cone_json_roundtrip():
    c = named_cone("K33")
    again = Cone.from_json(c.to_json())
    assert again == c
