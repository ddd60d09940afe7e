import random

import pytest

from voronoi4 import intlinalg as la
from voronoi4.stabilizers import random_unimodular
from voronoi4.symquad import QuadForm, act, central_ray, rank1, rep_matrix, sym_dim


def test_rank1_basis_vector():
    q = rank1([1, 0, 0, 0])
    assert q.mat == ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))


def test_rank1_difference_vector():
    q = rank1([1, -1])
    assert q.mat == ((1, -1), (-1, 1))


def test_rank1_primitivity_normalization():
    assert rank1([2, 0, 0, 0]) == rank1([1, 0, 0, 0])
    assert rank1([-1, 1]) == rank1([1, -1])
    with pytest.raises(ValueError):
        rank1([0, 0, 0])


def test_act_identity_and_negative():
    a = rank1([1, -1, 0])
    assert act(la.identity(3), a) == a
    assert act([[-1, 0, 0], [0, -1, 0], [0, 0, -1]], a) == a


def test_act_permutation_fixes_difference_form():
    # swapping the two variables entering (x2 - x3)^2 fixes the form
    u = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    a = rank1([0, 1, -1])
    assert act(u, a) == a


def test_act_rejects_non_unimodular():
    with pytest.raises(ValueError):
        act([[2, 0], [0, 1]], rank1([1, 0]))


def test_act_compatible_with_vectors():
    rng = random.Random(5)
    for _ in range(20):
        u = random_unimodular(3, rng)
        l = [rng.randint(-3, 3) for _ in range(3)]
        if not any(l):
            l[0] = 1
        assert act(u, rank1(l)) == rank1(la.mat_vec(u, rank1(l).vector))


def test_rep_matrix_identity():
    assert rep_matrix(la.identity(3)) == la.identity(6)


def test_rep_matrix_sign_flip():
    # negating the first variable negates exactly the m12, m13 coordinates
    u = [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]
    r = rep_matrix(u)
    expected = [[1, 1, 1, -1, -1, 1][i] * (i == j) for i in range(6) for j in range(6)]
    assert r == [[[1, 1, 1, -1, -1, 1][i] if i == j else 0 for j in range(6)] for i in range(6)]


def test_rep_matrix_homomorphism_fuzz():
    rng = random.Random(9)
    for _ in range(50):
        u1 = random_unimodular(3, rng)
        u2 = random_unimodular(3, rng)
        lhs = rep_matrix(la.mat_mul(u1, u2))
        rhs = la.mat_mul(rep_matrix(u1), rep_matrix(u2))
        assert lhs == rhs
        assert abs(la.det(rep_matrix(u1))) == 1


def test_action_is_group_action_fuzz():
    rng = random.Random(13)
    a = rank1([1, 1, -1, 0])
    for _ in range(25):
        u1 = random_unimodular(4, rng)
        u2 = random_unimodular(4, rng)
        assert act(la.mat_mul(u1, u2), a) == act(u1, act(u2, a))


def test_act_preserves_rank():
    rng = random.Random(17)
    e = central_ray()
    for _ in range(10):
        u = random_unimodular(4, rng)
        assert act(u, e).rank() == 4
        a = rank1([1, 0, -1, 2])
        assert act(u, a).rank() == 1


def test_central_ray_matrix():
    e = central_ray()
    assert [list(r) for r in e.mat] == [
        [2, 1, -1, -1],
        [1, 2, -1, -1],
        [-1, -1, 2, 0],
        [-1, -1, 0, 2],
    ]


def test_central_ray_positive_definite():
    assert central_ray().is_positive_definite()


def test_central_ray_triple_is_generator_sum():
    from voronoi4.symquad import _second_top_cone_vectors

    e = central_ray()
    s = [[0] * 4 for _ in range(4)]
    for l in _second_top_cone_vectors():
        for i in range(4):
            for j in range(4):
                s[i][j] += l[i] * l[j]
    assert [[3 * x for x in row] for row in e.mat] == s


def test_json_roundtrip():
    e = central_ray()
    assert QuadForm.from_json(e.to_json()) == e
    a = rank1([1, -1, 0, 0])
    assert QuadForm.from_json(a.to_json()) == a
    assert a.to_json()["vector"] == [1, -1, 0, 0]
