import random

from voronoi4 import exterior as ext
from voronoi4 import intlinalg as la


def test_wedge_sign_basics():
    assert ext.wedge_tuples((0,), (1,)) == (1, (0, 1))
    assert ext.wedge_tuples((1,), (0,)) == (-1, (0, 1))
    assert ext.wedge_tuples((0,), (0,)) == (0, None)
    assert ext.wedge_tuples((), (2, 5)) == (1, (2, 5))


def test_wedge_anticommutative():
    a = {(0,): 1, (2,): 3}
    b = {(1,): 2}
    ab = ext.mv_wedge(a, b)
    ba = ext.mv_wedge(b, a)
    assert ab == {k: -v for k, v in ba.items()}


def test_wedge_associative_fuzz():
    rng = random.Random(2)
    for _ in range(20):
        def rand_el(deg):
            out = {}
            for s in ext.subsets(5, deg):
                c = rng.randint(-2, 2)
                if c:
                    out[s] = c
            return out

        a, b, c = rand_el(1), rand_el(1), rand_el(2)
        lhs = ext.mv_wedge(ext.mv_wedge(a, b), c)
        rhs = ext.mv_wedge(a, ext.mv_wedge(b, c))
        assert lhs == rhs


def test_lam_matrix_multiplicative():
    rng = random.Random(4)
    from voronoi4.stabilizers import random_unimodular

    a = random_unimodular(4, rng)
    b = random_unimodular(4, rng)
    for k in (0, 1, 2, 3):
        lhs = ext.lam_matrix(la.mat_mul(a, b), k)
        rhs = la.mat_mul(ext.lam_matrix(a, k), ext.lam_matrix(b, k))
        assert lhs == rhs


def test_lam_matrix_det_slot():
    m = [[2, 1], [1, 1]]
    assert ext.lam_matrix(m, 2) == [[1]]
    assert ext.lam_matrix(m, 0) == [[1]]


def test_fixed_space_of_swap():
    swap = [[0, 1], [1, 0]]
    fix = ext.fixed_space([ext.lam_matrix(swap, 1)])
    assert len(fix) == 1
    # Lambda^2 of a swap is -1, so no invariants there
    assert ext.fixed_space([ext.lam_matrix(swap, 2)]) == []
