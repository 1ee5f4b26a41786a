import itertools
import random
import numpy as np
import pytest

from lagrangian import exactlin as el
from lagrangian import lagrange as lg
from lagrangian.battery import algebra, comparable_pairs, h_tau, random_subspace
from lagrangian.degen import (build_g_d_eta, complexify_subspace, diagonal, double_grading, grading,
                              h_delta_n1_nminus2, is_graded, is_lagrangian_I, lagrangian_I_failures,
                              limit_H, limit_in_double, limit_subspace, real_points,
                              real_structure_test, tau_subspace)
from lagrangian.liealg import gamma_d
from lagrangian.rootsys import diagram_involutions, flip_involution, identity_involution, signature


def flowed_basis(L, weights, big=1e4):
    """Orthonormal basis of exp(tH) L for e^t = big, in floats."""
    D = np.diag([big ** float(w) for w in weights])
    B = np.array([[float(x) for x in v] for v in L.basis]).T
    moved = D @ B
    Q, _ = np.linalg.qr(moved)
    return Q


def test_limit_matches_numeric_flow(sl3):
    g = sl3
    for d in diagram_involutions(g.rs):
        for hi, lo, H in comparable_pairs(g, d):
            L = lg.build_l_d_sigma(g, d, hi)
            lim = limit_H(g, L, H)
            gr = grading(g, H)
            Q = flowed_basis(L, gr.weights)
            for v in lim.basis:
                x = np.array([float(c) for c in v])
                r = x - Q @ (Q.T @ x)
                assert np.linalg.norm(r) < 1e-3 * np.linalg.norm(x)


def test_limit_properties(sl3):
    rng = random.Random(2)
    gr = grading(sl3, (1, 2))
    assert gr.bracket_additive(sl3)
    assert double_grading(sl3, (1, 2)).weights[:sl3.n] == tuple(-w for w in double_grading(sl3, (1, 2)).weights[sl3.n:])
    for _ in range(5):
        L = random_subspace(rng, sl3.dim, rng.randint(1, 8))
        lim = limit_subspace(L, gr)
        assert lim.dim == L.dim
        assert is_graded(lim, gr)
        assert limit_subspace(lim, gr) == lim
    b = el.subspace_sum(sl3.cartan_real, sl3.nplus)
    assert limit_subspace(b, gr) == b
    lim = limit_subspace(sl3.k, gr)
    assert sl3.is_subalgebra(lim)


def test_compact_form_degenerates_to_t_plus_n(sl2):
    assert limit_H(sl2, sl2.k, (1,)) == el.subspace_sum(sl2.t, sl2.nplus)


def test_split_flip_discontinuity(sl3):
    flip = flip_involution(sl3.rs)
    L = lg.build_l_d_sigma(sl3, flip, signature((1, 1), flip))
    lim = limit_H(sl3, L, (1, 1))
    ht = h_tau(sl3, flip)
    assert lim == el.subspace_sum(ht, sl3.nplus)
    assert el.intersect(ht, sl3.t).dim == 1
    assert lg.is_lagrangian(lim, sl3) and not lg.is_model_point(sl3, lim)


def test_complexify_examples(sl2, sl3):
    for g in (sl2, sl3):
        assert complexify_subspace(g, g.k) == diagonal(g)
        assert complexify_subspace(g, el.subspace_sum(g.t, g.nplus)) == h_delta_n1_nminus2(g)
        assert is_lagrangian_I(g, diagonal(g))


def test_limit_in_double_of_diagonal(sl2):
    assert limit_in_double(sl2, complexify_subspace(sl2, sl2.k), (1,)) == h_delta_n1_nminus2(sl2)


def test_g_d_eta_examples(sl3):
    flip = flip_involution(sl3.rs)
    G = gamma_d(sl3, flip).matrix
    n = sl3.n
    twisted = el.span([tuple(el.GaussScalar(int(i == k)) for i in range(n)) +
                       tuple(el.GaussScalar(G[i][k]) for i in range(n)) for k in range(n)], 2 * n)
    assert build_g_d_eta(sl3, flip, (1, 1)) == twisted
    assert build_g_d_eta(sl3, identity_involution(2), (0, 0)) == h_delta_n1_nminus2(sl3)
    assert build_g_d_eta(sl3, flip, (1, 1)) == complexify_subspace(sl3, lg.build_l_d_sigma(sl3, flip, signature((1, 1), flip)))
    for eta in ((1, 0), (0, 1)):
        W = build_g_d_eta(sl3, flip, eta)
        assert W.dim == n and not lagrangian_I_failures(sl3, W)
        assert not real_structure_test(sl3, W)
    with pytest.raises(ValueError):
        build_g_d_eta(sl3, flip, (2, 0))


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_equivalence_both_directions(name):
    g = algebra(name)
    rng = random.Random(4)
    cases = [g.k, el.subspace_sum(g.a, g.nplus), g.t, g.nplus, el.subspace_sum(g.cartan_real, g.nplus)]
    cases += [random_subspace(rng, g.dim, g.n) for _ in range(3)]
    for l in cases:
        W = complexify_subspace(g, l)
        assert W.dim == l.dim
        assert lg.is_lagrangian(l, g) == is_lagrangian_I(g, W)
        assert tau_subspace(g, W) == W
        assert real_points(g, W) == l


def test_tau_is_involutive(sl3):
    rng = random.Random(9)
    W = complexify_subspace(sl3, random_subspace(rng, sl3.dim, 5))
    V = el.span([tuple(el.GaussScalar(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(2 * sl3.n))
                 for _ in range(3)], 2 * sl3.n)
    assert tau_subspace(sl3, tau_subspace(sl3, V)) == V
    assert real_structure_test(sl3, W)


def test_limit_commutes_with_complexification(sl3):
    for d in diagram_involutions(sl3.rs):
        for hi, lo, H in itertools.islice(comparable_pairs(sl3, d), 6):
            L = lg.build_l_d_sigma(sl3, d, hi)
            assert limit_in_double(sl3, complexify_subspace(sl3, L), H) == complexify_subspace(sl3, limit_H(sl3, L, H))
            assert limit_H(sl3, L, H) == lg.build_l_d_sigma(sl3, d, lo)
