import itertools
import random
from fractions import Fraction

import pytest

from lagrangian import exactlin as el
from lagrangian import lagrange as lg
from lagrangian.battery import adjoint_words, algebra, standard_family
from lagrangian.exactlin import GaussScalar
from lagrangian.liealg import DomainError, su2_element, weyl_rep
from lagrangian.rootsys import (CapabilityError, flip_involution,
                                identity_involution, in_span, signature)


def test_standard_examples(sl2):
    g = sl2
    assert lg.build_standard(g, lg.make_triple(g, (0,), el.zero_space(g.dim))) == g.k
    tn = el.subspace_sum(g.t, g.nplus)
    assert lg.build_standard(g, lg.make_triple(g, (), g.t)) == tn
    assert lg.build_standard(g, lg.make_triple(g, (), g.a)) == el.subspace_sum(g.a, g.nplus)
    with pytest.raises(DomainError):
        lg.build_standard(g, lg.make_triple(g, (), g.cartan_real))


def test_l_d_sigma_examples(sl2, sl3):
    d = identity_involution(1)
    assert lg.build_l_d_sigma(sl2, d, signature((1,))) == sl2.k
    assert lg.build_l_d_sigma(sl2, d, signature((0,))) == el.subspace_sum(sl2.t, sl2.nplus)
    split = lg.build_l_d_sigma(sl2, d, signature((-1,)))
    pos, neg, zero = el.inertia(sl2.re_killing.restricted(split))
    assert pos > 0 and neg > 0 and zero == 0
    assert el.inertia(sl2.re_killing.restricted(sl2.k))[0] == 0
    with pytest.raises(DomainError):
        lg.k_d_sigma(sl3, flip_involution(sl3.rs), signature((1, -1)))


def test_axiom_names(sl2):
    # h, e_alpha, i e_-alpha
    W = el.span([sl2.unit(0), sl2.unit(1), sl2.unit(5)], sl2.dim)
    assert lg.lagrangian_failures(W, sl2) == ["isotropy", "closure"]
    assert lg.is_lagrangian(el.span([sl2.unit(0), sl2.unit(1), sl2.unit(4)], sl2.dim), sl2)
    assert lg.lagrangian_failures(sl2.t, sl2) == ["dimension"]
    with pytest.raises(el.AmbientMismatch):
        lg.lagrangian_failures(el.full_space(3), sl2)


def test_normalizer_examples(sl2):
    tn = el.subspace_sum(sl2.t, sl2.nplus)
    assert lg.normalizer_in(sl2, tn, sl2.k) == sl2.t
    assert lg.normalizer_in(sl2, sl2.k) == sl2.k


def _skew_graph(g, rng, over_t: bool):
    """A Lagrangian of h = t + a that is a graph over t (or over a)."""
    l = g.l
    K = [[g.killing_complex[i][j] for j in range(l)] for i in range(l)]
    A = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        for j in range(i + 1, l):
            A[i][j] = Fraction(rng.randint(-3, 3))
            A[j][i] = -A[i][j]
    C = el.mat_mul(el.inverse(K), A)
    vecs = []
    for j in range(l):
        base = g.Jv(g.h(j)) if over_t else g.h(j)
        shift = [g.h(k) if over_t else g.Jv(g.h(k)) for k in range(l)]
        vecs.append(el.vec_add(base, el.combine([C[k][j] for k in range(l)], shift, g.dim)))
    return g.span(vecs)


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_parity_against_graph_chart_connectivity(name):
    """Graphs over t deform to t (epsilon +1); graphs over a deform to a, epsilon (-1)^rank."""
    g = algebra(name)
    rng = random.Random(3)
    for _ in range(4):
        Vt = _skew_graph(g, rng, True)
        assert el.is_isotropic(Vt, g.im_killing) and Vt.dim == g.l
        assert lg.epsilon_of(g, Vt, ()) == 1
        Va = _skew_graph(g, rng, False)
        assert el.is_isotropic(Va, g.im_killing)
        if el.intersect(Va, g.t).dim == 0:
            assert lg.epsilon_of(g, Va, ()) == (-1) ** g.l


def test_epsilon_examples(sl2):
    assert lg.epsilon_of(sl2, sl2.t, ()) == 1
    assert lg.epsilon_of(sl2, sl2.a, ()) == -1


def _levi_compact_words(g, S):
    """Elements of K cap M_S: SU(2)s of roots in S and Weyl representatives of S."""
    out = []
    roots = [a for a in g.rs.positives if in_span(a, S) and any(a)]
    for a in roots:
        out.append(su2_element(g, a, Fraction(3, 5), GaussScalar(0, Fraction(4, 5))))
        out.append(su2_element(g, a, GaussScalar(Fraction(1, 2), Fraction(1, 2)), GaussScalar(Fraction(1, 2), Fraction(-1, 2))))
    out += [weyl_rep(g, i) for i in S]
    if len(out) >= 2:
        out.append(out[0] * out[-1])
    return out


def test_lagrangian_data_survives_levi_conjugation(sl3):
    g = sl3
    tested = 0
    for label, kt, l in standard_family(g):
        expect = lg.lagrangian_data(g, kt)
        assert lg.extract_lagrangian_data(g, l) == expect, label
        for A in _levi_compact_words(g, kt.S):
            assert A.on(g.n_S(kt.S)) == g.n_S(kt.S)
            assert all(A(v) == v for v in g.z_S(kt.S).basis)
            assert lg.extract_lagrangian_data(g, A.on(l)) == expect, label
            tested += 1
    assert tested > 20


def test_rank_and_L0(sl3):
    assert lg.rank_compact(sl3, sl3.k) == 2
    assert lg.in_L0(sl3, el.subspace_sum(sl3.t, sl3.nplus))
    assert not lg.in_L0(sl3, el.subspace_sum(sl3.a, sl3.nplus))
    with pytest.raises(DomainError):
        lg.rank_compact(sl3, el.span([sl3.X((1, 0)), sl3.X((0, 1))], sl3.dim))


def test_l_H_sigma_examples(sl2, sl3):
    sig = signature((1,))
    assert lg.l_H_sigma(sl2, sig, (1,)) == lg.l_sigma(sl2, sig)
    assert lg.intersect_with_k(sl2, lg.l_H_sigma(sl2, sig, (2,))) == sl2.t
    assert lg.intersect_with_k(sl2, lg.l_H_sigma(sl2, sig, (1,))).dim == 3
    assert lg.kt_criterion(sl2, sig, (2,)) and not lg.kt_criterion(sl2, sig, (1,))
    sig3 = signature((-1, -1))
    # sigma(a1 + a2) = +1, so the criterion looks at s1 s2 only
    assert lg.kt_criterion(sl3, sig3, (1, 2)) and not lg.kt_criterion(sl3, sig3, (2, Fraction(1, 2)))


def test_adjoint_invariance(sl3):
    rng = random.Random(5)
    items = [l for _, _, l in standard_family(sl3)][:8]
    for l, A in zip(items, adjoint_words(sl3, rng, len(items))):
        m = A.on(l)
        assert lg.is_lagrangian(m, sl3)
        assert lg.is_model_point(sl3, m) == lg.is_model_point(sl3, l)


def test_components_sl2(sl2):
    comps = lg.enumerate_components(sl2)
    assert sorted(d for _, d in comps) == [2, 3]
    full = [ld for ld, d in comps if ld.S == (0,)]
    assert full and lg.formula_dim(sl2, full[0]) == 3


def test_components_sl3(sl3):
    strata = lg.enumerate_strata(sl3)
    assert len(strata) == 8
    inessential = [ld for ld in strata if not lg.is_essential(ld, sl3.rs)]
    assert sorted(ld.S for ld in inessential) == [(0,), (1,)]
    assert all(ld.epsilon == 1 and ld.d.is_identity for ld in inessential)
    for ld in strata:
        rec = ld.to_json()
        assert set(rec) == {"S", "epsilon", "d"}


def test_enumeration_cap():
    g = algebra("A4")
    with pytest.raises(CapabilityError):
        lg.enumerate_strata(g)


def test_triple_validation(sl3):
    d = identity_involution(2)
    with pytest.raises(DomainError):
        lg.KarolinskyTriple((0,), sl3.z_S((0,)), d, signature((1, 1)))
    with pytest.raises(DomainError):
        lg.KarolinskyTriple((), sl3.t, flip_involution(sl3.rs), signature((0, 0), flip_involution(sl3.rs)))


def test_lagrangian_choices_are_lagrangian_in_center(sl3):
    for S in itertools.chain.from_iterable(itertools.combinations(range(2), k) for k in range(3)):
        for V in lg.lagrangian_choices(sl3, S):
            assert not lg.V_failures(sl3, S, V)


def test_model_point_criterion_examples(sl2):
    assert lg.is_model_point(sl2, el.subspace_sum(sl2.t, sl2.nplus))
    assert not lg.is_model_point(sl2, el.subspace_sum(sl2.a, sl2.nplus))
