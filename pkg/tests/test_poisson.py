import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrangian import exactlin as el
from lagrangian import lagrange as lg
from lagrangian import poisson as ps
from lagrangian.liealg import DomainError
from lagrangian.manin import compact_triple, heisenberg_double
from lagrangian.rootsys import enumerate_extended_signatures, signature


def test_T_map_sl2(sl2):
    t = compact_triple(sl2)
    tn = el.subspace_sum(sl2.t, sl2.nplus)
    an = el.subspace_sum(sl2.a, sl2.nplus)
    assert ps.T_map(t, an) == tn
    assert ps.certificate(t, an) == {"jacobi": True, "tangency": True, "T_fixed": False, "model_point": False}
    for l in (tn, sl2.k):
        assert all(ps.certificate(t, l).values())


def test_heisenberg_spans():
    h = heisenberg_double()
    U = h.d.unit
    l = el.span([U(0), U(4), U(5)], 6)
    T1 = ps.T_map(h, l)
    assert T1 == el.span([U(0), U(2), U(4)], 6)
    assert ps.T_map(h, T1) == h.u
    assert ps.check_Pi_jacobi(h, l) and ps.check_tangency(h, l)


def test_jacobi_witnesses_detect_non_isotropic_data(sl2):
    # the whole algebra: d_l = d, so no covectors and nothing to witness
    t = compact_triple(sl2)
    assert ps.Pi_jacobi_witnesses(t, sl2.whole) == []


# ---------------------------------------------------------------- quotient bivector correspondence

def w_oracle(qb):
    """{(x, xi) : xi in V0^perp, x - xi -| lambda in V0} by a direct linear solve."""
    n = qb.n
    ann = el.dual_annihilator(qb.V0).basis
    rows = []
    for v in qb.V0.basis:
        rows.append(tuple(Fraction(0) for _ in range(n)) + tuple(v))
    r = len(qb.complement)
    for p in ann:
        row = list(p) + [Fraction(0)] * n
        for a in range(r):
            for b in range(r):
                m = qb.matrix[a][b]
                if m:
                    pc = el.dot(p, qb.complement[b])
                    for k in range(n):
                        row[n + k] -= m * qb.complement[a][k] * pc
        rows.append(tuple(row))
    return el.canonicalize(el.nullspace(rows, 2 * n), 2 * n)


def pushforward_oracle(qb0, V1):
    """lambda1(phi, psi) = lambda0(phi, psi) for phi, psi vanishing on V1."""
    probe = ps.quotient_bivector(V1, el.zeros_t(qb0.n - V1.dim))
    xs = probe.dual_covectors()
    r0 = len(qb0.complement)
    out = []
    for xa in xs:
        row = []
        for xb in xs:
            row.append(sum(el.dot(xa, qb0.complement[i]) * qb0.matrix[i][j] * el.dot(xb, qb0.complement[j])
                           for i in range(r0) for j in range(r0)))
        out.append(tuple(row))
    return tuple(out)


@st.composite
def instances(draw):
    n = draw(st.integers(1, 6))
    k0 = draw(st.integers(0, n - 1))
    vecs = [tuple(Fraction(draw(st.integers(-2, 2))) for _ in range(n)) for _ in range(k0)]
    V0 = el.span(vecs, n)
    r = n - V0.dim
    M = [[Fraction(0)] * r for _ in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            x = Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))
            M[a][b], M[b][a] = x, -x
    extra = [tuple(Fraction(draw(st.integers(-2, 2))) for _ in range(n)) for _ in range(draw(st.integers(0, 2)))]
    V1 = el.subspace_sum(V0, el.span(extra, n))
    return ps.quotient_bivector(V0, M), V1


@settings(max_examples=80, deadline=None)
@given(instances())
def test_lemma_round_trip_and_pushforward(inst):
    qb0, V1 = inst
    W = ps.W_lambda(qb0)
    assert W == w_oracle(qb0)
    assert ps.lambda_from_W(W, qb0.V0, qb0.complement).matrix == qb0.matrix
    qb1 = ps.pushforward(qb0, V1)
    assert qb1.matrix == pushforward_oracle(qb0, V1)
    assert ps.pushforward_check(qb0, qb1)
    if len(qb1.complement) >= 2:
        bad = [list(r) for r in qb1.matrix]
        bad[0][1] += 1
        bad[1][0] -= 1
        assert not ps.pushforward_identity(qb0, ps.quotient_bivector(V1, bad, qb1.complement))


def test_change_of_complement_keeps_W():
    V0 = el.span([(Fraction(1), Fraction(1), Fraction(0))], 3)
    qb = ps.quotient_bivector(V0, [[0, 2], [-2, 0]])
    other = qb.with_complement([(Fraction(1), Fraction(0), Fraction(1)), (Fraction(0), Fraction(1), Fraction(1))])
    assert ps.W_lambda(other) == ps.W_lambda(qb)


def test_quotient_validation():
    V0 = el.zero_space(2)
    with pytest.raises(DomainError):
        ps.quotient_bivector(V0, [[0, 1], [1, 0]])
    with pytest.raises(ps.PreconditionError):
        ps.lambda_from_W(el.span([(Fraction(1), 0, 0, 0)], 4), V0)


# ---------------------------------------------------------------- compact case

def test_compact_coefficients(sl2):
    assert ps.Kalpha(sl2, (1,)) == 4
    assert ps.pi_K_Lambda(sl2) == {(1,): Fraction(1, 16)}
    assert all(v == 0 for v in ps.pi_K_at_identity(sl2).values())


@pytest.mark.parametrize("name,chars", [("A1", [(2,), (Fraction(1, 3),)]), ("A2", [(2, 3), (Fraction(1, 2), 3)])])
def test_pi_H_sigma_drinfeld_image(name, chars):
    from lagrangian.battery import algebra
    g = algebra(name)
    for sig in enumerate_extended_signatures(g.rs):
        for s in chars:
            spec = ps.pi_H_sigma(g, sig, s)
            l = lg.l_H_sigma(g, sig, s)
            assert ps.drinfeld_l_from_pi(spec) == l
            assert ps.solve_pi_scale(g, sig, s) == 1
            assert ps.lambda_of_l(spec.triple, l, g.t, spec.complement) == spec.matrix


def test_wrong_scale_is_detected(sl2):
    sig = signature((1,))
    spec = ps.pi_H_sigma(sl2, sig, (2,), scale=Fraction(2))
    assert ps.drinfeld_l_from_pi(spec) != lg.l_H_sigma(sl2, sig, (2,))


def test_singular_case_names_root(sl3):
    with pytest.raises(DomainError, match=r"singular coefficient at root \(1, 0\)"):
        ps.pi_H_sigma(sl3, signature((1, 1)), (1, 2))


def test_eP_S(sl3):
    for k in range(3):
        for S in itertools.combinations(range(2), k):
            expect = el.subspace_sum(el.intersect(sl3.k, sl3.p_S(S)), sl3.n_S(S))
            assert ps.drinfeld_eP_S(sl3, S) == expect


def test_u_m_precondition(sl2):
    t = compact_triple(sl2)
    spec = ps.HomogeneousSpec(t, sl2.a, (), ())
    with pytest.raises(ps.PreconditionError):
        ps.drinfeld_l_from_pi(spec)
