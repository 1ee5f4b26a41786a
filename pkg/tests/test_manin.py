import random
from fractions import Fraction

import pytest

from lagrangian import exactlin as el
from lagrangian.battery import algebra
from lagrangian.liealg import longest_weyl_rep
from lagrangian.manin import (ConstructionError, ManinTriple, QuadraticLieAlgebra, borel_conjugate,
                              borel_double, check_manin, compact_triple, heisenberg_double,
                              lagrangian_failures, normalizer)


def triples():
    return [compact_triple(algebra("A1")), compact_triple(algebra("A2")), heisenberg_double(),
            borel_double(algebra("A1")), borel_double(algebra("A2"))]


@pytest.mark.parametrize("t", triples(), ids=lambda t: f"{t.name}-{t.dim}")
def test_manin_axioms(t):
    res = check_manin(t)
    assert all(res.values()), res


def cyb(t, f1, f2, f3):
    """Classical Yang-Baxter expression [r12,r13] + [r12,r23] + [r13,r23] on covectors."""
    R = t.build_R().bivector
    n = t.dim
    U = [t.d.unit(i) for i in range(n)]
    nz = [(a, b, R[a][b]) for a in range(n) for b in range(n) if R[a][b]]
    s = Fraction(0)
    for a, b, r1 in nz:
        for c, d, r2 in nz:
            s += r1 * r2 * (el.dot(f1, t.bracket(U[a], U[c])) * f2[b] * f3[d]
                            + f1[a] * el.dot(f2, t.bracket(U[b], U[c])) * f3[d]
                            + f1[a] * f2[c] * el.dot(f3, t.bracket(U[b], U[d])))
    return s


@pytest.mark.parametrize("t", triples()[:4], ids=lambda t: f"{t.name}-{t.dim}")
def test_RR_against_yang_baxter_expansion(t):
    rng = random.Random(7)
    for _ in range(4):
        fs = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(t.dim)) for _ in range(3)]
        # with R = sum eta_i ^ e_i the two expressions differ by the fixed factor -1/2
        assert cyb(t, *fs) == Fraction(-1, 2) * t.RR(*fs)


@pytest.mark.parametrize("t", triples(), ids=lambda t: f"{t.name}-{t.dim}")
def test_R_is_antisymmetric_and_pairs_dual_bases(t):
    R = t.build_R()
    n = t.dim
    for a in range(n):
        for b in range(n):
            assert R.bivector[a][b] == -R.bivector[b][a]
    for i, e in enumerate(t.e):
        for j, eta in enumerate(t.eta):
            assert t.form(e, eta) == (1 if i == j else 0)


def test_sharp_inverts_flat():
    t = heisenberg_double()
    v = (1, 2, 3, 4, 5, 6)
    v = tuple(Fraction(x) for x in v)
    assert t.sharp(t.flat(v)) == v
    x, xi = t.split(v)
    assert el.vec_add(x, xi) == v
    assert t.u.contains(x) and t.u_star.contains(xi)


def test_heisenberg_structure():
    t = heisenberg_double()
    X, Y, Z, fX, fY, fZ = (t.d.unit(i) for i in range(6))
    assert t.bracket(X, Y) == Z
    # coadjoint action: [X, fZ] = -fZ([X, .]) = -fY
    assert t.bracket(X, fZ) == tuple(-c for c in fY)
    assert t.bracket(Z, fZ) == (Fraction(0),) * 6


def test_normalizer_single_solve():
    g = algebra("A1")
    b = el.subspace_sum(g.cartan_real, g.nplus)
    assert normalizer(g.bracket, g.nplus, g.whole) == b
    assert normalizer(g.bracket, g.k, g.whole) == g.k


def test_construction_errors():
    t = heisenberg_double()
    with pytest.raises(ConstructionError):
        ManinTriple(t.d, t.u, t.u)
    zero = el.BilinearForm(2, ((Fraction(0),) * 2,) * 2)
    d = QuadraticLieAlgebra.from_table(2, {}, zero)
    with pytest.raises(ConstructionError):
        ManinTriple(d, el.span([d.unit(0)], 2), el.span([d.unit(1)], 2))


def test_borel_conjugate_is_lagrangian():
    g = algebra("A2")
    t = borel_double(g)
    W = longest_weyl_rep(g).matrix
    auto = tuple(tuple(W[i][j] for j in range(g.n)) for i in range(g.n))
    conj = borel_conjugate(g, t, auto)
    assert not lagrangian_failures(t.d, conj)
    assert conj != t.u


def test_to_json_is_stable():
    a = heisenberg_double().to_json()
    b = heisenberg_double().to_json()
    assert a == b and a["dim"] == 6
