from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrangian import exactlin as el
from lagrangian.exactlin import GaussScalar, I_UNIT

small = st.integers(-4, 4)


def matrices(rows=(1, 5), cols=(1, 5)):
    return st.integers(*rows).flatmap(
        lambda m: st.integers(*cols).flatmap(
            lambda n: st.lists(st.lists(small.map(Fraction), min_size=n, max_size=n), min_size=m, max_size=m)))


def as_tuple(M):
    return tuple(tuple(r) for r in M)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_agrees_with_sympy(M):
    n = len(M[0])
    assert el.rank(M, n) == sp.Matrix(M).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_kernel_of_right_size(M):
    n = len(M[0])
    N = el.nullspace(M, n)
    assert len(N) == n - sp.Matrix(M).rank()
    for x in N:
        assert not any(el.mat_vec(M, x))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small.map(Fraction), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_det_and_inverse(M):
    assert el.det(M) == Fraction(str(sp.Matrix(M).det()))
    if el.det(M):
        Minv = el.inverse(as_tuple(M))
        assert el.mat_mul(M, Minv) == el.identity(len(M))
    else:
        with pytest.raises(el.SingularError):
            el.inverse(as_tuple(M))


def test_rref_matches_sympy_on_fixed_matrix():
    M = [[2, 4, 1, 0], [1, 2, 0, 1], [3, 6, 1, 1]]
    R, piv = el.rref([[Fraction(x) for x in r] for r in M], 4)
    S, spiv = sp.Matrix(M).rref()
    assert tuple(piv) == spiv
    assert [list(r) for r in R] == [[Fraction(str(x)) for x in S.row(i)] for i in range(len(piv))]


@settings(max_examples=40, deadline=None)
@given(matrices((1, 4), (5, 5)), matrices((1, 4), (5, 5)))
def test_dimension_formula_for_sum_and_intersection(A, B):
    SA, SB = el.span(A, 5), el.span(B, 5)
    total = el.subspace_sum(SA, SB)
    meet = el.intersect(SA, SB)
    assert SA.dim + SB.dim == total.dim + meet.dim
    assert SA.contains_space(meet) and SB.contains_space(meet)
    assert total.contains_space(SA) and total.contains_space(SB)


@settings(max_examples=40, deadline=None)
@given(matrices((1, 4), (5, 5)))
def test_dual_annihilator(A):
    S = el.span(A, 5)
    D = el.dual_annihilator(S)
    assert D.dim == 5 - S.dim
    assert all(el.dot(p, v) == 0 for p in D.basis for v in S.basis)


@settings(max_examples=40, deadline=None)
@given(matrices((1, 4), (4, 4)), st.permutations(range(4)))
def test_equality_is_structural(A, perm):
    S = el.span(A, 4)
    shuffled = [tuple(2 * x for x in v) for v in reversed(S.basis)]
    assert el.span(shuffled, 4) == S
    assert hash(el.span(shuffled, 4)) == hash(S)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_inertia_against_float_eigenvalues(M):
    A = np.array(M, dtype=float)
    G = A + A.T
    ev = np.linalg.eigvalsh(G)
    tol = 1e-9
    expect = (int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum()))
    gram = [[Fraction(int(x)) for x in row] for row in G]
    assert el.inertia(gram) == expect


gauss = st.tuples(st.fractions(max_denominator=5), st.fractions(max_denominator=5))


@settings(max_examples=80, deadline=None)
@given(gauss, gauss)
def test_gauss_arithmetic_matches_sympy(a, b):
    x, y = GaussScalar(*a), GaussScalar(*b)
    X = sp.Rational(a[0].numerator, a[0].denominator) + sp.I * sp.Rational(a[1].numerator, a[1].denominator)
    Y = sp.Rational(b[0].numerator, b[0].denominator) + sp.I * sp.Rational(b[1].numerator, b[1].denominator)

    def same(g, s):
        s = sp.expand(s)
        return Fraction(str(sp.re(s))) == g.re and Fraction(str(sp.im(s))) == g.im

    assert same(x + y, X + Y)
    assert same(x * y, X * Y)
    assert same(x.conjugate(), sp.conjugate(X))
    if y:
        assert same(x / y, X / Y)


def test_gauss_unit_and_hash():
    assert I_UNIT * I_UNIT == -1
    assert GaussScalar(3) == Fraction(3)
    assert hash(GaussScalar(3)) == hash(Fraction(3))
    with pytest.raises(ZeroDivisionError):
        GaussScalar(0).inverse()


def test_complex_subspaces():
    i = I_UNIT
    v = (GaussScalar(1), i)
    S = el.span([v], 2)
    assert S.contains((i, GaussScalar(-1)))
    assert not S.contains((GaussScalar(1), GaussScalar(1)))


def test_ambient_mismatch():
    with pytest.raises(el.AmbientMismatch):
        el.subspace_sum(el.full_space(2), el.full_space(3))


def test_bilinear_form_checks():
    B = el.BilinearForm.from_rows([[0, 1], [1, 0]])
    assert B.is_symmetric() and B.is_nondegenerate()
    line = el.span([(Fraction(1), Fraction(0))], 2)
    assert el.is_isotropic(line, B)
    assert el.orthogonal(line, B) == line


def test_fixed_space_and_preimage():
    M = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    assert el.fixed_space(M) == el.span([(Fraction(1), Fraction(1))], 2)
    target = el.span([(Fraction(1), Fraction(0))], 2)
    assert el.preimage(M, target) == el.span([(Fraction(0), Fraction(1))], 2)


def test_frac_str():
    assert el.frac_str(Fraction(3, 4)) == "3/4"
    assert el.frac_str(Fraction(-2)) == "-2"
