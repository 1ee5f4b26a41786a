"""Grassmannian limits under one-parameter subgroups, and complexification into g + g.

The complexification of a real subspace l of g is the complex span of the
pairs ``(x, theta x)``; it lives in C^{2n} with the first n coordinates for
the first factor and the last n for the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as el
from .exactlin import GaussScalar, Subspace
from .liealg import SemisimpleRealization, gamma_d
from .rootsys import DiagramInvolution, in_span, neg, root_value

G0 = GaussScalar(0)
G1 = GaussScalar(1)


@dataclass(frozen=True)
class WeightGrading:
    weights: tuple

    def bracket_additive(self, g: SemisimpleRealization) -> bool:
        for a in range(g.dim):
            for b in range(g.dim):
                v = g.bracket(g.unit(a), g.unit(b))
                target = self.weights[a] + self.weights[b]
                if any(x and self.weights[k] != target for k, x in enumerate(v)):
                    return False
        return True


def complex_weights(g: SemisimpleRealization, simple_values):
    out = []
    for k in range(g.n):
        a = g.basis_root(k)
        out.append(Fraction(0) if a is None else Fraction(root_value(a, simple_values)))
    return tuple(out)


def grading(g: SemisimpleRealization, simple_values) -> WeightGrading:
    w = complex_weights(g, simple_values)
    return WeightGrading(w + w)


def double_grading(g: SemisimpleRealization, simple_values) -> WeightGrading:
    """Weight mu on the first factor, -mu on the second."""
    w = complex_weights(g, simple_values)
    return WeightGrading(w + tuple(-x for x in w))


def _units(n, idx, complex_: bool):
    one, zero = (G1, G0) if complex_ else (Fraction(1), Fraction(0))
    return [tuple(one if j == i else zero for j in range(n)) for i in idx]


def limit_subspace(L: Subspace, gr: WeightGrading) -> Subspace:
    """Associated graded of L for the filtration by weight: sum_mu proj_mu(L cap F_<=mu)."""
    n = L.ambient_dim
    cplx = any(isinstance(x, GaussScalar) for row in L.basis for x in row)
    zero = G0 if cplx else Fraction(0)
    vecs = []
    for mu in sorted(set(gr.weights)):
        low = [i for i, w in enumerate(gr.weights) if w <= mu]
        F = el.span(_units(n, low, cplx), n)
        piece = el.intersect(L, F)
        for v in piece.basis:
            p = tuple(x if gr.weights[i] == mu else zero for i, x in enumerate(v))
            if any(p):
                vecs.append(p)
    return el.span(vecs, n)


def is_graded(L: Subspace, gr: WeightGrading) -> bool:
    return limit_subspace(L, gr) == L


# ---------------------------------------------------------------- the double g + g

def theta_complex(g: SemisimpleRealization, z):
    """theta on complex coefficient vectors: antilinear, b_k -> -b_omega(k)."""
    out = [G0] * g.n
    for k, c in enumerate(z):
        if c:
            out[g.omega_index(k)] = -GaussScalar.lift(c).conjugate()
    return tuple(out)


def complexify_vector(g: SemisimpleRealization, v):
    z1 = g.to_complex(v)
    z2 = g.to_complex(el.mat_vec(g.theta, v))
    return tuple(z1) + tuple(z2)


def complexify_subspace(g: SemisimpleRealization, l: Subspace) -> Subspace:
    return el.span([complexify_vector(g, v) for v in l.basis], 2 * g.n)


def tau_vector(g: SemisimpleRealization, w):
    n = g.n
    return tuple(theta_complex(g, w[n:])) + tuple(theta_complex(g, w[:n]))


def tau_subspace(g: SemisimpleRealization, W: Subspace) -> Subspace:
    return el.span([tau_vector(g, w) for w in W.basis], W.ambient_dim)


def real_structure_test(g: SemisimpleRealization, W: Subspace) -> bool:
    return tau_subspace(g, W) == W


def double_bracket(g: SemisimpleRealization, x, y):
    n = g.n
    return tuple(g.cbracket(x[:n], y[:n])) + tuple(g.cbracket(x[n:], y[n:]))


def I_form(g: SemisimpleRealization, x, y):
    n = g.n
    return g.killing_c(x[:n], y[:n]) - g.killing_c(x[n:], y[n:])


def lagrangian_I_failures(g: SemisimpleRealization, W: Subspace) -> list[str]:
    out = []
    if W.dim != g.n:
        out.append("dimension")
    B = W.basis
    if any(I_form(g, B[i], B[j]) for i in range(len(B)) for j in range(i, len(B))):
        out.append("isotropy")
    if any(not W.contains(double_bracket(g, B[i], B[j])) for i in range(len(B)) for j in range(i + 1, len(B))):
        out.append("closure")
    return out


def is_lagrangian_I(g: SemisimpleRealization, W: Subspace) -> bool:
    return not lagrangian_I_failures(g, W)


def real_points(g: SemisimpleRealization, W: Subspace) -> Subspace:
    """{X in g : (X, theta X) in W} as a real subspace."""
    A = el.dual_annihilator(W).basis
    N = g.dim
    images = [complexify_vector(g, g.unit(r)) for r in range(N)]
    eqs = []
    for a in A:
        vals = [el.dot(a, im) for im in images]
        vals = [GaussScalar.lift(v) for v in vals]
        eqs.append(tuple(v.re for v in vals))
        eqs.append(tuple(v.im for v in vals))
    if not eqs:
        return el.full_space(N)
    return el.canonicalize(el.nullspace(eqs, N), N)


def split_gamma(g: SemisimpleRealization, d: DiagramInvolution):
    """gamma_d as an n x n matrix on complex coefficients."""
    M = gamma_d(g, d).matrix
    return tuple(tuple(M[i][j] for j in range(g.n)) for i in range(g.n))


def _cvec(g, first=None, second=None):
    z = [G0] * (2 * g.n)
    for k, c in (first or {}).items():
        z[k] = GaussScalar.lift(c)
    for k, c in (second or {}).items():
        z[g.n + k] = GaussScalar.lift(c)
    return tuple(z)


def build_g_d_eta(g: SemisimpleRealization, d: DiagramInvolution, eta) -> Subspace:
    """{(X, gamma_d X) : X in m_eta} + (n_eta)_1 + gamma_d(n_eta^-)_2."""
    eta = tuple(int(x) for x in eta)
    if any(x not in (0, 1) for x in eta):
        raise ValueError("eta takes values in {0, 1}")
    S = tuple(i for i, x in enumerate(eta) if x)
    Gm = split_gamma(g, d)
    vecs = []
    m_idx = list(range(g.l)) + [g.root_index(a) for a in g.rs.roots if in_span(a, S)]
    for k in m_idx:
        col = {i: Gm[i][k] for i in range(g.n) if Gm[i][k]}
        vecs.append(_cvec(g, {k: 1}, col))
    for a in g.rs.positives:
        if in_span(a, S):
            continue
        vecs.append(_cvec(g, {g.root_index(a): 1}))
        k = g.root_index(neg(a))
        col = {i: Gm[i][k] for i in range(g.n) if Gm[i][k]}
        vecs.append(_cvec(g, None, col))
    return el.span(vecs, 2 * g.n)


def diagonal(g: SemisimpleRealization) -> Subspace:
    return el.span([_cvec(g, {k: 1}, {k: 1}) for k in range(g.n)], 2 * g.n)


def h_delta_n1_nminus2(g: SemisimpleRealization) -> Subspace:
    vecs = [_cvec(g, {i: 1}, {i: 1}) for i in range(g.l)]
    vecs += [_cvec(g, {g.root_index(a): 1}) for a in g.rs.positives]
    vecs += [_cvec(g, None, {g.root_index(neg(a)): 1}) for a in g.rs.positives]
    return el.span(vecs, 2 * g.n)


def limit_in_double(g: SemisimpleRealization, W: Subspace, simple_values) -> Subspace:
    return limit_subspace(W, double_grading(g, simple_values))


def limit_H(g: SemisimpleRealization, L: Subspace, simple_values) -> Subspace:
    return limit_subspace(L, grading(g, simple_values))
