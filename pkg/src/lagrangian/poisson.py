"""The bivector Pi at Lagrangian points, the T-map, and Drinfeld's correspondence.

Bivectors on a quotient V/V0 are stored as antisymmetric matrices ``M`` in a
chosen complement basis ``c``: ``lambda = sum M[a][b] c_a (x) c_b``, so that
``lambda(phi, psi) = phi^T M psi`` and ``(xi -| lambda) = sum_b (xi^T M)_b c_b``.
The wedge convention is ``a ^ b = a (x) b - b (x) a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as el
from .exactlin import Subspace
from .lagrange import l_H_sigma
from .liealg import DomainError, SemisimpleRealization
from .manin import ManinTriple, compact_triple, normalizer
from .rootsys import ExtendedSignature, sigma_value


class PreconditionError(ValueError):
    pass


# ---------------------------------------------------------------- Pi certificates

def stabilizer_dl(t: ManinTriple, l: Subspace) -> Subspace:
    return normalizer(t.bracket, l, el.full_space(t.dim))


def Pi_jacobi_witnesses(t: ManinTriple, l: Subspace, dl: Subspace | None = None):
    """Index triples of basis covectors of d_l-annihilator with nonzero [R,R]."""
    dl = dl if dl is not None else stabilizer_dl(t, l)
    F = el.dual_annihilator(dl).basis
    sharps = [t.sharp(f) for f in F]
    bad = []
    for i, j, k in itertools.combinations(range(len(F)), 3):
        val = 2 * t.form(sharps[i], t.bracket(sharps[j], sharps[k]))
        if val != 0:
            bad.append((i, j, k, val))
    return bad


def check_Pi_jacobi(t: ManinTriple, l: Subspace) -> bool:
    return not Pi_jacobi_witnesses(t, l)


def check_tangency(t: ManinTriple, l: Subspace) -> bool:
    dl = stabilizer_dl(t, l)
    F = el.dual_annihilator(dl).basis
    R = t.build_R()
    u_plus = el.subspace_sum(t.u, dl)
    for f in F:
        v = R.contract(f)
        x, xi = t.split(t.sharp(f))
        if v != el.vec_sub(x, xi):
            return False
        if not u_plus.contains(v):
            return False
        if not dl.contains(el.vec_sub(v, el.vec_scale(2, x))):
            return False
    return True


def u_normalizer(t: ManinTriple, l: Subspace) -> Subspace:
    return normalizer(t.bracket, l, t.u)


def T_map(t: ManinTriple, l: Subspace) -> Subspace:
    """T(l) = u_l + (u + u_l^perp) cap l with u_l the normalizer of l in u."""
    ul = u_normalizer(t, l)
    ul_perp = el.intersect(t.u_star, el.orthogonal(ul, t.d.form))
    return el.subspace_sum(ul, el.intersect(el.subspace_sum(t.u, ul_perp), l))


def is_model_point_triple(t: ManinTriple, l: Subspace) -> bool:
    return el.intersect(l, t.u) == u_normalizer(t, l)


def certificate(t: ManinTriple, l: Subspace) -> dict:
    T = T_map(t, l)
    return {"jacobi": check_Pi_jacobi(t, l), "tangency": check_tangency(t, l),
            "T_fixed": T == l, "model_point": is_model_point_triple(t, l)}


# ---------------------------------------------------------------- quotient bivectors

@dataclass(frozen=True)
class QuotientBivector:
    """lambda in wedge^2(V/V0), V = Q^n, in a complement basis of V0."""

    n: int
    V0: Subspace
    complement: tuple
    matrix: tuple

    def __post_init__(self):
        r = len(self.complement)
        if self.V0.dim + r != self.n:
            raise DomainError("complement has the wrong size")
        if el.rank(list(self.V0.basis) + list(self.complement), self.n) != self.n:
            raise DomainError("complement vectors are dependent modulo V0")
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise DomainError("matrix shape differs from the complement size")
        for a in range(r):
            for b in range(r):
                if self.matrix[a][b] != -self.matrix[b][a]:
                    raise DomainError("bivector matrix is not antisymmetric")

    def dual_covectors(self):
        """xi_a in V0-annihilator with xi_a(c_b) = delta_ab."""
        B = list(self.V0.basis) + list(self.complement)
        Binv = el.inverse(B)
        r0 = self.V0.dim
        return [tuple(Binv[i][r0 + a] for i in range(self.n)) for a in range(len(self.complement))]

    def quotient_coords(self, x):
        """Coordinates of x mod V0 in the complement basis."""
        B = list(self.V0.basis) + list(self.complement)
        c = el.solve(el.transpose(B), x, self.n)
        return c[self.V0.dim:]

    def with_complement(self, complement) -> "QuotientBivector":
        """The same lambda expressed in another complement basis."""
        complement = tuple(tuple(map(Fraction, c)) for c in complement)
        probe = QuotientBivector(self.n, self.V0, complement, el.zeros_t(len(complement)))
        # old c_a = sum_b P[a][b] new c_b modulo V0
        P = [probe.quotient_coords(c) for c in self.complement]
        M = el.mat_mul(el.mat_mul(el.transpose(P), self.matrix), P)
        return QuotientBivector(self.n, self.V0, complement, M)

    def to_json(self) -> dict:
        return {"n": self.n, "V0": self.V0.to_json(), "complement": el.matrix_json(self.complement),
                "matrix": el.matrix_json(self.matrix)}


def default_complement(V0: Subspace):
    n = V0.ambient_dim
    return tuple(el.complement_basis(V0, el.full_space(n)))


def quotient_bivector(V0: Subspace, matrix, complement=None) -> QuotientBivector:
    comp = tuple(complement) if complement is not None else default_complement(V0)
    M = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    return QuotientBivector(V0.ambient_dim, V0, comp, M)


def pairing_form(n: int) -> el.BilinearForm:
    """<(x, xi), (y, eta)> = xi(y) + eta(x) on V + V*."""
    G = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        G[i][n + i] = G[n + i][i] = Fraction(1)
    return el.BilinearForm(2 * n, tuple(tuple(r) for r in G))


def W_lambda(qb: QuotientBivector) -> Subspace:
    n = qb.n
    zero = (Fraction(0),) * n
    vecs = [tuple(v) + zero for v in qb.V0.basis]
    for a, xi in enumerate(qb.dual_covectors()):
        x = el.combine(qb.matrix[a], qb.complement, n)
        vecs.append(tuple(x) + tuple(xi))
    return el.span(vecs, 2 * n)


def V_part(n: int) -> Subspace:
    return el.span([tuple(Fraction(int(i == j)) for j in range(2 * n)) for i in range(n)], 2 * n)


def embed_V(n: int, S: Subspace) -> Subspace:
    return el.span([tuple(v) + (Fraction(0),) * n for v in S.basis], 2 * n)


def lambda_from_W(W: Subspace, V0: Subspace, complement=None) -> QuotientBivector:
    n = V0.ambient_dim
    if W.ambient_dim != 2 * n:
        raise el.AmbientMismatch("W must live in V + V*")
    if el.intersect(W, V_part(n)) != embed_V(n, V0):
        raise PreconditionError("W cap V differs from V0")
    if W.dim != n or not el.is_isotropic(W, pairing_form(n)):
        raise PreconditionError("W is not maximal isotropic")
    comp = tuple(complement) if complement is not None else default_complement(V0)
    probe = QuotientBivector(n, V0, comp, el.zeros_t(len(comp)))
    rows = []
    WB = list(W.basis)
    for xi in probe.dual_covectors():
        # find w in W whose V*-part is xi
        A = el.transpose([w[n:] for w in WB])
        coeffs = el.solve(A, xi, len(WB))
        if coeffs is None:
            raise PreconditionError("W does not project onto the annihilator of V0")
        w = el.combine(coeffs, WB, 2 * n)
        rows.append(probe.quotient_coords(w[:n]))
    return QuotientBivector(n, V0, comp, tuple(tuple(r) for r in rows))


def pushforward(qb0: QuotientBivector, V1: Subspace, complement1=None) -> QuotientBivector:
    """j(lambda0) in wedge^2(V/V1) for V0 in V1."""
    if not V1.contains_space(qb0.V0):
        raise DomainError("V0 is not contained in V1")
    comp1 = tuple(complement1) if complement1 is not None else default_complement(V1)
    probe = QuotientBivector(qb0.n, V1, comp1, el.zeros_t(len(comp1)))
    P = [probe.quotient_coords(c) for c in qb0.complement]
    M = el.mat_mul(el.mat_mul(el.transpose(P), qb0.matrix), P) if P else ()
    if not comp1:
        M = ()
    return QuotientBivector(qb0.n, V1, comp1, tuple(tuple(r) for r in M))


def pushforward_identity(qb0: QuotientBivector, qb1: QuotientBivector) -> bool:
    """W_{lambda1} = V1 + (V + V1^perp) cap W_{lambda0}."""
    n = qb0.n
    V1 = qb1.V0
    ann = el.dual_annihilator(V1)
    V_plus_ann = el.span(list(V_part(n).basis) +
                         [(Fraction(0),) * n + tuple(a) for a in ann.basis], 2 * n)
    rhs = el.subspace_sum(embed_V(n, V1), el.intersect(V_plus_ann, W_lambda(qb0)))
    return W_lambda(qb1) == rhs


def pushforward_check(qb0: QuotientBivector, qb1: QuotientBivector) -> bool:
    """True iff j(lambda0) = lambda1; raises if the subspace identity disagrees."""
    direct = pushforward(qb0, qb1.V0, qb1.complement).matrix == qb1.matrix
    identity = pushforward_identity(qb0, qb1)
    if direct != identity:
        raise AssertionError("pushforward and subspace identity disagree")
    return identity


# ---------------------------------------------------------------- Drinfeld map

@dataclass(frozen=True)
class HomogeneousSpec:
    triple: ManinTriple
    u_m: Subspace
    complement: tuple
    matrix: tuple
    scale_note: str = ""


def _u_coords(t: ManinTriple, v):
    return tuple(t.form(v, eta) for eta in t.eta)


def _to_d(t: ManinTriple, w):
    n = len(t.e)
    return el.vec_add(el.combine(w[:n], t.e, t.dim), el.combine(w[n:], t.eta, t.dim))


def spec_to_quotient(spec: HomogeneousSpec) -> QuotientBivector:
    t = spec.triple
    n = len(t.e)
    if not t.u.contains_space(spec.u_m):
        raise PreconditionError("u_m is not inside u")
    for c in spec.complement:
        if not t.u.contains(c):
            raise DomainError("complement vector outside u")
    V0 = el.span([_u_coords(t, v) for v in spec.u_m.basis], n)
    comp = tuple(_u_coords(t, c) for c in spec.complement)
    return QuotientBivector(n, V0, comp, spec.matrix)


def drinfeld_l_from_pi(spec: HomogeneousSpec) -> Subspace:
    """l = {x + xi : xi|u_m = 0, xi -| lambda = x mod u_m}."""
    t = spec.triple
    W = W_lambda(spec_to_quotient(spec))
    return el.span([_to_d(t, w) for w in W.basis], t.dim)


def lambda_of_l(t: ManinTriple, l: Subspace, u_m: Subspace, complement) -> tuple:
    """Inverse Drinfeld map at a base point: the matrix of lambda with l = l_lambda."""
    n = len(t.e)
    V0 = el.span([_u_coords(t, v) for v in u_m.basis], n)
    comp = tuple(_u_coords(t, c) for c in complement)
    coords = [tuple(t.form(v, eta) for eta in t.eta) + tuple(t.form(v, e) for e in t.e) for v in l.basis]
    W = el.span(coords, 2 * n)
    return lambda_from_W(W, V0, comp).matrix


# ---------------------------------------------------------------- compact case

def Kalpha(g: SemisimpleRealization, alpha) -> Fraction:
    """<<e_alpha, e_-alpha>>, the squared length of e_alpha for the theta form."""
    ia = g.root_index(alpha)
    ib = g.root_index(tuple(-x for x in alpha))
    return g.killing_complex[ia][ib]


def compact_complement(g: SemisimpleRealization):
    """The X_alpha, Y_alpha (alpha > 0) spanning a complement of t in k."""
    out = []
    for a in g.rs.positives:
        out.append(g.X(a))
        out.append(g.Y(a))
    return tuple(out)


def _xy_matrix(g: SemisimpleRealization, coeffs: dict):
    r = 2 * len(g.rs.positives)
    M = [[Fraction(0)] * r for _ in range(r)]
    for idx, a in enumerate(g.rs.positives):
        c = coeffs.get(a, Fraction(0))
        M[2 * idx][2 * idx + 1] = c
        M[2 * idx + 1][2 * idx] = -c
    return tuple(tuple(row) for row in M)


def pi_K_Lambda(g: SemisimpleRealization) -> dict:
    """Lambda = 1/4 sum X^0_alpha ^ Y^0_alpha with unit-length root vectors.

    In Chevalley terms X^0 ^ Y^0 = X ^ Y / <<e_alpha, e_-alpha>>, so the
    coefficients stay rational.  Returned as {alpha: coefficient of X ^ Y}.
    """
    return {a: Fraction(1, 4) / Kalpha(g, a) for a in g.rs.positives}


def pi_K_at_identity(g: SemisimpleRealization):
    """r_e Lambda - l_e Lambda as an X^Y coefficient table: identically zero."""
    lam = pi_K_Lambda(g)
    return {a: c - c for a, c in lam.items()}


def pi_H_sigma_coefficients(g: SemisimpleRealization, sig: ExtendedSignature, s) -> dict:
    """{alpha: coefficient of X_alpha ^ Y_alpha} for 1/2 sum 1/(1 - sigma q) X^0 ^ Y^0."""
    out = {}
    for a in g.rs.positives:
        sv = sigma_value(sig, a)
        if sv == 0:
            continue
        q = Fraction(1)
        for si, m in zip(s, a):
            q *= Fraction(si) ** (2 * m)
        if sv * q == 1:
            raise DomainError(f"singular coefficient at root {a}: sigma(alpha) q_alpha = 1")
        out[a] = Fraction(1, 2) / (1 - sv * q) / Kalpha(g, a)
    return out


def pi_H_sigma(g: SemisimpleRealization, sig: ExtendedSignature, s, scale=Fraction(1)) -> HomogeneousSpec:
    coeffs = {a: scale * c for a, c in pi_H_sigma_coefficients(g, sig, s).items()}
    t = compact_triple(g)
    return HomogeneousSpec(t, g.t, compact_complement(g), _xy_matrix(g, coeffs),
                           f"scale={el.frac_str(Fraction(scale))}")


def spec_with_coefficients(g: SemisimpleRealization, coeffs: dict, u_m: Subspace | None = None) -> HomogeneousSpec:
    return HomogeneousSpec(compact_triple(g), u_m if u_m is not None else g.t,
                           compact_complement(g), _xy_matrix(g, coeffs))


def solve_pi_scale(g: SemisimpleRealization, sig: ExtendedSignature, s):
    """The constant c with lambda(l_{H,sigma}) = c * formula, or None if not proportional."""
    spec = pi_H_sigma(g, sig, s)
    target = l_H_sigma(g, sig, s)
    M = lambda_of_l(spec.triple, target, g.t, spec.complement)
    F = spec.matrix
    ratio = None
    for rm, rf in zip(M, F):
        for x, y in zip(rm, rf):
            if y == 0:
                if x != 0:
                    return None
                continue
            if ratio is None:
                ratio = x / y
            elif x / y != ratio:
                return None
    return ratio if ratio is not None else Fraction(1)


def drinfeld_eP_S(g: SemisimpleRealization, S) -> Subspace:
    """Drinfeld image of the zero bivector at u_m = k cap p_S."""
    t = compact_triple(g)
    um = el.intersect(g.k, g.p_S(S))
    comp = tuple(el.complement_basis(um, g.k))
    r = len(comp)
    return drinfeld_l_from_pi(HomogeneousSpec(t, um, comp, el.zeros_t(r)))
