"""Lagrangian subalgebras of a complex semisimple Lie algebra.

A real subalgebra ``l`` of ``g`` is Lagrangian when ``dim_R l = dim_C g`` and
``Im<<x, y>> = 0`` on ``l``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactlin as el
from .exactlin import Subspace
from .liealg import (AlgebraAutomorphism, DomainError, SemisimpleRealization,
                     a_sigma, gamma_d, theta_auto, torus_ad, torus_character)
from .manin import normalizer
from .rootsys import (CapabilityError, DiagramInvolution, ExtendedSignature,
                      diagram_involutions, identity_involution, signature_sets)


# ---------------------------------------------------------------- recognition

def lagrangian_failures(W: Subspace, g: SemisimpleRealization) -> list[str]:
    """Names of the Lagrangian axioms that W violates."""
    if W.ambient_dim != g.dim:
        raise el.AmbientMismatch("subspace is not in the realified algebra")
    out = []
    if W.dim != g.n:
        out.append("dimension")
    if not el.is_isotropic(W, g.im_killing):
        out.append("isotropy")
    if not g.is_subalgebra(W):
        out.append("closure")
    return out


def is_lagrangian(W: Subspace, g: SemisimpleRealization) -> bool:
    return not lagrangian_failures(W, g)


def normalizer_in(g: SemisimpleRealization, W: Subspace, ambient: Subspace | None = None) -> Subspace:
    return normalizer(g.bracket, W, ambient if ambient is not None else g.whole)


def is_model_point(g: SemisimpleRealization, l: Subspace) -> bool:
    return el.intersect(l, g.k) == normalizer_in(g, l, g.k)


def intersect_with_k(g: SemisimpleRealization, l: Subspace) -> Subspace:
    return el.intersect(l, g.k)


# ---------------------------------------------------------------- data types

@dataclass(frozen=True)
class KarolinskyTriple:
    """(S, V, tau) with tau given by a diagram involution of S and a sign on S."""

    S: tuple
    V: Subspace
    d: DiagramInvolution
    sigma: ExtendedSignature

    def __post_init__(self):
        S = set(self.S)
        for i, v in enumerate(self.sigma.values):
            if (i in S) != (v != 0):
                raise DomainError("sigma_S must be nowhere zero on S and zero off S")
        for i in range(len(self.d.perm)):
            if i not in S and self.d(i) != i:
                raise DomainError("d must fix the simple roots outside S")


@dataclass(frozen=True)
class LagrangianData:
    S: tuple
    epsilon: int
    d: DiagramInvolution

    def to_json(self) -> dict:
        return {"S": [i + 1 for i in self.S], "epsilon": self.epsilon,
                "d": [p + 1 for p in self.d.perm]}


def make_triple(g: SemisimpleRealization, S, V: Subspace, d: DiagramInvolution | None = None,
                signs=None) -> KarolinskyTriple:
    """Convenience constructor; ``signs`` maps each i in S to +-1 (default +1)."""
    S = tuple(sorted(S))
    d = d or identity_involution(g.l)
    vals = [0] * g.l
    for i in S:
        vals[i] = 1 if signs is None else signs[i]
    return KarolinskyTriple(S, V, d, ExtendedSignature(tuple(vals), d))


# ---------------------------------------------------------------- constructions

def tau_on_levi(g: SemisimpleRealization, S, d: DiagramInvolution, sig: ExtendedSignature) -> AlgebraAutomorphism:
    full = len(S) == g.l and all(i in S for i in range(g.l))
    G = gamma_d(g, d, None if full else S)
    return a_sigma(g, sig) * G * theta_auto(g)


def V_failures(g: SemisimpleRealization, S, V: Subspace) -> list[str]:
    z = g.z_S(S)
    out = []
    if not z.contains_space(V):
        out.append("V not inside z_S")
    if not el.is_isotropic(V, g.im_killing):
        out.append("V not isotropic")
    if 2 * V.dim != z.dim:
        out.append("V has the wrong dimension")
    return out


def build_standard(g: SemisimpleRealization, kt: KarolinskyTriple) -> Subspace:
    """l(S, V, tau) = m_{S,1}^tau + V + n_S."""
    bad = V_failures(g, kt.S, kt.V)
    if bad:
        raise DomainError("; ".join(bad))
    tau = tau_on_levi(g, kt.S, kt.d, kt.sigma)
    m_tau = el.fixed_space(tau.matrix, g.m_S1(kt.S))
    return el.subspace_sum(m_tau, kt.V, g.n_S(kt.S))


def check_compatible(d: DiagramInvolution, sig: ExtendedSignature):
    for i, v in enumerate(sig.values):
        if sig.values[d(i)] != v:
            raise DomainError("signature is not constant on d-orbits")


def k_d_sigma(g: SemisimpleRealization, d: DiagramInvolution, sig: ExtendedSignature) -> Subspace:
    check_compatible(d, sig)
    tau = a_sigma(g, sig) * gamma_d(g, d) * theta_auto(g)
    return el.fixed_space(tau.matrix, g.m_S(sig.support))


def build_l_d_sigma(g: SemisimpleRealization, d: DiagramInvolution, sig: ExtendedSignature) -> Subspace:
    """l_{d,sigma} = m_sigma^{a_sigma gamma_d theta} + n_sigma."""
    return el.subspace_sum(k_d_sigma(g, d, sig), g.n_S(sig.support))


def l_sigma(g: SemisimpleRealization, sig: ExtendedSignature) -> Subspace:
    return build_l_d_sigma(g, identity_involution(g.l), sig)


def l_H_sigma(g: SemisimpleRealization, sig: ExtendedSignature, s) -> Subspace:
    return torus_ad(g, s).on(l_sigma(g, sig))


def kt_criterion(g: SemisimpleRealization, sig: ExtendedSignature, s) -> bool:
    """True iff s(alpha) != 1 for every alpha with sigma(alpha) = 1."""
    _, sigma_plus, _ = signature_sets(g.rs, sig)
    return all(torus_character(g.rs, s, a) != 1 for a in sigma_plus)


# ---------------------------------------------------------------- invariants

def epsilon_of(g: SemisimpleRealization, V: Subspace, S) -> int:
    zt = el.intersect(g.z_S(S), g.t)
    return 1 if (el.intersect(V, zt).dim - V.dim) % 2 == 0 else -1


def lagrangian_data(g: SemisimpleRealization, kt: KarolinskyTriple) -> LagrangianData:
    return LagrangianData(kt.S, epsilon_of(g, kt.V, kt.S), kt.d)


def rank_compact(g: SemisimpleRealization, s: Subspace, seed: int = 0, retries: int = 8) -> int:
    """Generic centralizer dimension in a compact subalgebra s of k."""
    if not g.is_subalgebra(s):
        raise DomainError("s is not closed under the bracket")
    if s.dim == 0:
        return 0
    rng = random.Random(seed)
    B = s.basis
    best = s.dim
    for _ in range(retries):
        x = el.combine([Fraction(rng.randint(-9, 9)) for _ in B], B, g.dim)
        cols = [g.bracket(x, b) for b in B]
        eqs = el.transpose(cols)
        best = min(best, len(el.nullspace(eqs, len(B))))
    return best


def in_L0(g: SemisimpleRealization, l: Subspace, seed: int = 0) -> bool:
    return rank_compact(g, el.intersect(l, g.k), seed) == g.l


# ---------------------------------------------------------------- extraction

def _components(g: SemisimpleRealization, S):
    """Connected components of the sub-diagram on S."""
    S = set(S)
    comps = []
    while S:
        stack = [min(S)]
        comp = set()
        while stack:
            i = stack.pop()
            if i in comp:
                continue
            comp.add(i)
            stack.extend(j for j in S if g.rs.cartan[i][j] != 0 and j not in comp)
        S -= comp
        comps.append(tuple(sorted(comp)))
    return comps


def extract_lagrangian_data(g: SemisimpleRealization, l: Subspace) -> LagrangianData:
    """Recover (S, epsilon, d) from Ad_k l(S, V, tau), k in K with Ad_k n_S = n_S, Ad_k|z_S = id.

    S is read off the simple root spaces missing from l, V = l cap z_S, and
    d from how the Levi real form l cap m_{S,1} permutes the simple ideals
    and whether its maximal compact subalgebra has full rank.
    """
    S = tuple(i for i in range(g.l) if not l.contains_space(g.root_space(g.rs.simples[i])))
    V = el.intersect(l, g.z_S(S))
    eps = epsilon_of(g, V, S)
    perm = list(range(g.l))
    if S:
        m1 = g.m_S1(S)
        r = el.intersect(l, m1)
        # conjugation of m1 with respect to the real form r, composed with theta
        rb = list(r.basis)
        cols = rb + [g.Jv(b) for b in rb]
        conj_imgs = rb + [tuple(-x for x in g.Jv(b)) for b in rb]
        th = g.theta
        comps = _components(g, S)
        ideals = {c: g.m_S1(c) for c in comps}

        def A(v):
            # express v in the (r, J r) basis and conjugate, then apply theta
            coeffs = el.solve(el.transpose(cols), v, len(cols))
            w = el.combine(coeffs, conj_imgs, g.dim)
            return el.mat_vec(th, w)

        for c in comps:
            img = el.span([A(v) for v in ideals[c].basis], g.dim)
            target = next((c2 for c2 in comps if img == ideals[c2]), None)
            if target is None:
                raise CapabilityError("Levi automorphism does not permute simple ideals")
            if target != c:
                if len(c) != 1:
                    raise CapabilityError("swapped ideals of rank > 1 are not supported")
                perm[c[0]] = target[0]
            else:
                kc = el.intersect(el.intersect(r, g.k), ideals[c])
                if rank_compact(g, kc) < len(c):
                    if len(c) < 2:
                        raise CapabilityError("outer automorphism on a rank-one ideal")
                    for a, b in zip(c, reversed(c)):
                        perm[a] = b
    return LagrangianData(S, eps, DiagramInvolution(tuple(perm)))


# ---------------------------------------------------------------- classification

def is_essential(ld: LagrangianData, rs) -> bool:
    if len(ld.S) != rs.rank - 1 or ld.epsilon != 1:
        return True
    for dp in diagram_involutions(rs):
        if all(dp(i) == ld.d(i) for i in ld.S) and all(dp(i) in ld.S for i in ld.S):
            return False
    return True


def z_dim(g: SemisimpleRealization, S) -> int:
    return g.l - len(S)


def formula_dim(g: SemisimpleRealization, ld: LagrangianData) -> int:
    z = z_dim(g, ld.S)
    return g.n + z * (z - 3) // 2


def enumerate_strata(g: SemisimpleRealization) -> list[LagrangianData]:
    if g.l > 3:
        raise CapabilityError("component enumeration is capped at rank 3")
    out = []
    for size in range(g.l, -1, -1):
        for S in itertools.combinations(range(g.l), size):
            z = g.l - size
            for d in diagram_involutions(g.rs, S):
                for eps in ((1, -1) if z > 0 else (1,)):
                    out.append(LagrangianData(S, eps, d))
    return out


def enumerate_components(g: SemisimpleRealization):
    """Essential Lagrangian data with the dimension of their strata."""
    return [(ld, formula_dim(g, ld)) for ld in enumerate_strata(g) if is_essential(ld, g.rs)]


def orthogonal_cartan_basis(g: SemisimpleRealization, S):
    """Rational Killing-orthogonal basis of z_S cap a, as real vectors."""
    za = el.intersect(g.z_S(S), g.a)
    basis = []
    K = g.re_killing
    for v in za.basis:
        w = v
        for b in basis:
            w = el.vec_sub(w, el.vec_scale(K(w, b) / K(b, b), b))
        basis.append(w)
    return basis


def lagrangian_choices(g: SemisimpleRealization, S):
    """A finite sample of rational Lagrangian subspaces of z_S."""
    cs = orthogonal_cartan_basis(g, S)
    out = []
    for pick in itertools.product((False, True), repeat=len(cs)):
        vecs = [g.Jv(c) if p else c for c, p in zip(cs, pick)]
        out.append(g.span(vecs) if vecs else el.zero_space(g.dim))
    if len(cs) >= 2:
        K = g.re_killing
        c1, c2 = cs[0], cs[1]
        k1, k2 = K(c1, c1), K(c2, c2)
        vecs = [el.vec_add(c1, el.vec_scale(k1, g.Jv(c2))), el.vec_sub(c2, el.vec_scale(k2, g.Jv(c1)))]
        vecs += [g.Jv(c) for c in cs[2:]]
        out.append(g.span(vecs))
    return out


def representative(g: SemisimpleRealization, ld: LagrangianData) -> KarolinskyTriple:
    cs = orthogonal_cartan_basis(g, ld.S)
    vecs = [g.Jv(c) for c in cs]
    if ld.epsilon == -1:
        if not vecs:
            raise DomainError("epsilon = -1 needs a nonzero centre")
        vecs[0] = cs[0]
    V = g.span(vecs) if vecs else el.zero_space(g.dim)
    return make_triple(g, ld.S, V, ld.d)


def stratum_dimension(g: SemisimpleRealization, ld: LagrangianData) -> int:
    """G-orbit dimension of a representative plus dim Lag(z_S)."""
    l = build_standard(g, representative(g, ld))
    orbit = g.dim - normalizer_in(g, l).dim
    z = z_dim(g, ld.S)
    return orbit + z * (z - 1) // 2


def sample_triples(g: SemisimpleRealization):
    """Karolinsky triples over every S, sampled V, and every tau of signature type."""
    out = []
    for size in range(g.l + 1):
        for S in itertools.combinations(range(g.l), size):
            for V in lagrangian_choices(g, S):
                for d in diagram_involutions(g.rs, S):
                    orbits = [o for o in d.orbits() if o[0] in S]
                    for choice in itertools.product((1, -1), repeat=len(orbits)):
                        signs = {}
                        for o, v in zip(orbits, choice):
                            for i in o:
                                signs[i] = v
                        out.append(make_triple(g, S, V, d, signs))
    return out
