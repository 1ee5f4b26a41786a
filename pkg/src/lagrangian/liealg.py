"""Complex semisimple Lie algebras as rational real Lie algebras.

The complex basis is ``h_1..h_l`` followed by ``e_alpha`` for the roots in
``rs.roots`` order.  The realification has the 2n real basis
``b_1..b_n, J b_1..J b_n``; a real vector ``v`` stands for the complex
coefficients ``v[k] + i v[n+k]``.

Structure constants come from a bimultiplicative sign cocycle on the root
lattice (simply laced types), rescaled so that ``[e_a, e_-a] = h_a`` and the
Chevalley involution ``e_a -> -e_-a, h -> -h`` is an automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exactlin as el
from .exactlin import Subspace
from .rootsys import (DiagramInvolution, ExtendedSignature, RootSystem, add,
                      check_involution, in_span, neg)


class ConsistencyError(RuntimeError):
    """An internally constructed map failed its defining identities."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _cocycle(rs: RootSystem, alpha, beta) -> int:
    sign = 1
    for i, a in enumerate(alpha):
        if not a:
            continue
        for j, b in enumerate(beta):
            if not b:
                continue
            if i == j or (i < j and rs.cartan[i][j] == -1):
                if (a * b) % 2:
                    sign = -sign
    return sign


def _positive(alpha) -> bool:
    return all(x >= 0 for x in alpha)


class SemisimpleRealization:
    """A complex semisimple Lie algebra with its real 2n-dimensional model."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        l = rs.rank
        self.l = l
        self.n = l + len(rs.roots)
        self.labels = tuple([f"h{i + 1}" for i in range(l)] +
                            ["e(" + ",".join(map(str, a)) + ")" for a in rs.roots])
        self._build_table()
        self._verify_jacobi()

    # ------------------------------------------------------------ indices
    def root_index(self, alpha) -> int:
        return self.l + self.rs.index(tuple(alpha))

    def basis_root(self, k: int):
        """Root of basis index k, or None for a Cartan element."""
        return None if k < self.l else self.rs.roots[k - self.l]

    # ------------------------------------------------------------ table
    def _build_table(self):
        rs, l, n = self.rs, self.l, self.n
        c = {a: (1 if _positive(a) else -1) for a in rs.roots}
        table = [[{} for _ in range(n)] for _ in range(n)]
        for a in rs.roots:
            ia = self.root_index(a)
            for i in range(l):
                v = rs.pairing(a, i)
                if v:
                    table[i][ia] = {ia: v}
                    table[ia][i] = {ia: -v}
            for b in rs.roots:
                ib = self.root_index(b)
                s = add(a, b)
                if not any(s):
                    # [e_a, e_-a] = h_a, coroot coordinates equal root coordinates
                    table[ia][ib] = {i: m for i, m in enumerate(a) if m}
                elif rs.is_root(s):
                    N = c[a] * c[b] * c[s] * _cocycle(rs, a, b)
                    table[ia][ib] = {self.root_index(s): N}
        self.table = tuple(tuple(tuple(sorted(d.items())) for d in row) for row in table)

    def N(self, alpha, beta) -> int:
        s = add(alpha, beta)
        if not self.rs.is_root(s):
            return 0
        d = dict(self.table[self.root_index(alpha)][self.root_index(beta)])
        return d[self.root_index(s)]

    def _verify_jacobi(self):
        n = self.n
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    acc = {}
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        for k, v in self.table[x][y]:
                            for m, w in self.table[k][z]:
                                acc[m] = acc.get(m, 0) + v * w
                    if any(acc.values()):
                        raise ConsistencyError(f"Jacobi fails on {self.labels[a]},{self.labels[b]},{self.labels[c]}")

    # ------------------------------------------------------------ complex (split) form
    def cbracket(self, z, w):
        """Bracket of coefficient vectors over any field (split rational form)."""
        zero = el._zero_like(list(z) + list(w))
        out = [zero] * self.n
        for a, za in enumerate(z):
            if not za:
                continue
            row = self.table[a]
            for b, wb in enumerate(w):
                if not wb:
                    continue
                p = za * wb
                for k, c in row[b]:
                    out[k] = out[k] + c * p
        return tuple(out)

    @cached_property
    def split_ad(self):
        """Complex ad matrices of the basis (integer entries)."""
        mats = []
        for a in range(self.n):
            M = [[0] * self.n for _ in range(self.n)]
            for b in range(self.n):
                for k, c in self.table[a][b]:
                    M[k][b] = c
            mats.append(M)
        return mats

    @cached_property
    def killing_complex(self):
        """Integer Gram matrix of the Killing form in the complex basis."""
        ad = self.split_ad
        n = self.n
        K = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                A, B = ad[a], ad[b]
                tr = 0
                for i in range(n):
                    Ai = A[i]
                    for j in range(n):
                        if Ai[j] and B[j][i]:
                            tr += Ai[j] * B[j][i]
                K[a][b] = K[b][a] = tr
        return tuple(tuple(Fraction(x) for x in r) for r in K)

    def killing_c(self, z, w):
        """Complex bilinear Killing form on coefficient vectors."""
        K = self.killing_complex
        zero = el._zero_like(list(z) + list(w))
        acc = zero
        for a, za in enumerate(z):
            if not za:
                continue
            for b, wb in enumerate(w):
                if wb and K[a][b]:
                    acc = acc + K[a][b] * za * wb
        return acc

    @cached_property
    def split_killing_form(self) -> el.BilinearForm:
        return el.BilinearForm(self.n, self.killing_complex)

    # ------------------------------------------------------------ realification
    @property
    def dim(self) -> int:
        return 2 * self.n

    def to_complex(self, v):
        n = self.n
        return tuple(el.GaussScalar(v[k], v[n + k]) for k in range(n))

    def from_complex(self, z):
        z = [el.GaussScalar.lift(x) for x in z]
        return tuple(x.re for x in z) + tuple(x.im for x in z)

    def real_vec(self, coeffs: dict) -> tuple:
        """Real vector from {basis_index: complex-or-rational coefficient}."""
        v = [Fraction(0)] * self.dim
        for k, c in coeffs.items():
            c = el.GaussScalar.lift(c)
            v[k] += c.re
            v[self.n + k] += c.im
        return tuple(v)

    def unit(self, k: int) -> tuple:
        v = [Fraction(0)] * self.dim
        v[k] = Fraction(1)
        return tuple(v)

    def e(self, alpha) -> tuple:
        return self.unit(self.root_index(alpha))

    def h(self, i: int) -> tuple:
        return self.unit(i)

    def Jv(self, v) -> tuple:
        n = self.n
        return tuple(-x for x in v[n:]) + tuple(v[:n])

    def bracket(self, x, y):
        n = self.n
        xr, xi, yr, yi = x[:n], x[n:], y[:n], y[n:]
        re = [Fraction(0)] * n
        im = [Fraction(0)] * n
        T = self.table
        for a in range(n):
            ar, ai = xr[a], xi[a]
            if not (ar or ai):
                continue
            row = T[a]
            for b in range(n):
                br, bi = yr[b], yi[b]
                if not (br or bi) or not row[b]:
                    continue
                pr = ar * br - ai * bi
                pi = ar * bi + ai * br
                for k, c in row[b]:
                    if pr:
                        re[k] += c * pr
                    if pi:
                        im[k] += c * pi
        return tuple(re) + tuple(im)

    @cached_property
    def J(self):
        n, N = self.n, self.dim
        M = [[Fraction(0)] * N for _ in range(N)]
        for k in range(n):
            M[n + k][k] = Fraction(1)
            M[k][n + k] = Fraction(-1)
        return tuple(tuple(r) for r in M)

    def omega_index(self, k: int) -> int:
        if k < self.l:
            return k
        return self.root_index(neg(self.basis_root(k)))

    @cached_property
    def theta(self):
        """Cartan involution: antilinear, fixes the compact form."""
        n, N = self.n, self.dim
        M = [[Fraction(0)] * N for _ in range(N)]
        for k in range(n):
            w = self.omega_index(k)
            M[w][k] = Fraction(-1)
            M[n + w][n + k] = Fraction(1)
        return tuple(tuple(r) for r in M)

    def realify_complex_matrix(self, C):
        """2n x 2n real matrix of a complex-linear map given in the complex basis."""
        n, N = self.n, self.dim
        M = [[Fraction(0)] * N for _ in range(N)]
        for i in range(n):
            for j in range(n):
                c = C[i][j]
                if not c:
                    continue
                c = el.GaussScalar.lift(c)
                M[i][j] = c.re
                M[n + i][n + j] = c.re
                M[i][n + j] = -c.im
                M[n + i][j] = c.im
        return tuple(tuple(r) for r in M)

    @cached_property
    def re_killing(self) -> el.BilinearForm:
        n, N = self.n, self.dim
        K = self.killing_complex
        G = [[Fraction(0)] * N for _ in range(N)]
        for a in range(n):
            for b in range(n):
                if K[a][b]:
                    G[a][b] = K[a][b]
                    G[n + a][n + b] = -K[a][b]
        return el.BilinearForm(N, tuple(tuple(r) for r in G))

    @cached_property
    def im_killing(self) -> el.BilinearForm:
        n, N = self.n, self.dim
        K = self.killing_complex
        G = [[Fraction(0)] * N for _ in range(N)]
        for a in range(n):
            for b in range(n):
                if K[a][b]:
                    G[a][n + b] = K[a][b]
                    G[n + a][b] = K[a][b]
        return el.BilinearForm(N, tuple(tuple(r) for r in G))

    @cached_property
    def pairing_form(self) -> el.BilinearForm:
        """2 Im<<,>>, the pairing of the compact/Iwasawa Manin triple."""
        return self.im_killing.scaled(2)

    @cached_property
    def ad_real(self):
        """Real ad matrices of the 2n real basis vectors."""
        out = []
        for r in range(self.dim):
            x = self.unit(r)
            cols = [self.bracket(x, self.unit(c)) for c in range(self.dim)]
            out.append(el.transpose(cols))
        return out

    def ad(self, x):
        N = self.dim
        cols = [self.bracket(x, self.unit(c)) for c in range(N)]
        return el.transpose(cols)

    # ------------------------------------------------------------ subspaces
    def span(self, vectors) -> Subspace:
        return el.span(vectors, self.dim)

    def complex_span(self, vectors) -> Subspace:
        """Real subspace spanned by the vectors and their J-images."""
        vs = list(vectors)
        return el.span(vs + [self.Jv(v) for v in vs], self.dim)

    def root_space(self, alpha) -> Subspace:
        return self.complex_span([self.e(alpha)])

    def is_subalgebra(self, W: Subspace) -> bool:
        B = W.basis
        return all(W.contains(self.bracket(B[i], B[j])) for i in range(len(B)) for j in range(i + 1, len(B)))

    def bracket_space(self, A: Subspace, B: Subspace) -> Subspace:
        return el.span([self.bracket(x, y) for x in A.basis for y in B.basis], self.dim)

    @cached_property
    def whole(self) -> Subspace:
        return el.full_space(self.dim)

    @cached_property
    def cartan_real(self) -> Subspace:
        return self.complex_span([self.h(i) for i in range(self.l)])

    def h_subset(self, S) -> Subspace:
        """Complex span of the coroots h_i, i in S."""
        return self.complex_span([self.h(i) for i in sorted(S)])

    def z_S(self, S) -> Subspace:
        """Centre of the Levi factor: {H in h : alpha_i(H) = 0, i in S}."""
        S = sorted(S)
        l = self.l
        if not S:
            return self.cartan_real
        eqs = [[Fraction(self.rs.cartan[k][i]) for k in range(l)] for i in S]
        sols = el.nullspace(eqs, l)
        vecs = [self.real_vec({k: c for k, c in enumerate(s) if c}) for s in sols]
        return self.complex_span(vecs)

    def roots_in(self, S):
        return tuple(a for a in self.rs.roots if in_span(a, S))

    def m_S1(self, S) -> Subspace:
        vecs = [self.h(i) for i in sorted(S)] + [self.e(a) for a in self.roots_in(S)]
        return self.complex_span(vecs)

    def m_S(self, S) -> Subspace:
        vecs = [self.h(i) for i in range(self.l)] + [self.e(a) for a in self.roots_in(S)]
        return self.complex_span(vecs)

    def n_S(self, S) -> Subspace:
        vecs = [self.e(a) for a in self.rs.positives if not in_span(a, S)]
        return self.complex_span(vecs) if vecs else el.zero_space(self.dim)

    def n_minus_S(self, S) -> Subspace:
        vecs = [self.e(neg(a)) for a in self.rs.positives if not in_span(a, S)]
        return self.complex_span(vecs) if vecs else el.zero_space(self.dim)

    def p_S(self, S) -> Subspace:
        return el.subspace_sum(self.m_S(S), self.n_S(S))

    @cached_property
    def k(self) -> Subspace:
        return el.fixed_space(self.theta)

    @cached_property
    def a(self) -> Subspace:
        return self.span([self.h(i) for i in range(self.l)])

    @cached_property
    def t(self) -> Subspace:
        return self.span([self.Jv(self.h(i)) for i in range(self.l)])

    @cached_property
    def nplus(self) -> Subspace:
        return self.n_S(())

    @cached_property
    def nminus(self) -> Subspace:
        return self.n_minus_S(())

    def X(self, alpha) -> tuple:
        return el.vec_sub(self.e(alpha), self.e(neg(alpha)))

    def Y(self, alpha) -> tuple:
        return self.Jv(el.vec_add(self.e(alpha), self.e(neg(alpha))))

    def to_json(self) -> dict:
        return {
            "algebra": f"{self.rs.kind}{self.rs.rank}",
            "labels": list(self.labels),
            "structure_constants": [[a, b, k, c] for a in range(self.n) for b in range(self.n)
                                    for k, c in self.table[a][b]],
            "killing": el.matrix_json(self.killing_complex),
            "k": self.k.to_json(), "a": self.a.to_json(), "n": self.nplus.to_json(), "t": self.t.to_json(),
        }


_CACHE: dict = {}


def build_chevalley(rs: RootSystem) -> SemisimpleRealization:
    key = (rs.kind, rs.rank)
    if key not in _CACHE:
        _CACHE[key] = SemisimpleRealization(rs)
    return _CACHE[key]


def iwasawa_parts(g: SemisimpleRealization):
    return g.k, g.a, g.nplus, g.t


# ---------------------------------------------------------------- automorphisms

@dataclass(frozen=True)
class AlgebraAutomorphism:
    matrix: tuple

    def apply(self, v):
        return el.mat_vec(self.matrix, v)

    def __call__(self, v):
        return self.apply(v)

    def on(self, W: Subspace) -> Subspace:
        return el.image(self.matrix, W)

    def __mul__(self, other: "AlgebraAutomorphism") -> "AlgebraAutomorphism":
        return AlgebraAutomorphism(el.mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "AlgebraAutomorphism":
        return AlgebraAutomorphism(el.inverse(self.matrix))

    def is_identity(self) -> bool:
        return self.matrix == el.identity(len(self.matrix))

    def preserves_bracket(self, g: SemisimpleRealization, within: Subspace | None = None) -> bool:
        B = within.basis if within is not None else [g.unit(r) for r in range(g.dim)]
        for i, x in enumerate(B):
            fx = self.apply(x)
            for y in B[i + 1:]:
                if self.apply(g.bracket(x, y)) != g.bracket(fx, self.apply(y)):
                    return False
        return True


def identity_auto(g: SemisimpleRealization) -> AlgebraAutomorphism:
    return AlgebraAutomorphism(el.identity(g.dim))


def theta_auto(g: SemisimpleRealization) -> AlgebraAutomorphism:
    return AlgebraAutomorphism(g.theta)


def torus_character(rs: RootSystem, s, alpha):
    out = Fraction(1)
    for si, m in zip(s, alpha):
        if m:
            out *= Fraction(si) ** m
    return out


def torus_ad(g: SemisimpleRealization, s, allow_signs: bool = False) -> AlgebraAutomorphism:
    """Ad of the torus element acting on g_alpha by prod s_i^{m_i}."""
    s = tuple(Fraction(x) for x in s)
    if len(s) != g.l:
        raise DomainError("one character value per simple root expected")
    for x in s:
        if x == 0 or (x < 0 and not allow_signs):
            raise DomainError("torus characters must be positive rationals")
    C = [[Fraction(0)] * g.n for _ in range(g.n)]
    for k in range(g.n):
        a = g.basis_root(k)
        C[k][k] = Fraction(1) if a is None else torus_character(g.rs, s, a)
    return AlgebraAutomorphism(g.realify_complex_matrix(C))


def a_sigma(g: SemisimpleRealization, sig: ExtendedSignature) -> AlgebraAutomorphism:
    """Order-two torus element acting on g_alpha by sigma(alpha) (on its support)."""
    s = tuple(-1 if v == -1 else 1 for v in sig.values)
    return torus_ad(g, s, allow_signs=True)


def nilpotent_exp(M, t=1):
    """exp(t M) for a nilpotent square matrix, as a finite sum."""
    n = len(M)
    t = Fraction(t)
    result = [list(r) for r in el.identity(n)]
    term = el.identity(n)
    k = 0
    while True:
        k += 1
        term = el.mat_scale(t / k, el.mat_mul(term, M))
        if not any(any(r) for r in term):
            break
        if k > n:
            raise DomainError("element is not ad-nilpotent")
        for i in range(n):
            for j in range(n):
                if term[i][j]:
                    result[i][j] += term[i][j]
    return tuple(tuple(r) for r in result)


def exp_ad_nilpotent(g: SemisimpleRealization, x, t=1) -> AlgebraAutomorphism:
    return AlgebraAutomorphism(nilpotent_exp(g.ad(x), t))


def weyl_rep(g: SemisimpleRealization, i: int) -> AlgebraAutomorphism:
    """exp(ad e_i) exp(-ad f_i) exp(ad e_i) for the simple root alpha_i."""
    alpha = g.rs.simples[i]
    E = exp_ad_nilpotent(g, g.e(alpha))
    F = exp_ad_nilpotent(g, g.e(neg(alpha)), -1)
    return E * F * E


def longest_weyl_rep(g: SemisimpleRealization) -> AlgebraAutomorphism:
    """A representative of the longest Weyl element, built from a reduced word."""
    rs = g.rs
    positives = set(rs.positives)
    word = []
    while True:
        i = next((i for i in range(rs.rank) if _apply_word(rs, word, rs.simples[i]) in positives), None)
        if i is None:
            break
        word.append(i)
    A = identity_auto(g)
    for i in word:
        A = A * weyl_rep(g, i)
    return A


def _apply_word(rs, word, alpha):
    for i in reversed(word):
        alpha = rs.simple_reflect(i, alpha)
    return alpha


def su2_element(g: SemisimpleRealization, alpha, a, b) -> AlgebraAutomorphism:
    """Ad of [[a, b], [-conj b, conj a]] in the SU(2) of the root alpha > 0.

    ``a`` and ``b`` are Gaussian rationals with |a|^2 + |b|^2 = 1 and b != 0.
    Uses the factorization [[1,p],[0,1]] [[1,0],[c,1]] [[1,q],[0,1]].
    """
    a = el.GaussScalar.lift(a)
    b = el.GaussScalar.lift(b)
    if a.norm() + b.norm() != 1 or not b:
        raise DomainError("need |a|^2 + |b|^2 = 1 with b nonzero")
    c = -b.conjugate()
    d = a.conjugate()
    p = (a - 1) / c
    q = (d - 1) / c
    up = lambda z: exp_ad_nilpotent(g, g.real_vec({g.root_index(alpha): z}))
    low = exp_ad_nilpotent(g, g.real_vec({g.root_index(neg(alpha)): c}))
    return up(p) * low * up(q)


def gamma_d(g: SemisimpleRealization, d: DiagramInvolution, S=None) -> AlgebraAutomorphism:
    """Diagram automorphism permuting the simple root vectors.

    With ``S`` given, ``d`` is an involution of the sub-diagram on ``S`` and
    the result is meaningful on the Levi factor m_{S,1} only; other basis
    vectors are left fixed.
    """
    rs = g.rs
    full = S is None
    S = tuple(range(rs.rank)) if full else tuple(sorted(S))
    check_involution(rs, d, None if full else set(S))
    n = g.n
    images = {}
    for i in range(g.l):
        j = d(i) if i in S else i
        images[i] = g.unit(j)[:n]
    for i in S:
        a = rs.simples[i]
        images[g.root_index(a)] = g.e(rs.simples[d(i)])[:n]
        images[g.root_index(neg(a))] = g.e(neg(rs.simples[d(i)]))[:n]
    inside = [a for a in rs.positives if in_span(a, S)]
    for xi in sorted(inside, key=sum):
        if sum(xi) == 1:
            continue
        for sign in (1, -1):
            root = xi if sign == 1 else neg(xi)
            for i in S:
                ai = rs.simples[i] if sign == 1 else neg(rs.simples[i])
                beta = tuple(r - s for r, s in zip(root, ai))
                if rs.is_root(beta) and g.root_index(beta) in images:
                    N = g.N(ai, beta)
                    img = g.cbracket(images[g.root_index(ai)], images[g.root_index(beta)])
                    images[g.root_index(root)] = tuple(Fraction(x, N) for x in img)
                    break
            else:
                raise ConsistencyError(f"no recursion step for root {root}")
    for k in range(g.l, n):
        images.setdefault(k, g.unit(k)[:n])
    C = [[Fraction(0)] * n for _ in range(n)]
    for k, col in images.items():
        for i, x in enumerate(col):
            C[i][k] = Fraction(x)
    A = AlgebraAutomorphism(g.realify_complex_matrix(C))
    domain = None if full else g.m_S1(S)
    if not A.preserves_bracket(g, domain):
        raise ConsistencyError("gamma_d does not preserve the bracket")
    return A


def tau_matrix(g: SemisimpleRealization, d: DiagramInvolution, sig: ExtendedSignature, S=None):
    """a_sigma gamma_d theta as a real matrix."""
    G = gamma_d(g, d, S)
    return (a_sigma(g, sig) * G * theta_auto(g)).matrix
