"""Quadratic Lie algebras, Manin triples, the element R and the sharp map."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import exactlin as el
from .exactlin import BilinearForm, Subspace
from .liealg import SemisimpleRealization


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticLieAlgebra:
    dim: int
    bracket: Callable = field(compare=False)
    form: BilinearForm
    name: str = ""
    labels: tuple = ()

    @staticmethod
    def from_table(dim: int, table: dict, form: BilinearForm, name: str = "", labels=()) -> "QuadraticLieAlgebra":
        """``table[(i, j)] = {k: c}`` for i < j; the rest follows by antisymmetry."""
        full = {}
        for (i, j), out in table.items():
            full[(i, j)] = dict(out)
            full[(j, i)] = {k: -c for k, c in out.items()}

        def bracket(x, y):
            res = [Fraction(0)] * dim
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for j, yj in enumerate(y):
                    if not yj:
                        continue
                    out = full.get((i, j))
                    if out:
                        p = xi * yj
                        for k, c in out.items():
                            res[k] += c * p
            return tuple(res)

        return QuadraticLieAlgebra(dim, bracket, form, name, tuple(labels))

    def unit(self, i: int):
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    def units(self):
        return [self.unit(i) for i in range(self.dim)]


def realified(g: SemisimpleRealization) -> QuadraticLieAlgebra:
    """g as a real quadratic Lie algebra with the pairing 2 Im<<,>>."""
    return QuadraticLieAlgebra(g.dim, g.bracket, g.pairing_form, f"{g.rs.kind}{g.rs.rank}")


def is_closed(bracket, W: Subspace) -> bool:
    B = W.basis
    return all(W.contains(bracket(B[i], B[j])) for i in range(len(B)) for j in range(i + 1, len(B)))


def normalizer(bracket, W: Subspace, ambient: Subspace) -> Subspace:
    """{x in ambient : [x, W] in W}, by one linear solve."""
    n = W.ambient_dim
    A = ambient.basis
    if not A:
        return el.zero_space(n)
    P = el.dual_annihilator(W).basis
    if not P:
        return ambient
    rows = []
    for w in W.basis:
        brs = [bracket(a, w) for a in A]
        for p in P:
            rows.append(tuple(el.dot(p, b) for b in brs))
    coeffs = el.nullspace(rows, len(A))
    return el.canonicalize([el.combine(c, A, n) for c in coeffs], n)


def lagrangian_failures(d: QuadraticLieAlgebra, W: Subspace) -> list[str]:
    out = []
    if 2 * W.dim != d.dim:
        out.append("dimension")
    if not el.is_isotropic(W, d.form):
        out.append("isotropy")
    if not is_closed(d.bracket, W):
        out.append("closure")
    return out


def jacobi_ok(d: QuadraticLieAlgebra) -> bool:
    U = d.units()
    br = d.bracket
    for a in range(d.dim):
        for b in range(a + 1, d.dim):
            ab = br(U[a], U[b])
            for c in range(b + 1, d.dim):
                s = el.vec_add(el.vec_add(br(ab, U[c]), br(br(U[b], U[c]), U[a])), br(br(U[c], U[a]), U[b]))
                if any(s):
                    return False
    return True


def ad_invariant(d: QuadraticLieAlgebra) -> bool:
    U = d.units()
    B = d.form
    for x in U:
        adx = [d.bracket(x, y) for y in U]
        for j in range(d.dim):
            for k in range(j, d.dim):
                if B(adx[j], U[k]) + B(U[j], adx[k]) != 0:
                    return False
    return True


@dataclass(frozen=True)
class RElement:
    bivector: tuple

    def __call__(self, f1, f2):
        return el.dot(f1, el.mat_vec(self.bivector, f2))

    def contract(self, f):
        """f -| R: the vector with (f -| R)(g) = R(f, g)."""
        return el.vec_mat(f, self.bivector)


class ManinTriple:
    """A quadratic Lie algebra with transverse Lagrangian subalgebras u, u*."""

    def __init__(self, d: QuadraticLieAlgebra, u: Subspace, u_star: Subspace, name: str = "",
                 u_basis=None, u_star_basis=None):
        if not d.form.is_nondegenerate():
            raise ConstructionError("degenerate form")
        self.d, self.u, self.u_star, self.name = d, u, u_star, name
        e = list(u_basis) if u_basis is not None else list(u.basis)
        f = list(u_star_basis) if u_star_basis is not None else list(u_star.basis)
        if len(e) != len(f):
            raise ConstructionError("u and u* have different dimensions")
        P = tuple(tuple(d.form(x, y) for y in f) for x in e)
        try:
            Pinv = el.inverse(P)
        except el.SingularError:
            raise ConstructionError("u and u* are not dually paired") from None
        eta = [el.combine([Pinv[k][j] for k in range(len(f))], f, d.dim) for j in range(len(e))]
        self.e = [tuple(x) for x in e]
        self.eta = eta
        self._ginv = el.inverse(d.form.gram)

    @property
    def dim(self) -> int:
        return self.d.dim

    def bracket(self, x, y):
        return self.d.bracket(x, y)

    def form(self, x, y):
        return self.d.form(x, y)

    # -------------------------------------------------------- R and sharp
    def build_R(self) -> RElement:
        n = self.dim
        R = [[Fraction(0)] * n for _ in range(n)]
        for e, eta in zip(self.e, self.eta):
            for a in range(n):
                if not (eta[a] or e[a]):
                    continue
                for b in range(n):
                    R[a][b] += eta[a] * e[b] - e[a] * eta[b]
        return RElement(tuple(tuple(r) for r in R))

    def sharp(self, f):
        return el.mat_vec(self._ginv, f)

    def flat(self, v):
        return el.mat_vec(self.d.form.gram, v)

    def split(self, v):
        """Components (x in u, xi in u*) of a vector of d."""
        x = el.combine([self.form(v, eta) for eta in self.eta], self.e, self.dim)
        xi = el.combine([self.form(v, e) for e in self.e], self.eta, self.dim)
        return x, xi

    def covector(self, x, xi):
        """The covector written xi + x: xi acts on the u-part, x on the u*-part."""
        return self.flat(el.vec_add(x, xi))

    def RR(self, f1, f2, f3):
        """[R,R](f1,f2,f3) = 2 <#f1, [#f2, #f3]>."""
        return 2 * self.form(self.sharp(f1), self.bracket(self.sharp(f2), self.sharp(f3)))

    def to_json(self) -> dict:
        return {"name": self.name, "dim": self.dim, "form": self.d.form.to_json(),
                "u": self.u.to_json(), "u_star": self.u_star.to_json(),
                "structure_constants": [
                    [i, j, el.scalar_json(c), k]
                    for i in range(self.dim) for j in range(i + 1, self.dim)
                    for k, c in enumerate(self.bracket(self.d.unit(i), self.d.unit(j))) if c]}


def check_manin(t: ManinTriple) -> dict:
    d = t.d
    return {
        "jacobi": jacobi_ok(d),
        "form_symmetric": d.form.is_symmetric(),
        "form_nondegenerate": d.form.is_nondegenerate(),
        "ad_invariance": ad_invariant(d),
        "u_isotropic": el.is_isotropic(t.u, d.form),
        "u_star_isotropic": el.is_isotropic(t.u_star, d.form),
        "u_closed": is_closed(d.bracket, t.u),
        "u_star_closed": is_closed(d.bracket, t.u_star),
        "dimension_split": (el.intersect(t.u, t.u_star).dim == 0 and t.u.dim + t.u_star.dim == d.dim),
    }


def build_R(t: ManinTriple) -> RElement:
    return t.build_R()


def sharp(t: ManinTriple, f):
    return t.sharp(f)


# ---------------------------------------------------------------- concrete doubles

def compact_triple(g: SemisimpleRealization) -> ManinTriple:
    """(k, a+n) inside g with the pairing 2 Im<<,>>."""
    return ManinTriple(realified(g), g.k, el.subspace_sum(g.a, g.nplus), name="compact")


HEIS_LABELS = ("X", "Y", "Z", "fX", "fY", "fZ")


def heisenberg_double() -> ManinTriple:
    """Heisenberg algebra u = <X,Y,Z>, [X,Y] = Z, with abelian dual u*.

    The double is the semidirect product by the coadjoint action,
    (ad*_x xi)(y) = -xi([x, y]).
    """
    u_table = {(0, 1): {2: Fraction(1)}}
    table = dict(u_table)
    for x in range(3):
        for f in range(3):
            out = {}
            for y in range(3):
                c = u_table.get((x, y), {}).get(f) or -u_table.get((y, x), {}).get(f, 0)
                if c:
                    out[3 + y] = -c
            if out:
                table[(x, 3 + f)] = out
    G = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(3):
        G[i][i + 3] = G[i + 3][i] = Fraction(1)
    form = BilinearForm(6, tuple(tuple(r) for r in G))
    d = QuadraticLieAlgebra.from_table(6, table, form, "heisenberg", HEIS_LABELS)
    u = el.span([d.unit(i) for i in range(3)], 6)
    us = el.span([d.unit(i) for i in range(3, 6)], 6)
    return ManinTriple(d, u, us, name="heisenberg")


def borel_double(g: SemisimpleRealization) -> ManinTriple:
    """d = g + h over the split rational form, u = i+(b+), u* = i-(b-).

    i+-(H + x) = (H + x, +-H); the form is Killing on g minus Killing on h.
    """
    n, l = g.n, g.l
    N = n + l

    def bracket(x, y):
        return tuple(g.cbracket(x[:n], y[:n])) + (Fraction(0),) * l

    K = g.killing_complex
    G = [[Fraction(0)] * N for _ in range(N)]
    for a in range(n):
        for b in range(n):
            G[a][b] = K[a][b]
    for i in range(l):
        for j in range(l):
            G[n + i][n + j] = -K[i][j]
    form = BilinearForm(N, tuple(tuple(r) for r in G))
    labels = tuple(g.labels) + tuple(f"H{i + 1}" for i in range(l))
    d = QuadraticLieAlgebra(N, bracket, form, f"borel-double-{g.rs.kind}{g.rs.rank}", labels)

    def vec(cs):
        v = [Fraction(0)] * N
        for k, c in cs.items():
            v[k] = Fraction(c)
        return tuple(v)

    u = [vec({i: 1, n + i: 1}) for i in range(l)] + [vec({g.root_index(a): 1}) for a in g.rs.positives]
    us = [vec({i: 1, n + i: -1}) for i in range(l)] + [vec({g.root_index(a): 1}) for a in g.rs.negatives]
    return ManinTriple(d, el.span(u, N), el.span(us, N), name="borel")


def borel_conjugate(g: SemisimpleRealization, t: ManinTriple, auto_split) -> Subspace:
    """Image of u under (A, id) for a complex-linear automorphism A of g (split matrix)."""
    n, l = g.n, g.l
    out = []
    for v in t.u.basis:
        w = el.mat_vec(auto_split, v[:n])
        out.append(tuple(w) + tuple(v[n:]))
    return el.span(out, n + l)
