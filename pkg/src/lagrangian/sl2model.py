"""The quadratic Poisson structure on 2x2 Hermitian matrices for sl(2, C).

G acts on Hermitian X by g.X = g X conj(g)^t, so xi in g induces the linear
vector field v_xi(X) = xi X + X xi^*.  Coordinates: X = [[x, u+iv], [u-iv, y]].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

x, y, u, v = sp.symbols("x y u v", real=True)
z, a_sym = sp.symbols("z a", real=True)
HERMITIAN_COORDS = (x, y, u, v)
SPHERE_COORDS = (x, y, z)

R = sp.Rational
I = sp.I


@dataclass(frozen=True)
class PolyPoisson:
    coords: tuple
    table: dict  # {(i, j): expr} for i < j

    def get(self, i: int, j: int):
        if i == j:
            return sp.Integer(0)
        if i < j:
            return self.table.get((i, j), sp.Integer(0))
        return -self.table.get((j, i), sp.Integer(0))

    def bracket(self, f, g):
        c = self.coords
        out = 0
        for i, j in itertools.combinations(range(len(c)), 2):
            p = self.get(i, j)
            if p == 0:
                continue
            out += p * (sp.diff(f, c[i]) * sp.diff(g, c[j]) - sp.diff(f, c[j]) * sp.diff(g, c[i]))
        return sp.expand(out)

    def rows(self):
        c = self.coords
        return [(str(c[i]), str(c[j]), sp.factor(self.get(i, j)))
                for i, j in itertools.combinations(range(len(c)), 2)]


def _hermitian():
    return sp.Matrix([[x, u + I * v], [u - I * v, y]])


def _vector_field(xi):
    X = _hermitian()
    M = xi * X + X * xi.H
    return {x: sp.expand(M[0, 0]), y: sp.expand(M[1, 1]),
            u: sp.expand((M[0, 1] + M[1, 0]) / 2),
            v: sp.expand((M[0, 1] - M[1, 0]) / (2 * I))}


def _derive(field, f):
    return sp.expand(sum(field[c] * sp.diff(f, c) for c in HERMITIAN_COORDS))


def r_matrix_terms():
    """R = -1/2 (ih ^ h - X ^ iE + Y ^ E) as (coefficient, a, b) for a ^ b.

    h = h0 / (2 sqrt 2) with h0 = diag(1, -1); the ih ^ h term carries
    h twice, so it equals (1/8) ih0 ^ h0 and every entry stays Gaussian rational.
    """
    h0 = sp.Matrix([[1, 0], [0, -1]])
    Xa = sp.Matrix([[0, 1], [-1, 0]]) / 2
    Ya = sp.Matrix([[0, I], [I, 0]]) / 2
    E = (Xa - I * Ya) / 2
    return [(-R(1, 2) * R(1, 8), I * h0, h0), (R(1, 2), Xa, I * E), (-R(1, 2), Ya, E)]


def derive_hermitian_Pi() -> PolyPoisson:
    """Pi = 1/2 v(R), expanded on coordinate functions."""
    fields = [(c, _vector_field(a), _vector_field(b)) for c, a, b in r_matrix_terms()]
    table = {}
    for i, j in itertools.combinations(range(4), 2):
        f, g = HERMITIAN_COORDS[i], HERMITIAN_COORDS[j]
        s = 0
        for c, va, vb in fields:
            s += c * R(1, 2) * (_derive(va, f) * _derive(vb, g) - _derive(vb, f) * _derive(va, g))
        s = sp.expand(s)
        if sp.im(s) != 0:
            raise ArithmeticError("bracket is not real")
        table[(i, j)] = s
    return PolyPoisson(HERMITIAN_COORDS, table)


def printed_table() -> PolyPoisson:
    """The six brackets of the reference table."""
    return PolyPoisson(HERMITIAN_COORDS, {
        (0, 1): sp.Integer(0),
        (0, 2): -R(1, 4) * y * v,
        (0, 3): R(1, 4) * y * u,
        (1, 2): R(1, 4) * y * v,
        (1, 3): -R(1, 4) * y * u,
        (2, 3): R(1, 8) * y * (y - x),
    })


def solve_scale(derived: PolyPoisson, reference: PolyPoisson):
    """The single constant c with derived = c * reference, or None."""
    c = None
    for key in sorted(set(derived.table) | set(reference.table)):
        d = sp.expand(derived.table.get(key, 0))
        r = sp.expand(reference.table.get(key, 0))
        if r == 0:
            if d != 0:
                return None
            continue
        ratio = sp.cancel(d / r)
        if not ratio.is_number:
            return None
        if c is None:
            c = ratio
        elif sp.simplify(ratio - c) != 0:
            return None
    return c if c is not None else sp.Integer(1)


def tables_equal(p: PolyPoisson, q: PolyPoisson, scale=1) -> bool:
    keys = set(p.table) | set(q.table)
    return all(sp.expand(p.table.get(k, 0) - scale * q.table.get(k, 0)) == 0 for k in keys)


def jacobi_certificate(p: PolyPoisson) -> bool:
    c = p.coords
    for i, j, k in itertools.combinations(range(len(c)), 3):
        f, g, h = c[i], c[j], c[k]
        s = p.bracket(f, p.bracket(g, h)) + p.bracket(g, p.bracket(h, f)) + p.bracket(h, p.bracket(f, g))
        if sp.expand(s) != 0:
            return False
    return True


def casimir_check(p: PolyPoisson, c) -> bool:
    return all(p.bracket(c, f) == 0 for f in p.coords)


CASIMIRS = {"c1": x + y, "c2": x * y - u ** 2 - v ** 2}


def perturbed(p: PolyPoisson, key, delta=1) -> PolyPoisson:
    t = dict(p.table)
    t[key] = t.get(key, 0) + delta
    return PolyPoisson(p.coords, t)


def sphere_family(a=a_sym) -> PolyPoisson:
    """{x,y} = f z, {y,z} = f x, {z,x} = f y with f = (x + 2a - 1)/4."""
    if isinstance(a, Fraction):
        a = R(a.numerator, a.denominator)
    f = R(1, 4) * (x + 2 * a - 1)
    return PolyPoisson(SPHERE_COORDS, {(0, 1): sp.expand(f * z), (1, 2): sp.expand(f * x),
                                       (0, 2): sp.expand(-f * y)})


def antipodal_check(a) -> bool:
    """True iff (x,y,z) -> (-x,-y,-z) preserves every bracket."""
    p = sphere_family(a)
    flip = {s: -s for s in SPHERE_COORDS}
    for i, j in itertools.combinations(range(3), 2):
        lhs = p.get(i, j)  # {-x_i, -x_j} = {x_i, x_j}
        rhs = p.get(i, j).subs(flip, simultaneous=True)
        if sp.expand(lhs - rhs) != 0:
            return False
    return True


def report() -> dict:
    derived = derive_hermitian_Pi()
    ref = printed_table()
    scale = solve_scale(derived, ref)
    return {
        "brackets": [{"pair": f"{{{a},{b}}}", "value": str(e)} for a, b, e in derived.rows()],
        "scale": str(scale),
        "matches_reference": scale is not None and tables_equal(derived, ref, scale),
        "jacobi": jacobi_certificate(derived),
        "casimirs": {k: casimir_check(derived, c) for k, c in CASIMIRS.items()},
        "sphere_jacobi_symbolic_a": jacobi_certificate(sphere_family()),
        "sphere_casimir_symbolic_a": casimir_check(sphere_family(), x ** 2 + y ** 2 + z ** 2),
        "antipodal": {s: antipodal_check(Fraction(s)) for s in ("0", "1/4", "1/2", "3/4", "1")},
    }


def antipodal_solutions() -> list[Fraction]:
    """All a for which the antipodal map preserves the sphere-family brackets."""
    p = sphere_family(a_sym)
    flip = {s: -s for s in SPHERE_COORDS}
    eqs = []
    for i, j in itertools.combinations(range(3), 2):
        diff = sp.expand(p.get(i, j) - p.get(i, j).subs(flip, simultaneous=True))
        eqs.extend(sp.Poly(diff, *SPHERE_COORDS).coeffs())
    sols = sp.solve(eqs, a_sym, dict=True)
    return sorted(Fraction(str(s[a_sym])) for s in sols)
