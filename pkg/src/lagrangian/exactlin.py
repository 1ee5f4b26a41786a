"""Exact linear algebra over the rationals and the Gaussian rationals.

Vectors are tuples, matrices are tuples of row tuples.  A matrix acts on
column vectors: ``(M v)[i] = sum_j M[i][j] v[j]``.  Subspaces are stored in
reduced row-echelon form, so two subspaces are equal as sets exactly when
their ``Subspace`` values compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


class AmbientMismatch(ValueError):
    """Two objects live in ambient spaces of different dimension."""


class SingularError(ValueError):
    """A matrix or form that must be invertible is not."""


def Q(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class GaussScalar:
    """An element ``re + i*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Q(re)
        self.im = Q(im)

    @staticmethod
    def lift(x) -> "GaussScalar":
        if isinstance(x, GaussScalar):
            return x
        return GaussScalar(x, 0)

    def conjugate(self) -> "GaussScalar":
        return GaussScalar(self.re, -self.im)

    def __add__(self, other):
        o = GaussScalar.lift(other)
        return GaussScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussScalar(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussScalar.lift(other)
        return GaussScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussScalar.lift(other) - self

    def __mul__(self, other):
        o = GaussScalar.lift(other)
        return GaussScalar(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussScalar division by zero")
        return GaussScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussScalar.lift(other).inverse()

    def __rtruediv__(self, other):
        return GaussScalar.lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussScalar):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussScalar({self.re}, {self.im})"


I_UNIT = GaussScalar(0, 1)


def frac_str(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, dropping ``/1``."""
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_json(x):
    if isinstance(x, GaussScalar):
        return [frac_str(x.re), frac_str(x.im)]
    return frac_str(x)


def matrix_json(rows) -> list:
    return [[scalar_json(x) for x in row] for row in rows]


# ---------------------------------------------------------------- matrices

def zeros(m: int, n: int, zero=Fraction(0)):
    return [[zero] * n for _ in range(m)]


def zeros_t(m: int, n: int | None = None):
    """Immutable m x n zero matrix (square by default)."""
    n = m if n is None else n
    return tuple((Fraction(0),) * n for _ in range(m))


def identity(n: int, one=Fraction(1), zero=Fraction(0)):
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_vec(M, v):
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in M)


def vec_mat(v, M):
    """Row vector times matrix."""
    n = len(M[0]) if M else 0
    out = [Fraction(0)] * n
    for vi, row in zip(v, M):
        if vi:
            for j, a in enumerate(row):
                if a:
                    out[j] += vi * a
    return tuple(out)


def mat_mul(A, B):
    Bt = list(zip(*B)) if B else []
    return tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0))
                       for col in Bt) for row in A)


def transpose(M):
    return tuple(zip(*M)) if M else ()


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A):
    return tuple(tuple(c * a for a in row) for row in A)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def is_zero_vec(v) -> bool:
    return not any(v)


def rref(rows: Iterable[Sequence], ncols: int):
    """Reduced row-echelon form; returns (rows, pivot columns)."""
    M = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(M):
            break
        p = None
        for i in range(r, len(M)):
            if M[i][c]:
                p = i
                break
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        if piv != 1:
            inv = 1 / piv
            M[r] = [x * inv if x else x for x in M[r]]
        prow = M[r]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f:
                    row = M[i]
                    M[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(M, ncols: int, zero=Fraction(0), one=Fraction(1)):
    """Basis (as rows) of {x : M x = 0}."""
    R, pivots = rref(M, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(A, b, ncols: int):
    """One solution x of A x = b, or None if inconsistent."""
    aug = [tuple(row) + (bi,) for row, bi in zip(A, b)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    zero = Fraction(0)
    for row in R:
        if any(isinstance(v, GaussScalar) for v in row):
            zero = GaussScalar(0)
            break
    x = [zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def inverse(M):
    n = len(M)
    one, zero = Fraction(1), Fraction(0)
    aug = [tuple(row) + tuple(one if i == j else zero for j in range(n))
           for i, row in enumerate(M)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def det(M) -> Fraction:
    n = len(M)
    A = [list(r) for r in M]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True)
class Subspace:
    """A linear subspace of K^ambient_dim in canonical echelon form."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length differs from ambient dimension")
        if not any(v):
            return True
        return rank(list(self.basis) + [tuple(v)], self.ambient_dim) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, v):
        """Coefficients c with v = sum c_i basis_i, or None if v is outside."""
        pivots = self.pivots()
        c = tuple(v[p] for p in pivots)
        back = combine(c, self.basis, self.ambient_dim, _zero_like(v))
        if tuple(back) != tuple(v):
            return None
        return c

    def pivots(self):
        out = []
        for row in self.basis:
            out.append(next(i for i, x in enumerate(row) if x))
        return out

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": matrix_json(self.basis)}


def _zero_like(v):
    for x in v:
        if isinstance(x, GaussScalar):
            return GaussScalar(0)
    return Fraction(0)


def combine(coeffs, vectors, n, zero=Fraction(0)):
    out = [zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = out[j] + c * x
    return tuple(out)


def canonicalize(raw_basis, ambient_dim: int | None = None) -> Subspace:
    raw = [tuple(r) for r in raw_basis]
    if ambient_dim is None:
        if not raw:
            raise ValueError("ambient_dim required for an empty basis")
        ambient_dim = len(raw[0])
    for r in raw:
        if len(r) != ambient_dim:
            raise AmbientMismatch("row width differs from ambient dimension")
    R, _ = rref(raw, ambient_dim)
    return Subspace(ambient_dim, tuple(R))


def span(vectors, ambient_dim: int) -> Subspace:
    return canonicalize(list(vectors), ambient_dim)


def zero_space(n: int) -> Subspace:
    return Subspace(n, ())


def full_space(n: int, one=Fraction(1), zero=Fraction(0)) -> Subspace:
    return Subspace(n, identity(n, one, zero))


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient {a.ambient_dim} != {b.ambient_dim}")


def subspace_sum(a: Subspace, *others: Subspace) -> Subspace:
    rows = list(a.basis)
    for b in others:
        _check_same(a, b)
        rows.extend(b.basis)
    return canonicalize(rows, a.ambient_dim)


def _unit(v):
    for x in v:
        if isinstance(x, GaussScalar):
            return GaussScalar(1), GaussScalar(0)
    return Fraction(1), Fraction(0)


def _units_of(*spaces):
    for s in spaces:
        for row in s.basis:
            return _unit(row)
    return Fraction(1), Fraction(0)


def dual_annihilator(v: Subspace) -> Subspace:
    """Annihilator under the standard dot pairing, as a subspace of coordinates."""
    one, zero = _units_of(v)
    return canonicalize(nullspace(v.basis, v.ambient_dim, zero, one), v.ambient_dim) \
        if v.dim else full_space(v.ambient_dim, one, zero)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return zero_space(n)
    if a.dim == n:
        return b
    if b.dim == n:
        return a
    one, zero = _units_of(a, b)
    eqs = list(dual_annihilator(a).basis) + list(dual_annihilator(b).basis)
    return canonicalize(nullspace(eqs, n, zero, one), n)


@dataclass(frozen=True)
class BilinearForm:
    """A bilinear form given by its Gram matrix."""

    ambient_dim: int
    gram: tuple

    @staticmethod
    def from_rows(rows) -> "BilinearForm":
        g = tuple(tuple(Q(x) if not isinstance(x, GaussScalar) else x for x in r) for r in rows)
        return BilinearForm(len(g), g)

    def __call__(self, u, v):
        return dot(u, mat_vec(self.gram, v))

    def is_symmetric(self) -> bool:
        n = self.ambient_dim
        return all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(i))

    def is_nondegenerate(self) -> bool:
        return rank(self.gram, self.ambient_dim) == self.ambient_dim

    def restricted(self, v: Subspace):
        return tuple(tuple(self(x, y) for y in v.basis) for x in v.basis)

    def scaled(self, c) -> "BilinearForm":
        return BilinearForm(self.ambient_dim, mat_scale(c, self.gram))

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "gram": matrix_json(self.gram)}


def annihilator(v: Subspace, pairing: BilinearForm | None = None) -> Subspace:
    """Annihilator of ``v``.

    With ``pairing=None`` the result lives in dual coordinates (standard dot
    pairing).  With a form ``B`` it is ``{x : B(w, x) = 0 for all w in v}``.
    """
    if pairing is None:
        return dual_annihilator(v)
    if pairing.ambient_dim != v.ambient_dim:
        raise AmbientMismatch("form and subspace ambient dims differ")
    if not pairing.is_nondegenerate():
        raise SingularError("annihilator needs a nondegenerate pairing")
    return orthogonal(v, pairing)


def orthogonal(v: Subspace, form: BilinearForm) -> Subspace:
    n = v.ambient_dim
    if v.dim == 0:
        one, zero = _unit(form.gram[0]) if n else (Fraction(1), Fraction(0))
        return full_space(n, one, zero)
    one, zero = _units_of(v)
    rows = [vec_mat(w, form.gram) for w in v.basis]
    return canonicalize(nullspace(rows, n, zero, one), n)


def is_isotropic(v: Subspace, form: BilinearForm) -> bool:
    return all(form(x, y) == 0 for i, x in enumerate(v.basis) for y in v.basis[i:])


def inertia(gram) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational matrix."""
    n = len(gram)
    A = [list(map(Q, r)) for r in gram]
    pos = neg = 0
    active = list(range(n))
    while active:
        # find a nonzero diagonal entry, or create one from an off-diagonal
        i = next((k for k in active if A[k][k] != 0), None)
        if i is None:
            pair = next(((k, m) for k in active for m in active if k != m and A[k][m] != 0), None)
            if pair is None:
                break
            k, m = pair
            # x_k += x_m congruence makes A[k][k] = 2 A[k][m] + A[m][m] != 0
            for r in range(n):
                A[r][k] += A[r][m]
            for c in range(n):
                A[k][c] += A[m][c]
            i = k
        piv = A[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for r in active:
            f = A[r][i] / piv
            if f:
                for c in range(n):
                    A[r][c] -= f * A[i][c]
        for r in active:
            A[r][i] = Fraction(0)
            A[i][r] = Fraction(0)
    return pos, neg, n - pos - neg


def image(M, v: Subspace, out_dim: int | None = None) -> Subspace:
    """Image of a subspace under a linear map given as a matrix on columns."""
    if out_dim is None:
        out_dim = len(M)
    return canonicalize([mat_vec(M, w) for w in v.basis], out_dim)


def preimage(M, v: Subspace) -> Subspace:
    """{x : M x in v}."""
    n = len(M[0])
    eqs = [vec_mat(a, M) for a in dual_annihilator(v).basis]
    if not eqs:
        return full_space(n)
    return canonicalize(nullspace(eqs, n), n)


def fixed_space(M, within: Subspace | None = None) -> Subspace:
    """{x in within : M x = x}."""
    n = len(M)
    if within is None:
        within = full_space(n)
    B = within.basis
    # coefficients c with (M - I) sum c_i b_i = 0
    cols = [vec_sub(mat_vec(M, b), b) for b in B]
    eqs = transpose(cols) if cols else ()
    coeffs = nullspace(eqs, len(B)) if B else []
    return canonicalize([combine(c, B, n) for c in coeffs], n)


def complement_basis(sub: Subspace, whole: Subspace):
    """Vectors from ``whole``'s basis completing ``sub`` to a basis of ``whole``."""
    out = []
    cur = list(sub.basis)
    r = len(cur)
    for w in whole.basis:
        if rank(cur + [w], whole.ambient_dim) > r:
            cur.append(w)
            out.append(w)
            r += 1
    return out
