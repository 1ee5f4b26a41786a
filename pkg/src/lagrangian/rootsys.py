"""Root systems, Weyl groups, diagram involutions and extended signatures.

Roots are integer tuples in simple-root coordinates.  Simple roots are
indexed from 0 internally.  The Cartan matrix uses ``A[i][j] = <alpha_j, h_i>``
(the value of alpha_j on the coroot h_i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactlin import inverse


class CapabilityError(ValueError):
    """The request is outside what this library supports."""


def cartan_matrix(kind: str, rank: int):
    kind = kind.upper()
    if rank < 1:
        raise CapabilityError("rank must be positive")
    A = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        A[i][i] = 2
    for i in range(rank - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    if kind == "A":
        pass
    elif kind == "D":
        if rank < 4:
            raise CapabilityError("type D needs rank >= 4")
        A[rank - 2][rank - 1] = A[rank - 1][rank - 2] = 0
        A[rank - 3][rank - 1] = A[rank - 1][rank - 3] = -1
    else:
        raise CapabilityError(f"type {kind} is not supported (only simply laced A, D)")
    return tuple(tuple(r) for r in A)


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: tuple
    roots: tuple
    positives: tuple

    @property
    def simples(self):
        return tuple(tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank))

    @property
    def negatives(self):
        return tuple(neg(a) for a in self.positives)

    def index(self, alpha) -> int:
        return self.roots.index(tuple(alpha))

    def is_root(self, alpha) -> bool:
        return tuple(alpha) in self._root_set

    @property
    def _root_set(self):
        return frozenset(self.roots)

    def pairing(self, alpha, i: int) -> int:
        """alpha(h_i) = <alpha, alpha_i^vee>."""
        return sum(m * self.cartan[i][j] for j, m in enumerate(alpha))

    def inner(self, alpha, beta) -> int:
        """Invariant form normalized so that (alpha, alpha) = 2 for every root."""
        return sum(a * self.cartan[i][j] * b
                   for i, a in enumerate(alpha) if a
                   for j, b in enumerate(beta) if b)

    def reflect(self, alpha, beta):
        """s_alpha(beta)."""
        c = self.inner(beta, alpha)  # simply laced: <beta, alpha^vee> = (beta, alpha)
        return tuple(b - c * a for a, b in zip(alpha, beta))

    def simple_reflect(self, i: int, beta):
        c = self.pairing(beta, i)
        return tuple(b - (c if j == i else 0) for j, b in enumerate(beta))

    def height(self, alpha) -> int:
        return sum(alpha)

    def to_json(self) -> dict:
        return {"type": self.kind, "rank": self.rank,
                "cartan": [list(r) for r in self.cartan],
                "roots": [list(a) for a in self.roots],
                "positives": [list(a) for a in self.positives]}


def neg(alpha):
    return tuple(-a for a in alpha)


def add(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def build_root_system(kind: str, rank: int) -> RootSystem:
    kind = kind.upper()
    C = cartan_matrix(kind, rank)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                c = sum(m * C[i][j] for j, m in enumerate(beta))
                gamma = tuple(b - (c if j == i else 0) for j, b in enumerate(beta))
                if gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    pos = sorted((a for a in found if all(x >= 0 for x in a)), key=lambda a: (sum(a), tuple(-x for x in a)))
    negs = [neg(a) for a in pos]
    if len(pos) + len(negs) != len(found):
        raise CapabilityError("reflection closure produced mixed-sign roots")
    return RootSystem(kind, rank, C, tuple(pos) + tuple(negs), tuple(pos))


def parse_algebra(name: str) -> tuple[str, int]:
    """'A2' -> ('A', 2); also accepts 'sl3'."""
    s = name.strip()
    if s.lower().startswith("sl"):
        n = int(s[2:])
        return "A", n - 1
    if len(s) < 2 or not s[1:].isdigit():
        raise CapabilityError(f"cannot parse algebra name {name!r}")
    return s[0].upper(), int(s[1:])


# ---------------------------------------------------------------- coweights

def fundamental_coweights(rs: RootSystem):
    """Rows c_j with hcheck_j = sum_k c_j[k] h_k and alpha_i(hcheck_j) = delta_ij."""
    # alpha_i(h_k) = A[k][i]; need sum_k c_jk A[k][i] = delta_ij, i.e. C A = I
    A = [[Fraction(x) for x in row] for row in rs.cartan]
    return inverse(A)


def coweight_values(rs: RootSystem, H):
    """Values alpha_i(H) of an element H = sum_k H[k] h_k."""
    return tuple(sum(Fraction(H[k]) * rs.cartan[k][i] for k in range(rs.rank)) for i in range(rs.rank))


def root_value(alpha, simple_values):
    """alpha(H) given the simple values alpha_i(H)."""
    return sum(m * v for m, v in zip(alpha, simple_values))


# ---------------------------------------------------------------- diagrams

@dataclass(frozen=True)
class DiagramInvolution:
    perm: tuple

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def on_root(self, alpha):
        out = [0] * len(alpha)
        for i, m in enumerate(alpha):
            out[self.perm[i]] = m
        return tuple(out)

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))

    def orbits(self):
        seen, out = set(), []
        for i in range(len(self.perm)):
            if i not in seen:
                o = tuple(sorted({i, self.perm[i]}))
                seen.update(o)
                out.append(o)
        return out


def identity_involution(rank: int) -> DiagramInvolution:
    return DiagramInvolution(tuple(range(rank)))


def check_involution(rs: RootSystem, d: DiagramInvolution, S=None):
    idx = range(rs.rank) if S is None else sorted(S)
    p = d.perm
    for i in idx:
        if p[p[i]] != i:
            raise ValueError("diagram map is not an involution")
        if S is not None and p[i] not in S:
            raise ValueError("diagram map does not preserve S")
    for i in idx:
        for j in idx:
            if rs.cartan[p[i]][p[j]] != rs.cartan[i][j]:
                raise ValueError("diagram map does not preserve the Cartan matrix")


def diagram_involutions(rs: RootSystem, S=None):
    """All involutive automorphisms of the Dynkin diagram restricted to S.

    Indices outside S are fixed.
    """
    S = tuple(range(rs.rank)) if S is None else tuple(sorted(S))
    out = []
    for image in itertools.permutations(S):
        m = dict(zip(S, image))
        if any(m[m[i]] != i for i in S):
            continue
        if any(rs.cartan[m[i]][m[j]] != rs.cartan[i][j] for i in S for j in S):
            continue
        out.append(DiagramInvolution(tuple(m.get(i, i) for i in range(rs.rank))))
    out.sort(key=lambda d: (not d.is_identity, d.perm))
    return out


def flip_involution(rs: RootSystem) -> DiagramInvolution:
    """The nontrivial involution of an A_n diagram."""
    if rs.kind != "A" or rs.rank < 2:
        raise CapabilityError("flip needs type A of rank >= 2")
    return DiagramInvolution(tuple(reversed(range(rs.rank))))


def parse_diagram(rs: RootSystem, name: str | None) -> DiagramInvolution:
    if name in (None, "", "id", "identity"):
        return identity_involution(rs.rank)
    if name == "flip":
        return flip_involution(rs)
    perm = tuple(int(x) for x in name.split(","))
    d = DiagramInvolution(perm)
    check_involution(rs, d)
    return d


# ---------------------------------------------------------------- signatures

@dataclass(frozen=True)
class ExtendedSignature:
    values: tuple
    d: DiagramInvolution

    def __post_init__(self):
        if len(self.values) != len(self.d.perm):
            raise ValueError("signature length differs from rank")
        for v in self.values:
            if v not in (-1, 0, 1):
                raise ValueError("signature values must lie in {-1,0,1}")
        for i, v in enumerate(self.values):
            if self.values[self.d(i)] != v:
                raise ValueError("signature is not constant on diagram orbits")

    @property
    def support(self):
        return tuple(i for i, v in enumerate(self.values) if v != 0)

    @property
    def nowhere_zero(self) -> bool:
        return all(v != 0 for v in self.values)

    def to_json(self):
        return {"values": list(self.values), "d": list(self.d.perm)}


def signature(values, d: DiagramInvolution | None = None) -> ExtendedSignature:
    values = tuple(int(v) for v in values)
    if d is None:
        d = identity_involution(len(values))
    return ExtendedSignature(values, d)


def parse_signature(text: str, rank: int, d: DiagramInvolution | None = None) -> ExtendedSignature:
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1, "0": 0}
    parts = [p.strip() for p in text.split(",")]
    try:
        vals = [table[p] for p in parts]
    except KeyError as exc:
        raise ValueError(f"bad signature entry {exc}") from None
    if len(vals) != rank:
        raise ValueError("signature length differs from rank")
    return signature(vals, d or identity_involution(rank))


def sigma_value(sig: ExtendedSignature, alpha) -> int:
    out = 1
    for v, m in zip(sig.values, alpha):
        if m == 0:
            continue
        if v == 0:
            return 0
        if v == -1 and m % 2:
            out = -out
    return out


def rho1_check(sig: ExtendedSignature):
    """Simple values alpha_i(rho1) for rho1 = sum of coweights where sigma = -1."""
    return tuple(1 if v == -1 else 0 for v in sig.values)


def in_span(alpha, S) -> bool:
    S = set(S)
    return all(m == 0 or i in S for i, m in enumerate(alpha))


def roots_in_span(rs: RootSystem, S):
    return tuple(a for a in rs.roots if in_span(a, S))


def signature_sets(rs: RootSystem, sig: ExtendedSignature):
    S = sig.support
    supp = tuple(a for a in rs.roots if sigma_value(sig, a) != 0)
    sigma_plus = tuple(a for a in supp if sigma_value(sig, a) == 1)
    return S, sigma_plus, supp


def enumerate_extended_signatures(rs: RootSystem, d: DiagramInvolution | None = None):
    d = d or identity_involution(rs.rank)
    orbits = d.orbits()
    out = []
    for choice in itertools.product((-1, 0, 1), repeat=len(orbits)):
        vals = [0] * rs.rank
        for o, v in zip(orbits, choice):
            for i in o:
                vals[i] = v
        out.append(ExtendedSignature(tuple(vals), d))
    return out


# ---------------------------------------------------------------- Weyl group

MAX_WEYL = 100_000


@dataclass(frozen=True)
class WeylElement:
    """An element acting on the root list by a permutation of indices."""

    perm: tuple

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(r) = self(other(r))
        return WeylElement(tuple(self.perm[j] for j in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(tuple(inv))


@dataclass(frozen=True)
class WeylGroup:
    rs: RootSystem
    elements: tuple
    generators: tuple = field(default=())

    def __len__(self):
        return len(self.elements)

    def act(self, w: WeylElement, alpha):
        return self.rs.roots[w.perm[self.rs.index(alpha)]]

    def contains(self, w) -> bool:
        return w in set(self.elements)


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(range(len(rs.roots))))


def reflection_element(rs: RootSystem, alpha) -> WeylElement:
    return WeylElement(tuple(rs.index(rs.reflect(alpha, b)) for b in rs.roots))


def generate_group(rs: RootSystem, gens) -> WeylGroup:
    gens = tuple(gens)
    e = identity_element(rs)
    seen = {e}
    order = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                x = s * w
                if x not in seen:
                    seen.add(x)
                    order.append(x)
                    nxt.append(x)
                    if len(seen) > MAX_WEYL:
                        raise CapabilityError("Weyl group enumeration budget exceeded")
        frontier = nxt
    return WeylGroup(rs, tuple(order), gens)


def weyl_enumerate(rs: RootSystem) -> WeylGroup:
    return generate_group(rs, [reflection_element(rs, a) for a in rs.simples])


def subgroup_W_sigma(rs: RootSystem, sig: ExtendedSignature) -> WeylGroup:
    return generate_group(rs, [reflection_element(rs, rs.simples[i]) for i in sig.support])


def W0_sigma(rs: RootSystem, sig: ExtendedSignature) -> WeylGroup:
    Wsig = subgroup_W_sigma(rs, sig)
    _, sigma_plus, _ = signature_sets(rs, sig)
    target = frozenset(rs.index(a) for a in sigma_plus)
    keep = tuple(w for w in Wsig.elements if frozenset(w.perm[i] for i in target) == target)
    return WeylGroup(rs, keep, ())


def R_sigma(rs: RootSystem, sig: ExtendedSignature) -> WeylGroup:
    _, sigma_plus, _ = signature_sets(rs, sig)
    gens = [reflection_element(rs, a) for a in sigma_plus if all(x >= 0 for x in a)]
    return generate_group(rs, gens)


def is_normal(sub: WeylGroup, group: WeylGroup) -> bool:
    subset = set(sub.elements)
    gens = sub.generators or sub.elements
    return all(g * s * g.inverse() in subset for g in group.elements for s in gens)


@dataclass(frozen=True)
class QuotientGroup:
    group: WeylGroup
    normal: WeylGroup
    cosets: tuple

    @property
    def order(self) -> int:
        return len(self.cosets)


def Z_sigma(rs: RootSystem, sig: ExtendedSignature) -> QuotientGroup:
    W0 = W0_sigma(rs, sig)
    R = R_sigma(rs, sig)
    if not set(R.elements) <= set(W0.elements):
        raise AssertionError("R_sigma is not contained in W_0,sigma")
    if not is_normal(R, W0):
        raise AssertionError("R_sigma is not normal in W_0,sigma")
    seen = set()
    cosets = []
    for w in W0.elements:
        if w in seen:
            continue
        c = frozenset(w * r for r in R.elements)
        seen |= c
        cosets.append(c)
    return QuotientGroup(W0, R, tuple(cosets))


def fixes_coweight(rs: RootSystem, w: WeylElement, simple_values) -> bool:
    """True iff w H = H, where H is given by its simple values alpha_i(H).

    alpha(wH) = (w^{-1} alpha)(H), so wH = H iff (w^{-1} alpha_i)(H) = alpha_i(H).
    """
    winv = w.inverse()
    for i, a in enumerate(rs.simples):
        b = rs.roots[winv.perm[rs.index(a)]]
        if root_value(b, simple_values) != Fraction(simple_values[i]):
            return False
    return True


def W_H_sigma(rs: RootSystem, sig: ExtendedSignature, simple_values) -> WeylGroup:
    W0 = W0_sigma(rs, sig)
    keep = tuple(w for w in W0.elements if fixes_coweight(rs, w, simple_values))
    return WeylGroup(rs, keep, ())
