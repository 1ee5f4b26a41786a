import math
from fractions import Fraction

import pytest

from lagrangian.rootsys import (CapabilityError, DiagramInvolution, W0_sigma, W_H_sigma, Z_sigma, build_root_system,
                                cartan_matrix, check_involution, coweight_values,
                                diagram_involutions, enumerate_extended_signatures,
                                flip_involution, fundamental_coweights, parse_algebra,
                                parse_signature, root_value, signature,
                                signature_sets, sigma_value, weyl_enumerate)


@pytest.mark.parametrize("kind,rank,roots,weyl", [
    ("A", 1, 2, 2), ("A", 2, 6, 6), ("A", 3, 12, 24), ("D", 4, 24, 192),
])
def test_root_and_weyl_counts(kind, rank, roots, weyl):
    rs = build_root_system(kind, rank)
    assert len(rs.roots) == roots
    # |W(A_n)| = (n+1)!, |W(D_n)| = 2^(n-1) n!
    expect = math.factorial(rank + 1) if kind == "A" else 2 ** (rank - 1) * math.factorial(rank)
    assert len(weyl_enumerate(rs)) == weyl == expect


def test_type_A_positive_roots_are_intervals():
    rs = build_root_system("A", 3)
    intervals = {tuple(1 if i <= k < j else 0 for k in range(3)) for i in range(3) for j in range(i + 1, 4)}
    assert set(rs.positives) == intervals


def test_reflections_preserve_roots():
    rs = build_root_system("D", 4)
    for i in range(4):
        assert {rs.simple_reflect(i, a) for a in rs.roots} == set(rs.roots)


def test_cartan_and_unsupported_types():
    assert [list(r) for r in cartan_matrix("A", 2)] == [[2, -1], [-1, 2]]
    with pytest.raises(CapabilityError):
        build_root_system("B", 2)
    with pytest.raises(CapabilityError):
        parse_algebra("x")
    assert parse_algebra("sl3") == ("A", 2)


def test_fundamental_coweights_are_dual():
    rs = build_root_system("A", 3)
    C = fundamental_coweights(rs)
    for j, row in enumerate(C):
        vals = coweight_values(rs, row)
        assert vals == tuple(Fraction(int(i == j)) for i in range(3))


def test_root_value_is_linear():
    assert root_value((1, 1), (2, 3)) == 5


def test_diagram_involutions():
    assert len(diagram_involutions(build_root_system("A", 2))) == 2
    assert len(diagram_involutions(build_root_system("A", 1))) == 1
    # D4: identity and the three transpositions of the outer nodes
    assert len(diagram_involutions(build_root_system("D", 4))) == 4
    rs = build_root_system("A", 3)
    assert flip_involution(rs).perm == (2, 1, 0)
    with pytest.raises(ValueError):
        check_involution(rs, DiagramInvolution((1, 0, 2)))


def test_signature_counts_and_values():
    rs = build_root_system("A", 2)
    assert len(enumerate_extended_signatures(rs)) == 9
    flip = flip_involution(rs)
    assert len(enumerate_extended_signatures(rs, flip)) == 3
    sig = parse_signature("-,-", 2)
    assert sigma_value(sig, (1, 1)) == 1
    assert sigma_value(parse_signature("+,0", 2), (1, 1)) == 0
    S, plus, supp = signature_sets(rs, sig)
    assert S == (0, 1) and set(plus) == {(1, 1), (-1, -1)}
    with pytest.raises(ValueError):
        parse_signature("+,x", 2)
    with pytest.raises(ValueError):
        parse_signature("+", 2)


def test_signature_must_be_d_constant():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        signature((1, -1), flip_involution(rs))


def test_Z_sigma_sl2():
    rs = build_root_system("A", 1)
    assert Z_sigma(rs, signature((-1,))).order == 2
    assert Z_sigma(rs, signature((1,))).order == 1
    assert Z_sigma(rs, signature((0,))).order == 1


def test_Z_sigma_sl3_divides_W0():
    rs = build_root_system("A", 2)
    for sig in enumerate_extended_signatures(rs):
        Z = Z_sigma(rs, sig)
        assert len(W0_sigma(rs, sig).elements) % Z.order == 0


def test_W_H_sigma_generic_H_is_trivial():
    rs = build_root_system("A", 2)
    sig = signature((1, 1))
    assert len(W_H_sigma(rs, sig, (1, 2)).elements) == 1
    assert len(W_H_sigma(rs, sig, (0, 0)).elements) == len(W0_sigma(rs, sig).elements)
