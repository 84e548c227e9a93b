from fractions import Fraction

import pytest

from lcverify.presentations import (PresentationError, adjoin_root,
                                    dump_presentation, load_presentation,
                                    present_ring, quotient_member)
from lcverify.verifiers import base_presentation


def test_present_quadric():
    S = present_ring(["x", "y", "z", "w"], [1, 1, 1, 1], ["x*y - z*w"], "S")
    assert S.ring.degrees == (1, 1, 1, 1)
    assert len(S.groebner().basis) == 1


def test_inhomogeneous_relation_rejected():
    with pytest.raises(PresentationError, match="inhomogeneous relation"):
        present_ring(["a", "b", "c"], [1, 1, 1],
                     ["c^2 - a*(a-b)*(a-2*b)*(a-3*b)"], "bad")


def test_trivial_ring_rejected():
    with pytest.raises(PresentationError, match="trivial ring"):
        present_ring(["w"], [0], ["w", "w - 1"], "unit")


def test_adjoin_root_degree():
    A = base_presentation("ex1")
    P = adjoin_root(A, "r1", "a", 2)
    assert P.ring.degrees[P.ring.index["r1"]] == Fraction(1, 2)
    assert P.valuation(P.ring.var("r1")) == Fraction(1, 2)


def test_adjoin_root_exponent_guard():
    A = base_presentation("ex1")
    with pytest.raises(PresentationError):
        adjoin_root(A, "r1", "a", 1)


def test_branch_identification_validated():
    A = base_presentation("ex2")
    # the honest branch passes ...
    P = A
    for name, rad in (("x1", "w*x + w^2*y"), ("y1", "w*x + w^5*y")):
        P = adjoin_root(P, name, rad, 3)
    P = adjoin_root(P, "z1", "w*x + w^8*y", 3,
                    branches=[("z", "-x1*y1*z1", 3)])
    assert P.branches
    # ... and a wrong one is refused
    Q = A
    for name, rad in (("x1", "w*x + w^2*y"), ("y1", "w*x + w^5*y")):
        Q = adjoin_root(Q, name, rad, 3)
    with pytest.raises(PresentationError, match="branch identification"):
        adjoin_root(Q, "z1", "w*x + w^8*y", 3, branches=[("z", "x1*y1*z1", 3)])


def test_quotient_member_trivial():
    S = present_ring(["x", "y", "z", "w"], [1, 1, 1, 1], ["x*y - z*w"], "S")
    res = quotient_member(S, "z", ["z"])
    assert res.inside and res.certificate.is_valid()


def test_depth_one_cube_annihilator():
    A = base_presentation("ex2")
    P = A
    for name, rad in (("x1", "w*x + w^2*y"), ("y1", "w*x + w^5*y")):
        P = adjoin_root(P, name, rad, 3)
    P = adjoin_root(P, "z1", "w*x + w^8*y", 3, branches=[("z", "-x1*y1*z1", 3)])
    res = quotient_member(P, "x1*z^2", ["x", "y"])
    assert res.inside and res.certificate.is_valid()
    # the oracle agrees
    assert P.oracle_member(P.ring.parse("x1*z^2"),
                           [P.ring.var("x"), P.ring.var("y")])


def test_depth_zero_nonmember():
    A = base_presentation("ex1")
    res = quotient_member(A, "c", ["a", "b"])
    assert not res.inside
    assert not res.witness.is_zero()
    assert not A.oracle_member(A.ring.var("c"), [A.ring.var("a"), A.ring.var("b")])


def test_constant_rules_detection():
    A = base_presentation("ex2")
    rules = A.constant_rules()
    assert len(rules) == 1
    i, e, rhs = rules[0]
    assert A.ring.names[i] == "w" and e == 6
    assert str(rhs) == "-w^3 - 1"


def test_adjunction_leading_terms_pure_powers():
    # each square/cube adjunction relation is led by its pure power
    A = base_presentation("ex1")
    P = A
    for k, al in enumerate((0, 1, 2, 3)):
        branches = [("c", "r1*r2*r3*r4", 2)] if k == 3 else []
        P = adjoin_root(P, f"r{k + 1}", A.ring.parse(f"a - {al}*b"), 2,
                        branches=branches)
    gb = P.groebner()
    lts = {g.leading_monomial() for g in gb.basis}
    rring = P.reduced()[0]
    for name in ("r1", "r2", "r3", "r4"):
        i = rring.index[name]
        pure = tuple(2 if j == i else 0 for j in range(rring.nvars))
        assert pure in lts


def test_file_round_trip(tmp_path):
    A = base_presentation("ex2")
    text = dump_presentation(A)
    B = load_presentation(text)
    assert B.label == A.label
    assert B.ring.signature == A.ring.signature
    assert list(B.relations) == list(A.relations)


def test_all_fixtures_load():
    from lcverify.verifiers import load_fixture
    for name in ("S", "B", "ex1A", "ex2A", "ex2Atilde", "ex1R", "ex2R"):
        P = load_fixture(name)
        assert P.relations is not None


def test_valuation_additivity_in_quotient():
    P = base_presentation("ex1")
    a, c = P.ring.var("a"), P.ring.var("c")
    assert P.valuation(a * c) == P.valuation(a) + P.valuation(c)
