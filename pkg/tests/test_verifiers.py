from fractions import Fraction

import pytest

from lcverify import verifiers as V


def test_integrality_default_alphas():
    rep = V.verify_integrality()
    assert rep.passed
    assert rep.detail["square_cofactor"]


def test_integrality_rejects_repeated_alphas():
    with pytest.raises(ValueError, match="alphas not distinct"):
        V.verify_integrality(alphas=(0, 0, 1, 2))


def test_ex1_tower_depth2_constants():
    certs = V.run_ex1_tower(2)
    assert [c.epsilon for c in certs] == [Fraction(1, 2), Fraction(1, 4)]
    # the depth-2 difference-of-squares solve: beta = -1, gamma = -2
    P = certs[1].level
    rels = {str(r) for r in P.relations}
    assert "B1^2 + 1" in rels
    assert "G1^2 + 2" in rels


def test_ex1_certificates_valid():
    for cert in V.run_ex1_tower(3):
        assert cert.is_valid()
        assert cert.result.certificate.reexpand() == cert.result.target


def test_ex2_tower_certificates():
    certs = V.run_ex2_tower(3)
    assert [c.epsilon for c in certs] == [Fraction(1, 3), Fraction(1, 9),
                                          Fraction(1, 27)]
    for cert in certs:
        assert cert.is_valid()


def test_segre_lift_and_tamper_canary():
    certs = V.run_ex2_tower(2)
    assert V.verify_ex2_segre_lift(1, certs=certs).passed
    assert V.verify_ex2_segre_lift(2, certs=certs).passed
    assert V.verify_ex2_segre_lift(1, certs=certs, tamper=True).status == "FAIL"


def test_certificate_tamper_detection():
    cert = V.run_ex2_tower(1)[0]
    good = cert.result.certificate
    assert good.is_valid()
    x = good.cofactors[0].ring.var("x")
    good.cofactors[0] = good.cofactors[0] + x
    assert not good.is_valid()


def test_sqrt_nonmembership():
    rep = V.verify_sqrt_nonmembership()
    assert rep.passed
    assert str(rep.witness) == "Z^5"


def test_ex1_relation():
    rep = V.verify_ex1_relation()
    assert rep.passed
    assert str(rep.witness) == "e1"


def test_segre_presentations_sound():
    assert V.verify_segre_presentation("ex1").passed
    assert V.verify_segre_presentation("ex2").passed


def test_monomial_conjecture_trivial():
    from lcverify.presentations import present_ring
    P = present_ring(["x", "y"], [1, 1], [], "K[x,y]")
    rep = V.check_monomial_conjecture(P, ("x", "y"), 1)
    assert rep.passed  # xy outside (x^2, y^2)


def test_monomial_conjecture_fixtures():
    for which, sop in (("ex1", ("x", "y", "z + w")),
                       ("ex2", ("sx", "ty", "sy + tx"))):
        P = V.load_fixture(f"{which}R")
        for t in (1, 2):
            assert V.check_monomial_conjecture(P, sop, t).passed


def test_dagger_reports():
    rep = V.dagger_report("ex1", 3)
    assert rep.passed and rep.detail["ledger"] == "7/8"
    rep = V.dagger_report("ex2", 3)
    assert rep.passed and rep.detail["ledger"] == "13/27"
    assert "linear change of variables" in rep.detail["note"]
    assert V.dagger_report("ex1", 0).status == "SKIP"


def test_run_all_green():
    reports = V.run_all(depth=2)
    assert reports == sorted(reports, key=lambda r: r.check)
    assert all(r.status in ("PASS", "SKIP") for r in reports)
    assert sum(r.status == "PASS" for r in reports) >= 14
