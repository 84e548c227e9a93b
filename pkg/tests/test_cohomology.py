from fractions import Fraction

import pytest

from lcverify import cohomology as C
from lcverify.presentations import present_ring
from lcverify.verifiers import base_presentation

A1 = C.HypersurfaceDatum(1, 1, 2, 2, "ex1.A")
A2 = C.HypersurfaceDatum(1, 1, 1, 3, "ex2.A")
B = C.HypersurfaceDatum(1, 1, 1, 1, "B")


def test_hilbert_values():
    assert C.hilbert_dim(A1, 2) == 4          # a^2, ab, b^2, c
    assert C.hilbert_dim(A2, 3) == 9          # 10 cubics minus one relation
    for H in (A1, A2, B):
        assert C.hilbert_dim(H, 0) == 1
        assert C.hilbert_dim(H, -1) == 0


def test_hilbert_matches_presented_ring():
    from lcverify.linalg import graded_piece_dims
    P = base_presentation("ex1")
    for d in range(5):
        basis, span = graded_piece_dims(P.ring, d, list(P.relations))
        assert len(basis) - span.rank == C.hilbert_dim(A1, d)


def test_h2_free_basis_values():
    assert C.h2_dim_free_basis(A1, 0) == 1    # the class c/ab
    assert C.h2_dim_free_basis(A2, 0) == 1    # the class z^2/xy
    for d in (1, 2, 3):
        assert C.h2_dim_free_basis(A1, d) == 0
        assert C.h2_dim_free_basis(A2, d) == 0
    assert C.h2_dim_free_basis(B, -2) == 1    # the class 1/st
    assert all(C.h2_dim_free_basis(B, d) == 0 for d in range(0, 4))


def test_duality_symmetry():
    for H in (A1, A2, B):
        for d in range(-5, 4):
            assert C.h2_dim_duality(H, d) == C.h2_dim_free_basis(H, d)


def test_truncated_oracle():
    PB = present_ring(["s", "t"], [1, 1], [], "B")
    dim, info = C.h2_dim_truncated(PB, ("s", "t"), -2)
    assert dim == 1 and info["stable"]
    PA = base_presentation("ex1")
    assert C.h2_dim_truncated(PA, ("a", "b"), 0)[0] == 1
    assert C.h2_dim_truncated(PA, ("a", "b"), 1)[0] == 0


def test_truncated_oracle_with_constants():
    PA = base_presentation("ex2")
    assert C.h2_dim_truncated(PA, ("x", "y"), 0)[0] == 1


def test_truncated_unstable_error():
    PB = present_ring(["s", "t"], [1, 1], [], "B")
    with pytest.raises(C.Unstable, match="unstable") as e:
        C.h2_dim_truncated(PB, ("s", "t"), -2, t_max=1)
    assert len(e.value.ranks) == 1


def test_kunneth_tables():
    window = range(-4, 5)
    for A in (A1, A2):
        table = C.kunneth_h2(A, B, window)
        assert table.entries == {Fraction(n): (1 if n == 0 else 0)
                                 for n in window}
    # polynomial ring # polynomial ring: everything cancels
    poly = C.HypersurfaceDatum(1, 1, 1, 1, "K[a,b]")
    assert all(v == 0 for _, v in C.kunneth_h2(poly, B, window).pairs())


def test_kunneth_rejects_non_cm():
    bad = C.HypersurfaceDatum(1, 1, 2, 2, "bad", cohen_macaulay=False)
    with pytest.raises(ValueError, match="unsupported: non-CM factor"):
        C.kunneth_h2(bad, B, range(-1, 2))


def test_segre_dimension_law():
    # Segre graded pieces are tensor products of the factor pieces
    for n in range(0, 5):
        assert C.segre_hilbert_dim(A1, B, n) == C.hilbert_dim(A1, n) * C.hilbert_dim(B, n)
