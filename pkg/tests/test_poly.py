import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lcverify.ring import INFINITY, AmbientMismatch, ParseError, Ring


def K(names, degrees):
    return Ring(tuple(names), tuple(degrees))


def test_basic_arithmetic():
    R = K("xy", [1, 1])
    x, y = R.var("x"), R.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert x - x == R.zero
    assert (x * y).scale(Fraction(1, 2)) == R.parse("1/2*x*y")
    assert -(x - y) == y - x
    assert x * R.zero == R.zero
    assert R.one * x == x


def test_constants_and_fractions():
    R = K("x", [1])
    assert R.parse("2/3") == R.const(Fraction(2, 3))
    assert R.parse("2/3*x + 1/3*x") == R.var("x")
    assert R.const(0).is_zero()


def test_ambient_mismatch():
    a = K("x", [1]).var("x")
    b = K("y", [1]).var("y")
    with pytest.raises(AmbientMismatch):
        a + b


def test_parse_errors():
    R = K("xy", [1, 1])
    for bad in ("x +", "q", "x ^ y", "(x", "x**2", "x @ y"):
        with pytest.raises(ParseError):
            R.parse(bad)


def test_parse_print_round_trip():
    rng = random.Random(7)
    R = Ring(("x", "y", "z"), (1, Fraction(1, 2), 2))
    for _ in range(60):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exp = tuple(rng.randint(0, 4) for _ in range(3))
            terms[exp] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        f = R.from_terms(terms)
        assert R.parse(str(f)) == f


def test_grading_and_valuation():
    R = Ring(("x", "y"), (Fraction(1, 2), 1))
    f = R.parse("x^2*y + y^2")
    assert f.homogeneous_degree() == 2
    g = R.parse("x + y")
    assert not g.is_homogeneous()
    assert g.valuation() == Fraction(1, 2)
    assert R.zero.valuation() == INFINITY
    assert sorted(g.degree_components()) == [Fraction(1, 2), 1]


def test_substitute():
    R = K("xyz", [1, 1, 1])
    f = R.parse("x^2 + x*y + z")
    g = f.substitute(0, R.parse("y + z"))
    assert g == R.parse("(y+z)^2 + (y+z)*y + z")


def test_block_order_constants_trail():
    # degree-0 variable should never lead against a positive-degree one
    R = Ring(("x", "w"), (1, 0))
    f = R.parse("x + w^5")
    assert f.leading_monomial() == (1, 0)
    # but a constant relation is led by its pure power
    g = R.parse("w^6 + w^3 + 1")
    assert g.leading_monomial() == (0, 6)


def test_twisted_cubic_product_identity():
    # (-xyz)^3 = -x^3 y^3 z^3 feeds the branch identification of the cube tower
    R = Ring(("x", "y", "z", "w"), (1, 1, 1, 0))
    lhs = (-(R.var("x") * R.var("y") * R.var("z"))) ** 3
    assert lhs == -(R.parse("x^3*y^3*z^3"))


coef = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def polys(ring):
    exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
    return st.dictionaries(exps, coef, max_size=5).map(ring.from_terms)


RXY = Ring(("x", "y"), (1, Fraction(1, 2)))


@settings(max_examples=150, deadline=None)
@given(polys(RXY), polys(RXY))
def test_valuation_axioms(f, g):
    vf, vg = f.valuation(), g.valuation()
    # multiplicativity (the coefficient ring is a domain)
    assert (f * g).valuation() == vf + vg
    # ultrametric bound for sums
    assert (f + g).valuation() >= min(vf, vg)


@settings(max_examples=100, deadline=None)
@given(polys(RXY), polys(RXY), polys(RXY))
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
