from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from recurlab.errors import NotPrime, ZeroOrNegative
from recurlab.qplus import ONE, PosRational

small = st.integers(1, 10**6)
rationals = st.builds(PosRational.from_fraction, small, small)


def q(s):
    return PosRational.parse(s)


def test_from_fraction_examples():
    assert PosRational.from_fraction(1, 1).factors == ()
    assert PosRational.from_fraction(6, 4).factors == ((2, -1), (3, 1))
    assert PosRational.from_fraction(25, 9).factors == ((3, -2), (5, 2))


def test_from_fraction_rejects_zero():
    with pytest.raises(ZeroOrNegative):
        PosRational.from_fraction(0, 3)
    with pytest.raises(ZeroOrNegative):
        PosRational.from_fraction(3, 0)
    with pytest.raises(ZeroOrNegative):
        PosRational.from_fraction(-3, 2)


def test_group_examples():
    assert q("3/2").mul(q("2/3")) == ONE
    assert q("5/4").pow(2) == q("25/16")
    assert q("7/9").pow(0) == ONE


def test_nth_root_examples():
    assert q("25/16").nth_root(2) == q("5/4")
    assert q("8").nth_root(3) == q("2")
    assert q("2").nth_root(2) is None


def test_valuation_examples():
    assert q("3/2").valuation(2) == -1
    assert ONE.valuation(7) == 0
    assert q("72").valuation(3) == 2
    with pytest.raises(NotPrime):
        q("72").valuation(6)


def test_text_forms():
    r = q("12/18")
    assert str(r) == "2/3"
    assert r.factored() == "2^1 * 3^-1"
    assert r.to_fraction() == Fraction(2, 3)
    assert PosRational.parse(str(r)) == r


def test_round_trip_grid():
    for n in range(1, 10**4 + 1, 37):
        for d in range(1, 10**4 + 1, 41):
            assert PosRational.from_fraction(n, d).to_fraction() == Fraction(n, d)


@given(rationals, rationals, rationals)
def test_mul_associative_commutative(a, b, c):
    assert a.mul(b) == b.mul(a)
    assert a.mul(b).mul(c) == a.mul(b.mul(c))


@given(rationals, st.integers(-20, 20), st.integers(-20, 20))
def test_pow_adds_exponents(r, a, b):
    assert r.pow(a + b) == r.pow(a).mul(r.pow(b))


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), max_size=4, unique=True),
       st.lists(st.integers(-6, 6).filter(bool), min_size=4, max_size=4), st.integers(1, 5))
def test_nth_root_inverts_pow(primes, exps, ell):
    r = PosRational.from_factors(dict(zip(primes, exps)))
    assert r.pow(ell).nth_root(ell) == r


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7, 101]))
def test_valuation_additive(a, b, p):
    assert a.mul(b).valuation(p) == a.valuation(p) + b.valuation(p)


@given(rationals)
def test_matches_fraction_arithmetic(r):
    f = r.to_fraction()
    assert r.inverse().to_fraction() == 1 / f
    assert r.pow(3).to_fraction() == f**3
