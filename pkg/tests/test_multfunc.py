import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from recurlab.arith import big_omega
from recurlab.errors import UnlistedPrime
from recurlab.multfunc import (ArchimedeanCharacter, OmegaRoot, PrimeTable, avoidance_set,
                               cesaro_character_average, chord, evaluate, frac_n2x, liouville,
                               omega_witnesses, pythagorean_triples_in, shift_dilation_gap)

SQRT2 = lambda: mpmath.sqrt(2)  # noqa: E731


def test_evaluate_examples():
    assert evaluate(liouville(), 12).angle == Fraction(1, 2)
    for f in (liouville(), ArchimedeanCharacter(1.0), PrimeTable.of({2: Fraction(1, 3)})):
        assert evaluate(f, 1).angle == 0
    assert evaluate(ArchimedeanCharacter(1.0), 2).angle == pytest.approx(0.110318, abs=1e-6)


def test_prime_table_gaps():
    f = PrimeTable.of({2: Fraction(1, 4), 3: Fraction(1, 3)})
    assert evaluate(f, 12).angle == Fraction(5, 6)
    with pytest.raises(UnlistedPrime):
        evaluate(f, 10)


def test_gap_examples():
    assert tuple(shift_dilation_gap(OmegaRoot(1, 2), 1, 1, 10)) == (0.0, 2)
    trivial = PrimeTable.of({}, default=Fraction(0))
    assert tuple(shift_dilation_gap(trivial, 3, 2, 50)) == (0.0, 1)
    gap, n = shift_dilation_gap(ArchimedeanCharacter(1.0), 1, 1, 1000)
    assert n == 1000
    assert gap == pytest.approx(abs(2 * math.sin(math.log(1001 / 1000) / 2)), rel=1e-9)
    assert gap == pytest.approx(9.995e-4, rel=1e-3)


def test_gap_envelope_is_decreasing():
    res = shift_dilation_gap(ArchimedeanCharacter(2.5), 2, 3, 500)
    gaps = [g for _, g in res.envelope]
    assert gaps == sorted(gaps, reverse=True)
    assert res.envelope[-1] == (res.argmin, res.min_gap)


def test_omega_witness_examples():
    w = omega_witnesses(1, 1, 2, 15)
    assert {2, 9, 14} <= set(w)
    assert omega_witnesses(3, 2, 1, 40) == list(range(1, 41))
    for n in omega_witnesses(2, 1, 5, 3000):
        assert (big_omega(2 * n + 1) - big_omega(2 * n)) % 5 == 0


def test_omega_witnesses_match_brute_force():
    for a, k, q in [(1, 1, 2), (2, 3, 3), (5, 4, 4)]:
        brute = [n for n in range(1, 2001)
                 if (big_omega(a * n + k) - big_omega(a * n)) % q == 0]
        assert omega_witnesses(a, k, q, 2000) == brute


def test_gap_zero_iff_witness_for_omega_roots():
    for a, k, q in [(1, 1, 3), (2, 1, 5), (3, 2, 6), (4, 4, 4)]:
        w = omega_witnesses(a, k, q, 5000)
        gap, n = shift_dilation_gap(OmegaRoot(1, q), a, k, 5000)
        assert (gap == 0.0) == bool(w)
        if w:
            assert n == w[0]


def test_cesaro_examples():
    assert cesaro_character_average(0, 10) == 1
    z = cesaro_character_average(1.0, 10**4)
    assert abs(z) == pytest.approx(1 / math.sqrt(2), abs=0.01)


def test_cesaro_average_oscillates():
    N = 10**4
    z1 = cesaro_character_average(1.0, N)
    z2 = cesaro_character_average(1.0, round(N * math.exp(2 * math.pi)))
    # N^{it}/(1+it) returns to the same phase after scaling N by e^{2 pi}
    assert abs(cmath.phase(z1 / z2)) < 0.05
    zmid = cesaro_character_average(1.0, round(N * math.exp(math.pi)))
    assert abs(cmath.phase(z1 / zmid)) > 2.5


def test_avoidance_set_examples():
    E = avoidance_set(SQRT2, 0.1, 2000)
    assert 0.15 <= len(E) / 2000 <= 0.25
    assert pythagorean_triples_in(E) == []
    wide = avoidance_set(SQRT2, 0.2499, 500)
    assert len(wide) > 0.45 * 500
    with pytest.raises(ValueError):
        avoidance_set(SQRT2, 0.25, 10)


def test_avoidance_sum_lands_near_integers():
    delta, bits = 0.1, 192
    E = avoidance_set(SQRT2, delta, 600)
    X = frac_n2x(SQRT2, [1], bits)[0]
    scale = 1 << bits
    lo, hi = Fraction(2 * delta) * scale, (1 - Fraction(2 * delta)) * scale
    for n in E[:80]:
        for m in E[:80]:
            s = (n * n + m * m) * X % scale
            assert s <= lo or s >= hi


def test_frac_precision():
    # float64 loses all digits of frac(n^2 sqrt 2) by n ~ 1e8; the fixed-point path does not
    ns = [10**6, 10**8 + 7]
    got = frac_n2x(SQRT2, ns, 192)
    with mpmath.workprec(400):
        for n, g in zip(ns, got):
            exact = mpmath.frac(n * n * mpmath.sqrt(2))
            assert abs(mpmath.mpf(g) / 2**192 - exact) < mpmath.mpf(2) ** -100


def test_chord_exact_zero():
    assert chord(Fraction(1, 3), Fraction(4, 3)) == 0.0
    assert chord(0.0, 0.5) == pytest.approx(2.0)


@given(st.integers(1, 500), st.integers(1, 500), st.integers(-5, 5), st.integers(1, 7))
def test_omega_root_completely_multiplicative(m, n, a, q):
    f = OmegaRoot(a, q)
    lhs = evaluate(f, m * n).angle
    rhs = (evaluate(f, m).angle + evaluate(f, n).angle) % 1
    assert lhs == rhs
    assert lhs.denominator <= q


@given(st.integers(1, 500), st.integers(1, 500), st.floats(-10, 10))
def test_character_completely_multiplicative(m, n, t):
    f = ArchimedeanCharacter(t)
    a = evaluate(f, m * n).angle
    b = (evaluate(f, m).angle + evaluate(f, n).angle) % 1
    assert chord(a, b) < 1e-9


@given(st.integers(1, 500), st.integers(1, 500))
def test_prime_table_completely_multiplicative(m, n):
    f = PrimeTable.of({}, default=Fraction(2, 7))
    assert evaluate(f, m * n).angle == (evaluate(f, m).angle + evaluate(f, n).angle) % 1
