from fractions import Fraction
from math import isqrt

import pytest

from recurlab.colorings import identity_system, valuation_system
from recurlab.density import (FolnerIndex, SparseSemigroupSchedule, additive_prefix_density,
                              finite_system_recurrence_average, folner_density, prefix_envelope,
                              ratio_experiment, syndetic_additive_average, syndetic_check,
                              upper_mult_density)
from recurlab.errors import BudgetExceeded, EmptyPrefix


def is_sq(n):
    return isqrt(n) ** 2 == n


def test_folner_members():
    F = FolnerIndex(6)
    # 6! = 2^4 3^2 5
    assert F.size == 30 and F.members()[:6] == [1, 2, 3, 4, 5, 6]
    assert all(720 % x == 0 for x in F.members())
    assert len(set(F.members())) == 30 and 720 in F and 7 not in F
    with pytest.raises(BudgetExceeded):
        FolnerIndex(40, cap=10**6)


def test_upper_density_examples():
    assert upper_mult_density(lambda n: True, [6, 10, 12]) == 1
    assert folner_density(lambda n: n % 2 == 1, 12) <= Fraction(1, 10)
    assert folner_density(lambda n: n % 3 == 0, 12) >= Fraction(2, 5)


def test_folner_invariance():
    for N in (8, 10, 12):
        F = FolnerIndex(N)
        e2 = dict(F.exponents)[2]
        ratio = F.invariance_ratio(2)
        brute = Fraction(sum(1 for x in F.members() if 2 * x in F), F.size)
        assert ratio == brute
        assert ratio >= 1 - Fraction(2, 1 + e2)
        assert F.invariance_ratio(3) == Fraction(sum(1 for x in F.members() if 3 * x in F), F.size)


def test_prefix_examples():
    assert additive_prefix_density(lambda n: n % 2 == 0, 1000) == Fraction(1, 2)
    assert additive_prefix_density(is_sq, 10**4) == Fraction(1, 100)
    assert additive_prefix_density(lambda n: False, 50) == 0


def test_prefix_envelope_monotone_counts():
    env = prefix_envelope(lambda n: n % 7 in (1, 2), [10, 100, 35, 1000])
    counts = [c for _, c, _ in env]
    assert [N for N, _, _ in env] == [10, 35, 100, 1000]
    assert counts == sorted(counts)
    assert env[-1][2] == additive_prefix_density(lambda n: n % 7 in (1, 2), 1000)


def test_syndetic_examples():
    assert syndetic_check(lambda n: n % 3 == 0, lambda n: True, 10, 500) == (1, 3)
    assert syndetic_check(lambda n: n % 2 == 1, lambda n: n % 2 == 1, 10, 500) == (1,)
    assert syndetic_check(lambda n: n == 1, lambda n: True, 50, 100) is None


def test_syndetic_average_lower_bound():
    cases = [(lambda n: n % 3 == 0, 10), (lambda n: n % 5 in (0, 2), 10)]
    for S, fb in cases:
        F = syndetic_check(S, lambda n: True, fb, 400)
        assert F is not None
        K = max(F)
        for N in (K * K, 1000, 5000):
            assert syndetic_additive_average(S, lambda n: True, N) >= Fraction(1, len(F) * K)


def test_syndetic_average_examples():
    assert abs(syndetic_additive_average(lambda n: n % 3 == 0, lambda n: True, 10**4) - Fraction(1, 3)) < 0.001
    assert syndetic_additive_average(is_sq, is_sq, 500) == 1
    small = syndetic_additive_average(lambda n: is_sq(isqrt(n)) and is_sq(n), is_sq, 10**6)
    assert small == Fraction(31, 1000)
    with pytest.raises(EmptyPrefix):
        syndetic_additive_average(lambda n: True, lambda n: n > 100, 50)


def test_ratio_examples():
    nat = ratio_experiment(SparseSemigroupSchedule("naturals"), [10, 100, 1000])
    assert all(r == Fraction(1, 2) for *_, r in nat)
    (N, a, b, r), = ratio_experiment(SparseSemigroupSchedule("squares"), [10**6])
    assert (a, b) == (1000, isqrt(2 * 10**6))
    assert abs(float(r) - 2 ** -0.5) < 0.01
    (_, _, _, r), = ratio_experiment(SparseSemigroupSchedule("schedule", (10, 10**4)), [10**4])
    assert r < Fraction(15, 100)


def test_schedule_closure_matches_brute_force():
    sched = SparseSemigroupSchedule("schedule", (3, 20))
    gens = [p for p in (3, 5, 23, 29, 31, 37)]
    G = sched.closure(5000).tolist()

    def in_G(n):
        for p in gens:
            while n % p == 0:
                n //= p
        return n == 1

    assert G == [n for n in range(1, 5001) if in_G(n)]
    for N, a, b, r in ratio_experiment(sched, [7, 50, 300, 2500]):
        assert 0 < r <= 1 and a == sum(1 for g in G if g <= N)


def test_schedule_validation():
    with pytest.raises(ValueError):
        SparseSemigroupSchedule("schedule", (10, 5))


def test_system_average_examples():
    assert finite_system_recurrence_average(identity_system(4), [0, 2], lambda n: True, 100) == Fraction(1, 2)
    sys = valuation_system(2, 2)
    v = finite_system_recurrence_average(sys, [0], lambda n: True, 10**5)
    brute = sum(1 for n in range(1, 10**5 + 1) if ((n & -n).bit_length() - 1) % 2 == 0)
    assert v == Fraction(brute, 2 * 10**5)
    assert abs(v - Fraction(1, 3)) < 0.01
    assert finite_system_recurrence_average(sys, [0], lambda n: n % 2, 1000) == Fraction(1, 2)
