import itertools
import random
from fractions import Fraction

import pytest

from recurlab.colorings import find_monochromatic_ratio_pair
from recurlab.errors import DescriptorError, Unsupported
from recurlab.qplus import PosRational
from recurlab.recsets import (INCONCLUSIVE, NOT_RECURRENT, RECURRENT, UNKNOWN, ExplicitList,
                              FourLinearForms, GeometricPowers, LinearImage, MoebiusPower,
                              PolyImage, PythagHyp, PythagLeg, accumulation_check,
                              classify_linear, classify_moebius, is_divisible_poly,
                              parse_family, reduction_embeds)


def q(s):
    return PosRational.parse(s)


def test_contains_examples():
    assert PythagHyp().contains(q("5/4")).params == (2, 1)
    assert not PythagHyp().contains(q("7/5")).is_yes
    assert PythagHyp().contains(q("1")).params == (1, 1)
    assert MoebiusPower(1, 1, 1, 0, 1).contains(q("3/2")).params == (2,)
    assert PythagLeg().contains(q("4/3")).params == (2, 1)
    assert LinearImage(4, 3).contains(q("11")).params == (2,)
    assert not LinearImage(4, 3).contains(q("3")).is_yes
    assert PolyImage((9, 12, 4)).contains(q("49")).params == (2,)
    assert GeometricPowers(3, 2).contains(q("27/8")).params == (3,)
    assert ExplicitList((q("3/2"), q("5/4"))).contains(q("5/4")).is_yes


def test_fourforms_membership_is_bounded():
    fam = FourLinearForms((0, 1, 2, 3))
    m = fam.contains(fam.sample(3).__next__()[1], bound=20)
    assert m.is_yes
    assert fam.contains(q("1013/1009"), bound=20).status == INCONCLUSIVE


FAMILIES = [
    MoebiusPower(1, 1, 1, 0, 1), MoebiusPower(2, 1, 3, 1, 2), MoebiusPower(2, -3, 2, 5, 1),
    MoebiusPower(3, 0, 1, 4, 3), PythagHyp(), PythagLeg(), PolyImage((1, 0, 1)),
    PolyImage((-5, 2, 3)), PolyImage((10, -7, 1)), LinearImage(4, 3), LinearImage(3, -5),
    GeometricPowers(5, 3), ExplicitList((q("2/7"), q("9"))),
]


@pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.descriptor())
def test_contains_consistent_with_enumeration(fam):
    members = set()
    for params, r in itertools.islice(fam.sample(50), 3000):
        got = fam.contains(r)
        assert got.is_yes, (params, r)
        members.add(r)
    rng = random.Random(7)
    rejected = 0
    while rejected < 200:
        r = PosRational.from_fraction(rng.randint(1, 3000), rng.randint(1, 3000))
        if fam.contains(r).is_yes:
            continue
        rejected += 1
        assert r not in members


def test_pythag_hyp_matches_brute_force_grid():
    brute = {Fraction(m * m + n * n, 2 * m * n) for m in range(1, 120) for n in range(1, 120)}
    rng = random.Random(3)
    for _ in range(2000):
        f = Fraction(rng.randint(1, 400), rng.randint(1, 400))
        if f.numerator > 2 * 120 or f.denominator > 2 * 120:
            continue
        r = PosRational.from_fraction(f.numerator, f.denominator)
        assert PythagHyp().contains(r).is_yes == (f in brute)


def test_moebius_ray_starts_where_both_forms_are_positive():
    fam = MoebiusPower(2, -3, 2, 5, 1)
    assert fam.n0 == 2
    assert fam.value(2) == Fraction(1, 9)
    assert not fam.contains(q("1/7").inverse()).is_yes


def test_classify_examples():
    v = classify_moebius(2, 1, 3, 1, 1)
    assert (v.status, v.reason) == (NOT_RECURRENT, "limit-not-one")
    v = classify_moebius(2, 1, 2, 3, 1)
    assert (v.status, v.reason) == (NOT_RECURRENT, "padic-residue-obstruction")
    assert (v.certificate["p"], v.certificate["u"]) == (2, 2)
    assert classify_moebius(6, 3, 6, 2, 1).status == UNKNOWN
    v = classify_moebius(6, 0, 6, 2, 1)
    assert (v.status, v.reason) == (RECURRENT, "divisor-reduction")
    assert classify_moebius(3, 5, 3, 5, 2).reason == "constant-one"


def test_contains_one_short_circuits():
    v = classify_moebius(2, 1, 1, 2, 1)
    assert v.status == RECURRENT and v.reason == "contains-one" and v.certificate == {"n": 1}


def test_padic_certificates_are_live():
    for a, b, d in [(2, 1, 3), (2, 1, -1), (3, 1, 2), (4, 3, 1), (6, 1, 5), (5, 2, 3)]:
        for ell in (1, 2):
            v = classify_moebius(a, b, a, d, ell)
            if v.reason != "padic-residue-obstruction":
                continue
            rep = find_monochromatic_ratio_pair(v.certificate_coloring(),
                                                parse_family(v.family), 10**4, start=None)
            assert not rep.found, (a, b, d, ell, rep.pair)


def test_divisor_reductions_embed():
    count = 0
    for a in range(1, 7):
        for b in range(-6, 7):
            for d in range(-6, 7):
                for ell in (1, 2):
                    try:
                        v = classify_moebius(a, b, a, d, ell)
                    except ValueError:
                        continue
                    if v.reason == "divisor-reduction":
                        assert len(reduction_embeds(v, 10)) == 10
                        count += 1
    assert count > 50


def test_accumulation_examples():
    assert accumulation_check(MoebiusPower(1, 1, 1, 0, 1))
    assert not accumulation_check(MoebiusPower(2, 1, 3, 1, 1))
    assert accumulation_check(GeometricPowers(2, 1))
    with pytest.raises(Unsupported):
        accumulation_check(PythagHyp())


def test_classify_linear_examples():
    v = classify_linear(4, 3)
    assert v.status == NOT_RECURRENT and v.certificate["system"] == "units-mod"
    assert all(classify_linear(1, b).status == RECURRENT for b in range(-3, 10))
    assert classify_linear(6, 3).status == RECURRENT


def test_divisibility_examples():
    r = is_divisible_poly((6, 0, 5, 0, 1), 10)
    assert not r.divisible and r.q == 5 and r.residues == (1, 2, 2, 2, 2)
    assert is_divisible_poly((0, 1), 100).divisible
    # p n^2 (p n^2 - 1) with p = 2
    assert is_divisible_poly((0, 0, -2, 0, 4), 100).divisible


def test_parse_family_round_trip():
    for text in ["moebius:a=2,b=1,c=3,d=1,l=2", "pythag-hyp", "pythag-leg", "linear:a=4,b=3",
                 "poly:coeffs=9,12,4", "geom:p=3,q=2", "fourforms:0,1,2,3", "list:3/2,5/4"]:
        fam = parse_family(text)
        assert parse_family(fam.descriptor()).descriptor() == fam.descriptor()
    assert parse_family("moebius:a=1,b=1,c=1,d=0").l == 1


@pytest.mark.parametrize("text,pos", [("moebius:a=1,b=1,c=1", 19), ("linear:a=x,b=1", 9),
                                      ("geom:p=4,q=2", 7), ("fourforms:1,1,2,3", 10),
                                      ("poly:coeffs=0,0", 12), ("cubic", 0),
                                      ("linear:a=1,,b=2", 11)])
def test_parse_family_errors_carry_positions(text, pos):
    with pytest.raises(DescriptorError) as e:
        parse_family(text)
    assert e.value.position == pos
    assert f"position {pos}" in str(e.value)
