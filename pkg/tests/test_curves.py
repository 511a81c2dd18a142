"""Point counting on y^l = (x-1)(x^2+lambda): three methods, reduction
checks, and the quadratic-form representation used by the l=3 corollary."""

from fractions import Fraction

import pytest

from hgfq import (
    BadReductionError,
    CongruenceError,
    CurveSpec,
    UnsupportedInfinityCountError,
    brute_force_count,
    character_sum_count,
    cornacchia_3,
    count_points,
    genus,
    good_reduction,
    hasse_weil_bound,
    make_field,
    model_is_squarefree,
    reduce_lambda,
    weierstrass_count_l3,
)

import oracle_helpers as oracle

LAMBDAS = (Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-1, 2), Fraction(3, 2))


def test_curve_spec_validation():
    with pytest.raises(ValueError):
        CurveSpec(1, Fraction(1))
    with pytest.raises(ValueError):
        CurveSpec(2, Fraction(0))
    with pytest.raises(ValueError):
        CurveSpec(2, Fraction(-1))
    c = CurveSpec(3, Fraction(2, 4))
    assert c.lam == Fraction(1, 2)


def test_good_reduction_table():
    assert good_reduction(5, CurveSpec(2, Fraction(1)))
    assert not good_reduction(5, CurveSpec(5, Fraction(1)))  # p | l
    assert not good_reduction(5, CurveSpec(2, Fraction(3, 2)))  # 5 | lam+1
    assert not good_reduction(3, CurveSpec(2, Fraction(1, 3)))  # 3 | denominator
    assert not good_reduction(7, CurveSpec(2, Fraction(-8, 7)))
    assert good_reduction(7, CurveSpec(2, Fraction(1, 3)))


def test_reduce_lambda():
    f = make_field(7)
    assert reduce_lambda(f, CurveSpec(2, Fraction(1, 3))) == f.div(1, 3)
    with pytest.raises(BadReductionError):
        reduce_lambda(make_field(3), CurveSpec(2, Fraction(1, 3)))


def test_counts_match_naive_oracle():
    for p in (5, 7, 11, 13):
        f = make_field(p)
        for l in (2, 3, 5):
            if (p - 1) % l:
                continue
            for lam in LAMBDAS:
                curve = CurveSpec(l, lam)
                if not good_reduction(p, curve):
                    continue
                if l == 3 and p % 3 != 1:
                    continue
                want = oracle.count_affine(p, l, lam.numerator, lam.denominator)
                assert brute_force_count(f, curve).affine == want
                assert character_sum_count(f, curve).affine == want


def test_brute_and_charsum_agree_on_extension_fields():
    for p, e in ((3, 2), (5, 2), (7, 2)):
        f = make_field(p, e)
        for l in (2, 4):
            if f.m % l:
                continue
            for lam in (Fraction(1), Fraction(2)):
                curve = CurveSpec(l, lam)
                if not good_reduction(p, curve):
                    continue
                b = brute_force_count(f, curve)
                s = character_sum_count(f, curve)
                assert (b.affine, b.projective, b.a_q) == (
                    s.affine,
                    s.projective,
                    s.a_q,
                )


def test_projective_closure_and_trace():
    f = make_field(13)
    pc = brute_force_count(f, CurveSpec(2, Fraction(1)))
    assert pc.projective == pc.affine + 1
    assert pc.a_q == 1 + f.q - pc.projective
    pc3 = brute_force_count(f, CurveSpec(3, Fraction(1)))
    assert pc3.projective == pc3.affine + 3


def test_l3_needs_p_1_mod_3_for_infinity():
    f = make_field(5)
    with pytest.raises(UnsupportedInfinityCountError):
        brute_force_count(f, CurveSpec(3, Fraction(1)))
    f2 = make_field(5, 2)  # q = 25 = 1 mod 3 but p = 5 = 2 mod 3
    with pytest.raises(UnsupportedInfinityCountError):
        brute_force_count(f2, CurveSpec(3, Fraction(1)))


def test_charsum_congruence_requirement():
    f = make_field(7)
    with pytest.raises(CongruenceError):
        character_sum_count(f, CurveSpec(5, Fraction(1)))


def test_weierstrass_model_agrees():
    for p in (7, 13, 19, 31):
        f = make_field(p)
        for lam in LAMBDAS:
            curve = CurveSpec(3, lam)
            if not good_reduction(p, curve):
                continue
            assert weierstrass_count_l3(f, curve).a_q == brute_force_count(f, curve).a_q
    with pytest.raises(ValueError):
        weierstrass_count_l3(make_field(7), CurveSpec(2, Fraction(1)))


def test_count_points_methods():
    f = make_field(13)
    curve = CurveSpec(2, Fraction(2))
    b = count_points(f, curve, "brute")
    c = count_points(f, curve, "charsum")
    both = count_points(f, curve, "both")
    assert b == c == both
    with pytest.raises(ValueError):
        count_points(f, curve, "guess")


def test_genus_and_hasse_weil():
    assert genus(2) == 1
    assert genus(3) == 1
    assert genus(4) == 3
    assert genus(5) == 4
    assert genus(6) == 4
    assert genus(7) == 6
    for p in (5, 7, 11, 13, 17):
        f = make_field(p)
        for l in (2, 3):
            if (p - 1) % l or (l == 3 and p % 3 != 1):
                continue
            for lam in LAMBDAS:
                curve = CurveSpec(l, lam)
                if not good_reduction(p, curve):
                    continue
                aq = brute_force_count(f, curve).a_q
                assert abs(aq) <= hasse_weil_bound(f.q, genus(l))


def test_squarefree_matches_good_reduction():
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        f = make_field(p)
        for lam in LAMBDAS:
            if lam.denominator % p == 0:
                continue
            le = f.from_rational(lam)
            assert model_is_squarefree(f, le) == good_reduction(p, CurveSpec(2, lam))


def test_cornacchia_values():
    assert cornacchia_3(7) == (2, 1)
    assert cornacchia_3(13) == (1, 2)
    assert cornacchia_3(31) == (2, 3)
    for p in (19, 37, 43, 61, 67, 73, 79, 97, 103):
        x, y = cornacchia_3(p)
        assert x >= 0 and y >= 0
        assert x * x + 3 * y * y == p
    with pytest.raises(CongruenceError):
        cornacchia_3(11)
