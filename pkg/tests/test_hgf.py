from fractions import Fraction

import pytest

from hgfq import (
    Character,
    FieldMismatchError,
    SeriesSpec,
    evans_F,
    evans_F_star,
    gaussian_hgf,
    greene_transform_check,
    hgf_2f1,
    make_field,
    series_value,
)

import oracle_helpers as oracle


def test_series_matches_naive_oracle_exhaustively():
    for p in (5, 7):
        f = make_field(p)
        m = f.m
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    for x in range(p):
                        got = series_value(f, [a, b], [c], x)
                        want = 0j if x == 0 else oracle.series(p, [a, b], [c], x)
                        assert got == pytest.approx(want, abs=1e-9)


def test_3f2_samples_match_oracle():
    f = make_field(11)
    for args in ((1, 2, 3, 4, 5), (0, 5, 5, 0, 2), (7, 7, 7, 0, 0)):
        a, b, c, d, e = args
        for x in (1, 2, 7):
            got = series_value(f, [a, b, c], [d, e], x)
            want = oracle.series(11, [a, b, c], [d, e], x)
            assert got == pytest.approx(want, abs=1e-9)


def test_series_is_zero_at_zero_argument():
    f = make_field(13)
    assert series_value(f, [6, 6, 6], [0, 0], 0) == 0j


def test_series_arity_check():
    f = make_field(5)
    with pytest.raises(ValueError):
        series_value(f, [1], [1], 2)
    with pytest.raises(ValueError):
        series_value(f, [1, 2, 3], [1], 2)


def test_known_rational_value():
    # 3F2(phi, phi, phi; eps, eps | 2) over F_5 equals -1/25
    f = make_field(5)
    h = f.m // 2
    got = series_value(f, [h, h, h], [0, 0], 2)
    assert got.real == pytest.approx(-1 / 25, abs=1e-12)
    assert got.imag == pytest.approx(0.0, abs=1e-12)


def test_negative_and_oversized_indices_are_normalized():
    f = make_field(13)
    m = f.m
    for x in (2, 5):
        assert series_value(f, [-3, 5], [4], x) == pytest.approx(
            series_value(f, [m - 3, 5 + m], [4 - m], x), abs=1e-12
        )


def test_spec_wrappers_agree_with_series_value():
    f = make_field(7)
    a, b, c = Character(f, 1), Character(f, 2), Character(f, 3)
    x = f.element(4)
    spec = SeriesSpec((a, b), (c,), x)
    assert gaussian_hgf(spec) == hgf_2f1(a, b, c, x)
    assert hgf_2f1(a, b, c, 4) == series_value(f, [1, 2], [3], 4)


def test_series_spec_validation():
    f = make_field(7)
    a, b, c = Character(f, 1), Character(f, 2), Character(f, 3)
    with pytest.raises(ValueError):
        SeriesSpec((a,), (c,), f.element(2))
    g = make_field(5)
    with pytest.raises(FieldMismatchError):
        SeriesSpec((a, Character(g, 1)), (c,), f.element(2))


def test_evans_f_star_shift():
    # F* - F = AB(-1) Abar(x/4) / q pointwise
    f = make_field(13)
    for a in (0, 3, 6):
        for b in (0, 2):
            A, B = Character(f, a), Character(f, b)
            for x in range(1, f.q):
                shift = evans_F_star(A, B, x) - evans_F(A, B, x)
                sign = -1.0 if (a + b) % 2 else 1.0
                want = sign * f.char_value(-a, f.div(x, f.from_int(4))) / f.q
                assert shift == pytest.approx(want, abs=1e-12)
    A, B = Character(f, 3), Character(f, 2)
    assert evans_F_star(A, B, 0) == evans_F(A, B, 0)


def test_greene_transforms_pass_on_a_grid():
    f = make_field(3, 2)
    for a in range(f.m):
        for b in (0, 3):
            for c in (1, 4):
                for x in range(f.q):
                    for variant in ("i", "ii"):
                        r = greene_transform_check(
                            Character(f, a), Character(f, b), Character(f, c), x, variant
                        )
                        assert r.status == "pass", (a, b, c, x, variant)
                        assert r.theorem_id == f"greene_transform_{variant}"


def test_greene_transform_rejects_unknown_variant():
    f = make_field(5)
    eps = Character(f, 0)
    with pytest.raises(ValueError):
        greene_transform_check(eps, eps, eps, 2, "iii")
