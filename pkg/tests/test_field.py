"""Field construction, encoding arithmetic, and the exp/dlog tables."""

from fractions import Fraction

import pytest

from hgfq import (
    Field,
    FieldMismatchError,
    FieldTooLargeError,
    LogOfZeroError,
    NotPrimeError,
    OddPrimeRequiredError,
    is_prime,
    make_field,
)
from hgfq.field import ord_p_rational, prime_factors

from oracle_helpers import primitive_root


def test_is_prime_small():
    def reference(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, n))

    for n in range(-3, 200):
        assert is_prime(n) == reference(n), n
    assert is_prime(7919)
    assert not is_prime(7917)


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(12) == [2, 3]
    assert prime_factors(97) == [97]


def test_ord_p_rational():
    assert ord_p_rational(3, Fraction(9, 2)) == 2
    assert ord_p_rational(3, Fraction(2, 27)) == -3
    assert ord_p_rational(5, Fraction(7, 3)) == 0
    assert ord_p_rational(5, 7) == 0
    assert ord_p_rational(5, 50) == 2


def test_constructor_rejects_bad_input():
    with pytest.raises(NotPrimeError):
        make_field(4)
    with pytest.raises(NotPrimeError):
        make_field(9)
    with pytest.raises(OddPrimeRequiredError):
        make_field(2)
    with pytest.raises(ValueError):
        make_field(5, 0)
    with pytest.raises(FieldTooLargeError):
        make_field(5, 2, q_cap=20)


def test_prime_field_generator_is_smallest_primitive_root():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 97):
        assert make_field(p).generator == primitive_root(p)


def test_pinned_extension_field_f9():
    f = make_field(3, 2)
    assert f.q == 9
    assert f.modulus_str() == "x^2 + 1"
    assert f.generator == 4


def test_modulus_is_irreducible_quadratic():
    # a reducible quadratic over F_p would have a root in F_p
    for p in (3, 5, 7, 11):
        f = make_field(p, 2)
        c0, c1, c2 = f.modulus_poly
        assert c2 == 1
        for x in range(p):
            assert (c0 + c1 * x + x * x) % p != 0


def test_field_axioms_on_samples():
    f = make_field(5, 2)
    els = list(range(f.q))
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in els[:9]:
        for b in els[:9]:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els[:9]:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_exp_dlog_roundtrip():
    f = make_field(3, 2)
    seen = set()
    for x in range(1, f.q):
        k = f.dlog(x)
        assert f.exp(k) == x
        seen.add(k)
    assert seen == set(range(f.m))
    with pytest.raises(LogOfZeroError):
        f.dlog(0)


def test_generator_has_full_order():
    f = make_field(7, 2)
    assert f.pow(f.generator, f.m) == 1
    for d in prime_factors(f.m):
        assert f.pow(f.generator, f.m // d) != 1


def test_trace_properties():
    f = make_field(5, 2)
    for x in range(f.q):
        t = f.trace(x)
        assert 0 <= t < f.p
        # Frobenius invariance
        assert f.trace(f.pow(x, f.p)) == t
    for x in range(f.q):
        for y in range(0, f.q, 7):
            assert f.trace(f.add(x, y)) == (f.trace(x) + f.trace(y)) % f.p
    # trace is onto and balanced: q/p preimages per value
    counts = [0] * f.p
    for x in range(f.q):
        counts[f.trace(x)] += 1
    assert counts == [f.q // f.p] * f.p


def test_from_int_and_from_rational():
    f = make_field(7)
    assert f.from_int(10) == 3
    assert f.from_int(-1) == 6
    assert f.from_rational(Fraction(1, 3)) == f.div(1, 3)
    assert f.from_rational(5) == 5
    with pytest.raises(ZeroDivisionError):
        f.from_rational(Fraction(1, 7))
    g = make_field(3, 2)
    assert g.from_rational(Fraction(-1, 2)) == g.div(g.neg(1), g.from_int(2))


def test_element_encoding_base_p_digits():
    f = make_field(3, 2)
    e = f.element(5)  # 5 = 2 + 1*3
    assert e.coeffs == (2, 1)
    assert f.element(2).coeffs == (2, 0)
    with pytest.raises(ValueError):
        f.element(9)


def test_field_element_operators():
    f = make_field(3, 2)
    a, b = f.element(4), f.element(5)
    assert (a + b).n == f.add(4, 5)
    assert (a * b).n == f.mul(4, 5)
    assert (a - b).n == f.sub(4, 5)
    assert (-a).n == f.neg(4)
    assert (a / b).n == f.div(4, 5)
    assert (a ** 3).n == f.pow(4, 3)
    assert a + 1 == f.element(f.add(4, 1))
    g = make_field(5)
    with pytest.raises(FieldMismatchError):
        _ = a + g.element(1)


def test_fields_compare_by_parameters():
    assert make_field(5) == make_field(5)
    assert make_field(5) != make_field(5, 2)
    assert hash(make_field(7, 2)) == hash(make_field(7, 2))


def test_extension_multiplication_against_polynomials():
    # F_9 with modulus x^2 + 1: (1 + x)(1 + 2x) = 1 + 3x + 2x^2 = 1 - 2 = -1 = 2
    f = make_field(3, 2)
    assert f.modulus_str() == "x^2 + 1"
    a = 1 + 1 * 3  # 1 + x
    b = 1 + 2 * 3  # 1 + 2x
    assert f.mul(a, b) == 2
