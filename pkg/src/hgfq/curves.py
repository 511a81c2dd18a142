"""Point counts on the superelliptic family y**l = (x-1)(x**2 + lambda).

Counts come three ways: brute-force enumeration of affine pairs, the
character-sum route through the canonical order-l character, and for l = 3
the short Weierstrass model.  The projective completion adds one point at
infinity for l != 3 and three when l = 3 with p = 1 mod 3; for l = 3 with
p = 2 mod 3 the count at infinity is refused rather than guessed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import (
    BadReductionError,
    CongruenceError,
    NoRepresentationError,
    UnsupportedInfinityCountError,
)
from .field import Field, ord_p_rational


@dataclass(frozen=True)
class CurveSpec:
    l: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.l < 2:
            raise ValueError("the exponent l must be at least 2")
        if self.lam in (0, -1):
            raise ValueError("lambda must avoid 0 and -1")


@dataclass(frozen=True)
class PointCount:
    affine: int
    projective: int
    a_q: int


def good_reduction(p: int, curve: CurveSpec) -> bool:
    if curve.l % p == 0:
        return False
    return ord_p_rational(p, curve.lam * (curve.lam + 1)) == 0


def reduce_lambda(field: Field, curve: CurveSpec) -> int:
    """lambda as a field element, available exactly under good reduction."""
    if not good_reduction(field.p, curve):
        raise BadReductionError(
            f"curve (l={curve.l}, lambda={curve.lam}) has bad reduction at p={field.p}"
        )
    return field.from_rational(curve.lam)


def curve_values(field: Field, lam: int) -> list[int]:
    """(x-1)(x**2 + lambda) for every x in the field, by encoding."""
    out = []
    for x in range(field.q):
        out.append(field.mul(field.sub(x, 1), field.add(field.mul(x, x), lam)))
    return out


def _projective(field: Field, l: int, affine: int) -> PointCount:
    if l == 3:
        if field.p % 3 == 1:
            projective = affine + 3
        else:
            raise UnsupportedInfinityCountError(
                "points at infinity for l = 3 are only known when p = 1 mod 3"
            )
    else:
        projective = affine + 1
    return PointCount(affine, projective, 1 + field.q - projective)


def brute_force_count(field: Field, curve: CurveSpec) -> PointCount:
    lam = reduce_lambda(field, curve)
    power_counts = Counter(field.pow(y, curve.l) for y in range(field.q))
    affine = sum(power_counts[f] for f in curve_values(field, lam))
    return _projective(field, curve.l, affine)


def character_sum_count(field: Field, curve: CurveSpec) -> PointCount:
    """Affine count as q plus the sum over i of chi**i applied to the curve
    polynomial, chi the canonical order-l character."""
    if field.m % curve.l != 0:
        raise CongruenceError(f"q = {field.q} is not 1 mod l = {curve.l}")
    lam = reduce_lambda(field, curve)
    m = field.m
    u = m // curve.l
    dlog = field._dlog
    logs = np.array([dlog[f] for f in curve_values(field, lam) if f != 0], dtype=np.int64)
    counts = np.zeros(m, dtype=np.int64)
    for i in range(1, curve.l):
        counts += np.bincount((i * u * logs) % m, minlength=m)
    total = complex(counts @ field.zeta)
    rounded = round(total.real)
    if abs(total - rounded) > 1e-6:
        raise RuntimeError("character sum failed to round to an integer")
    return _projective(field, curve.l, field.q + rounded)


def weierstrass_count_l3(field: Field, curve: CurveSpec) -> PointCount:
    """Point count of the l = 3 member through its Weierstrass model
    y**2 = x**3 - lambda/(1+lambda)**4."""
    if curve.l != 3:
        raise ValueError("the Weierstrass model applies to l = 3 only")
    if field.p == 3:
        raise BadReductionError("the Weierstrass model needs p different from 2 and 3")
    if not good_reduction(field.p, curve):
        raise BadReductionError(
            f"curve (l=3, lambda={curve.lam}) has bad reduction at p={field.p}"
        )
    c = field.from_rational(-curve.lam / (1 + curve.lam) ** 4)
    square_counts = Counter(field.mul(y, y) for y in range(field.q))
    affine = 0
    for x in range(field.q):
        affine += square_counts[field.add(field.pow(x, 3), c)]
    return PointCount(affine, affine + 1, field.q - affine)


def cornacchia_3(p: int) -> tuple[int, int]:
    """The nonnegative solution of x**2 + 3*y**2 = p for p = 1 mod 3."""
    if p % 3 != 1:
        raise CongruenceError(f"p = {p} is not 1 mod 3")
    for x in range(isqrt(p) + 1):
        rem = p - x * x
        if rem % 3:
            continue
        y = isqrt(rem // 3)
        if 3 * y * y == rem:
            return x, y
    raise NoRepresentationError(f"no representation x^2 + 3y^2 = {p}")


def genus(l: int) -> int:
    """Genus of the smooth projective model; a standard superelliptic
    formula for a squarefree cubic, external to the identities themselves."""
    return ((l - 1) * 2 - gcd(l, 3) + 1) // 2


def hasse_weil_bound(l: int, q: int) -> float:
    return 2 * genus(l) * q**0.5


def model_is_squarefree(field: Field, lam: int) -> bool:
    """Whether (x-1)(x**2 + lambda) has no repeated root over the algebraic
    closure of the field."""
    # Repeated roots occur exactly when 1 is a root of x^2 + lam (1+lam = 0)
    # or x^2 + lam itself is a square (lam = 0).
    return field.add(lam, 1) != 0 and lam != 0


def count_points(field: Field, curve: CurveSpec, method: str) -> PointCount:
    if method == "brute":
        return brute_force_count(field, curve)
    if method == "charsum":
        return character_sum_count(field, curve)
    if method == "both":
        a = brute_force_count(field, curve)
        b = character_sum_count(field, curve)
        if a != b:
            raise RuntimeError(
                f"count cross-check failed: brute {a} versus character sum {b}"
            )
        return a
    raise ValueError(f"unknown counting method {method!r}")
