"""Gauss sums, Jacobi sums, binomial coefficients and the quadratic-argument
g-sum, computed exact-first.

Single character sums are accumulated as integer count vectors over roots of
unity (order q-1 for multiplicative sums, lcm(q-1, p) for Gauss sums) and
converted to complex doubles only at comparison boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import Character
from .errors import FieldMismatchError
from .field import Field, FieldElement


@dataclass(frozen=True)
class CyclotomicSum:
    """Exact sum of counts[t] * zeta_order**t over t."""

    order: int
    counts: np.ndarray

    def to_complex(self) -> complex:
        idx = np.nonzero(self.counts)[0]
        if idx.size == 0:
            return 0j
        phases = np.exp(2j * np.pi * idx / self.order)
        return complex(self.counts[idx] @ phases)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclotomicSum)
            and self.order == other.order
            and np.array_equal(self.counts, other.counts)
        )


def cyclotomic_to_complex(s: CyclotomicSum) -> complex:
    return s.to_complex()


def _same_field(a: Character, b: Character) -> Field:
    if a.field != b.field:
        raise FieldMismatchError("characters live on different fields")
    return a.field


def jacobi_sum(a: Character, b: Character) -> CyclotomicSum:
    """J(A, B) = sum over x of A(x) B(1-x), as exact root-of-unity counts."""
    field = _same_field(a, b)
    return CyclotomicSum(field.m, field.jacobi_counts(a.index, b.index))


def gauss_sum(chi: Character) -> CyclotomicSum:
    """G(chi) = sum over x of chi(x) zeta_p**trace(x).

    Exponents are composed over roots of unity of order (q-1)*p, which is
    lcm(q-1, p) since p never divides q-1.
    """
    field = chi.field
    m, p = field.m, field.p
    order = m * p
    lx, _ = field._gauss_logs()
    tr = np.array([field.trace(x) for x in range(1, field.q)], dtype=np.int64)
    t = (p * ((chi.index * lx) % m) + m * tr) % order
    counts = np.bincount(t, minlength=order).astype(np.int64)
    return CyclotomicSum(order, counts)


def binomial(a: Character, b: Character) -> complex:
    """Greene's binomial coefficient (A | B) = B(-1)/q * J(A, inverse of B)."""
    field = _same_field(a, b)
    return field.binom_c(a.index, b.index)


def binomial_exact(a: Character, b: Character) -> tuple[CyclotomicSum, Fraction]:
    """The binomial coefficient as an exact Jacobi count vector and the
    rational scale B(-1)/q it carries."""
    field = _same_field(a, b)
    j = CyclotomicSum(field.m, field.jacobi_counts(a.index, (-b.index) % field.m))
    sign = -1 if b.index % 2 else 1
    return j, Fraction(sign, field.q)


def g_sum(a: Character, b: Character, x: FieldElement | int) -> CyclotomicSum:
    """g(A, B; x) = sum over t of A(1-t) B(1-x*t^2)."""
    field = _same_field(a, b)
    xn = x.n if isinstance(x, FieldElement) else x
    m = field.m
    dlog = field._dlog
    counts = np.zeros(m, dtype=np.int64)
    ai, bi = a.index, b.index
    for t in range(field.q):
        u = field.sub(1, t)
        if u == 0:
            continue
        v = field.sub(1, field.mul(xn, field.mul(t, t)))
        if v == 0:
            continue
        counts[(ai * dlog[u] + bi * dlog[v]) % m] += 1
    return CyclotomicSum(m, counts)


def g_sum_c(a: Character, b: Character, x: FieldElement | int) -> complex:
    return g_sum(a, b, x).to_complex()
