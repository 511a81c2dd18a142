"""Gaussian hypergeometric series and the Evans-Greene F, F* sums.

The (n+1)F_n series is the normalized character-indexed sum

    q/(q-1) * sum over chi of (A0 chi | chi)(A1 chi | B1 chi)...(An chi | Bn chi) chi(x),

with every binomial coefficient drawn from the per-field Jacobi cache.  The
variant F(A, B; x) sums (A chi^2 | chi)(A chi | B chi) chi(x/4) instead, and
F* adds the normalization term A B(-1) Abar(x/4) / q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character
from .errors import FieldMismatchError
from .field import Field, FieldElement
from .report import VerificationReport, build_report


def _enc(x: FieldElement | int) -> int:
    return x.n if isinstance(x, FieldElement) else x


@dataclass(frozen=True)
class SeriesSpec:
    """Top and bottom character rows plus the argument of a series."""

    top: tuple[Character, ...]
    bottom: tuple[Character, ...]
    x: FieldElement

    def __post_init__(self):
        if len(self.top) != len(self.bottom) + 1:
            raise ValueError("a series needs exactly one more top character")
        fields = {c.field for c in self.top} | {c.field for c in self.bottom}
        fields.add(self.x.field)
        if len(fields) != 1:
            raise FieldMismatchError("series parameters live on different fields")


def series_value(field: Field, tops: list[int], bottoms: list[int], x: int) -> complex:
    """Evaluate the series from raw character indices and an element encoding."""
    if len(tops) != len(bottoms) + 1:
        raise ValueError("a series needs exactly one more top index")
    if x == 0:
        return 0j
    m = field.m
    dx = field.dlog(x)
    zeta = field.zeta
    binom = field.binom_c
    a0 = tops[0] % m
    rest = [(t % m, b % m) for t, b in zip(tops[1:], bottoms)]
    total = 0j
    for k in range(m):
        term = binom(a0 + k, k)
        for t, b in rest:
            term *= binom(t + k, b + k)
        total += term * zeta[(k * dx) % m]
    return complex(total) * field.q / m


def gaussian_hgf(spec: SeriesSpec) -> complex:
    field = spec.x.field
    return series_value(
        field,
        [c.index for c in spec.top],
        [c.index for c in spec.bottom],
        spec.x.n,
    )


def hgf_2f1(a: Character, b: Character, c: Character, x: FieldElement | int) -> complex:
    return series_value(a.field, [a.index, b.index], [c.index], _enc(x))


def evans_F(a: Character, b: Character, x: FieldElement | int) -> complex:
    field = a.field
    if b.field != field:
        raise FieldMismatchError("characters live on different fields")
    x4 = field.div(_enc(x), field.from_int(4))
    if x4 == 0:
        return 0j
    m = field.m
    d = field.dlog(x4)
    zeta = field.zeta
    binom = field.binom_c
    ai, bi = a.index, b.index
    total = 0j
    for k in range(m):
        total += binom(ai + 2 * k, k) * binom(ai + k, bi + k) * zeta[(k * d) % m]
    return complex(total) * field.q / m


def evans_F_star(a: Character, b: Character, x: FieldElement | int) -> complex:
    field = a.field
    xn = _enc(x)
    f = evans_F(a, b, xn)
    if xn == 0:
        return f
    x4 = field.div(xn, field.from_int(4))
    ab_sign = -1.0 if (a.index + b.index) % 2 else 1.0
    return f + ab_sign * field.char_value(-a.index, x4) / field.q


def greene_transform_check(
    a: Character,
    b: Character,
    c: Character,
    x: FieldElement | int,
    variant: str,
    tolerance: float = 1e-6,
) -> VerificationReport:
    """Check one of the two argument transformations of the 2F1 series.

    Variant "i" rewrites the series at 1-x with bottom character A*B/C and
    delta corrections at x = 0 and x = 1; variant "ii" rewrites it at
    x/(x-1) with prefactor C(-1) Abar(1-x) and a delta correction at x = 1.
    """
    field = a.field
    xn = _enc(x)
    m = field.m
    lhs = series_value(field, [a.index, b.index], [c.index], xn)
    one_minus_x = field.sub(1, xn)
    a_sign = -1.0 if a.index % 2 else 1.0
    delta_1mx = 1.0 if one_minus_x == 0 else 0.0
    if variant == "i":
        new_bottom = (a.index + b.index - c.index) % m
        rhs = a_sign * series_value(field, [a.index, b.index], [new_bottom], one_minus_x)
        rhs += a_sign * field.binom_c(b.index, c.index - a.index) * delta_1mx
        rhs -= field.binom_c(b.index, c.index) * (1.0 if xn == 0 else 0.0)
    elif variant == "ii":
        c_sign = -1.0 if c.index % 2 else 1.0
        if one_minus_x == 0:
            rhs = 0j
        else:
            ratio = field.div(xn, field.sub(xn, 1))
            rhs = (
                c_sign
                * field.char_value(-a.index, one_minus_x)
                * series_value(field, [a.index, (c.index - b.index) % m], [c.index], ratio)
            )
        rhs += a_sign * field.binom_c(b.index, c.index - a.index) * delta_1mx
    else:
        raise ValueError(f"unknown transform variant {variant!r}")
    return build_report(
        theorem_id=f"greene_transform_{variant}",
        p=field.p,
        e=field.e,
        q=field.q,
        char_index=a.index,
        lhs=lhs,
        rhs=rhs,
        tolerance=tolerance,
        hypotheses={},
    )
