"""Multiplicative characters of F_q, indexed by exponent against the generator.

The character chi_k sends generator**t to zeta**(k*t) with zeta the fixed
primitive (q-1)-th root of unity exp(2*pi*i/(q-1)), and chi_k(0) = 0 for
every k, the trivial character included.  All values are carried exactly as
root-of-unity exponents until a complex number is actually needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import FieldMismatchError, OrderNotDividingError
from .field import Field, FieldElement


@dataclass(frozen=True)
class UnityOrZero:
    """Either zero or an exact root of unity zeta_order**exponent."""

    order: int
    exponent: int | None

    @classmethod
    def zero(cls, order: int) -> "UnityOrZero":
        return cls(order, None)

    @classmethod
    def root(cls, order: int, exponent: int) -> "UnityOrZero":
        return cls(order, exponent % order)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def to_complex(self) -> complex:
        if self.exponent is None:
            return 0j
        import cmath

        return cmath.exp(2j * cmath.pi * self.exponent / self.order)

    def __mul__(self, other: "UnityOrZero") -> "UnityOrZero":
        if self.order != other.order:
            raise ValueError("mismatched root-of-unity orders")
        if self.exponent is None or other.exponent is None:
            return UnityOrZero.zero(self.order)
        return UnityOrZero.root(self.order, self.exponent + other.exponent)


@dataclass(frozen=True)
class Character:
    """The multiplicative character chi_index on a fixed field."""

    field: Field
    index: int

    def __post_init__(self):
        object.__setattr__(self, "index", self.index % self.field.m)

    @property
    def order(self) -> int:
        return self.field.m // gcd(self.index, self.field.m)

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def _check(self, other: "Character") -> None:
        if other.field != self.field:
            raise FieldMismatchError("characters live on different fields")

    def __mul__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.field, self.index + other.index)

    def __pow__(self, n: int) -> "Character":
        return Character(self.field, (self.index * n) % self.field.m)

    @property
    def inverse(self) -> "Character":
        return Character(self.field, -self.index)

    def evaluate(self, x: FieldElement | int) -> UnityOrZero:
        n = x.n if isinstance(x, FieldElement) else x
        if isinstance(x, FieldElement) and x.field != self.field:
            raise FieldMismatchError("element belongs to a different field")
        if n == 0:
            return UnityOrZero.zero(self.field.m)
        return UnityOrZero.root(self.field.m, self.index * self.field.dlog(n))

    def value(self, x: FieldElement | int) -> complex:
        n = x.n if isinstance(x, FieldElement) else x
        return self.field.char_value(self.index, n)

    def __repr__(self) -> str:
        return f"Character(index={self.index}, q={self.field.q})"


def trivial_character(field: Field) -> Character:
    return Character(field, 0)


def quadratic_character(field: Field) -> Character:
    # q odd, so q - 1 is even and the half-index character exists.
    return Character(field, field.m // 2)


def character_of_order(field: Field, n: int) -> Character:
    """The canonical character of exact order n, index (q-1)/n."""
    if n < 1 or field.m % n != 0:
        raise OrderNotDividingError(f"no character of order {n} when q = {field.q}")
    return Character(field, field.m // n)


def sqrt_character(chi: Character) -> tuple[Character, Character] | None:
    """The two square roots of chi when its index is even, else None."""
    if chi.index % 2:
        return None
    half = chi.index // 2
    return (
        Character(chi.field, half),
        Character(chi.field, half + chi.field.m // 2),
    )


def delta_char(chi: Character) -> int:
    """1 on the trivial character, 0 otherwise."""
    return 1 if chi.index == 0 else 0


def parse_character(field: Field, text: str) -> Character:
    """Parse "eps", "phi", "chi:<k>" or "ord<l>", optionally raised by "^j"."""
    spec = text.strip()
    power = 1
    if "^" in spec:
        spec, _, ptext = spec.partition("^")
        power = int(ptext)
    spec = spec.strip()
    if spec == "eps":
        base = trivial_character(field)
    elif spec == "phi":
        base = quadratic_character(field)
    elif spec.startswith("chi:"):
        base = Character(field, int(spec[4:]))
    elif spec.startswith("ord"):
        base = character_of_order(field, int(spec[3:]))
    else:
        raise ValueError(f"unrecognized character spec {text!r}")
    return base**power
