"""Arithmetic in finite fields of odd characteristic.

An element of F_q with q = p**e is encoded as an integer in [0, q): the
base-p digits of the encoding, least significant first, are the
coefficients of a polynomial residue modulo a fixed monic irreducible of
degree e.  The modulus is the first irreducible polynomial in
lexicographic coefficient order, the generator is the smallest encoding
with multiplicative order q - 1, and a full discrete-log table is built up
front, so element encodings, character indices, and every downstream sum
are reproducible across runs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from .errors import (
    FieldMismatchError,
    FieldTooLargeError,
    LogOfZeroError,
    NotPrimeError,
    OddPrimeRequiredError,
    ZeroArgumentError,
)

DEFAULT_Q_CAP = 100_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n in increasing order."""
    out: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def ord_p_rational(p: int, r: Fraction | int) -> int:
    """p-adic valuation of a nonzero rational."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    fr = Fraction(r)
    if fr == 0:
        raise ZeroArgumentError("the p-adic valuation of zero is undefined")

    def mult(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return mult(abs(fr.numerator)) - mult(fr.denominator)


def _poly_mul_mod(a: list[int], b: list[int], tail: tuple[int, ...], p: int) -> list[int]:
    # Residues are digit lists of length e; the modulus is x^e + tail.
    e = len(tail)
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(2 * e - 2, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j, tj in enumerate(tail):
                if tj:
                    prod[k - e + j] = (prod[k - e + j] - c * tj) % p
    return prod[:e]


def _poly_pow_mod(base: list[int], n: int, tail: tuple[int, ...], p: int) -> list[int]:
    result = [0] * len(tail)
    result[0] = 1
    acc = list(base)
    while n:
        if n & 1:
            result = _poly_mul_mod(result, acc, tail, p)
        acc = _poly_mul_mod(acc, acc, tail, p)
        n >>= 1
    return result


def _poly_rem(poly: list[int], div: list[int], p: int) -> list[int]:
    # div must be monic.
    rem = list(poly)
    dd = len(div) - 1
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            rem[k] = 0
            for j in range(dd):
                rem[k - dd + j] = (rem[k - dd + j] - c * div[j]) % p
    return rem[:dd]


def _is_irreducible(tail: tuple[int, ...], p: int) -> bool:
    # A nontrivial factor of a degree-e polynomial has degree <= e // 2.
    if tail[0] == 0:
        return False
    e = len(tail)
    poly = list(tail) + [1]
    for d in range(1, e // 2 + 1):
        for div_tail in itertools.product(range(p), repeat=d):
            div = list(div_tail) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


class Field:
    """Fully tabulated F_q for odd q = p**e up to a configurable cap."""

    def __init__(self, p: int, e: int = 1, q_cap: int = DEFAULT_Q_CAP):
        if e < 1:
            raise ValueError("extension degree must be at least 1")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p == 2:
            raise OddPrimeRequiredError("fields of characteristic 2 are not supported")
        q = p**e
        if q > q_cap:
            raise FieldTooLargeError(f"q = {q} exceeds the cap {q_cap}")
        self.p = p
        self.e = e
        self.q = q
        self.m = q - 1
        self._tail = self._find_modulus_tail()
        self.generator = self._find_generator()
        self._build_tables()
        self._zeta: np.ndarray | None = None
        self._jx: np.ndarray | None = None
        self._j1mx: np.ndarray | None = None
        self._lx: np.ndarray | None = None
        self._psi: np.ndarray | None = None
        self._jacobi_cache: dict[tuple[int, int], complex] = {}
        self._binom_cache: dict[tuple[int, int], complex] = {}
        self._gauss_cache: dict[int, complex] = {}

    def _find_modulus_tail(self) -> tuple[int, ...]:
        if self.e == 1:
            return (0,)
        for tail in itertools.product(range(self.p), repeat=self.e):
            if _is_irreducible(tail, self.p):
                return tail
        raise RuntimeError("no irreducible modulus found")  # unreachable

    @property
    def modulus_poly(self) -> list[int]:
        """Monic modulus as a low-to-high coefficient list."""
        return list(self._tail) + [1]

    def modulus_str(self) -> str:
        parts = []
        for d in range(self.e, -1, -1):
            c = 1 if d == self.e else self._tail[d]
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                x = "x" if d == 1 else f"x^{d}"
                parts.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(parts)

    def _digits(self, n: int) -> list[int]:
        out = []
        for _ in range(self.e):
            n, r = divmod(n, self.p)
            out.append(r)
        return out

    def _encode(self, digits: list[int]) -> int:
        n = 0
        for c in reversed(digits):
            n = n * self.p + c
        return n

    def _find_generator(self) -> int:
        one = [1] + [0] * (self.e - 1)
        checks = [self.m // r for r in prime_factors(self.m)]
        for n in range(2, self.q):
            digs = self._digits(n)
            if all(_poly_pow_mod(digs, c, self._tail, self.p) != one for c in checks):
                return n
        raise RuntimeError("no generator found")  # unreachable

    def _build_tables(self) -> None:
        exp = [0] * self.m
        dlog = [-1] * self.q
        gen = self._digits(self.generator)
        cur = [1] + [0] * (self.e - 1)
        for k in range(self.m):
            n = self._encode(cur)
            exp[k] = n
            dlog[n] = k
            cur = _poly_mul_mod(cur, gen, self._tail, self.p)
        if dlog.count(-1) != 1:
            raise RuntimeError("generator order check failed")
        self._exp = exp
        self._dlog = dlog
        if self.e == 1:
            self._trace = list(range(self.q))
        else:
            tr = [0] * self.q
            for x in range(1, self.q):
                d = dlog[x]
                s = 0
                pw = 1
                for _ in range(self.e):
                    s = self.add(s, exp[(d * pw) % self.m])
                    pw = (pw * self.p) % self.m
                # The trace lands in the prime subfield: a single digit.
                if s >= self.p:
                    raise RuntimeError("trace left the prime subfield")
                tr[x] = s
            self._trace = tr

    # ------------------------------------------------------------------
    # integer-encoding arithmetic

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.e):
            out += ((a % p) + (b % p)) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        p = self.p
        out = 0
        shift = 1
        for _ in range(self.e):
            out += ((a % p) - (b % p)) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._dlog[a] + self._dlog[b]) % self.m]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero in the field")
        return self._exp[(-self._dlog[a]) % self.m]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError("negative power of zero in the field")
        return self._exp[(self._dlog[a] * n) % self.m]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise LogOfZeroError("the discrete logarithm of zero is undefined")
        return self._dlog[x]

    def exp(self, k: int) -> int:
        return self._exp[k % self.m]

    def trace(self, x: int) -> int:
        return self._trace[x]

    def from_int(self, c: int) -> int:
        """Embed an integer through Z -> F_p -> F_q."""
        return c % self.p

    def from_rational(self, r: Fraction | int) -> int:
        fr = Fraction(r)
        den = fr.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {fr} vanishes mod {self.p}")
        return self.div(fr.numerator % self.p, den)

    def element(self, n: int) -> "FieldElement":
        if not 0 <= n < self.q:
            raise ValueError(f"encoding {n} out of range [0, {self.q})")
        return FieldElement(self, n)

    def elements(self):
        return (FieldElement(self, n) for n in range(self.q))

    # ------------------------------------------------------------------
    # numpy-backed complex sum caches shared by the character-sum layer

    @property
    def zeta(self) -> np.ndarray:
        """(q-1)-th roots of unity, zeta[k] = exp(2*pi*i*k/(q-1)).

        The four cardinal roots are stored exactly so that character values
        on the real axis (and at -1 in particular) come out as exact signs.
        """
        if self._zeta is None:
            z = np.exp(2j * np.pi * np.arange(self.m) / self.m)
            z[0] = 1.0
            z[self.m // 2] = -1.0
            if self.m % 4 == 0:
                z[self.m // 4] = 1j
                z[3 * self.m // 4] = -1j
            self._zeta = z
        return self._zeta

    def _jacobi_logs(self) -> tuple[np.ndarray, np.ndarray]:
        if self._jx is None:
            xs = [x for x in range(self.q) if x not in (0, 1)]
            self._jx = np.array([self._dlog[x] for x in xs], dtype=np.int64)
            self._j1mx = np.array(
                [self._dlog[self.sub(1, x)] for x in xs], dtype=np.int64
            )
        return self._jx, self._j1mx

    def jacobi_counts(self, a: int, b: int) -> np.ndarray:
        """Exact exponent counts of J(chi_a, chi_b) over (q-1)-th roots."""
        jx, j1mx = self._jacobi_logs()
        t = (a % self.m * jx + b % self.m * j1mx) % self.m
        return np.bincount(t, minlength=self.m).astype(np.int64)

    def jacobi_c(self, a: int, b: int) -> complex:
        """Complex value of J(chi_a, chi_b), memoized per field."""
        a %= self.m
        b %= self.m
        if b < a:
            a, b = b, a  # J is symmetric
        val = self._jacobi_cache.get((a, b))
        if val is None:
            val = complex(self.jacobi_counts(a, b) @ self.zeta)
            self._jacobi_cache[(a, b)] = val
        return val

    def binom_c(self, a: int, b: int) -> complex:
        """Complex binomial (chi_a | chi_b) = chi_b(-1)/q * J(chi_a, inverse of chi_b)."""
        a %= self.m
        b %= self.m
        val = self._binom_cache.get((a, b))
        if val is None:
            sign = -1.0 if b % 2 else 1.0
            val = sign * self.jacobi_c(a, (self.m - b) % self.m) / self.q
            self._binom_cache[(a, b)] = val
        return val

    def _gauss_logs(self) -> tuple[np.ndarray, np.ndarray]:
        if self._lx is None:
            xs = range(1, self.q)
            self._lx = np.array([self._dlog[x] for x in xs], dtype=np.int64)
            tr = np.array([self._trace[x] for x in xs], dtype=np.int64)
            self._psi = np.exp(2j * np.pi * tr / self.p)
        return self._lx, self._psi

    def gauss_c(self, k: int) -> complex:
        """Complex Gauss sum of chi_k, memoized per field."""
        k %= self.m
        val = self._gauss_cache.get(k)
        if val is None:
            lx, psi = self._gauss_logs()
            val = complex(np.sum(self.zeta[(k * lx) % self.m] * psi))
            self._gauss_cache[k] = val
        return val

    def char_value(self, k: int, x: int) -> complex:
        """chi_k(x) as a complex number, with chi_k(0) = 0."""
        if x == 0:
            return 0j
        return complex(self.zeta[(k * self._dlog[x]) % self.m])

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, e={self.e})"


class FieldElement:
    """A single element of a Field, in canonical integer encoding."""

    __slots__ = ("field", "n")

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.n))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError("operands belong to different fields")
            return other.n
        if isinstance(other, int):
            return other % self.field.p
        raise TypeError(f"cannot coerce {type(other).__name__} into the field")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.n, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.n, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.n))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.n, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.n, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.n))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.n, n))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.n))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.n == other.n
        if isinstance(other, int):
            return self.n == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.e, self.n))

    def __int__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FieldElement({self.n} in F_{self.field.q})"


def make_field(p: int, e: int = 1, q_cap: int = DEFAULT_Q_CAP) -> Field:
    """Construct the tabulated field F_{p**e}."""
    return Field(p, e, q_cap)
