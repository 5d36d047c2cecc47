"""Exact arithmetic in the cyclotomic integers Z[xi_n].

Elements are stored as integer coordinate vectors in the power basis
1, xi, ..., xi^(d-1) with d = phi(n); products are reduced modulo the
cyclotomic polynomial.  Python integers are used throughout so that
norms of elements in the larger rings (d = 24 for n = 84) never overflow.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Sequence

from .lattice import determinant

__all__ = [
    "CLASS_NUMBER_ONE",
    "CycInt",
    "RingIndex",
    "RingMismatch",
    "cyclotomic_polynomial",
    "cyclotomic_ring",
    "euler_phi",
]

# Conductors n (n != 2 mod 4) for which Z[xi_n] is a principal ideal domain.
CLASS_NUMBER_ONE = (
    3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 24, 25, 27, 28,
    32, 33, 35, 36, 40, 44, 45, 48, 60, 84,
)


class RingMismatch(ValueError):
    """Raised when two operands live in different cyclotomic rings."""


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Divide integer polynomials (lowest degree first); den must be monic."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        quot[k - dn] = c
        if c:
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided by the product of Phi_d over the proper
    divisors d of n.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_exact_div(num, den))


@dataclass(frozen=True)
class RingIndex:
    """The ring Z[xi_n] together with the data derived from n."""

    n: int
    degree: int = field(init=False)
    point_order: int = field(init=False)
    phi_coeffs: tuple[int, ...] = field(init=False, repr=False)
    class_number_one: bool = field(init=False)

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise ValueError(f"n must be at least 3, got {n}")
        if n % 4 == 2:
            raise ValueError(
                f"n = {n} is 2 mod 4: Z[xi_{n}] = Z[xi_{n // 2}], use n = {n // 2}"
            )
        phi = cyclotomic_polynomial(n)
        object.__setattr__(self, "phi_coeffs", phi)
        object.__setattr__(self, "degree", len(phi) - 1)
        object.__setattr__(self, "point_order", n if n % 2 == 0 else 2 * n)
        object.__setattr__(self, "class_number_one", n in CLASS_NUMBER_ONE)

    def reduce(self, poly: Sequence[int]) -> tuple[int, ...]:
        """Reduce an integer polynomial modulo Phi_n to d coordinates."""
        d = self.degree
        a = list(poly) + [0] * max(0, d - len(poly))
        phi = self.phi_coeffs
        for k in range(len(a) - 1, d - 1, -1):
            c = a[k]
            if c:
                for j in range(d):
                    a[k - d + j] -= c * phi[j]
        return tuple(a[:d])

    def xi_power(self, m: int) -> tuple[int, ...]:
        """Coordinates of xi^m."""
        return _xi_powers(self)[m % self.n]

    def one(self) -> CycInt:
        return CycInt(self, (1,) + (0,) * (self.degree - 1))

    def zero(self) -> CycInt:
        return CycInt(self, (0,) * self.degree)

    def xi(self, m: int = 1) -> CycInt:
        return CycInt(self, self.xi_power(m))

    def root_of_unity(self, j: int) -> CycInt:
        """The j-th power of exp(2*pi*i/N), N the point-group order.

        For odd n this uses exp(pi*i/n) = -xi^((n+1)/2).
        """
        n, N = self.n, self.point_order
        j %= N
        if n % 2 == 0:
            return self.xi(j)
        u = self.xi(j * (n + 1) // 2)
        return -u if j % 2 else u

    def element(self, coeffs: Iterable[int]) -> CycInt:
        return CycInt.from_coeffs(self, coeffs)

    def parse(self, text: str) -> CycInt:
        """Parse the comma-separated text form, lowest degree first."""
        parts = [s.strip() for s in text.split(",")]
        if not parts or any(s == "" for s in parts):
            raise ValueError(f"malformed element {text!r}")
        coeffs = [int(s) for s in parts]
        if len(coeffs) > self.degree:
            raise ValueError(
                f"element {text!r} has {len(coeffs)} coordinates, ring degree is {self.degree}"
            )
        return CycInt.from_coeffs(self, coeffs)


@cache
def _xi_powers(ring: RingIndex) -> tuple[tuple[int, ...], ...]:
    d = ring.degree
    out = []
    cur = [1] + [0] * (d - 1)
    for _ in range(ring.n):
        out.append(tuple(cur))
        cur = list(ring.reduce([0] + cur))
    return tuple(out)


@cache
def cyclotomic_ring(n: int) -> RingIndex:
    return RingIndex(n)


class CycInt:
    """An element of Z[xi_n], immutable."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingIndex, coeffs: tuple[int, ...]):
        if len(coeffs) != ring.degree:
            raise ValueError(
                f"expected {ring.degree} coordinates, got {len(coeffs)}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def from_coeffs(cls, ring: RingIndex, coeffs: Iterable[int]) -> CycInt:
        """Build an element from a polynomial in xi of any length."""
        return cls(ring, ring.reduce([int(c) for c in coeffs]))

    @classmethod
    def lift(cls, ring: RingIndex, value) -> CycInt:
        if isinstance(value, CycInt):
            if value.ring != ring:
                raise RingMismatch(f"ring {value.ring.n} vs ring {ring.n}")
            return value
        if isinstance(value, int):
            return cls(ring, (value,) + (0,) * (ring.degree - 1))
        raise TypeError(f"cannot interpret {value!r} as an element of Z[xi_{ring.n}]")

    # -- ring structure -------------------------------------------------
    def _coerce(self, other) -> CycInt | None:
        try:
            return CycInt.lift(self.ring, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.ring, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.ring, self.ring.reduce(_poly_mul(self.coeffs, o.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycInt):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == CycInt.lift(self.ring, other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycInt(n={self.ring.n}, {list(self.coeffs)})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    # -- Galois action and invariants ---------------------------------------
    def galois(self, k: int) -> CycInt:
        """Image under xi -> xi^k; k must be a unit mod n."""
        n = self.ring.n
        if math.gcd(k, n) != 1:
            raise ValueError(f"gcd({k}, {n}) != 1")
        out = [0] * self.ring.degree
        for i, c in enumerate(self.coeffs):
            if c:
                for j, x in enumerate(self.ring.xi_power(i * k)):
                    out[j] += c * x
        return CycInt(self.ring, tuple(out))

    def conjugate(self) -> CycInt:
        return self.galois(self.ring.n - 1)

    def multiplication_matrix(self) -> list[list[int]]:
        """Rows are the coordinates of self * xi^i, i = 0..d-1."""
        rows = []
        cur = list(self.coeffs)
        for _ in range(self.ring.degree):
            rows.append(list(cur))
            cur = list(self.ring.reduce([0] + cur))
        return rows

    def norm(self) -> int:
        """Absolute algebraic norm, the |det| of the multiplication matrix."""
        return abs(determinant(self.multiplication_matrix()))

    def is_unit(self) -> bool:
        return self.norm() == 1

    def embedding(self, k: int = 1) -> complex:
        """Evaluate at exp(2*pi*i*k/n) in double precision."""
        n = self.ring.n
        if math.gcd(k, n) != 1:
            raise ValueError(f"gcd({k}, {n}) != 1")
        w = cmath.exp(2j * math.pi * k / n)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc

