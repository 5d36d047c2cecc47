"""Polynomials over GF(p) and their factorisation.

Coefficients are stored lowest degree first as integers in [0, p).  The
zero polynomial has no coefficients.  Factorisation runs the classical
pipeline: square-free decomposition, distinct-degree factorisation, then
equal-degree splitting (Cantor-Zassenhaus for odd p, the trace map for
p = 2).  Linear factors are found by trying every residue when p is small.
"""
from __future__ import annotations

import random
from typing import Iterable

__all__ = ["FpPolynomial", "factor", "is_prime"]

ROOT_SEARCH_LIMIT = 10_000


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class FpPolynomial:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        c = [x % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, p: int) -> FpPolynomial:
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> FpPolynomial:
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FpPolynomial):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FpPolynomial(self.p, (other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __lt__(self, other: FpPolynomial):
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"FpPolynomial({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def _new(self, coeffs) -> FpPolynomial:
        return FpPolynomial(self.p, coeffs)

    def __add__(self, other: FpPolynomial):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return self._new([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return self._new([-x for x in self.coeffs])

    def __sub__(self, other: FpPolynomial):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._new(out)

    __rmul__ = __mul__

    def __divmod__(self, other: FpPolynomial):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        db = other.degree
        inv = pow(other.coeffs[-1], -1, p)
        if len(r) <= db:
            return self._new(()), self
        q = [0] * (len(r) - db)
        b = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] * inv % p
            if c:
                q[k - db] = c
                for j in range(db + 1):
                    r[k - db + j] = (r[k - db + j] - c * b[j]) % p
        return self._new(q), self._new(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> FpPolynomial:
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return self * inv

    def derivative(self) -> FpPolynomial:
        return self._new([i * c for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, mod: FpPolynomial) -> FpPolynomial:
        result = self.const(self.p, 1) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def pth_root(self) -> FpPolynomial:
        """Inverse Frobenius for a polynomial in x^p (coefficients are fixed by Frobenius in GF(p))."""
        p = self.p
        if any(c for i, c in enumerate(self.coeffs) if i % p):
            raise ValueError("not a p-th power")
        return self._new(self.coeffs[::p])

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % self.p
        return acc


def gcd(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    while b:
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(f: FpPolynomial) -> list[tuple[FpPolynomial, int]]:
    """Pairs (g, m) of square-free, pairwise coprime g with f = lc * prod g^m."""
    p = f.p
    f = f.monic()
    out: list[tuple[FpPolynomial, int]] = []
    if f.degree < 1:
        return out
    df = f.derivative()
    if not df:
        return [(g, m * p) for g, m in square_free_decomposition(f.pth_root())]
    c = gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, m * p) for g, m in square_free_decomposition(c.pth_root()))
    return out


def distinct_degree(f: FpPolynomial) -> list[tuple[FpPolynomial, int]]:
    """Split square-free monic f into products of equal-degree irreducibles."""
    p = f.p
    x = FpPolynomial.x(p)
    out = []
    h = x % f
    rest = f
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, rest)
        g = gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def _linear_roots(f: FpPolynomial) -> list[FpPolynomial]:
    p = f.p
    return [FpPolynomial(p, (-r, 1)) for r in range(p) if f(r) == 0]


def equal_degree(f: FpPolynomial, d: int, rng: random.Random) -> list[FpPolynomial]:
    """Irreducible factors of square-free monic f, all of degree d."""
    p = f.p
    if f.degree == d:
        return [f]
    if d == 1 and p <= ROOT_SEARCH_LIMIT:
        return _linear_roots(f)
    while True:
        a = FpPolynomial(p, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = gcd(a, f)
        if 0 < g.degree < f.degree:
            break
        if p == 2:
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            g = gcd(acc, f)
        else:
            g = gcd(a.powmod((p ** d - 1) // 2, f) - FpPolynomial.const(p, 1), f)
        if 0 < g.degree < f.degree:
            break
    return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor(f: FpPolynomial, rng: random.Random) -> list[tuple[FpPolynomial, int]]:
    """Monic irreducible factors with multiplicity, sorted by degree then coefficients."""
    out = []
    for g, m in square_free_decomposition(f):
        for h, d in distinct_degree(g):
            out.extend((irr, m) for irr in equal_degree(h, d, rng))
    out.sort(key=lambda t: (t[0], t[1]))
    return out
