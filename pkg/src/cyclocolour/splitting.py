"""Prime ideals of Z[xi_n] and the ideals of a given norm.

A rational prime p factors in Z[xi_n] according to the factorisation of
Phi_n modulo p: each irreducible factor g of multiplicity e gives the prime
ideal (p, g(xi)) of norm p^deg(g) and ramification e.  Ideals of norm l are
then products of prime-ideal powers whose norms multiply to l.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache
from itertools import product

from .finitefield import FpPolynomial, factor, is_prime
from .ideals import (
    CycIdeal,
    conjugate_ideal,
    ideal_mul,
    principal_ideal,
    require_class_number_one,
    two_generator_ideal,
    unit_ideal,
)
from .ring import CycInt, cyclotomic_polynomial, cyclotomic_ring
from .symmetry import ColouringReport, classify

__all__ = [
    "DEFAULT_SEED",
    "NormTarget",
    "PrimeIdealFactor",
    "TableRow",
    "classify_norm",
    "factor_integer",
    "factor_phi_mod_p",
    "ideals_of_norm",
    "norm_table",
    "prime_ideals_above",
    "splitting_type",
    "verify_generator",
]

DEFAULT_SEED = 0xC1C10


@dataclass(frozen=True)
class NormTarget:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __str__(self):
        return " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors) or "1"


def factor_integer(m: int) -> NormTarget:
    """Trial division; fine for m up to about 10^9."""
    if m < 1:
        raise ValueError("can only factor positive integers")
    out = []
    rest, p = m, 2
    while p * p <= rest:
        if rest % p == 0:
            a = 0
            while rest % p == 0:
                rest //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return NormTarget(m, tuple(out))


def _rng(n: int, p: int, seed: int) -> random.Random:
    return random.Random(f"{n}:{p}:{seed}")


def factor_phi_mod_p(n: int, p: int, seed: int = DEFAULT_SEED) -> list[tuple[FpPolynomial, int]]:
    """Monic irreducible factors of Phi_n over GF(p), with multiplicity."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return factor(FpPolynomial(p, cyclotomic_polynomial(n)), _rng(n, p, seed))


@dataclass(frozen=True)
class PrimeIdealFactor:
    p: int
    g: FpPolynomial
    ramification: int
    ideal: CycIdeal
    partner: int
    index: int

    @property
    def residue_degree(self) -> int:
        return self.g.degree

    @property
    def self_conjugate(self) -> bool:
        return self.partner == self.index


@cache
def _prime_ideals_above(n: int, p: int, seed: int) -> tuple[PrimeIdealFactor, ...]:
    ring = cyclotomic_ring(n)
    require_class_number_one(ring)
    raw = []
    for g, e in factor_phi_mod_p(n, p, seed):
        lift = CycInt.from_coeffs(ring, g.coeffs)
        if not lift:
            # g is Phi_n itself (p inert); g + p is the same residue class
            lift = lift + p
        I = two_generator_ideal(p, lift)
        if I.norm != p**g.degree:
            raise AssertionError(f"prime ideal above {p} in Z[xi_{n}] has norm {I.norm}")
        raw.append((g, e, I))
    keys = [I for _, _, I in raw]
    out = []
    for k, (g, e, I) in enumerate(raw):
        partner = keys.index(conjugate_ideal(I))
        out.append(PrimeIdealFactor(p, g, e, I, partner, k))
    return tuple(out)


def prime_ideals_above(n: int, p: int, seed: int = DEFAULT_SEED) -> list[PrimeIdealFactor]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return list(_prime_ideals_above(n, p, seed))


def splitting_type(n: int, p: int, seed: int = DEFAULT_SEED) -> str:
    """'ramified', 'inert' (all prime ideals self-conjugate) or 'complex splitting'."""
    if n % p == 0:
        return "ramified"
    if all(f.self_conjugate for f in prime_ideals_above(n, p, seed)):
        return "inert"
    return "complex splitting"


def _exponent_vectors(degrees: list[int], total: int):
    """All e >= 0 with sum(e_j * f_j) == total."""
    if not degrees:
        if total == 0:
            yield ()
        return
    f, rest = degrees[0], degrees[1:]
    for e in range(total // f + 1):
        for tail in _exponent_vectors(rest, total - e * f):
            yield (e,) + tail


@cache
def _ideal_power(I: CycIdeal, e: int) -> CycIdeal:
    if e == 0:
        return unit_ideal(I.ring)
    if e == 1:
        return I
    return ideal_mul(_ideal_power(I, e - 1), I)


def _ideals_of_prime_power(n: int, p: int, a: int, seed: int) -> list[CycIdeal]:
    primes = prime_ideals_above(n, p, seed)
    out = []
    for exps in _exponent_vectors([P.residue_degree for P in primes], a):
        J = unit_ideal(cyclotomic_ring(n))
        for P, e in zip(primes, exps):
            if e:
                J = ideal_mul(J, _ideal_power(P.ideal, e))
        out.append(J)
    return out


@cache
def _ideals_of_norm(n: int, ell: int, seed: int) -> tuple[CycIdeal, ...]:
    ring = cyclotomic_ring(n)
    require_class_number_one(ring)
    parts = [_ideals_of_prime_power(n, p, a, seed) for p, a in factor_integer(ell).factors]
    found = {}
    for combo in product(*parts):
        J = unit_ideal(ring)
        for K in combo:
            J = ideal_mul(J, K) if K.norm > 1 else J
        if J.norm != ell or not J.is_xi_closed():
            raise AssertionError(f"bad ideal of norm {J.norm} for target {ell}")
        found.setdefault(J.sort_key(), J)
    return tuple(found[k] for k in sorted(found))


def ideals_of_norm(n: int, ell: int, seed: int = DEFAULT_SEED) -> list[CycIdeal]:
    """Every ideal of Z[xi_n] with index ell, ordered by flattened Hermite basis."""
    if ell < 1:
        raise ValueError("norm must be positive")
    return list(_ideals_of_norm(n, ell, seed))


def classify_norm(n: int, ell: int, seed: int = DEFAULT_SEED) -> tuple[int, list[ColouringReport]]:
    reports = [classify(I) for I in ideals_of_norm(n, ell, seed)]
    return len(reports), reports


def verify_generator(n: int, q: CycInt, I: CycIdeal) -> bool:
    if q.ring.n != n or I.ring.n != n:
        raise ValueError("generator and ideal must live in Z[xi_n]")
    return principal_ideal(q) == I


@dataclass(frozen=True)
class TableRow:
    """Ideals of one norm sharing the same H and K."""

    n: int
    norm: int
    count: int
    perfect: bool
    point_kind: str
    point_r: int

    @property
    def H(self) -> str:
        return "G" if self.perfect else "G'"

    @property
    def K(self) -> str:
        if self.point_r == 1 and self.point_kind == "C":
            return "T"
        return f"T x| {self.point_kind}_{self.point_r}"


def norm_table(n: int, lmax: int, lmin: int = 2, seed: int = DEFAULT_SEED) -> list[TableRow]:
    """All colourings with lmin <= l <= lmax colours, grouped by (H, K)."""
    rows = []
    for ell in range(max(lmin, 1), lmax + 1):
        groups: dict[tuple, int] = {}
        for rep in classify_norm(n, ell, seed)[1]:
            key = (rep.perfect, rep.S.kind, rep.S.r)
            groups[key] = groups.get(key, 0) + 1
        order = sorted(groups, key=lambda k: (not k[0], -k[2], k[1]))
        rows.extend(TableRow(n, ell, groups[k], *k) for k in order)
    return rows
