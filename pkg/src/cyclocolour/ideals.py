"""Ideals of Z[xi_n] as canonical lattices, and their coset colourings.

An ideal is stored by the Hermite basis of its coordinate lattice, so two
ideals are equal exactly when their bases are.  Its cosets are the colours:
colour 1 is the ideal itself and the remaining colours follow the
lexicographic order of canonical residues.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .lattice import HermiteBasis, canonical_residue, hnf, lattice_contains, snf_invariants
from .ring import CycInt, RingIndex, RingMismatch

__all__ = [
    "CosetTable",
    "CycIdeal",
    "NotClassNumberOne",
    "colour_of",
    "conjugate_ideal",
    "coset_representatives",
    "ideal_mul",
    "principal_ideal",
    "quotient_invariants",
    "two_generator_ideal",
    "unit_ideal",
]


class NotClassNumberOne(ValueError):
    """Colouring results need Z[xi_n] to be a principal ideal domain."""


def require_class_number_one(ring: RingIndex) -> None:
    if not ring.class_number_one:
        raise NotClassNumberOne(
            f"Z[xi_{ring.n}] does not have class number one; "
            "ideal colourings are only classified for n in "
            "3,4,5,7,8,9,11,12,13,15,16,17,19,20,21,24,25,27,28,32,33,35,36,40,44,45,48,60,84"
        )


@dataclass(frozen=True)
class CycIdeal:
    ring: RingIndex
    basis: HermiteBasis
    generators: tuple[CycInt, ...] = field(default=(), compare=False)

    @property
    def norm(self) -> int:
        return self.basis.det

    @property
    def degree(self) -> int:
        return self.ring.degree

    def __contains__(self, z) -> bool:
        z = CycInt.lift(self.ring, z)
        return lattice_contains(self.basis, z.coeffs)

    def residue(self, z) -> tuple[int, ...]:
        return canonical_residue(self.basis, CycInt.lift(self.ring, z).coeffs)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(x for r in self.basis.rows for x in r)

    def is_xi_closed(self) -> bool:
        """Check that xi * b lies in the lattice for every basis row b."""
        xi = self.ring.xi()
        return all((xi * CycInt(self.ring, b)) in self for b in self.basis.rows)

    def to_json(self) -> dict:
        out = {
            "n": self.ring.n,
            "hnf": self.basis.as_lists(),
            "norm": self.norm,
        }
        if len(self.generators) == 1:
            out["generator"] = self.generators[0].to_text()
        return out

    def __repr__(self):
        gen = f", q={self.generators[0]}" if len(self.generators) == 1 else ""
        return f"CycIdeal(n={self.ring.n}, norm={self.norm}{gen})"


def _from_elements(ring: RingIndex, elements: Sequence[CycInt], generators=()) -> CycIdeal:
    rows = []
    for z in elements:
        rows.extend(z.multiplication_matrix())
    return CycIdeal(ring, hnf(rows, ring.degree), tuple(generators))


def principal_ideal(q: CycInt) -> CycIdeal:
    """The ideal q * Z[xi_n], spanned by q * xi^i."""
    require_class_number_one(q.ring)
    if not q:
        raise ValueError("the zero element does not generate a colouring ideal")
    return CycIdeal(q.ring, hnf(q.multiplication_matrix(), q.ring.degree), (q,))


def unit_ideal(ring: RingIndex) -> CycIdeal:
    return principal_ideal(ring.one())


def two_generator_ideal(p: int, g: CycInt) -> CycIdeal:
    """The ideal (p, g); the full ring is a legitimate result."""
    if not g:
        raise ValueError("second generator must be nonzero")
    ring = g.ring
    return _from_elements(ring, [CycInt.lift(ring, p), g], (CycInt.lift(ring, p), g))


def ideal_mul(I: CycIdeal, J: CycIdeal) -> CycIdeal:
    if I.ring != J.ring:
        raise RingMismatch(f"ring {I.ring.n} vs ring {J.ring.n}")
    ring = I.ring
    rows = []
    for a in I.basis.rows:
        za = CycInt(ring, a)
        for b in J.basis.rows:
            rows.append((za * CycInt(ring, b)).coeffs)
    gens = ()
    if len(I.generators) == 1 and len(J.generators) == 1:
        gens = (I.generators[0] * J.generators[0],)
    return CycIdeal(ring, hnf(rows, ring.degree), gens)


def conjugate_ideal(I: CycIdeal) -> CycIdeal:
    ring = I.ring
    rows = [CycInt(ring, b).conjugate().coeffs for b in I.basis.rows]
    gens = tuple(g.conjugate() for g in I.generators)
    return CycIdeal(ring, hnf(rows, ring.degree), gens)


def quotient_invariants(I: CycIdeal) -> tuple[int, ...]:
    """Invariant factors of Z[xi_n] / I; the empty tuple is the trivial group."""
    return snf_invariants(I.basis.as_lists())


class CosetTable(Sequence):
    """The canonical coset representatives of an ideal, in colour order.

    Canonical residues are exactly the points of the box
    prod [0, H[i][i]) over the Hermite diagonal, so the table is indexed by
    mixed radix (first coordinate most significant) and never has to be
    stored.  ``size`` is the norm even when it exceeds what ``len`` may return.
    """

    def __init__(self, ideal: CycIdeal):
        self.ideal = ideal
        self.radices = ideal.basis.diagonal
        weights = []
        w = 1
        for r in reversed(self.radices):
            weights.append(w)
            w *= r
        self.weights = tuple(reversed(weights))
        self.size = w

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, k):
        if isinstance(k, slice):
            return [self[i] for i in range(*k.indices(len(self)))]
        if k < 0:
            k += self.size
        if not 0 <= k < self.size:
            raise IndexError(k)
        out = []
        for w, r in zip(self.weights, self.radices):
            out.append((k // w) % r)
        return tuple(out)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (tuple(v) for v in product(*(range(r) for r in self.radices)))

    def index(self, residue) -> int:
        """Zero-based position of a canonical residue."""
        return sum(x * w for x, w in zip(residue, self.weights))

    def colour(self, z) -> int:
        return 1 + self.index(self.ideal.residue(z))

    def representative(self, colour: int) -> CycInt:
        return CycInt(self.ideal.ring, self[colour - 1])


def coset_representatives(I: CycIdeal) -> CosetTable:
    require_class_number_one(I.ring)
    return CosetTable(I)


def colour_of(T: CosetTable, z: CycInt) -> int:
    if z.ring != T.ideal.ring:
        raise RingMismatch(f"ring {z.ring.n} vs ring {T.ideal.ring.n}")
    return T.colour(z)
