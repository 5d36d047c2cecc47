"""Exact integer matrix algebra for full-rank sublattices of Z^d.

Matrices are plain lists of integer rows.  Lattices are spanned by rows.
The Hermite normal form used here is upper triangular with a positive
diagonal and every entry above a pivot reduced into [0, pivot), which
makes it a canonical key for the lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

__all__ = [
    "HermiteBasis",
    "RankDeficient",
    "canonical_residue",
    "determinant",
    "hnf",
    "lattice_contains",
    "snf_invariants",
]

Vector = Sequence[int]


class RankDeficient(ValueError):
    """The rows do not span a finite-index sublattice."""


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rk = A[k]
        for i in range(k + 1, n):
            ri = A[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class HermiteBasis:
    """Canonical row basis of a full-rank lattice in Z^d."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(r[i] for i, r in enumerate(self.rows))

    @property
    def det(self) -> int:
        return prod(self.diagonal)

    def contains(self, v: Vector) -> bool:
        return lattice_contains(self, v)

    def residue(self, v: Vector) -> tuple[int, ...]:
        return canonical_residue(self, v)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _sub_scaled(r: list[int], q: int, piv: list[int], start: int) -> None:
    for j in range(start, len(r)):
        if piv[j]:
            r[j] -= q * piv[j]


def hnf(M: Iterable[Vector], dim: int | None = None) -> HermiteBasis:
    """Hermite normal form of the row span of M.

    Column-by-column Euclidean elimination; raises RankDeficient unless
    the rows span a lattice of full rank.
    """
    work = [list(r) for r in M]
    if dim is None:
        if not work:
            raise RankDeficient("empty generating set")
        dim = len(work[0])
    if any(len(r) != dim for r in work):
        raise ValueError("rows of unequal length")
    work = [r for r in work if any(r)]
    basis: list[list[int]] = []
    for col in range(dim):
        active = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not active:
            raise RankDeficient(f"no pivot in column {col}")
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            keep = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                _sub_scaled(r, q, piv, col)
                if r[col]:
                    keep.append(r)
                elif any(r):
                    rest.append(r)
            active = keep
        piv = active[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        work = rest
    for i in range(dim):
        p = basis[i][i]
        for j in range(i):
            q = basis[j][i] // p
            if q:
                _sub_scaled(basis[j], q, basis[i], i)
    return HermiteBasis(tuple(tuple(r) for r in basis))


def _check_dim(H: HermiteBasis, v: Vector) -> None:
    if len(v) != H.dim:
        raise ValueError(f"vector of length {len(v)} against lattice of dimension {H.dim}")


def lattice_contains(H: HermiteBasis, v: Vector) -> bool:
    _check_dim(H, v)
    v = list(v)
    for i, b in enumerate(H.rows):
        q, r = divmod(v[i], b[i])
        if r:
            return False
        if q:
            for j in range(i, len(v)):
                v[j] -= q * b[j]
    return True


def canonical_residue(H: HermiteBasis, v: Vector) -> tuple[int, ...]:
    """Reduce v into the box prod [0, H[i][i]) along the pivots in order."""
    _check_dim(H, v)
    v = list(v)
    for i, b in enumerate(H.rows):
        q = v[i] // b[i]
        if q:
            for j in range(i, len(v)):
                v[j] -= q * b[j]
    return tuple(v)


def snf_invariants(M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of a nonsingular square matrix, ones dropped."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("snf_invariants needs a square matrix")
    A = [list(r) for r in M]
    diag = []
    for t in range(n):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, n) if A[i][j]]
            if not entries:
                raise ValueError("matrix is singular")
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    _sub_scaled(A[i], q, A[t], t)
                clean &= A[i][t] == 0
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for i in range(t, n):
                        A[i][j] -= q * A[i][t]
                clean &= A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            for j in range(t, n):
                A[t][j] += A[bad][j]
        diag.append(abs(A[t][t]))
    return tuple(x for x in diag if x != 1)
