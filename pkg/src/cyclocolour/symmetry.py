"""Colour symmetries of ideal colourings of Z[xi_n].

The symmetry group of Z[xi_n] is the module of translations extended by
the dihedral point group D_N (order 2N, N = n for even n, 2n for odd n).
For the colouring by the cosets of an ideal I:

* every rotation permutes the cosets, a reflection does so exactly when
  I is invariant under complex conjugation (the colouring is perfect);
* an affine map z -> g(z) + t fixes every colour iff t lies in I and g
  lies in the stabiliser S = {g : g(xi^i) - xi^i in I for all i}.

So H and K reduce to finitely many lattice-membership tests.  The module
also carries an exhaustive patch check used as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

import numpy as np

from .finitefield import is_prime
from .ideals import (
    CycIdeal,
    conjugate_ideal,
    coset_representatives,
    principal_ideal,
    require_class_number_one,
)
from .ring import CycInt, RingIndex

__all__ = [
    "AffineMap",
    "BruteForceVerdict",
    "ColouringReport",
    "GroupDescriptor",
    "NotAColourSymmetry",
    "PointIsometry",
    "PointSubgroup",
    "Prediction",
    "brute_force_verify",
    "classify",
    "colour_preserving_group",
    "colour_stabiliser",
    "colour_symmetry_group",
    "induced_permutation",
    "is_balanced",
    "is_perfect",
    "lemma_predictions",
    "point_group",
    "quotient_order",
    "semidirect_witness_l2",
]


class NotAColourSymmetry(ValueError):
    """The map does not send cosets of the ideal onto cosets."""


@dataclass(frozen=True)
class PointIsometry:
    """Rotation z -> u z or reflection z -> u conj(z), u = exp(2 pi i j / N)."""

    ring: RingIndex
    kind: str
    exponent: int

    def __post_init__(self):
        if self.kind not in ("rotation", "reflection"):
            raise ValueError(f"unknown isometry kind {self.kind!r}")
        object.__setattr__(self, "exponent", self.exponent % self.ring.point_order)

    @classmethod
    def rotation(cls, ring: RingIndex, j: int = 0) -> PointIsometry:
        return cls(ring, "rotation", j)

    @classmethod
    def reflection(cls, ring: RingIndex, j: int = 0) -> PointIsometry:
        return cls(ring, "reflection", j)

    @property
    def is_reflection(self) -> bool:
        return self.kind == "reflection"

    @property
    def unit(self) -> CycInt:
        return self.ring.root_of_unity(self.exponent)

    @property
    def sign_and_power(self) -> tuple[int, int]:
        """u written as sign * xi_n^k."""
        u = self.unit
        for k in range(self.ring.n):
            xk = self.ring.xi(k)
            if u == xk:
                return 1, k
            if u == -xk:
                return -1, k
        raise AssertionError("unit is not a signed power of xi")

    def __call__(self, z: CycInt) -> CycInt:
        return self.unit * (z.conjugate() if self.is_reflection else z)

    def compose(self, other: PointIsometry) -> PointIsometry:
        """The map self o other."""
        a, b = self.exponent, other.exponent
        if not self.is_reflection:
            return PointIsometry(self.ring, other.kind, a + b)
        kind = "rotation" if other.is_reflection else "reflection"
        return PointIsometry(self.ring, kind, a - b)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Row i holds the coordinates of the image of xi^i."""
        return _isometry_matrix(self)

    def label(self) -> str:
        return f"{'rot' if self.kind == 'rotation' else 'ref'}({self.exponent})"

    def __repr__(self):
        return f"PointIsometry(n={self.ring.n}, {self.label()})"


@cache
def _isometry_matrix(g: PointIsometry) -> tuple[tuple[int, ...], ...]:
    return tuple(g(g.ring.xi(i)).coeffs for i in range(g.ring.degree))


def point_group(ring: RingIndex) -> list[PointIsometry]:
    """All 2N elements: rotations by exponent 0..N-1, then reflections."""
    N = ring.point_order
    return [PointIsometry(ring, k, j) for k in ("rotation", "reflection") for j in range(N)]


@dataclass(frozen=True)
class AffineMap:
    """z -> linear(z) + shift."""

    linear: PointIsometry
    shift: CycInt

    def __call__(self, z: CycInt) -> CycInt:
        return self.linear(z) + self.shift

    def compose(self, other: AffineMap) -> AffineMap:
        return AffineMap(self.linear.compose(other.linear), self.linear(other.shift) + self.shift)


@dataclass(frozen=True)
class PointSubgroup:
    """A subgroup of D_N, named C_r (order r) or D_r (order 2r)."""

    N: int
    rotations: tuple[int, ...]
    reflections: tuple[int, ...]

    @property
    def kind(self) -> str:
        return "D" if self.reflections else "C"

    @property
    def r(self) -> int:
        return len(self.rotations)

    @property
    def order(self) -> int:
        return len(self.rotations) + len(self.reflections)

    @property
    def axis(self) -> int | None:
        return min(self.reflections) if self.reflections else None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def witnesses(self, ring: RingIndex) -> list[PointIsometry]:
        gens = [PointIsometry.rotation(ring, self.N // self.r)] if self.r > 1 else []
        if self.reflections:
            gens.append(PointIsometry.reflection(ring, self.axis))
        return gens

    def contains(self, g: PointIsometry) -> bool:
        pool = self.reflections if g.is_reflection else self.rotations
        return g.exponent in pool

    def label(self) -> str:
        if self.reflections:
            return f"D_{self.r}(axis={self.axis})"
        return f"C_{self.r}"

    @classmethod
    def full(cls, N: int, with_reflections: bool = True) -> PointSubgroup:
        refl = tuple(range(N)) if with_reflections else ()
        return cls(N, tuple(range(N)), refl)


@dataclass(frozen=True)
class GroupDescriptor:
    """Translations (the whole module, or an ideal) extended by a point group."""

    ring: RingIndex
    point: PointSubgroup
    translations: CycIdeal | None = None

    def label(self) -> str:
        p = self.point
        if self.translations is None:
            return f"M{self.ring.n}:{p.kind}{p.r}"
        return f"T:{p.kind}_{p.r}"

    @property
    def witnesses(self) -> list[PointIsometry]:
        return self.point.witnesses(self.ring)


@dataclass
class ColouringReport:
    ideal: CycIdeal
    perfect: bool
    H: GroupDescriptor
    S: PointSubgroup
    K: GroupDescriptor
    quotient_order: int

    @property
    def n(self) -> int:
        return self.ideal.ring.n

    @property
    def norm(self) -> int:
        return self.ideal.norm

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ideal": self.ideal.to_json(),
            "norm": self.norm,
            "perfect": self.perfect,
            "H": self.H.label(),
            "S": self.S.label(),
            "K": self.K.label(),
            "quotient_order": self.quotient_order,
        }


# -- perfection and the groups H, S, K ----------------------------------------

def is_balanced(q: CycInt) -> bool:
    """Whether conj(q) lies in (q)."""
    if not q:
        raise ValueError("zero has no colouring")
    return q.conjugate() in principal_ideal(q)


def is_perfect(I: CycIdeal) -> bool:
    require_class_number_one(I.ring)
    return conjugate_ideal(I) == I


def colour_symmetry_group(I: CycIdeal) -> GroupDescriptor:
    require_class_number_one(I.ring)
    N = I.ring.point_order
    return GroupDescriptor(I.ring, PointSubgroup.full(N, with_reflections=is_perfect(I)))


def _fixes_all_cosets(I: CycIdeal, g: PointIsometry) -> bool:
    ring = I.ring
    for i, image in enumerate(g.matrix()):
        diff = CycInt(ring, image) - ring.xi(i)
        if diff not in I:
            return False
    return True


def colour_stabiliser(I: CycIdeal) -> PointSubgroup:
    """The point isometries that fix every coset of I."""
    require_class_number_one(I.ring)
    rots, refls = [], []
    for g in point_group(I.ring):
        if _fixes_all_cosets(I, g):
            (refls if g.is_reflection else rots).append(g.exponent)
    return PointSubgroup(I.ring.point_order, tuple(rots), tuple(refls))


def colour_preserving_group(I: CycIdeal) -> GroupDescriptor:
    return GroupDescriptor(I.ring, colour_stabiliser(I), translations=I)


def quotient_order(I: CycIdeal) -> int:
    H = colour_symmetry_group(I)
    S = colour_stabiliser(I)
    return I.norm * H.point.order // S.order


def classify(I: CycIdeal) -> ColouringReport:
    H = colour_symmetry_group(I)
    S = colour_stabiliser(I)
    return ColouringReport(
        ideal=I,
        perfect=bool(H.point.reflections),
        H=H,
        S=S,
        K=GroupDescriptor(I.ring, S, translations=I),
        quotient_order=I.norm * H.point.order // S.order,
    )


def induced_permutation(I: CycIdeal, g: PointIsometry, t: CycInt | int = 0) -> tuple[int, ...]:
    """The colour permutation of z -> g(z) + t; entry i-1 is the image of colour i."""
    ring = I.ring
    t = CycInt.lift(ring, t)
    if g.is_reflection and not is_perfect(I):
        raise NotAColourSymmetry(
            f"{g.label()} does not map the ideal of norm {I.norm} onto itself"
        )
    table = coset_representatives(I)
    return tuple(table.colour(g(CycInt(ring, rep)) + t) for rep in table)


def semidirect_witness_l2(I: CycIdeal) -> AffineMap:
    """The involution z -> -conj(z) + 1 splitting H for a two-colouring."""
    if I.norm != 2:
        raise ValueError(f"needs an ideal of norm 2, got norm {I.norm}")
    ring = I.ring
    h = AffineMap(PointIsometry.reflection(ring, ring.point_order // 2), ring.one())
    pi = induced_permutation(I, h.linear, h.shift)
    if pi != (2, 1):
        raise AssertionError(f"witness induces {pi}, not the transposition")
    hh = h.compose(h)
    if hh.linear != PointIsometry.rotation(ring, 0) or hh.shift:
        raise AssertionError("witness is not an involution")
    return h


# -- independent patch oracle ---------------------------------------------------

@dataclass
class BruteForceVerdict:
    consistent: bool
    identity: bool
    mapping: dict[int, int] = field(default_factory=dict)
    points: int = 0


@cache
def _coefficient_box(d: int, bound: int) -> np.ndarray:
    axes = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([axes] * d), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _patch_colours(I: CycIdeal, coords: np.ndarray) -> np.ndarray:
    """Zero-based colours of coordinate rows, by direct residue reduction."""
    H = np.array(I.basis.rows, dtype=coords.dtype)
    v = coords.copy()
    for i in range(H.shape[0]):
        q = v[:, i] // H[i, i]
        v -= q[:, None] * H[i]
    table = coset_representatives(I)
    w = np.array(table.weights, dtype=coords.dtype)
    return v @ w


def brute_force_verify(I: CycIdeal, g: PointIsometry, t: CycInt | int = 0, bound: int = 3) -> BruteForceVerdict:
    """Check c(g(z) + t) = pi(c(z)) over all z with coefficients in [-bound, bound]."""
    ring = I.ring
    t = CycInt.lift(ring, t)
    d = ring.degree
    dtype = np.int64 if I.norm < 2**40 and max(map(abs, t.coeffs)) < 2**20 else object
    pts = _coefficient_box(d, max(bound, 0)).astype(dtype)
    A = np.array(g.matrix(), dtype=dtype)
    images = pts @ A + np.array(t.coeffs, dtype=dtype)
    src = _patch_colours(I, pts)
    dst = _patch_colours(I, images)
    ell = I.norm
    pairs = np.unique(src * ell + dst)
    s, t_ = np.divmod(pairs, ell)
    consistent = len(np.unique(s)) == len(pairs) and len(np.unique(t_)) == len(pairs)
    mapping = {int(a) + 1: int(b) + 1 for a, b in zip(s, t_)} if consistent else {}
    return BruteForceVerdict(
        consistent=consistent,
        identity=consistent and bool(np.all(s == t_)),
        mapping=mapping,
        points=len(pts),
    )


# -- predictions from the norm alone ---------------------------------------------

@dataclass(frozen=True)
class Prediction:
    item: str
    claim: str
    applies: bool
    holds: bool

    @property
    def ok(self) -> bool:
        return not self.applies or self.holds


def lemma_predictions(I: CycIdeal) -> list[Prediction]:
    """Consequences of the norm for perfection and for S, checked against the computed values."""
    ring = I.ring
    n, d, ell, N = ring.n, ring.degree, I.norm, ring.point_order
    perfect = is_perfect(I)
    S = colour_stabiliser(I)
    two_d = 2**d
    ell_prime = is_prime(ell)
    zero_res = I.residue(0)
    unit_colours_differ = all(
        I.residue(s * ring.xi(i)) != zero_res for i in range(n) for s in (1, -1)
    )
    is_two = I == principal_ideal(ring.one() * 2)
    conj_in_S = 0 in S.reflections
    preds = [
        Prediction("a", "ell >= 2 iff 0 and every +-xi^i get different colours",
                   True, (ell >= 2) == unit_colours_differ),
        Prediction("b", "ell = 2 implies perfect with S = D_N",
                   ell == 2, perfect and S.order == 2 * N),
    ]
    if n == 4:
        two_ok = perfect and S.kind == "D" and S.r == 2
    else:
        two_ok = perfect and S.kind == "C" and S.r == 2
    preds += [
        Prediction("c", "ell > 2^phi(n) implies S trivial", ell > two_d, S.is_trivial),
        Prediction("d", "I = (2) implies perfect, S = D_2 for n = 4 and C_2 otherwise",
                   is_two, two_ok),
        Prediction("e", "ell = 2^phi(n) and I != (2) implies S trivial",
                   ell == two_d and not is_two, S.is_trivial),
        Prediction("f", "2 < ell = n prime implies perfect with S = D_n",
                   2 < ell == n and is_prime(n), perfect and S.kind == "D" and S.r == n),
        Prediction("g", "perfect with ell prime implies conj in S",
                   perfect and ell_prime, conj_in_S),
        Prediction("h", "ell prime with S trivial, or ell > 2^phi(n) prime, implies not perfect",
                   ell_prime and (S.is_trivial or ell > two_d), not perfect),
        Prediction("i", "ell > n prime implies not perfect", ell > n and ell_prime, not perfect),
        Prediction("j", "ell divides neither 2^phi(n) nor n^phi(n) implies S trivial",
                   two_d % ell != 0 and n**d % ell != 0, S.is_trivial),
    ]
    return preds


def verify_against_oracle(I: CycIdeal, bound: int = 3) -> list[tuple[PointIsometry, bool, bool, BruteForceVerdict]]:
    """Per point isometry: (g, in H, in S, brute-force verdict) for comparison."""
    perfect = is_perfect(I)
    S = colour_stabiliser(I)
    out = []
    for g in point_group(I.ring):
        verdict = brute_force_verify(I, g, 0, bound)
        in_H = perfect or not g.is_reflection
        out.append((g, in_H, S.contains(g), verdict))
    return out

