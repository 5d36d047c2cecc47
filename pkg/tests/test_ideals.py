import itertools
import math
import random

import numpy as np
import pytest

from cyclocolour.ideals import (
    NotClassNumberOne,
    colour_of,
    conjugate_ideal,
    coset_representatives,
    ideal_mul,
    principal_ideal,
    quotient_invariants,
    two_generator_ideal,
    unit_ideal,
)
from cyclocolour.lattice import canonical_residue
from cyclocolour.ring import CycInt, RingIndex, cyclotomic_ring

R4 = cyclotomic_ring(4)
R7 = cyclotomic_ring(7)
I4 = R4.xi()


def gauss(a, b):
    return R4.element([a, b])


def test_principal_examples():
    two = principal_ideal(R4.one() * 2)
    assert two.basis.rows == ((2, 0), (0, 2)) and two.norm == 4
    one_i = principal_ideal(gauss(1, 1))
    assert one_i.basis.rows == ((1, 1), (0, 2)) and one_i.norm == 2
    assert principal_ideal(R4.one()).basis.rows == ((1, 0), (0, 1))


def test_principal_errors():
    with pytest.raises(ValueError):
        principal_ideal(R4.zero())
    with pytest.raises(NotClassNumberOne):
        principal_ideal(RingIndex(23).one())


def test_two_generator_examples():
    assert two_generator_ideal(2, I4 + 1) == principal_ideal(gauss(1, 1))
    P = two_generator_ideal(7, R7.xi() - 1)
    assert P.norm == 7 and P == principal_ideal(1 - R7.xi())
    assert two_generator_ideal(5, R7.one()).norm == 1


def test_mul_examples():
    assert ideal_mul(principal_ideal(gauss(1, 1)), principal_ideal(gauss(1, -1))) == principal_ideal(R4.one() * 2)
    J = principal_ideal(gauss(2, 1))
    assert ideal_mul(J, unit_ideal(R4)) == J
    five = ideal_mul(J, principal_ideal(gauss(2, -1)))
    assert five.basis.rows == ((5, 0), (0, 5)) and five.norm == 25


def test_conjugate_examples():
    two = principal_ideal(R4.one() * 2)
    assert conjugate_ideal(two) == two
    J = principal_ideal(gauss(2, 1))
    assert conjugate_ideal(J) == principal_ideal(gauss(2, -1)) != J
    P = principal_ideal(1 - R7.xi())
    assert conjugate_ideal(P) == P


def test_colour_of_examples():
    T2 = coset_representatives(principal_ideal(R4.one() * 2))
    assert colour_of(T2, R4.zero()) == 1
    T7 = coset_representatives(principal_ideal(1 - R7.xi()))
    assert all(colour_of(T7, 1 - R7.xi(j)) == 1 for j in range(7))
    T5 = coset_representatives(principal_ideal(gauss(2, 1)))
    assert colour_of(T5, R4.one()) != colour_of(T5, I4)


def test_coset_representative_examples():
    assert list(coset_representatives(principal_ideal(R4.one() * 2))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(coset_representatives(principal_ideal(gauss(1, 1)))) == [(0, 0), (0, 1)]
    assert list(coset_representatives(unit_ideal(R4))) == [(0, 0)]


def test_quotient_invariant_examples():
    assert quotient_invariants(principal_ideal(R4.one() * 2)) == (2, 2)
    assert quotient_invariants(principal_ideal(gauss(2, 1))) == (5,)
    assert quotient_invariants(unit_ideal(R4)) == ()


def _literal_coset_table(I):
    """Enumerate the diagonal box, reduce, deduplicate, sort with 0 first."""
    box = itertools.product(*(range(r) for r in I.basis.diagonal))
    reps = sorted({canonical_residue(I.basis, v) for v in box})
    return reps


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 12])
def test_lazy_table_matches_literal_enumeration(n):
    rng = random.Random(n)
    ring = cyclotomic_ring(n)
    done = 0
    while done < 8:
        q = ring.element([rng.randint(-2, 2) for _ in range(ring.degree)])
        if not q or q.norm() > 3000:
            continue
        I = principal_ideal(q)
        T = coset_representatives(I)
        reps = _literal_coset_table(I)
        assert list(T) == reps and len(T) == I.norm
        assert T[0] == (0,) * ring.degree
        for k in (0, len(T) // 2, len(T) - 1):
            assert T.index(T[k]) == k
            assert T.colour(T.representative(k + 1)) == k + 1
        done += 1


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_distinct_residues_over_lcm_box(n):
    # oracle: count residues of every vector in [0, L)^d with L the lcm of the diagonal
    rng = random.Random(100 + n)
    ring = cyclotomic_ring(n)
    for _ in range(4):
        while True:
            q = ring.element([rng.randint(-2, 2) for _ in range(ring.degree)])
            if q and 1 < q.norm() <= 60:
                break
        I = principal_ideal(q)
        L = math.lcm(*I.basis.diagonal)
        if L ** ring.degree > 200_000:
            continue
        seen = {canonical_residue(I.basis, v) for v in itertools.product(range(L), repeat=ring.degree)}
        assert len(seen) == I.norm


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_bravais_property(n):
    # equal colour on a coefficient box implies the difference is in the ideal
    ring = cyclotomic_ring(n)
    bound = 3 if ring.degree <= 2 else 2
    rng = random.Random(n)
    for _ in range(3):
        while True:
            q = ring.element([rng.randint(-2, 2) for _ in range(ring.degree)])
            if q and 1 < q.norm() <= 40:
                break
        I = principal_ideal(q)
        T = coset_representatives(I)
        pts = [CycInt(ring, c) for c in itertools.product(range(-bound, bound + 1), repeat=ring.degree)]
        by_colour = {}
        for z in pts:
            by_colour.setdefault(T.colour(z), []).append(z)
        for members in by_colour.values():
            base = members[0]
            assert all(z - base in I for z in members)
        # and different colours never differ by an ideal element
        reps = [members[0] for members in by_colour.values()]
        for a, b in itertools.combinations(reps, 2):
            assert a - b not in I


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 9, 12, 15, 16, 20])
def test_xi_closure_and_norm(n):
    rng = random.Random(n)
    ring = cyclotomic_ring(n)
    ideals = []
    for _ in range(6):
        q = ring.element([rng.randint(-3, 3) for _ in range(ring.degree)])
        if not q:
            continue
        I = principal_ideal(q)
        assert I.norm == q.norm()
        ideals.append(I)
    ideals.append(two_generator_ideal(2, ring.xi() + 1))
    for I in ideals:
        assert I.is_xi_closed()
        assert conjugate_ideal(I).is_xi_closed()
    A, B, C = ideals[:3]
    AB = ideal_mul(A, B)
    assert AB.is_xi_closed()
    assert AB == ideal_mul(B, A)
    assert ideal_mul(AB, C) == ideal_mul(A, ideal_mul(B, C))
    assert AB.norm == A.norm * B.norm


def test_principal_product_matches_product_of_generators():
    rng = random.Random(3)
    for n in (5, 8, 12):
        ring = cyclotomic_ring(n)
        for _ in range(5):
            a = ring.element([rng.randint(-2, 2) for _ in range(ring.degree)]) + 1
            b = ring.element([rng.randint(-2, 2) for _ in range(ring.degree)]) + 2
            if a and b:
                assert ideal_mul(principal_ideal(a), principal_ideal(b)) == principal_ideal(a * b)


def test_unit_generators_give_same_ideal():
    ring = cyclotomic_ring(9)
    q = ring.element([2, 1, 0, -1])
    for k in range(9):
        assert principal_ideal(q * ring.xi(k)) == principal_ideal(q)
        assert principal_ideal(-q) == principal_ideal(q)


def test_huge_norm_table_length():
    ring = cyclotomic_ring(84)
    I = principal_ideal(ring.element([7, 1]))
    T = coset_representatives(I)
    assert T.size == I.norm > 2**64
    assert T[T.size - 1] == tuple(r - 1 for r in I.basis.diagonal)


def test_to_json():
    J = principal_ideal(gauss(2, 1))
    data = J.to_json()
    assert data == {"n": 4, "hnf": [[1, 3], [0, 5]], "norm": 5, "generator": "2,1"}
    assert ideal_mul(J, J).to_json()["norm"] == 25
