import itertools
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocolour.lattice import (
    RankDeficient,
    canonical_residue,
    determinant,
    hnf,
    lattice_contains,
    snf_invariants,
)


def test_hnf_examples():
    assert hnf([(1, 1), (-1, 1)]).rows == ((1, 1), (0, 2))
    assert hnf([(2, 0), (0, 2)]).rows == ((2, 0), (0, 2))
    assert hnf([(2, 0), (0, 2), (1, 1), (-1, 1)]).rows == ((1, 1), (0, 2))


def test_hnf_rank_deficient():
    with pytest.raises(RankDeficient):
        hnf([(1, 2), (2, 4)])
    with pytest.raises(RankDeficient):
        hnf([(1, 0, 0), (0, 1, 0)], dim=3)


def test_determinant_examples():
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert determinant([[1, 1], [0, 2]]) == 2
    assert determinant([[2, 1], [-1, 2]]) == 5
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_determinant_matches_sympy():
    rng = random.Random(5)
    for size in range(1, 9):
        for _ in range(10):
            M = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
            assert determinant(M) == sympy.Matrix(M).det()


def test_snf_examples():
    assert snf_invariants([[2, 0], [0, 2]]) == (2, 2)
    assert snf_invariants([[2, 1], [-1, 2]]) == (5,)
    assert snf_invariants([[1, 0], [0, 1]]) == ()
    with pytest.raises(ValueError):
        snf_invariants([[1, 2], [2, 4]])


def test_snf_matches_sympy():
    from sympy.matrices.normalforms import smith_normal_form
    rng = random.Random(11)
    for _ in range(40):
        size = rng.randint(1, 5)
        M = [[rng.randint(-6, 6) for _ in range(size)] for _ in range(size)]
        if determinant(M) == 0:
            continue
        S = smith_normal_form(sympy.Matrix(M), domain=sympy.ZZ)
        ref = sorted(abs(int(S[i, i])) for i in range(size))
        assert snf_invariants(M) == tuple(x for x in ref if x != 1)


def test_contains_and_residue_examples():
    H = hnf([(1, 1), (-1, 1)])
    assert lattice_contains(H, (2, 0))
    assert not lattice_contains(H, (1, 0))
    assert lattice_contains(H, (0, 0))
    assert canonical_residue(H, (3, 5)) == (0, 0)
    assert canonical_residue(H, (1, 0)) == (0, 1)
    assert canonical_residue(H, (0, 0)) == (0, 0)
    with pytest.raises(ValueError):
        lattice_contains(H, (1, 2, 3))
    with pytest.raises(ValueError):
        canonical_residue(H, (1,))


def _full_rank(d):
    return st.lists(
        st.lists(st.integers(-7, 7), min_size=d, max_size=d), min_size=d, max_size=d + 2
    ).filter(lambda M: sympy.Matrix(M).rank() == d)


matrices = st.integers(1, 4).flatmap(_full_rank)


@settings(max_examples=150, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_hnf_canonical_under_row_operations(M, rnd):
    H = hnf(M)
    d = H.dim
    for i in range(d):
        assert H.rows[i][i] > 0
        assert all(H.rows[i][j] == 0 for j in range(i))
        for j in range(i):
            assert 0 <= H.rows[j][i] < H.rows[i][i]
    shuffled = list(M)
    rnd.shuffle(shuffled)
    # a unimodular recombination: add a multiple of one row to another
    if len(shuffled) > 1:
        k = rnd.randint(-3, 3)
        shuffled[0] = [a + k * b for a, b in zip(shuffled[0], shuffled[1])]
    assert hnf(shuffled) == H
    assert all(lattice_contains(H, row) for row in M)


@settings(max_examples=150, deadline=None)
@given(matrices, st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_residue_idempotent_and_sound(M, v):
    H = hnf(M)
    v = v[: H.dim]
    r = canonical_residue(H, v)
    assert canonical_residue(H, r) == r
    assert lattice_contains(H, [a - b for a, b in zip(v, r)])
    assert all(0 <= r[i] < H.rows[i][i] for i in range(H.dim))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda d: st.lists(st.lists(st.integers(-6, 6), min_size=d, max_size=d), min_size=d, max_size=d)))
def test_determinant_hnf_snf_agree(M):
    D = determinant(M)
    if D == 0:
        return
    assert hnf(M).det == abs(D)
    inv = snf_invariants(M)
    assert sympy.prod(inv) == abs(D)
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))


def test_residues_distinguish_cosets_exhaustively():
    H = hnf([(2, 1, 0), (0, 3, 1), (1, 0, 4)])
    box = list(itertools.product(range(-3, 4), repeat=3))
    for u, w in itertools.combinations(box[::7], 2):
        same = canonical_residue(H, u) == canonical_residue(H, w)
        assert same == lattice_contains(H, [a - b for a, b in zip(u, w)])
