"""Vector primitives, kernel lattice bases, and pointedness."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import lattice_is_saturated, random_matrix, reference_rank
from toricrobust import (
    IntMatrix,
    conformal_leq,
    intvec,
    is_pointed,
    is_semiconformal_sum,
    kernel_lattice_basis,
    negative_part,
    positive_part,
    primitive_part,
    support,
    vec_add,
    vec_sub,
    xgcd,
)

vec = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(tuple)


@given(vec)
def test_parts_recompose_with_disjoint_support(u):
    assert vec_sub(positive_part(u), negative_part(u)) == u
    assert not set(support(positive_part(u))) & set(support(negative_part(u)))
    assert all(a >= 0 for a in positive_part(u) + negative_part(u))


def test_support_is_one_based():
    assert support((0, 3, 0, -1)) == (2, 4)


def test_conformal_examples():
    assert conformal_leq((1, -1, 0), (2, -1, 0))
    assert not conformal_leq((1, 1, -2), (5, 0, -4))
    assert conformal_leq((1, 1, -2), (1, 1, -2))


def test_conformal_length_mismatch():
    with pytest.raises(ValueError):
        conformal_leq((1, 2), (1, 2, 3))


@given(vec)
def test_conformal_reflexive(u):
    assert conformal_leq(u, u)


@given(st.tuples(vec, vec).filter(lambda p: len(p[0]) == len(p[1])))
def test_conformal_antisymmetric(p):
    g, u = p
    if conformal_leq(g, u) and conformal_leq(u, g):
        assert g == u


@settings(max_examples=300)
@given(st.integers(1, 5), st.data())
def test_conformal_transitive(n, data):
    f = data.draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n).map(tuple))
    g = data.draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n).map(tuple))
    h = data.draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n).map(tuple))
    if conformal_leq(f, g) and conformal_leq(g, h):
        assert conformal_leq(f, h)


def test_semiconformal_examples(curve465):
    kb = kernel_lattice_basis(curve465)
    assert all(kb.contains(v) for v in ((5, 0, -4), (3, -2, 0), (2, 2, -4)))
    assert is_semiconformal_sum((5, 0, -4), (3, -2, 0), (2, 2, -4))
    assert not is_semiconformal_sum((1, 0), (1, 0), (1, 0))
    u = (4, -7, 2)
    assert is_semiconformal_sum(u, u, (0, 0, 0))
    assert is_semiconformal_sum(u, (0, 0, 0), u)


def test_semiconformal_single_clause_equivalence():
    # the two defining clauses collapse to: no index with v_i > 0 and w_i < 0
    rng = random.Random(12345)
    for _ in range(10_000):
        n = rng.randint(1, 5)
        v = tuple(rng.randint(-4, 4) for _ in range(n))
        w = tuple(rng.randint(-4, 4) for _ in range(n))
        u = vec_add(v, w)
        single = not any(a > 0 and b < 0 for a, b in zip(v, w))
        assert is_semiconformal_sum(u, v, w) == single


def test_primitive_part_examples():
    assert primitive_part((4, -2)) == (2, -1)
    assert primitive_part((7, 1, 2027)) == (7, 1, 2027)
    with pytest.raises(ValueError):
        primitive_part((0, 0))


def test_primitive_part_sign_normalization():
    assert primitive_part((-4, 2)) == (-2, 1)
    assert primitive_part((-4, 2), normalize_sign=True) == (2, -1)


@given(vec.filter(any))
def test_primitive_part_gcd_one(u):
    assert math.gcd(*primitive_part(u)) == 1


@given(st.integers(-999, 999), st.integers(-999, 999))
def test_xgcd_identity(a, b):
    g, x, y = xgcd(a, b)
    assert g == math.gcd(a, b)
    assert x * a + y * b == g


def test_kernel_basis_rank_one_examples():
    kb = kernel_lattice_basis(IntMatrix.from_rows([[1, 2]]))
    assert kb.basis.cols == ((2, -1),)
    kb = kernel_lattice_basis(IntMatrix.from_rows([[1, 1, 1], [1, 2, 3]]))
    assert kb.basis.cols == ((1, -2, 1),)


def test_kernel_zero_matrix_rejected():
    with pytest.raises(ValueError):
        kernel_lattice_basis(IntMatrix.from_rows([[0, 0], [0, 0]]))


def test_t57_kernel_rank_and_saturation(t57):
    kb = kernel_lattice_basis(t57)
    assert kb.rank == 2
    assert all(not any(t57.mul_vec(c)) for c in kb.basis.cols)
    assert lattice_is_saturated(kb.basis)


def test_kernel_exactness_on_fixtures(glm_matrix, curve465, block_2x6, t57):
    for A in (glm_matrix, curve465, block_2x6, t57):
        kb = kernel_lattice_basis(A)
        assert kb.rank == A.ncols - A.rank
        for c in kb.basis.cols:
            assert not any(A.mul_vec(c))
        assert lattice_is_saturated(kb.basis)


def test_kernel_membership_of_known_vectors(curve465):
    kb = kernel_lattice_basis(curve465)
    for u in ((3, -2, 0), (1, 1, -2), (5, 0, -4), (0, 5, -6)):
        assert kb.contains(u)
    assert not kb.contains((1, 0, 0))


def test_kernel_saturation_random_oracle():
    # A @ B = 0 plus full kernel rank plus trivial invariant factors pins the
    # basis to exactly the saturated kernel lattice
    rng = random.Random(99)
    for _ in range(40):
        A = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 5), -6, 6)
        if not any(any(r) for r in A.rows):
            continue
        kb = kernel_lattice_basis(A)
        assert A.rank == reference_rank(A)
        assert kb.rank == A.ncols - A.rank
        for c in kb.basis.cols:
            assert not any(A.mul_vec(c))
        assert lattice_is_saturated(kb.basis)


def test_is_pointed_examples(t57):
    assert not is_pointed(IntMatrix.from_rows([[1, -1]]))
    assert is_pointed(IntMatrix.from_rows([[1, 2]]))
    assert is_pointed(t57)


def test_is_pointed_zero_kernel():
    assert is_pointed(IntMatrix.from_rows([[1, 0], [0, 1]]))


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix.from_rows([])
    with pytest.raises(TypeError):
        intvec([1.5, 2])
    A = IntMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(ValueError):
        A.restrict_columns((0,))
    assert A.restrict_columns((3, 1)).rows == ((3, 1),)


def test_rank_examples(t57, glm_matrix):
    assert t57.rank == 5 == reference_rank(t57)
    assert glm_matrix.rank == 13 == reference_rank(glm_matrix)
    assert IntMatrix.from_rows([[2, 4], [1, 2]]).rank == 1
