import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from batchfactor.bigpoly import sylvester_matrix
from batchfactor.intlinalg import (
    bareiss_det,
    hnf,
    identity,
    kernel_basis,
    lattice_echelon,
    matmul,
    matvec,
    nullspace_mod_p,
    rank,
    rank_mod_p,
)


def matrices(max_rows=5, max_cols=5, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def test_det_examples():
    assert bareiss_det([[2, 3], [1, 4]]) == 5
    assert bareiss_det(identity(4)) == 1
    assert bareiss_det(sylvester_matrix([-3, 0, 1], [-1, 2])) == -11
    with pytest.raises(ValueError):
        bareiss_det([[1, 2]])


def test_det_against_sympy():
    import sympy

    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(1, 6)
        M = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(M) == sympy.Matrix(M).det()


def test_hnf_examples():
    H, Q = hnf([[2, 4], [0, 0]])
    assert H == [[2, 0], [0, 0]]
    assert [Q[0][1], Q[1][1]] == [-2, 1]
    assert hnf(identity(3)) == (identity(3), identity(3))


def test_hnf_transform_unimodular():
    rng = random.Random(2)
    for _ in range(100):
        M = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        H, Q = hnf(M)
        assert abs(bareiss_det(Q)) == 1
        assert matmul(M, Q) == H


@given(matrices())
def test_hnf_shape(M):
    H, Q = hnf(M)
    assert matmul(M, Q) == H
    n = len(M[0])
    nonzero = [j for j in range(n) if any(row[j] for row in H)]
    assert nonzero == list(range(len(nonzero)))
    last_row = -1
    for j in nonzero:
        i = next(i for i in range(len(H)) if H[i][j])
        assert i > last_row and H[i][j] > 0
        for k in range(j):
            assert 0 <= H[i][k] < H[i][j]
        last_row = i


def test_kernel_examples():
    assert kernel_basis([[1, 1], [1, 1]]) == [[1, -1]]
    assert kernel_basis(identity(3)) == []
    assert kernel_basis([[0, 0], [0, 0]]) == [[1, 0], [0, 1]]
    assert kernel_basis([[2, 4, 6]]) == [[2, -1, 0], [3, 0, -1]]


def _lattice(vectors, n):
    return lattice_echelon([list(v) for v in vectors]) if vectors else []


@given(matrices(lo=-6, hi=6))
def test_kernel_basis_properties(M):
    n = len(M[0])
    K = kernel_basis(M)
    assert len(K) == n - rank(M)
    for v in K:
        assert matvec(M, v) == [0] * len(M)
        first = next(x for x in v if x)
        assert first > 0
    # saturation: the same lattice as the kernel read off an HNF transform
    H, Q = hnf(M)
    zero_cols = [j for j in range(n) if not any(row[j] for row in H)]
    from_q = [[Q[i][j] for i in range(n)] for j in zero_cols]
    assert _lattice(K, n) == _lattice(from_q, n)


def test_kernel_saturated():
    # the kernel of [6, -4] is generated by (2, 3), not by (4, 6)
    assert kernel_basis([[6, -4]]) == [[2, 3]]


def test_kernel_mod_p_spans():
    rng = random.Random(4)
    for _ in range(30):
        M = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(2)]
        K = kernel_basis(M)
        for p in [101, 103, 107]:
            if rank_mod_p(M, p) != rank(M):
                continue
            red = [[x % p for x in v] for v in K]
            assert len(nullspace_mod_p(M, p)) == len(K)
            if red:
                assert rank_mod_p(red, p) == len(K)
