import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from psolv.linalg import EchelonBasis, FpMatrix


@st.composite
def matrices(draw, max_dim=5):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return FpMatrix(p, rows, c)


def span_size(M):
    """Size of the row space by enumerating all combinations."""
    vecs = set()
    for coeffs in itertools.product(range(M.p), repeat=M.nrows):
        v = [0] * M.ncols
        for a, row in zip(coeffs, M.rows):
            v = [(x + a * y) % M.p for x, y in zip(v, row)]
        vecs.add(tuple(v))
    return len(vecs)


@given(matrices(max_dim=4))
def test_rank_matches_span_enumeration(M):
    assert M.p ** M.rank() == span_size(M)


@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutations(M, rnd):
    r = M.rank()
    assert r <= min(M.nrows, M.ncols)
    rows = [list(x) for x in M.rows]
    rnd.shuffle(rows)
    perm = list(range(M.ncols))
    rnd.shuffle(perm)
    N = FpMatrix(M.p, [[row[j] for j in perm] for row in rows], M.ncols)
    assert N.rank() == r
    assert M.transpose().rank() == r


@given(matrices())
def test_nullspace(M):
    basis = M.nullspace()
    assert len(basis) == M.ncols - M.rank()
    for x in basis:
        assert all(sum(a * b for a, b in zip(row, x)) % M.p == 0 for row in M.rows)


def test_identity_invertible():
    assert FpMatrix.identity(5, 3).is_invertible()
    assert not FpMatrix(2, [[1, 1], [1, 1]]).is_invertible()


def test_matmul_and_apply():
    A = FpMatrix(3, [[1, 2], [0, 1]])
    assert (A @ A).rows == [[1, 1], [0, 1]]
    assert A.apply([1, 1]) == [1, 0]


def test_large_prime():
    p = 2**31 - 1
    A = FpMatrix(p, [[1, p - 1], [p - 1, 1]])
    assert A.rank() == 1


def test_echelon_contains():
    B = EchelonBasis(5, 3)
    assert B.add([1, 2, 3])
    assert not B.add([2, 4, 6])
    assert B.contains([3, 1, 4])
    assert not B.contains([0, 0, 1])
