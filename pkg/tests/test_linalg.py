import numpy as np
import pytest

from tripoint import linalg
from tripoint.fields import make_field


def fmatmul(field, A, B):
    """Naive matrix product over the field, for independent verification."""
    A = np.asarray(A)
    B = np.asarray(B)
    out = field.zeros((A.shape[0], B.shape[1]))
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            acc = 0
            for t in range(A.shape[1]):
                acc = field.add(acc, field.mul(int(A[i, t]), int(B[t, j])))
            out[i, j] = acc
    return out


def random_matrix(field, rng, rows, cols):
    return field.array(rng.integers(0, field.q, (rows, cols)))


def test_rref_shape_and_pivots():
    f = make_field(2, 4)
    rng = np.random.default_rng(0)
    M = random_matrix(f, rng, 6, 9)
    R, pivots = linalg.rref(f, M)
    assert len(pivots) == linalg.rank(f, M)
    for r, c in enumerate(pivots):
        assert R[r, c] == 1
        col = R[:, c]
        assert (col != 0).sum() == 1  # fully reduced


def test_rank_nullity():
    rng = np.random.default_rng(1)
    for (p, k) in ((2, 3), (3, 2), (7, 1)):
        f = make_field(p, k)
        for _ in range(10):
            rows, cols = rng.integers(1, 9, 2)
            M = random_matrix(f, rng, int(rows), int(cols))
            r = linalg.rank(f, M)
            N = linalg.nullspace(f, M)
            assert r + N.shape[0] == int(cols)
            if N.shape[0]:
                prod = fmatmul(f, M, N.T)
                assert not prod.any()


def test_rank_transpose_invariant():
    f = make_field(3, 2)
    rng = np.random.default_rng(2)
    for _ in range(8):
        M = random_matrix(f, rng, 7, 4)
        assert linalg.rank(f, M) == linalg.rank(f, M.T)


def test_row_space_basis():
    f = make_field(2, 4)
    rng = np.random.default_rng(3)
    M = random_matrix(f, rng, 5, 8)
    # duplicate and scale rows; the row space must not change
    doubled = np.vstack([M, M, f.vmul(M, f.array(3))])
    B1 = linalg.row_space_basis(f, M)
    B2 = linalg.row_space_basis(f, doubled)
    assert B1.shape == B2.shape
    assert np.array_equal(B1, B2)  # rref canonical form
    assert linalg.rank(f, B1) == B1.shape[0]


def test_nullspace_of_full_rank():
    f = make_field(7)
    M = f.array([[1, 0], [0, 1], [3, 5]])
    assert linalg.nullspace(f, M).shape[0] == 0


def test_incremental_basis():
    f = make_field(2, 3)
    rng = np.random.default_rng(4)
    M = random_matrix(f, rng, 12, 6)
    inc = linalg.IncrementalBasis(f, 6)
    grew = sum(bool(inc.add(row)) for row in M)
    assert grew == linalg.rank(f, M)
    # adding anything in the span cannot grow the rank further
    assert not inc.add(M[0])
    assert not inc.add(f.vadd(M[1], M[2]))


def test_zero_and_empty():
    f = make_field(5)
    Z = f.zeros((3, 4))
    assert linalg.rank(f, Z) == 0
    assert linalg.nullspace(f, Z).shape == (4, 4)
    E = f.zeros((0, 4))
    assert linalg.rank(f, E) == 0
