import random
from fractions import Fraction

from ttow import QQ, PrimeField
from ttow.linalg import (
    identity_matrix,
    in_span,
    kernel_restrict,
    left_nullspace,
    mat_inv,
    mat_mul,
    nullspace,
    np_nullspace,
    np_rref,
    reduce_against,
    rref,
    row_basis,
    spans_equal,
)

F101 = PrimeField(101)


def _rand_matrix(rng, rows, cols, field):
    return [[field.random(rng) for _ in range(cols)] for _ in range(rows)]


def test_rref_pivots_and_rank():
    A = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)], [Fraction(0), Fraction(1)]]
    R, piv = rref(A, QQ)
    assert piv == [0, 1]
    assert R[0] == [Fraction(1), Fraction(0)]
    assert R[1] == [Fraction(0), Fraction(1)]


def test_nullspace_orthogonal_to_rows():
    rng = random.Random(3)
    for field in (QQ, F101):
        for _ in range(10):
            A = _rand_matrix(rng, 3, 5, field)
            for v in nullspace(A, 5, field):
                for row in A:
                    s = field.zero
                    for x, y in zip(row, v):
                        s = field.add(s, field.mul(x, y))
                    assert s == field.zero


def test_rank_nullity():
    rng = random.Random(7)
    for _ in range(10):
        A = _rand_matrix(rng, 4, 6, F101)
        rank = len(row_basis(A, F101))
        assert rank + len(nullspace(A, 6, F101)) == 6


def test_left_nullspace_kills_matrix():
    rng = random.Random(11)
    A = _rand_matrix(rng, 5, 3, QQ)
    vs = left_nullspace(A, 3, QQ)
    assert vs  # 5 rows in QQ^3 always have a left relation
    for v in vs:
        prod = mat_mul([v], A, QQ)[0]
        assert all(x == QQ.zero for x in prod)


def test_np_rref_matches_generic():
    rng = random.Random(13)
    for _ in range(10):
        A = _rand_matrix(rng, 4, 5, F101)
        R1, p1 = rref(A, F101)
        import numpy as np

        R2, p2 = np_rref(np.array(A, dtype=np.int64), 101)
        assert list(p2) == p1
        assert [[int(x) for x in row] for row in R2[: len(R1)]] == R1


def test_np_nullspace_matches_generic():
    import numpy as np

    rng = random.Random(17)
    for _ in range(10):
        A = _rand_matrix(rng, 3, 6, F101)
        N1 = nullspace(A, 6, F101)
        N2 = np_nullspace(np.array(A, dtype=np.int64), 101)
        assert spans_equal(N1, [list(map(int, r)) for r in N2], F101)


def test_mat_inv_round_trip():
    rng = random.Random(19)
    for field in (QQ, F101):
        while True:
            A = _rand_matrix(rng, 3, 3, field)
            if len(row_basis(A, field)) == 3:
                break
        Ainv = mat_inv(A, field)
        assert mat_mul(A, Ainv, field) == identity_matrix(3, field)


def test_in_span_and_reduce_against():
    rows, piv = rref([[Fraction(1), Fraction(0), Fraction(1)]], QQ)
    assert in_span([Fraction(2), Fraction(0), Fraction(2)], rows, piv, QQ)
    assert not in_span([Fraction(1), Fraction(1), Fraction(0)], rows, piv, QQ)


def test_kernel_restrict():
    # basis of QQ^3; constraint x0 + x1 + x2 = 0 leaves a 2-dim subspace
    basis = identity_matrix(3, QQ)
    images = [[Fraction(1)], [Fraction(1)], [Fraction(1)]]  # per-vector constraint image
    sub = kernel_restrict(basis, images, QQ)
    assert len(sub) == 2
    for v in sub:
        assert sum(v, Fraction(0)) == 0
