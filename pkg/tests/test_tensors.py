import random
from fractions import Fraction

import pytest

from ttow import QQ, Frame, PrimeField, Tensor, TensorSpace, contract_axis, evaluate, shuffle
from ttow.errors import DimensionMismatch
from ttow.fixtures import ghz, matmul, trunc_poly, w_state
from ttow.tensors import partial_evaluate

F101 = PrimeField(101)


def test_frame_layout_axis0_slowest():
    frame = Frame((2, 3), QQ)
    t = Tensor(frame, [QQ.from_int(k) for k in range(6)])
    assert t[(0, 2)] == Fraction(2)
    assert t[(1, 0)] == Fraction(3)


def test_entry_round_trip():
    frame = Frame((2, 2, 2), QQ)
    entries = {(0, 1, 0): Fraction(5), (1, 1, 1): Fraction(-2)}
    t = Tensor.from_entries(frame, entries)
    for idx in frame.indices():
        assert t[idx] == entries.get(idx, Fraction(0))


def test_evaluate_is_multilinear():
    rng = random.Random(0)
    t = ghz(QQ)
    u = [QQ.random(rng) for _ in range(2)]
    v = [QQ.random(rng) for _ in range(2)]
    lhs = evaluate(t, [[QQ.mul(Fraction(3), x) for x in u], v])
    rhs = [QQ.mul(Fraction(3), x) for x in evaluate(t, [u, v])]
    assert lhs == rhs


def test_evaluate_ghz():
    t = ghz(QQ)
    e0, e1 = [Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]
    assert evaluate(t, [e0, e0]) == [Fraction(1), Fraction(0)]
    assert evaluate(t, [e1, e1]) == [Fraction(0), Fraction(1)]
    assert evaluate(t, [e0, e1]) == [Fraction(0), Fraction(0)]


def test_trunc_poly_is_unital_multiplication():
    t = trunc_poly(3)
    one = [Fraction(1), Fraction(0), Fraction(0)]
    x = [Fraction(0), Fraction(1), Fraction(0)]
    assert evaluate(t, [one, x]) == x
    assert evaluate(t, [x, x]) == [Fraction(0), Fraction(0), Fraction(1)]
    x2 = [Fraction(0), Fraction(0), Fraction(1)]
    assert evaluate(t, [x, x2]) == [Fraction(0)] * 3  # x^3 = 0


def test_matmul_structure():
    # frame dims (4, 4, 4); evaluating at (E01, E10) gives E00 etc.
    t = matmul(2, QQ)

    def flat(m):
        return [Fraction(m[i][j]) for i in range(2) for j in range(2)]

    E01 = [[0, 1], [0, 0]]
    E10 = [[0, 0], [1, 0]]
    E00 = [[1, 0], [0, 0]]
    assert evaluate(t, [flat(E01), flat(E10)]) == flat(E00)
    assert evaluate(t, [flat(E10), flat(E01)]) == flat([[0, 0], [0, 1]])


def test_contract_axis_input_and_output():
    t = ghz(QQ)
    swap = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    s = contract_axis(contract_axis(t, 1, swap), 2, swap)
    s = contract_axis(s, 0, swap, left=True)
    assert s.coeffs == t.coeffs  # GHZ is swap-invariant on all axes


def test_partial_evaluate_shapes():
    t = w_state(QQ)
    e0 = [Fraction(1), Fraction(0)]
    s = partial_evaluate(t, [2], [e0])
    assert s.frame.dims == (2, 2)


def test_shuffle_round_trip():
    rng = random.Random(5)
    frame = Frame((2, 3, 2), F101)
    t = Tensor(frame, [F101.random(rng) for _ in range(frame.size)])
    pi = [2, 0, 1]
    inv = [pi.index(a) for a in range(3)]
    assert shuffle(shuffle(t, pi), inv).coeffs == t.coeffs


def test_shuffle_transpose_swaps_entries():
    frame = Frame((2, 2), QQ)
    t = Tensor.from_entries(frame, {(0, 1): Fraction(7)})
    s = shuffle(t, [1, 0])
    assert s[(1, 0)] == Fraction(7)
    assert s[(0, 1)] == Fraction(0)


def test_tensor_space_echelon_and_membership():
    t = ghz(QQ)
    w = w_state(QQ)
    sp = TensorSpace(t.frame, [t, w, t])
    assert sp.dimension == 2
    assert sp.contains(t)
    two_t = Tensor(t.frame, [QQ.mul(Fraction(2), c) for c in t.coeffs])
    assert sp.contains(two_t)


def test_frame_mismatch_raises():
    t = ghz(QQ)
    with pytest.raises(DimensionMismatch):
        evaluate(t, [[Fraction(1)], [Fraction(0), Fraction(1)]])
