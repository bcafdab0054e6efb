"""Wire-format round trips and determinism of the JSON emitters."""

import json

import pytest

from ttow import QQ, Frame, PrimeField, Subframe, Tensor
from ttow.cli import named_fixture
from ttow.complexes import SimplicialComplex
from ttow.errors import ValidationError
from ttow.groebner import Ideal
from ttow.jsonio import (
    complex_to_json,
    dumps,
    ideal_from_json,
    ideal_to_json,
    operator_from_json,
    operator_to_json,
    poly_from_json,
    poly_to_json,
    subframe_from_json,
    subframe_to_json,
    tensor_from_json,
    tensor_to_json,
    verdict_to_json,
)
from ttow.categories import composability_verdict
from ttow.operators import TransverseOperator
from ttow.polys import poly_from_string


def test_tensor_round_trip_rational():
    t = named_fixture("w", QQ)["tensor"]
    obj = tensor_to_json(t)
    back = tensor_from_json(obj)
    assert back.frame == t.frame
    assert back.coeffs == t.coeffs
    # sparse: only nonzero entries are serialized
    assert len(obj["entries"]) == 3


def test_tensor_round_trip_prime_field():
    F = PrimeField(101)
    t = named_fixture("ghz", F)["tensor"]
    back = tensor_from_json(tensor_to_json(t))
    assert back.frame.field == F
    assert back.coeffs == t.coeffs


def test_tensor_dense_input_accepted():
    obj = {
        "field": {"type": "prime", "p": 5},
        "dims": [2, 2],
        "dense": [0, 1, 2, 3],
    }
    t = tensor_from_json(obj)
    F = PrimeField(5)
    assert t[(1, 1)] == F.from_int(3)


def test_operator_round_trip():
    data = named_fixture("fig1a", QQ)
    op = data["operator"]
    back = operator_from_json(operator_to_json(op), op.frame)
    assert back.mats == op.mats
    assert back.variance == op.variance


def test_poly_round_trip_and_validation():
    p = poly_from_string("x0^2 - 2*x1*x2 + 1", 3, QQ)
    back = poly_from_json(poly_to_json(p), QQ)
    assert back.terms == p.terms
    with pytest.raises(ValidationError):
        poly_from_json(poly_to_json(p), QQ, nvars=2)


def test_ideal_round_trip_preserves_groebner_basis():
    gens = [poly_from_string(s, 2, QQ) for s in ("x0^2 - x0", "x0*x1")]
    I = Ideal(gens)
    back = ideal_from_json(ideal_to_json(I))
    assert back == I
    assert ideal_to_json(back)["strings"] == ideal_to_json(I)["strings"]


def test_subframe_round_trip():
    t = named_fixture("cplx", QQ)["tensor"]
    one = [QQ.one, QQ.zero]
    U = Subframe(t.frame, [[one], [one], [one]])
    back = subframe_from_json(subframe_to_json(U), t.frame)
    assert back.bases == U.bases


def test_subframe_axis_out_of_range_rejected():
    t = named_fixture("cplx", QQ)["tensor"]
    obj = {"axes": [{"axis": 7, "basis": [[1, 0]]}]}
    with pytest.raises(ValidationError):
        subframe_from_json(obj, t.frame)


def test_complex_serializes_facets():
    cx = SimplicialComplex.from_facets(3, [(0, 1), (0, 2), (1, 2)])
    obj = complex_to_json(cx)
    assert obj["ground"] == 3
    assert sorted(map(tuple, obj["facets"])) == [(0, 1), (0, 2), (1, 2)]


def test_verdict_serialization_shapes():
    v = composability_verdict([poly_from_string("x0 - x1*x2", 3, QQ)])
    obj = verdict_to_json(v)
    assert obj["outcome"] == "composable"
    assert {"e": [1, 0, 0], "f": [0, 1, 1]} in obj["witnesses"]
    bad = composability_verdict([poly_from_string("x0 - 2*x1", 2, QQ)])
    obj2 = verdict_to_json(bad)
    assert obj2["outcome"] == "not_composable" and "reason" in obj2


def test_dumps_is_deterministic_and_compact():
    t = named_fixture("ghz", QQ)["tensor"]
    a = dumps(tensor_to_json(t))
    b = dumps(tensor_to_json(named_fixture("ghz", QQ)["tensor"]))
    assert a == b
    assert a.endswith("\n")
    json.loads(a)  # valid JSON
