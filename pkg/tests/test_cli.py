"""In-process command-line tests: JSON payloads, exit codes, determinism."""

import json

import pytest

from ttow import QQ, Subframe
from ttow.cli import FIXTURE_NAMES, main, named_fixture
from ttow.jsonio import dumps, subframe_to_json, tensor_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out else None
    err = json.loads(captured.err) if captured.err else None
    return code, out, err


def test_ann_fixture_fig1a(capsys):
    code, out, _ = run(capsys, "ann", "--fixture", "fig1a")
    assert code == 0
    assert out["schema"] == "ttow/1" and out["command"] == "ann"
    assert sorted(out["ideal"]["strings"]) == sorted(["x0^2 - x0", "x0*x1", "x1^2 - x1"])


def test_gb_command(capsys):
    code, out, _ = run(
        capsys, "gb", "--poly", "x0^2 - x1", "--poly", "x0*x1 - 1", "--nvars", "2"
    )
    assert code == 0
    assert out["ideal"]["strings"]  # a nonzero reduced basis


def test_der_dimension_ghz(capsys):
    code, out, _ = run(capsys, "der", "--fixture", "ghz")
    assert code == 0
    assert out["dimension"] == 4
    assert out["closure"]["closed"] is True


def test_centroid_dimension_and_unital_flag(capsys):
    code, out, _ = run(capsys, "centroid", "--fixture", "truncpoly-3")
    assert code == 0
    assert out["dimension"] == 3
    assert out["closure"]["unital"] is True


def test_nucleus_requires_axes(capsys):
    with pytest.raises(SystemExit):
        main(["nucleus", "--fixture", "matmul-2"])
    capsys.readouterr()
    code, out, _ = run(capsys, "nucleus", "--fixture", "matmul-2", "--axes", "1", "2")
    assert code == 0
    assert out["dimension"] == 4


def test_adjoint_dimension_dotprod(capsys):
    code, out, _ = run(capsys, "adjoint", "--fixture", "dotprod-3")
    assert code == 0
    assert out["dimension"] == 9


def test_densor_ghz(capsys):
    code, out, _ = run(capsys, "densor", "--fixture", "ghz")
    assert code == 0
    assert out["dimension"] == 2
    assert len(out["basis"]) == 2


def test_composable_verdicts(capsys):
    code, out, _ = run(capsys, "composable", "--poly", "x0 - x1*x2")
    assert code == 0
    assert out["verdict"]["outcome"] == "composable"
    code, out, _ = run(capsys, "composable", "--poly", "x0 - 2*x1")
    assert code == 0
    assert out["verdict"]["outcome"] == "not_composable"


def test_nabla_and_verify_singularity(capsys, tmp_path):
    t = named_fixture("cplx", QQ)["tensor"]
    one = [QQ.one, QQ.zero]
    U = Subframe(t.frame, [[one], [one], [one]])
    sf = tmp_path / "subframe.json"
    sf.write_text(dumps(subframe_to_json(U)))
    code, out, _ = run(capsys, "nabla", "--fixture", "cplx", "--subframe", str(sf))
    assert code == 0
    assert sorted(map(tuple, out["complex"]["facets"])) == [(0, 1), (0, 2), (1, 2)]
    assert out["sr_ideal"]["strings"] == ["x0*x1*x2"]
    code, out, _ = run(
        capsys,
        "verify-singularity", "--fixture", "cplx", "--subframe", str(sf),
        "--samples", "8", "--seed", "3",
    )
    assert code == 0
    assert out["holds"] is True
    assert out["ideal"]["strings"] == ["x0*x1*x2"]


def test_probe_finds_monomial(capsys):
    code, out, _ = run(capsys, "probe", "--fixture", "fig1a")
    assert code == 0
    assert out["monomial"] == [1, 1]


def test_homotopism_verify_and_compose(capsys, tmp_path):
    t = named_fixture("ghz", QQ)["tensor"]
    swap = [[0, 1], [1, 0]]
    payload = {
        "src": tensor_to_json(t),
        "dst": tensor_to_json(t),
        "maps": [swap, swap, swap],
    }
    f = tmp_path / "hom.json"
    f.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "homotopism", "verify", "--in", str(f))
    assert code == 0 and out["holds"] is True

    comp = tmp_path / "comp.json"
    comp.write_text(json.dumps({"f": payload, "g": payload}))
    code, out, _ = run(capsys, "homotopism", "compose", "--in", str(comp))
    assert code == 0
    assert out["maps"] == [[[1, 0], [0, 1]]] * 3


def test_fixtures_listing_and_payload(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert out["available"] == FIXTURE_NAMES
    code, out, _ = run(capsys, "fixtures", "--fixture", "ghz")
    assert code == 0
    assert out["tensor"]["dims"] == [2, 2, 2]


def test_validation_errors_exit_2(capsys):
    code, _, err = run(capsys, "ann", "--fixture", "no-such-fixture")
    assert code == 2
    assert err["error"]["type"] == "ValidationError"
    code, _, err = run(capsys, "ann")  # neither --fixture nor --in
    assert code == 2
    code, _, err = run(capsys, "composable")  # no polynomials
    assert code == 2


def test_prime_field_flag(capsys):
    code, out, _ = run(capsys, "densor", "--fixture", "sl2", "--field", "prime:101")
    assert code == 0
    assert out["dimension"] == 1


def test_output_file_and_determinism(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["ann", "--fixture", "ghz-swap", "--out", str(out1)]) == 0
    assert main(["ann", "--fixture", "ghz-swap", "--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_text() == out2.read_text()
