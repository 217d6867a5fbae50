"""End to end runs of the command line front end.

Every test drives ``main`` directly with an argument vector and parses
the JSON it prints, so the assertions cover argument wiring, payload
shape and exit codes in one pass.
"""

import json

import pytest

from orbisym import OrbifoldClass, builtin_algebra, dump_algebra, symmetric_group, symmetrize
from orbisym.cli import main
from orbisym.permgroup import Permutation


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_poincare_payload(capsys):
    rc, out = run(capsys, ["ring", "poincare", "--algebra", "k3", "--n", "2"])
    assert rc == 0
    assert json.loads(out) == {"0": 1, "4": 23, "8": 276, "12": 23, "16": 1}


def test_poincare_is_byte_deterministic(capsys):
    rc1, out1 = run(capsys, ["ring", "poincare", "--algebra", "abelian", "--n", "3"])
    rc2, out2 = run(capsys, ["ring", "poincare", "--algebra", "abelian", "--n", "3"])
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_poincare_subgroup_and_shift(capsys):
    argv = [
        "ring", "poincare", "--algebra", "mock2", "--n", "3",
        "--group", "(1 2 3)", "--shift", "4",
    ]
    rc, out = run(capsys, argv)
    assert rc == 0
    payload = json.loads(out)
    assert sum(payload.values()) == 8
    assert min(int(k) for k in payload) == -4


def test_associativity_check_passes(capsys):
    rc, out = run(capsys, ["ring", "check", "--assoc", "--algebra", "mock2", "--n", "3"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["count"] == 13824
    assert payload["mode"] == "exhaustive"


def test_sampled_check_uses_seed(capsys):
    argv = [
        "ring", "check", "--assoc", "--algebra", "k3", "--n", "2",
        "--samples", "20", "--seed", "7", "--signed",
    ]
    rc, out = run(capsys, argv)
    assert rc == 0
    payload = json.loads(out)
    assert payload["mode"] == "sampled"
    assert payload["seed"] == 7
    assert payload["count"] == 20


def test_skew_and_pairing_checks(capsys):
    rc, out = run(capsys, ["ring", "check", "--skew", "--algebra", "mock2", "--n", "2", "--samples", "30"])
    assert rc == 0
    assert json.loads(out)["count"] == 30
    rc, out = run(capsys, ["ring", "check", "--pairing", "--algebra", "abelian", "--n", "2"])
    assert rc == 0
    assert json.loads(out)["passed"] is True


def test_validate_rejects_broken_unit(tmp_path, capsys):
    data = builtin_algebra("mock2").to_json_dict()
    data["unit"] = ["1/1", "1/1"]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    rc, out = run(capsys, ["algebra", "validate", str(path)])
    assert rc == 1
    payload = json.loads(out)
    assert payload["valid"] is False
    assert "unit" in [entry["axiom"] for entry in payload["failures"]]


def test_validate_accepts_builtin_name(capsys):
    rc, out = run(capsys, ["algebra", "validate", "k3"])
    assert rc == 0
    assert json.loads(out)["valid"] is True


def test_multiply_round_trip(tmp_path, capsys):
    group = symmetric_group(2)
    algebra = builtin_algebra("mock2")
    t = Permutation.parse("(1 2)", 2)
    cls = OrbifoldClass.pure(group, algebra, t, (0,))
    lhs = tmp_path / "lhs.json"
    lhs.write_text(json.dumps(cls.to_json_list()))
    rc, out = run(capsys, [
        "ring", "multiply", "--algebra", "mock2", "--n", "2",
        "--lhs", str(lhs), "--rhs", str(lhs),
    ])
    assert rc == 0
    payload = json.loads(out)
    # t * t lands in the identity sector
    assert all(entry["perm"] == "()" for entry in payload)


def test_cr_triple_routes_agree(tmp_path, capsys):
    group = symmetric_group(3)
    algebra = builtin_algebra("mock2")
    paths = []
    for i, text in enumerate(["(1 2 3)", "(1 3 2)", "()"]):
        g = Permutation.parse(text, 3)
        blocks = 1 if text != "()" else 3
        cls = symmetrize(OrbifoldClass.pure(group, algebra, g, (0,) * blocks))
        path = tmp_path / f"c{i}.json"
        path.write_text(json.dumps(cls.to_json_list()))
        paths.append(str(path))
    argv = ["ring", "cr-triple", "--algebra", "mock2", "--n", "3"]
    for p in paths:
        argv += ["--class", p]
    rc, out = run(capsys, argv)
    assert rc == 0
    payload = json.loads(out)
    assert payload["equal"] is True
    assert payload["triple_pairing"] == payload["average_integral"]


def test_kummer_poincare_payload(capsys):
    rc, out = run(capsys, ["kummer", "poincare", "--n", "2"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["rank"] == 4
    assert payload["reduced"] == {"0": 1, "4": 22, "8": 1}
    assert sum(payload["poincare"].values()) == 384


def test_anmodel_payload(capsys):
    rc, out = run(capsys, ["anmodel", "compare", "--n", "4"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["verdict"]["matched"] is False
    assert payload["resolution_gram"][0][0] == -2


def test_goettsche_payload(capsys):
    rc, out = run(capsys, ["oracle", "goettsche", "--betti", "1,0,22,0,1", "--n", "2"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["series"][-1]["coefficients"] == {
        "0": 1, "4": 23, "8": 276, "12": 23, "16": 1,
    }


def test_table_output_renders(capsys):
    rc, out = run(capsys, ["ring", "poincare", "--algebra", "mock2", "--n", "2", "--output", "table"])
    assert rc == 0
    assert "{" not in out
    assert "16" in out


def test_bad_inputs_exit_two(tmp_path, capsys):
    assert main(["ring", "poincare", "--algebra", "nosuch", "--n", "2"]) == 2
    capsys.readouterr()
    assert main(["algebra", "validate", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    assert main(["ring", "poincare", "--algebra", "mock2", "--n", "2", "--jobs", "0"]) == 2
    capsys.readouterr()
    assert main(["ring", "poincare", "--algebra", "mock2"]) == 2
    capsys.readouterr()
    assert main(["ring", "check", "--assoc", "--algebra", "mock2", "--n", "2", "--group", ","]) == 2
    capsys.readouterr()


def test_failing_check_exits_one(tmp_path, capsys):
    data = builtin_algebra("mock2").to_json_dict()
    data["euler"] = ["0/1", "24/1"]
    path = tmp_path / "wrong_euler.json"
    path.write_text(json.dumps(data))
    rc, out = run(capsys, ["ring", "check", "--assoc", "--algebra", str(path), "--n", "3"])
    assert rc == 1
    assert json.loads(out)["passed"] is False
