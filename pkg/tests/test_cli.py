import json

import jsonschema
import pytest

from multone.cli import load_schema, main, real


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_real_formatting():
    assert real(1 / 3) == 0.333333333333333
    assert real(0.0) == 0.0


@pytest.mark.parametrize(
    "argv,schema",
    [
        (["catalog", "list"], "catalog"),
        (["group", "table", "binary-tetrahedral"], "group_table"),
        (["density", "C2", "trivial", "sign", "--count", "2000"], "density"),
        (["moments", "binary-tetrahedral", "pi", "pi-twist"], "moments"),
        (["bound", "--scenario", "thm2"], "bound"),
        (["bound", "--scenario", "ramakrishnan(2)"], "bound"),
        (["stream", "S3", "pi", "--count", "3000"], "stream"),
    ],
)
def test_outputs_validate(capsys, argv, schema):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    jsonschema.validate(json.loads(out), load_schema(schema))


def test_bound_scenarios(capsys):
    _, out, _ = run(capsys, "bound", "--scenario", "thm2")
    doc = json.loads(out)
    assert doc["value"] == 0.4 and doc["closed_form"] == "2/5"
    _, out, _ = run(capsys, "bound", "--scenario", "gl3b-mixed")
    assert json.loads(out)["closed_form"] == "2/(17+3*sqrt(21))"


def test_bound_table(capsys, tmp_path):
    path = tmp_path / "custom.json"
    path.write_text(json.dumps({"A": 1, "B": 1, "C": 1, "D": 2}))
    code, out, _ = run(capsys, "bound", "--table", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["best"]["closed_form"] == "1/4" and doc["value"] == 0.25
    jsonschema.validate(doc["table"], load_schema("moment_table"))


def test_density_c2(capsys):
    _, out, _ = run(capsys, "density", "C2", "trivial", "sign", "--count", "5000")
    doc = json.loads(out)
    assert doc["exact_density"] == {"numerator": 1, "denominator": 2}


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "bound")[0] == 2
    assert run(capsys, "bound", "--scenario", "nope")[0] == 2
    assert run(capsys, "group", "table", "E8")[0] == 2
    assert run(capsys, "density", "S3", "pi", "nosuchrole")[0] == 2
    assert run(capsys, "moments", "S3", "pi", "pi")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "bound", "--table", str(bad))[0] == 2
    bad.write_text(json.dumps({"A": 1, "B": 1, "C": 5, "D": 2}))
    assert run(capsys, "bound", "--table", str(bad))[0] == 2
    assert run(capsys, "density", "S3", "pi", "sign", "--s-grid", "1.1,1.2,1.05")[0] == 2


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 7, "count": 1500}))
    _, out, _ = run(capsys, "stream", "S3", "pi", "--config", str(cfg))
    doc = json.loads(out)
    assert doc["seed"] == 7 and doc["count"] == 1500
    _, out, _ = run(capsys, "--seed", "3", "stream", "S3", "pi", "--config", str(cfg), "--count", "900")
    doc = json.loads(out)
    assert doc["seed"] == 3 and doc["count"] == 900
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "catalog", "list", "--config", str(cfg))[0] == 2


def test_csv_and_output_file(capsys, tmp_path):
    target = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "density", "C2", "trivial", "sign", "--count", "1000", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "s,ratio,partial_sum,count" and len(lines) == 7


def test_verify_fault_injection(capsys):
    code, out, _ = run(capsys, "verify", "--inject-fault", "mislabel-A6")
    assert code == 1
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema("verify"))
    failed = [c["name"] for c in doc["checks"] if c["status"] == "fail"]
    assert failed == ["Ad irreducible: A6-3dim"]
