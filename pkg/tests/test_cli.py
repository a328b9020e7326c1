import json

import pytest

from tnforms import cli


def run_cli(capsys, *args):
    code = cli.run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_form(tmp_path, obj, name="form.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_toeplitz_json_output(tmp_path, capsys):
    path = write_form(tmp_path, {"degree": 3, "coeffs": ["1", "1/2", "0", "2"]})
    code, out, _ = run_cli(capsys, "toeplitz", "--input", path, "-i", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"i": 1, "d": 3,
                   "rows": [["1/2", "0", "2"], ["1", "1/2", "0"]]}


def test_toeplitz_accepts_factored_input_and_pretty_mode(tmp_path, capsys):
    path = write_form(tmp_path, {"roots": ["1", "1"], "extra_x": 0,
                                 "extra_y": 0})
    code, out, _ = run_cli(capsys, "toeplitz", "--input", path, "-i", "1",
                           "--pretty")
    assert code == 0
    assert out.splitlines() == ["1 1", "1 1"]


def test_lr_subcommand(capsys):
    code, out, _ = run_cli(capsys, "lr", "--outer", "7,7,6", "--inner",
                           "5,2,1")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["tableaux"]) == 3
    assert sorted(map(tuple, obj["contents"])) == [(5, 5, 2), (6, 4, 2),
                                                   (6, 5, 1)]
    assert all(entry["coefficient"] == 1 for entry in obj["coefficients"])


def test_lr_ascii_mode(capsys):
    code, out, _ = run_cli(capsys, "lr", "--outer", "2,1", "--inner", "1",
                           "--pretty", "--ascii")
    assert code == 0
    assert "Littlewood-Richardson tableaux" in out


def test_schur_subcommand_modes(capsys):
    code, out, _ = run_cli(capsys, "schur", "--outer", "2,1", "--point",
                           "1,2,3", "--mode", "both")
    assert code == 0
    obj = json.loads(out)
    assert obj["tableaux_value"] == obj["jacobi_trudi_value"]


def test_minor_expand_subcommand(tmp_path, capsys):
    coeffs = ["0", "1", "1/3", "2", "0", "1", "4", "1/5", "2", "3"]
    path = write_form(tmp_path, {"degree": 9, "coeffs": coeffs})
    code, out, _ = run_cli(capsys, "minor-expand", "--input", path, "-i", "3",
                           "-r", "2", "--rows", "0,1,3", "--cols", "0,4,6")
    assert code == 0
    obj = json.loads(out)
    assert obj["lhs"] == obj["rhs"]
    assert [term["cols"] for term in obj["terms"]] == [[0, 5, 7], [1, 4, 7],
                                                       [1, 5, 6]]


def test_hessian_subcommand(tmp_path, capsys):
    path = write_form(tmp_path, {"roots": ["1", "2", "3", "4", "5", "6"]})
    code, out, _ = run_cli(capsys, "hessian", "--input", path, "-r", "2",
                           "-i", "3", "--t", "1/2")
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 6 and obj["r"] == 2
    assert len(obj["per_column_set"]) == 10
    alphas = [entry["alpha"] for entry in obj["per_column_set"]]
    assert sorted(alphas, reverse=True) == [3, 2, 2, 1, 1, 1, 0, 0, 0, 0]


def test_hessian_ascii_diagrams(tmp_path, capsys):
    path = write_form(tmp_path, {"degree": 4,
                                 "coeffs": ["1", "2", "4", "2", "1"]})
    code, out, _ = run_cli(capsys, "hessian", "--input", path, "-r", "1",
                           "--ascii")
    assert code == 0
    obj = json.loads(out)
    assert obj["diagrams"]
    assert "A" in obj["diagrams"][0] and "B" in obj["diagrams"][0]


def test_classify_subcommand(tmp_path, capsys):
    path = write_form(tmp_path, {"degree": 2, "coeffs": ["1", "0", "1"]})
    code, out, _ = run_cli(capsys, "classify", "--input", path,
                           "--cross-check")
    assert code == 0
    obj = json.loads(out)
    assert obj["max_lorentzian_index"] == 0
    assert obj["normally_stable"] is False
    assert [v["member"] for v in obj["verdicts"]] == [True, False]


def test_corpus_subcommand_deterministic(capsys):
    code, first, _ = run_cli(capsys, "corpus", "--seed", "5")
    assert code == 0
    code, second, _ = run_cli(capsys, "corpus", "--seed", "5")
    assert first == second
    assert json.loads(first)


def test_verify_suite_paper_examples(capsys):
    code, out, _ = run_cli(capsys, "verify-suite", "--paper-examples")
    assert code == 0
    obj = json.loads(out)
    assert obj["all_passed"] is True
    statuses = {c["name"]: c["status"] for c in obj["checks"]}
    assert statuses["d6-path-table"] == "pass-with-note"
    assert len(statuses) == 3


def test_verify_suite_reproducible_modulo_timing(capsys):
    code, first, _ = run_cli(capsys, "verify-suite", "--paper-examples",
                             "--seed", "3")
    code2, second, _ = run_cli(capsys, "verify-suite", "--paper-examples",
                               "--seed", "3")
    assert code == code2 == 0

    def strip_times(text):
        obj = json.loads(text)
        for check in obj["checks"]:
            check.pop("seconds")
        return obj

    assert strip_times(first) == strip_times(second)


def test_reads_form_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin",
                        io.StringIO('{"degree":2,"coeffs":["1","1","1"]}'))
    code, out, _ = run_cli(capsys, "toeplitz", "--input", "-", "-i", "0")
    assert code == 0
    assert json.loads(out)["rows"] == [["1", "1", "1"]]


def test_verify_suite_failure_exit_code(capsys, monkeypatch):
    from tnforms import verification

    def fake_suite(seed=0, paper_examples_only=False):
        return [verification.CheckResult("d9-expansion-identity", "fail", {})]

    monkeypatch.setattr(verification, "run_suite", fake_suite)
    code, out, _ = run_cli(capsys, "verify-suite")
    assert code == 2


def test_usage_errors_exit_one(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["toeplitz", "--input"])
    assert exc.value.code == 1
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "toeplitz", "--input", str(bad), "-i", "0")
    assert code == 1
    assert "error" in err
    code, _, err = run_cli(capsys, "toeplitz", "--input", str(tmp_path /
                                                              "missing.json"),
                           "-i", "0")
    assert code == 1


def test_contract_violations_exit_one(tmp_path, capsys):
    path = write_form(tmp_path, {"degree": 2, "coeffs": ["1", "0", "1"]})
    code, _, err = run_cli(capsys, "toeplitz", "--input", path, "-i", "9")
    assert code == 1
    assert "error" in err
