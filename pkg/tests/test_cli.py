"""The e7m command line: classify, verify, discriminant."""

import json

from e7st34 import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_table(capsys):
    code, out, _ = run(["classify", "--poly", "x^3 + x*y^3 + z^2"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "point | mu | type | corank"
    assert lines[1] == "(0, 0, 0) | 7 | E7 | 2"


def test_classify_from_file(tmp_path, capsys):
    path = tmp_path / "poly.txt"
    path.write_text("x^4 + y^2 + z^2\n")
    code, out, _ = run(["classify", "--poly", str(path)], capsys)
    assert code == 0
    assert "A3" in out


def test_classify_exit_codes(capsys):
    assert run(["classify", "--poly", "x^3 + ("], capsys)[0] == 3
    assert run(["classify", "--poly", "x^3 + y^3 + z^3"], capsys)[0] == 2
    assert run(["classify", "--poly", "x^2*y^2 + z^2"], capsys)[0] == 4


def test_classify_qw_field(capsys):
    code, out, _ = run(["classify", "--poly", "x^3 + w*y^2 + z^2",
                        "--field", "Qw"], capsys)
    assert code == 0
    assert "A2" in out


def test_verify_report(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, _ = run(["verify", "adjacency", "--out", str(report_path)], capsys)
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["suite"] == "adjacency"
    assert all(c["status"] == "pass" for c in report["checks"])
    for check in report["checks"]:
        assert set(check) == {"id", "status", "detail", "elapsed_ms"}
    assert isinstance(report["artifact_hashes"], dict)


def test_verify_eta_parameter(capsys):
    code, _, _ = run(["verify", "adjacency", "--eta", "2/3"], capsys)
    assert code == 0


def test_discriminant_emit_deterministic(capsys):
    code1, out1, _ = run(["discriminant", "--emit", "delta_st34"], capsys)
    code2, out2, _ = run(["discriminant", "--emit", "delta_st34"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.endswith("\n")


def test_discriminant_json_format(capsys):
    code, out, _ = run(["discriminant", "--emit", "delta_st34",
                        "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "delta_st34"
    assert data["variables"] == ["s3", "t1", "t2", "t3", "t4", "t5", "t7"]
    assert len(data["terms"]) == 706


def test_discriminant_out_file(tmp_path, capsys):
    path = tmp_path / "delta.txt"
    code, out, _ = run(["discriminant", "--emit", "delta_tilde",
                        "--out", str(path)], capsys)
    assert code == 0 and out == ""
    from e7st34.discrim import delta_tilde, load
    assert load(path) == delta_tilde()
