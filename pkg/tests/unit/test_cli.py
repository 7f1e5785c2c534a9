"""Tests for the `ultranorm` command line: reports, text output and exit codes."""

from __future__ import annotations

import json

import pytest

from src.cli.app import EXIT_NEGATIVE, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, build_parser, main


@pytest.fixture
def run_json(spaces_dir, capsys):
    """Run a subcommand on a bundled descriptor with --json; return (code, checks by name)."""

    def _run(command, name, *extra):
        code = main([command, str(spaces_dir / name), "--json", *extra])
        out = capsys.readouterr().out
        report = json.loads(out) if out.strip() else {"checks": []}
        return code, {c["name"]: c for c in report["checks"]}

    return _run


class TestClassify:
    def test_c0(self, run_json):
        code, checks = run_json("classify", "c0.space")
        assert code == EXIT_OK
        assert checks["nhs"]["witness"] == {"nhs": True}
        assert checks["contains-c0"]["witness"] == {"contains_c0": True}
        assert checks["census"]["witness"] == {"b@0": 9}
        assert "descent" not in checks

    def test_rational_base_shows_a_descent(self, run_json):
        code, checks = run_json("classify", "x1.space")
        assert code == EXIT_OK
        assert checks["descent"]["witness"] == ["b@1/2", "b@1/4", "b@1/8", "b@1/16", "b@1/32"]
        assert checks["rigidity"]["witness"]["rigid"] is False

    def test_expect_turns_a_negative_verdict_into_exit_1(self, run_json):
        assert run_json("classify", "x1.space", "--expect")[0] == EXIT_NEGATIVE
        assert run_json("classify", "x2.space", "--expect")[0] == EXIT_OK

    def test_text_output(self, spaces_dir, capsys):
        assert main(["classify", str(spaces_dir / "x2.space")]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("ultranorm ")
        assert "[INFO] nhs" in out


def test_report_json_keys(spaces_dir, capsys):
    assert main(["classify", str(spaces_dir / "c0.space"), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"tool_version", "command", "checks"}
    nhs = next(c for c in report["checks"] if c["name"] == "nhs")
    assert set(nhs) == {"name", "verdict", "witness", "basis"}
    assert "well ordered" in nhs["basis"]


def test_gram_schmidt(run_json):
    code, checks = run_json("gs", "c0.space", "e1", "w")
    assert code == EXIT_OK
    witness = checks["gram-schmidt"]["witness"]
    assert witness["outputs"] == ["e1", "5*e2"]
    assert witness["norms"] == ["(b@0, g^0)", "(b@0, g^-1)"]
    assert witness["change_of_basis"] == [["1", "0"], ["-1", "1"]]
    assert checks["orthogonal-system"]["verdict"] == "pass"


def test_dependent_vectors_are_a_precondition_error(spaces_dir, capsys):
    assert main(["gs", str(spaces_dir / "c0.space"), "e1", "3*e1"]) == EXIT_PRECONDITION
    assert "LinearlyDependentError" in capsys.readouterr().err


class TestProbe:
    def test_stagnation_in_one_class(self, run_json):
        code, checks = run_json("probe", "x1.space", "--gen", "inclass:0", "--steps", "50", "--bound", "10", "--expect")
        assert code == EXIT_NEGATIVE
        assert checks["occupancy"]["witness"] == [{"class": 0, "count": 50}]
        assert checks["probe"]["witness"]["verdict"] == "stagnation"
        assert checks["probe"]["verdict"] == "info"

    def test_geometric_drift(self, run_json):
        code, checks = run_json(
            "probe", "c0.space", "--gen", "geometric:(b@0, g^0)", "--steps", "20", "--bound", "1", "--expect"
        )
        assert code == EXIT_OK
        assert checks["probe"]["witness"]["verdict"] == "drift"
        assert len(checks["occupancy"]["witness"]) == 20

    def test_stagnation_against_a_well_ordered_chain_fails(self, run_json):
        code, checks = run_json("probe", "x2.space", "--gen", "list:(b@w, g^0);(b@5, g^0)", "--bound", "1")
        assert code == EXIT_OK
        assert checks["probe"]["verdict"] == "fail"

    def test_bad_generator(self, spaces_dir):
        assert main(["probe", str(spaces_dir / "x1.space"), "--gen", "spiral:3"]) == EXIT_PARSE

    def test_inclass_on_a_well_ordered_chain(self, spaces_dir):
        assert main(["probe", str(spaces_dir / "x2.space"), "--gen", "inclass:0"]) == EXIT_PRECONDITION


class TestDemoShift:
    def test_on_c0(self, run_json):
        code, checks = run_json("demo-shift", "c0.space", "-n", "3", "--expect")
        assert code == EXIT_OK
        assert checks["isometry"]["verdict"] == "pass"
        assert checks["non-surjective"]["verdict"] == "pass"
        assert checks["shift"]["witness"]["norm"] == "(b@0, g^0)"

    def test_without_a_repeated_class(self, spaces_dir, capsys):
        assert main(["demo-shift", str(spaces_dir / "descending.space"), "-n", "2"]) == EXIT_PRECONDITION
        assert "InsufficientEqualNormVectors" in capsys.readouterr().err


def test_phi(run_json):
    code, checks = run_json("phi", "x1.space", "(b@1/2, g^0)", "(b@3/4, g^0)")
    assert code == EXIT_OK
    assert checks["phi"]["witness"]["phi"] == "g^-1"


class TestDist:
    def test_to_a_line(self, run_json):
        _, checks = run_json("dist", "c0.space", "w", "e1")
        assert checks["distance"]["witness"] == {"distance": "(b@0, g^-1)", "lambda": "1"}

    def test_to_a_span(self, run_json):
        _, checks = run_json("dist", "c0.space", "e1 + e2 + 5*e5", "e1", "e2")
        assert checks["distance"]["witness"] == {"distance": "(b@0, g^-1)", "closest": "e1 + e2"}


class TestCheckOrtho:
    def test_pair(self, run_json):
        code, checks = run_json("check-ortho", "c0.space", "e1", "w", "--expect")
        assert code == EXIT_NEGATIVE
        assert checks["orthogonal"]["verdict"] == "fail"

    def test_system(self, run_json):
        code, checks = run_json("check-ortho", "c0.space", "e1", "e2", "e3", "--expect")
        assert code == EXIT_OK
        assert checks["orthogonal"]["verdict"] == "pass"


def test_suite(run_json):
    code, checks = run_json("suite", "c0.space", "--samples", "3", "--seed", "1", "--expect")
    assert code == EXIT_OK
    assert checks["contains-c0"]["verdict"] == "pass"


class TestExitCodes:
    def test_missing_file(self, tmp_path, capsys):
        assert main(["classify", str(tmp_path / "missing.space")]) == EXIT_PARSE
        assert capsys.readouterr().err.startswith("error: ")

    def test_malformed_descriptor(self, tmp_path, capsys):
        path = tmp_path / "bad.space"
        path.write_text("[field]\np = 4\n[chain]\nfinite:1\n", encoding="utf-8")
        assert main(["classify", str(path)]) == EXIT_PARSE
        assert "line 2" in capsys.readouterr().err

    def test_non_utf8_descriptor(self, tmp_path, capsys):
        path = tmp_path / "bad.space"
        path.write_bytes(b"\xff\xfe[chain]\nfinite:1\n")
        assert main(["classify", str(path)]) == EXIT_PARSE
        assert capsys.readouterr().err.startswith("error: ")

    def test_unknown_vector_name(self, spaces_dir):
        assert main(["gs", str(spaces_dir / "c0.space"), "nope"]) == EXIT_PRECONDITION

    def test_no_subcommand(self):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args([])
        assert excinfo.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert "ultranorm" in capsys.readouterr().out
