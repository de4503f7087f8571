from __future__ import annotations

import pytest

from ctab.cli import EXIT_INPUT, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def structure(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("base: a b\nrel R/2: (a,b)\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_worked_example(self, capsys, structure):
        code, out, _ = run(capsys, "eval", "--structure", structure, "--query", "exists x2 . R(x1,x2)")
        assert code == EXIT_OK
        assert out == "x1\na\n"

    def test_markers(self, capsys, structure):
        assert run(capsys, "eval", "--structure", structure, "--query", "true")[1] == "()\n"
        assert run(capsys, "eval", "--structure", structure, "--query", "false")[1] == "EMPTY schema=*\n"

    def test_pretty(self, capsys, structure):
        code, out, _ = run(capsys, "eval", "--structure", structure, "--query", "R(x1,x2)", "--format", "pretty")
        assert code == EXIT_OK and "| a  | b  |" in out

    def test_parse_error_reports_position(self, capsys, structure):
        code, _, err = run(capsys, "eval", "--structure", structure, "--query", "R(x1")
        assert code == EXIT_INPUT and "position 4" in err

    def test_evaluation_error_names_atom(self, capsys, structure):
        code, _, err = run(capsys, "eval", "--structure", structure, "--query", "Q(x1)")
        assert code == EXIT_INPUT and "Q(x1)" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "eval", "--structure", str(tmp_path / "nope"), "--query", "true")
        assert code == EXIT_INPUT and "cannot read" in err

    def test_bad_structure_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("base: a\nrel R/1: (q)\n")
        code, _, err = run(capsys, "eval", "--structure", str(path), "--query", "true")
        assert code == EXIT_INPUT and "line 2" in err


class TestCheckAxioms:
    def test_standard(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--model", "standard", "--base", "ab", "--cases", "20", "--seed", "1")
        assert code == EXIT_OK
        assert "0 unexpected" in out
        assert out.count("\nLAW\t") + out.startswith("LAW\t") >= 57

    def test_bogus_fails_ps12_as_expected(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--model", "bogus", "--cases", "20", "--law", "PS12")
        assert code == EXIT_OK
        line = next(ln for ln in out.splitlines() if ln.startswith("LAW\tPS12"))
        assert "expected=yes" in line and "fail=0" not in line

    def test_empty_base_fails_ps11(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--model", "empty-base", "--cases", "10", "--law", "PS11")
        assert code == EXIT_OK
        assert "LAW\tPS11\tcases=10\tpass=0\tfail=10" in out

    def test_unknown_law(self, capsys):
        code, _, err = run(capsys, "check-axioms", "--law", "PS99")
        assert code == EXIT_USAGE and "unknown law" in err

    @pytest.mark.parametrize("argv", [
        ["check-axioms", "--model", "bogus", "--base", "ab"],
        ["check-axioms", "--base", "aa"],
        ["check-axioms", "--model", "empty-base", "--base", "a"],
        ["check-axioms", "--cases", "0"],
        ["check-axioms", "--model", "nope"],
        ["frobnicate"],
        [],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == EXIT_USAGE

    def test_seed_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("CTAB_SEED", "17")
        _, out, _ = run(capsys, "check-axioms", "--cases", "1", "--law", "PS0")
        assert "seed: 17" in out
        monkeypatch.setenv("CTAB_SEED", "x")
        assert run(capsys, "check-axioms", "--cases", "1", "--law", "PS0")[0] == EXIT_USAGE


class TestDecompose:
    def test_constant_map(self, capsys):
        code, out, _ = run(capsys, "decompose", "--map", "x1->y1, x2->y1", "--dom", "x1 x2", "--cod", "y1")
        assert code == EXIT_OK
        assert "delta (folding): {x1 x2} -> {x1}  x1->x1, x2->x1" in out
        assert "xi (bijection): {x1} -> {y1}  x1->y1" in out
        assert "iota (inclusion): {y1} -> {y1}  y1->y1  [identity]" in out
        assert "verified" in out

    def test_identity(self, capsys):
        _, out, _ = run(capsys, "decompose", "--map", "x1->x1, x2->x2", "--dom", "x1 x2", "--cod", "x1 x2")
        assert out.count("[identity]") == 4

    def test_disjoint_bijection(self, capsys):
        _, out, _ = run(capsys, "decompose", "--map", "x1->y2, x2->y1", "--dom", "x1 x2", "--cod", "y1 y2")
        assert "delta (folding): {x1 x2} -> {x1 x2}  x1->x1, x2->x2  [identity]" in out
        assert "xi (bijection): {x1 x2} -> {y1 y2}  x1->y2, x2->y1" in out

    def test_not_total(self, capsys):
        code, _, err = run(capsys, "decompose", "--map", "x1->y1", "--dom", "x1 x2", "--cod", "y1")
        assert code == EXIT_USAGE and "not total" in err
