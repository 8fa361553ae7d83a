"""Command-line interface: payloads, renderers, exit codes, flag placement."""

import contextlib
import io
import json
import subprocess
import sys

import pytest

from lieconf.cli import main
from lieconf.liealg import build_algebra
from lieconf.reps import casimir, dynkin_index, weyl_dim


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, err = run(["--format", "json"] + argv)
    assert err == ""
    return code, json.loads(out)


class TestAlgebraInfo:
    def test_table_output(self):
        code, out, err = run(["algebra", "info", "G2"])
        assert code == 0 and err == ""
        assert "G2" in out and "dimension" in out and "14" in out

    def test_json_payload(self):
        code, doc = run_json(["algebra", "info", "G2"])
        assert code == 0
        assert doc["type"] == "G2"
        assert doc["rank"] == 2
        assert doc["dimension"] == 14
        assert doc["dual_coxeter"] == 4
        assert doc["positive_roots"] == 6

    def test_unknown_type_is_a_usage_error(self):
        code, out, err = run(["algebra", "info", "Z9"])
        assert code == 2 and out == ""
        assert err.startswith("error:")


class TestRep:
    def test_dim_matches_library(self):
        alg = build_algebra("F4")
        code, doc = run_json(["rep", "dim", "F4", "0,0,0,1"])
        assert code == 0
        assert doc["dim"] == weyl_dim(alg, (0, 0, 0, 1)) == 26

    def test_casimir_and_index_conventions(self):
        alg = build_algebra("A2")
        code, doc = run_json(["rep", "casimir", "A2", "1,1"])
        assert code == 0 and doc["casimir"] == str(casimir(alg, (1, 1)))
        code, doc = run_json(["rep", "index", "A2", "1,1"])
        assert code == 0 and doc["index"] == str(dynkin_index(alg, (1, 1)))
        code, doc = run_json(
            ["rep", "index", "A2", "1,1", "--convention", "killing"]
        )
        assert code == 0
        assert doc["index"] == str(dynkin_index(alg, (1, 1), convention="killing"))

    def test_weights_account_for_the_dimension(self):
        code, doc = run_json(["rep", "weights", "B2", "1,0"])
        assert code == 0
        assert sum(row["mult"] for row in doc["rows"]) == doc["dim"] == 5

    def test_tensor_preserves_dimension(self):
        code, doc = run_json(["rep", "tensor", "A1", "2", "3"])
        assert code == 0
        assert doc["total_dim"] == 3 * 4
        mults = {row["weight"]: row["mult"] for row in doc["rows"]}
        assert mults == {"[1]": 1, "[3]": 1, "[5]": 1}

    def test_wrong_coordinate_count_is_a_usage_error(self):
        code, _out, err = run(["rep", "dim", "A2", "1,0,0"])
        assert code == 2 and "coordinates" in err


class TestBranch:
    def test_tensor_pair_payload(self):
        code, doc = run_json(["branch", "dual-pair", "slsl", "2", "3"])
        assert code == 0
        assert doc["ambient"] == "A5"
        assert [f["type"] for f in doc["factors"]] == ["A1", "A2"]
        assert [f["index"] for f in doc["factors"]] == ["3", "2"]
        assert doc["p_dim"] == 24

    def test_bad_parameters_are_usage_errors(self):
        assert run(["branch", "dual-pair", "slsl", "1", "1"])[0] == 2
        assert run(["branch", "dual-pair", "xyxy", "2", "3"])[0] == 2


class TestConformalSolve:
    def test_catalog_case(self):
        code, doc = run_json(["conformal", "solve", "--case", "G2-in-B3"])
        assert code == 0
        assert doc["ambient"] == "B3"
        assert [row["level"] for row in doc["rows"]] == ["-2"]

    def test_explicit_ambient_and_factors(self):
        code, doc = run_json(
            ["conformal", "solve", "--ambient", "B3", "--factors", "G2^1"]
        )
        assert code == 0
        assert [row["level"] for row in doc["rows"]] == ["-2"]

    def test_dual_pair_criticality_flags(self):
        code, doc = run_json(["conformal", "solve", "--case", "slsl:3,3"])
        assert code == 0
        flagged = {row["level"]: row["critical_factors"] for row in doc["rows"]}
        assert flagged["-1"] != []
        assert flagged["1"] == []

    def test_bad_factor_spec_is_a_usage_error(self):
        code, _out, err = run(
            ["conformal", "solve", "--ambient", "B3", "--factors", "G2^^2"]
        )
        assert code == 2 and err.startswith("error:")

    def test_unknown_case_label_is_a_usage_error(self):
        assert run(["conformal", "solve", "--case", "nonesuch"])[0] == 2


class TestConformalCheck:
    def test_balanced_level_exits_zero(self):
        code, doc = run_json(
            ["conformal", "check", "--case", "G2-in-B3", "--level", "-2"]
        )
        assert code == 0
        assert doc["all_balanced"] is True
        assert all(row["balanced"] for row in doc["rows"])

    def test_unbalanced_level_exits_one(self):
        code, doc = run_json(
            ["conformal", "check", "--case", "G2-in-B3", "--level", "1"]
        )
        assert code == 1
        assert doc["all_balanced"] is False

    def test_negative_fractional_level_is_accepted(self):
        code, doc = run_json(
            ["conformal", "check", "--case", "G2xA1-in-F4", "--level", "-5/2"]
        )
        assert code == 0 and doc["all_balanced"] is True
        code, doc = run_json(
            ["conformal", "check", "--case", "G2xA1-in-F4", "--level=-5/2"]
        )
        assert code == 0 and doc["all_balanced"] is True

    def test_negative_fractional_level_from_the_shell(self):
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "lieconf.cli",
                "conformal",
                "check",
                "--case",
                "A2-in-G2",
                "--level",
                "-5/3",
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "yes" in proc.stdout

    def test_unparseable_level_is_a_usage_error(self):
        code, _out, err = run(
            ["conformal", "check", "--case", "G2-in-B3", "--level", "x"]
        )
        assert code == 2 and err.startswith("error:")

    def test_missing_level_value_is_a_usage_error(self):
        assert run(["conformal", "check", "--case", "G2-in-B3", "--level"])[0] == 2


class TestClassify:
    def test_orthogonal_survivors(self):
        code, doc = run_json(["classify", "so-irreducible"])
        assert code == 0
        rows = [(r["algebra"], r["weight"], r["dim_V"]) for r in doc["rows"]]
        assert rows == [("B3", "[0,0,1]", 8), ("G2", "[1,0]", 7)]

    def test_linear_survivors_up_to_rank_four(self):
        code, doc = run_json(["classify", "sl-irreducible", "--max-rank", "4"])
        assert code == 0
        assert [r["algebra"] for r in doc["rows"]] == ["C2", "C3", "C4"]
        assert [r["dim_V"] for r in doc["rows"]] == [4, 6, 8]

    def test_fundamental_scan_hits_and_misses(self):
        code, doc = run_json(["classify", "table1", "B3", "--bound", "3"])
        assert code == 0
        assert any(r["weight"] == "[1,0,0]" for r in doc["rows"])
        code, doc = run_json(["classify", "table1", "A2"])
        assert code == 0 and doc["rows"] == []
        code, out, _err = run(["classify", "table1", "A2"])
        assert code == 0 and "(no rows)" in out

    def test_exceptional_catalog_all_ok(self):
        code, doc = run_json(["classify", "exceptional"])
        assert code == 0
        assert doc["rows"] and all(r["status"] == "ok" for r in doc["rows"])

    def test_grid_and_global_report(self):
        code, doc = run_json(["classify", "table2"])
        assert code == 0 and len(doc["rows"]) >= 100
        code, doc = run_json(["classify", "global"])
        assert code == 0
        assert len(doc["rows"]) == 114
        assert all(r["status"] == "ok" for r in doc["rows"])

    def test_global_report_is_deterministic(self):
        _, first, _ = run(["--format", "json", "classify", "global"])
        _, second, _ = run(["--format", "json", "classify", "global"])
        assert first == second

    def test_bad_bound_is_a_usage_error(self):
        assert run(["classify", "table1", "B3", "--bound", "0"])[0] == 2


class TestQseries:
    def test_character_terms(self):
        code, doc = run_json(["qseries", "char", "weyl_M3", "--order", "3"])
        assert code == 0
        rows = {r["exponent"]: r["coefficient"] for r in doc["rows"]}
        assert rows["1/8"] == "1"
        assert rows["5/8"] == "6"
        assert rows["9/8"] == "21"

    def test_character_with_highest_weight_argument(self):
        code, doc = run_json(["qseries", "char", "sl2_m32", "1", "--order", "4"])
        assert code == 0
        assert doc["ell"] == 1
        assert doc["rows"][0]["exponent"] == "15/8"
        assert doc["rows"][0]["coefficient"] == "2"

    def test_verify_banner_and_exit_code(self):
        code, out, err = run(["qseries", "verify", "eq92", "--order", "50"])
        assert code == 0 and err == ""
        assert out.splitlines()[0] == "eq92: verified to q^50"

    def test_verify_json(self):
        code, doc = run_json(["qseries", "verify", "delta_eta", "--order", "40"])
        assert code == 0
        assert doc["verified"] is True and doc["mismatch"] is None

    def test_unknown_identity_is_a_usage_error(self):
        assert run(["qseries", "verify", "eq93", "--order", "20"])[0] == 2


class TestFlagsAndIO:
    def test_format_flag_accepted_before_and_after_subcommand(self):
        _, before, _ = run(["--format", "json", "algebra", "info", "D4"])
        _, after, _ = run(["algebra", "info", "D4", "--format", "json"])
        assert before == after

    def test_out_writes_file_instead_of_stdout(self, tmp_path):
        target = tmp_path / "report.json"
        code, out, err = run(
            ["--format", "json", "--out", str(target), "algebra", "info", "E6"]
        )
        assert code == 0 and out == "" and err == ""
        doc = json.loads(target.read_text())
        assert doc["dimension"] == 78

    def test_catalog_override_and_builtin_fallback(self, tmp_path):
        doc = [
            {
                "label": "toy-G2-in-B3",
                "ambient": "B3",
                "factors": [{"type": "G2", "index": "1"}],
                "level": "-2",
                "p": [{"weights": [[1, 0]], "mult": 1}],
            }
        ]
        path = tmp_path / "cat.json"
        path.write_text(json.dumps(doc))
        code, payload = run_json(
            ["conformal", "solve", "--case", "toy-G2-in-B3", "--catalog", str(path)]
        )
        assert code == 0 and payload["ambient"] == "B3"
        code, payload = run_json(
            ["conformal", "solve", "--case", "G2-in-B3", "--catalog", str(path)]
        )
        assert code == 0

    def test_no_arguments_is_a_usage_error(self):
        assert run([])[0] == 2

    def test_help_exits_zero(self):
        assert run(["--help"])[0] == 0

    def test_module_execution(self):
        proc = subprocess.run(
            [sys.executable, "-m", "lieconf.cli", "algebra", "info", "G2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "G2" in proc.stdout
