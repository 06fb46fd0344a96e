"""End-to-end command behavior, exit codes, and output determinism."""

import dataclasses
import json

import pytest

from causabound import demo as demo_module
from causabound.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNDEFINED,
    main,
)
from conftest import DATA

TRIAL_CSV = str(DATA / "basic_trial.csv")
MEDIATION_JSON = str(DATA / "complete_mediation.json")
CROSSOVER_JSON = str(DATA / "crossover_covariate.json")
CONFOUNDED_JSON = str(DATA / "mediated_confounding.json")
CONFOUNDED_CSV = str(DATA / "mediated_confounding_counts.csv")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBound:
    def test_counts_file(self, capsys):
        code, out, err = run(capsys, "bound", TRIAL_CSV)
        assert code == EXIT_OK
        doc = json.loads(out)
        entry = doc["intervals"][0]
        assert entry["lower"] == 0.6
        assert entry["upper"] == 1.0
        assert doc["input"]["scenario"]["structure"] == "basic"

    def test_method_both_lists_two_matching_entries(self, capsys):
        code, out, _ = run(capsys, "bound", MEDIATION_JSON, "--method", "both")
        assert code == EXIT_OK
        entries = json.loads(out)["intervals"]
        assert [e["method"] for e in entries] == ["closed", "oracle"]
        for e in entries:
            assert e["lower_display"] == "0.60"
            assert e["upper_display"] == "0.76"
        assert abs(entries[0]["lower"] - entries[1]["lower"]) <= 1e-9
        assert abs(entries[0]["upper"] - entries[1]["upper"]) <= 1e-9

    def test_mode_flag(self, capsys):
        code, out, _ = run(capsys, "bound", CROSSOVER_JSON, "--mode", "ignore-covariate")
        assert code == EXIT_OK
        entry = json.loads(out)["intervals"][0]
        assert entry["mode"] == "ignore-covariate"
        assert entry["lower_display"] == "0.00"
        assert entry["upper_display"] == "0.47"

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "bound", TRIAL_CSV, "--output", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("mode,method,lower,upper")
        assert lines[1].startswith("full,closed,0.6,1,")

    def test_deterministic_bytes(self, capsys):
        first = run(capsys, "bound", CONFOUNDED_JSON, "--method", "both")
        second = run(capsys, "bound", CONFOUNDED_JSON, "--method", "both")
        assert first == second

    def test_empty_counts_file(self, capsys, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("E,R,count\n")
        code, out, err = run(capsys, "bound", str(path))
        assert code == EXIT_INPUT_ERROR
        assert not out
        assert "causabound:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "bound", "no_such_file.json")
        assert code == EXIT_INPUT_ERROR
        assert err

    def test_unknown_extension(self, capsys, tmp_path):
        path = tmp_path / "input.txt"
        path.write_text("{}")
        code, _, err = run(capsys, "bound", str(path))
        assert code == EXIT_INPUT_ERROR
        assert err

    def test_validation_failure_lists_the_entry(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {"structure": "basic", "response": {"E=0": 0.12, "E=1": 1.5}}
            )
        )
        code, _, err = run(capsys, "bound", str(path))
        assert code == EXIT_INPUT_ERROR
        assert "response[E=1]" in err

    def test_undefined_pc_exits_three(self, capsys, tmp_path):
        path = tmp_path / "undefined.json"
        path.write_text(
            json.dumps({"structure": "basic", "response": {"E=0": 0.12, "E=1": 0.0}})
        )
        code, _, err = run(capsys, "bound", str(path))
        assert code == EXIT_UNDEFINED
        assert "undefined" in err

    def test_inapplicable_mode_is_an_input_error(self, capsys):
        code, _, err = run(capsys, "bound", TRIAL_CSV, "--mode", "ignore-mediator")
        assert code == EXIT_INPUT_ERROR
        assert err

    def test_usage_error(self, capsys):
        code, _, _ = run(capsys, "bound")
        assert code == EXIT_INPUT_ERROR


class TestAudit:
    def test_confounded_audit(self, capsys):
        code, out, _ = run(capsys, "audit", CONFOUNDED_JSON)
        assert code == EXIT_OK
        audit = json.loads(out)["audit"]
        displays = {
            e["mode"]: (e["lower_display"], e["upper_display"]) for e in audit["entries"]
        }
        assert displays["full"] == ("0.00", "0.21")
        assert displays["ignore-mediator"] == ("0.00", "0.53")
        assert displays["ignore-covariate"] == ("0.24", "0.59")
        assert displays["ignore-both"] == ("0.29", "0.97")
        assert audit["headline_disagreement"] is True

    def test_crossover_audit(self, capsys):
        code, out, _ = run(capsys, "audit", CROSSOVER_JSON)
        assert code == EXIT_OK
        audit = json.loads(out)["audit"]
        assert audit["relations"][0][1] == "disjoint"
        assert audit["headline_disagreement"] is True

    def test_basic_audit_is_quiet(self, capsys):
        code, out, _ = run(capsys, "audit", TRIAL_CSV)
        assert code == EXIT_OK
        audit = json.loads(out)["audit"]
        assert len(audit["entries"]) == 1
        assert audit["headline_disagreement"] is False

    def test_method_flag(self, capsys):
        code, out, _ = run(capsys, "audit", CROSSOVER_JSON, "--method", "both")
        assert code == EXIT_OK
        audit = json.loads(out)["audit"]
        assert {e["method"] for e in audit["entries"]} == {"closed", "oracle"}


class TestEstimate:
    def test_counts_to_scenario_json(self, capsys, confounded_scenario):
        code, out, _ = run(capsys, "estimate", CONFOUNDED_CSV)
        assert code == EXIT_OK
        from causabound import scenario_from_dict

        assert scenario_from_dict(json.loads(out)) == confounded_scenario

    def test_scenario_json_is_not_counts(self, capsys):
        code, _, err = run(capsys, "estimate", CROSSOVER_JSON)
        assert code == EXIT_INPUT_ERROR
        assert err


class TestOracleCheck:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--seed", "3", "--trials", "5")
        assert code == EXIT_OK
        assert "max endpoint gap" in out
        assert "guardrail" in out
        assert "all structures agree within 1e-09" in out

    def test_same_seed_is_byte_identical(self, capsys):
        first = run(capsys, "oracle-check", "--seed", "9", "--trials", "4")
        second = run(capsys, "oracle-check", "--seed", "9", "--trials", "4")
        assert first == second

    def test_zero_trials_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "oracle-check", "--trials", "0")
        assert code == EXIT_INPUT_ERROR
        assert err


class TestDemo:
    def test_text_demo_passes(self, capsys):
        code, out, _ = run(capsys, "demo")
        assert code == EXIT_OK
        assert "demo: ok" in out
        assert out.count("MISMATCH") == 0

    def test_json_demo_passes(self, capsys):
        code, out, _ = run(capsys, "demo", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["checked"] == 18
        assert len(doc["cases"]) == 4

    def test_tampered_reference_case_fails_with_diff(self, capsys, monkeypatch):
        cases = list(demo_module.REFERENCE_CASES)
        broken = dataclasses.replace(
            cases[0],
            expected=((cases[0].expected[0][0], "0.61", "1.00"),),
        )
        monkeypatch.setattr(demo_module, "REFERENCE_CASES", (broken, *cases[1:]))
        code, out, _ = run(capsys, "demo")
        assert code == EXIT_CHECK_FAILED
        assert "MISMATCH" in out
        assert "expected [0.61, 1.00]" in out
