import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraxion.cli import ProblemFile, main, monotonicity

ROOT = Path(__file__).resolve().parents[1]
FIX = ROOT / "tests" / "fixtures"
GOLD = ROOT / "tests" / "golden"

sys.path.insert(0, str(ROOT / "scripts"))
from make_golden import cases  # noqa: E402

REPORT_KEYS = {
    "alternates", "case", "constraint_active", "gamma", "n_opt", "oar_effect", "objective_primary",
    "objective_secondary", "omega_sign", "problem_kind", "protocol", "protocol_text", "thresholds",
    "total_dose", "tumor_effect",
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def fixture(name):
    return str(FIX / f"{name}.json")


@pytest.mark.parametrize("name,argv,want", list(cases()), ids=[c[0] for c in cases()])
def test_golden(name, argv, want):
    code, out, _ = run(*argv)
    assert code == want
    suffix = ".csv" if name.startswith("sweep") else ".json"
    assert out == (GOLD / f"{name}{suffix}").read_text()


class TestSolve:
    def test_machine_schema_is_stable(self):
        for name in ("p1_hyper", "p1_hypo", "p1_2d", "p2_gap", "p2_hyper", "p3_equivalent"):
            code, out, _ = run("solve", "--input", fixture(name), "--format", "machine")
            assert code == 0
            assert set(json.loads(out)) == REPORT_KEYS

    def test_full_precision_values(self):
        code, out, _ = run("solve", "--input", fixture("p2_hypo"), "--format", "machine", "--precision", "full")
        doc = json.loads(out)
        assert doc["n_opt"] == 10 and doc["case"] == "HypoStructure"
        assert abs(doc["protocol"][1]["dose"] - 5.77033) < 1e-5
        assert abs(doc["oar_effect"] - 0.2835) < 5e-4

    def test_p1_reference_hyper(self):
        code, out, _ = run("solve", "--input", fixture("p1_hyper"))
        assert code == 0
        assert "HyperUniform" in out and "N           56" in out

    def test_infeasible_exit_code(self):
        code, out, err = run("solve", "--input", fixture("p1_infeasible"))
        assert code == 2
        assert "infeasible" in err and out == ""

    def test_exit_code_independent_of_format(self):
        for fmt in ("human", "machine"):
            for prec in ("3", "full"):
                assert run("solve", "--input", fixture("p1_infeasible"), "--format", fmt, "--precision", prec)[0] == 2
                assert run("solve", "--input", fixture("p1_hyper"), "--format", fmt, "--precision", prec)[0] == 0

    def test_gap_rule_path(self):
        code, out, _ = run("solve", "--input", fixture("p2_gap"), "--format", "machine")
        doc = json.loads(out)
        assert code == 0
        assert doc["case"] == "EmptyWindowAllMin"
        assert doc["n_opt"] == 3

    def test_fixed_n_infeasible(self, tmp_path):
        raw = json.loads(Path(fixture("p1_hyper")).read_text())
        raw["n_fixed"] = 57
        path = tmp_path / "p.json"
        path.write_text(json.dumps(raw))
        assert run("solve", "--input", str(path))[0] == 2

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("FRAXION_N_CAP", "20")
        code, _, err = run("solve", "--input", fixture("p1_hyper"))
        assert code == 1 and "cap" in err


class TestValidation:
    @pytest.mark.parametrize("patch,needle", [
        ({"colour": 1}, "unknown field"),
        ({"delta": 1.5}, "delta"),
        ({"d_min": 7.0}, "d_min < d_max"),
        ({"gamma": -1.0}, "gamma"),
        ({"problem_kind": "p9"}, "problem_kind"),
        ({"tumor": {"alpha": 0.05}}, "alpha and beta"),
        ({"n": 3}, "not allowed"),
        ({"gamma": None}, "needs field"),
        ({"delta": "0.3"}, "number"),
    ])
    def test_rejected(self, tmp_path, patch, needle):
        raw = json.loads(Path(fixture("p1_hyper")).read_text())
        raw.update(patch)
        raw = {k: v for k, v in raw.items() if v is not None}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(raw))
        code, _, err = run("solve", "--input", str(path))
        assert code == 1
        assert needle in err

    def test_missing_file_and_bad_json(self, tmp_path):
        assert run("solve", "--input", str(tmp_path / "nope.json"))[0] == 1
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run("solve", "--input", str(bad))[0] == 1

    def test_bad_flags(self):
        assert run("solve")[0] == 1
        assert run("solve", "--input", fixture("p1_hyper"), "--precision", "zero")[0] == 1
        assert run("frobnicate")[0] == 1

    def test_wrong_subcommand_for_kind(self):
        assert run("bed", "--input", fixture("p1_hyper"))[0] == 1
        assert run("solve", "--input", fixture("bed_15"))[0] == 1


class TestSweep:
    def test_gamma_sweep_endpoints(self):
        code, out, _ = run("sweep", "--input", fixture("p1_hyper"), "--sweep-param", "gamma",
                           "--start", "0.1", "--stop", "0.78", "--steps", "10", "--format", "machine")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("parameter,value,status,n_opt")
        ns = [int(line.split(",")[3]) for line in lines[1:-1]]
        assert ns[0] == 7 and ns[-1] == 56
        assert ns == sorted(ns)
        assert lines[-1] == "# summary: N over gamma is non-decreasing"

    def test_delta_sweep_flips_case(self):
        code, out, _ = run("sweep", "--input", fixture("p1_hyper"), "--sweep-param", "delta",
                           "--start", "0.1", "--stop", "0.3", "--steps", "5", "--format", "machine")
        cases_ = [line.split(",")[4] for line in out.splitlines()[1:-1]]
        assert cases_[0] == "HypoCompared" and cases_[-1] == "HyperUniform"
        assert "OmegaZeroFamily" in cases_

    def test_infeasible_rows_are_recorded(self):
        code, out, _ = run("sweep", "--input", fixture("p1_hyper"), "--sweep-param", "gamma",
                           "--start", "0.001", "--stop", "0.1", "--steps", "3", "--format", "machine")
        assert code == 0
        assert ",infeasible," in out.splitlines()[1]

    @pytest.mark.parametrize("extra", [
        ["--start", "0.3", "--stop", "0.3", "--steps", "2"],
        ["--start", "0.3", "--stop", "0.2", "--steps", "4"],
        ["--start", "0.1", "--stop", "0.3", "--steps", "1"],
        ["--start", "0.5", "--stop", "1.5", "--steps", "3"],
    ])
    def test_invalid_sweeps(self, extra):
        assert run("sweep", "--input", fixture("p1_hyper"), "--sweep-param", "delta", *extra)[0] == 1

    def test_unknown_parameter(self):
        args = ["--start", "0.1", "--stop", "0.3"]
        assert run("sweep", "--input", fixture("p1_hyper"), "--sweep-param", "kappa", *args)[0] == 1
        assert run("sweep", "--input", fixture("p3_equivalent"), "--sweep-param", "delta", *args)[0] == 1

    def test_monotonicity_labels(self):
        assert monotonicity([1, 2, 2, 3]) == "non-decreasing"
        assert monotonicity([3, 2, 2]) == "non-increasing"
        assert monotonicity([2, 2]) == "constant"
        assert monotonicity([1, 3, 2]) == "not monotone"


class TestVerify:
    def test_two_dimensional_example_passes(self):
        code, out, _ = run("verify", "--input", fixture("p1_2d"), "--oracle-step", "0.001")
        assert code == 0 and "PASSED" in out

    def test_shrunken_gap_within_bound(self):
        code, out, _ = run("verify", "--input", fixture("p1_shrunk"), "--format", "machine")
        doc = json.loads(out)
        assert code == 0
        assert 0 <= doc["oracle"]["gap_vs_analytic"] <= doc["oracle"]["slack_bound"]

    def test_tampered_report(self):
        code, out, _ = run("verify", "--input", fixture("p1_shrunk"),
                           "--report", fixture("p1_shrunk_tampered_report"))
        assert code == 3 and "FAILED" in out

    def test_infeasible(self):
        assert run("verify", "--input", fixture("p1_infeasible"))[0] == 2


class TestBed:
    def test_values(self):
        for name, want in (("bed_15", 3.0622577), ("bed_50", 1.0827625), ("bed_identity", 2.0)):
            code, out, _ = run("bed", "--input", fixture(name), "--format", "machine", "--precision", "full")
            assert code == 0
            assert abs(json.loads(out)["dose_target"] - want) < 1e-7

    def test_human(self):
        code, out, _ = run("bed", "--input", fixture("bed_15"))
        assert "15 x 3.06226 Gy" in out


class TestRoundTrip:
    @pytest.mark.parametrize("path", sorted(p for p in FIX.glob("*.json") if "report" not in p.name),
                             ids=lambda p: p.stem)
    def test_fixture_files_are_canonical(self, path):
        text = path.read_text()
        assert ProblemFile.from_dict(json.loads(text)).dumps() == text

    @given(st.floats(0.01, 1.0), st.floats(0.001, 0.1), st.floats(0.1, 1.0), st.floats(0.5, 2.0),
           st.floats(0.1, 5.0), st.floats(0.01, 5.0), st.sampled_from(["p1", "p2"]))
    @settings(max_examples=50)
    def test_parse_serialize_parse(self, a, b, delta, d_min, span, gamma, kind):
        raw = {"problem_kind": kind, "tumor": {"alpha": a, "beta": b}, "oar": {"alpha": b * 3, "beta": b},
               "delta": delta, "d_min": d_min, "d_max": d_min + span, "gamma": gamma}
        text = ProblemFile.from_dict(raw).dumps()
        assert ProblemFile.from_dict(json.loads(text)).dumps() == text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fraxion", "solve", "--input", fixture("p1_infeasible")],
                          capture_output=True, text=True)
    assert proc.returncode == 2
