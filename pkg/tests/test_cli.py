"""End-to-end CLI behavior: formats, exit codes, determinism."""

import json
import math
import subprocess
import sys

import pytest

from ptrig import cli


def run(*argv):
    """Invoke the CLI in-process, capturing both streams."""
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestEval:
    def test_classical_point(self):
        code, out, _ = run("eval", "--p", "2", "--fn", "sin_p", "--x", "0.7853981633974483")
        assert code == 0
        value = float(out.split("±")[0])
        assert abs(value - math.sqrt(0.5)) <= 1e-9

    def test_pi_p_needs_no_x(self):
        code, out, _ = run("eval", "--p", "2", "--fn", "pi_p")
        assert code == 0
        assert abs(float(out.split("±")[0]) - math.pi) <= 1e-10

    def test_json_format(self):
        code, out, _ = run("eval", "--p", "3", "--fn", "cosh_p", "--x", "1.0", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert set(d) == {"fn", "p", "x", "value", "abs_err"}
        assert d["fn"] == "cosh_p" and d["x"] == 1.0
        assert d["value"] > 1.0 and d["abs_err"] >= 0.0

    def test_csv_format(self):
        code, out, _ = run("eval", "--p", "2", "--fn", "tan_p", "--x", "0.5", "--format", "csv")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "x,value,abs_err"
        x, v, e = (float(t) for t in lines[1].split(","))
        assert abs(v - math.tan(0.5)) <= max(1e-10, e)


class TestTable:
    def test_row_count_and_order(self):
        code, out, _ = run("table", "--p", "2.5", "--fn", "sinh_p", "--n", "17", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,value,abs_err"
        assert len(lines) == 18
        xs = [float(line.split(",")[0]) for line in lines[1:]]
        assert all(a < b for a, b in zip(xs, xs[1:]))

    def test_csv_seventeen_digit_round_trip(self):
        _, out, _ = run("table", "--p", "3", "--fn", "cos_p", "--n", "9", "--format", "csv")
        for line in out.strip().splitlines()[1:]:
            for tok in line.split(","):
                v = float(tok)
                assert f"{v:.17g}" == tok

    def test_json_rows(self):
        code, out, _ = run(
            "table", "--p", "2", "--fn", "arcsin_p", "--n", "11",
            "--spacing", "uniform", "--format", "json",
        )
        assert code == 0
        d = json.loads(out)
        assert len(d["points"]) == 11
        mid = d["points"][5]
        assert abs(mid["value"] - math.asin(mid["x"])) <= max(1e-10, mid["abs_err"])

    def test_determinism(self):
        a = run("table", "--p", "3", "--fn", "tanh_p", "--n", "25", "--format", "csv")
        b = run("table", "--p", "3", "--fn", "tanh_p", "--n", "25", "--format", "csv")
        assert a == b


class TestConstants:
    def test_classical_line(self):
        code, out, _ = run("constants", "--p", "2")
        assert code == 0
        fields = dict(part.split("=") for part in out.strip().split(", "))
        assert float(fields["pi_p"]) == pytest.approx(math.pi, abs=1e-12)
        assert float(fields["alpha"]) == 1.0 / 3.0
        assert abs(float(fields["beta"]) - 0.4909) <= 5e-5

    def test_json(self):
        code, out, _ = run("constants", "--p", "4", "--format", "json")
        d = json.loads(out)
        assert code == 0
        assert 0.0 < d["alpha"] < d["beta"] < 1.0
        assert d["alpha"] == 0.2


class TestVerify:
    def test_single_claim_json_schema(self):
        code, out, err = run(
            "verify", "--claim", "thm2_chain", "--p", "3", "--n", "200", "--format", "json"
        )
        assert code == 0
        d = json.loads(out)
        assert list(d.keys()) == ["claim", "p", "passed", "min_margin", "monotone_verdict", "points"]
        assert d["passed"] is True
        assert d["min_margin"] > 0
        assert len(d["points"]) == 200
        assert "summary: 1/1 passed" in err

    def test_json_round_trips_byte_identically(self):
        _, out, _ = run("verify", "--claim", "lem24_gap", "--p", "2", "--n", "40", "--format", "json")
        assert json.dumps(json.loads(out), indent=2) + "\n" == out

    def test_all_claims_deterministic(self):
        a = run("verify", "--claim", "all", "--p", "3", "--n", "20", "--format", "json")
        b = run("verify", "--claim", "all", "--p", "3", "--n", "20", "--format", "json")
        assert a == (0, a[1], a[2])
        assert a == b
        reports = json.loads(a[1])
        assert len(reports) == 10
        assert a[2].strip().endswith("summary: 10/10 passed")

    def test_human_summary_last(self):
        code, out, _ = run("verify", "--claim", "all", "--p", "2", "--n", "20")
        lines = out.strip().splitlines()
        assert code == 0
        assert len(lines) == 11
        assert lines[-1] == "summary: 10/10 passed"

    def test_exploratory_marked_and_fails_honestly(self):
        code, out, _ = run("verify", "--claim", "thm1_chain", "--p", "1.5", "--n", "20")
        assert code == 1
        assert "FAIL" in out
        assert "exploratory" in out

    def test_csv_summary_table(self):
        code, out, _ = run("verify", "--claim", "lem22_chain", "--p", "2", "--n", "30", "--format", "csv")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "claim,p,passed,min_margin,monotone_verdict"
        claim, p, passed, margin, verdict = lines[1].split(",")
        assert claim == "LEM22_CHAIN" and passed == "true"
        assert float(margin) > 0


class TestExitCodes:
    def test_unknown_verb(self):
        code, _, _ = run("frobnicate", "--p", "2")
        assert code == 2

    def test_missing_required(self):
        assert run("eval", "--p", "2", "--fn", "sin_p")[0] == 2
        assert run("verify", "--p", "2")[0] == 2
        assert run("table", "--fn", "sin_p")[0] == 2

    def test_domain_error(self):
        code, _, err = run("eval", "--p", "2", "--fn", "sin_p", "--x", "99")
        assert code == 2
        assert "error:" in err

    def test_bad_p(self):
        assert run("constants", "--p", "0.5")[0] == 2

    def test_pole(self):
        code, _, _ = run("eval", "--p", "2", "--fn", "tan_p", "--x", "1.5707963267948966")
        assert code == 2

    def test_unreachable_tolerance(self):
        code, _, err = run("eval", "--p", "2", "--fn", "arcsin_p", "--x", "0.5", "--tol", "1e-30")
        assert code == 3
        assert "error:" in err

    def test_bad_tolerance_value(self):
        assert run("eval", "--p", "2", "--fn", "sin_p", "--x", "0.5", "--tol", "2.0")[0] == 2

    def test_unknown_claim(self):
        assert run("verify", "--p", "2", "--claim", "thm9_chain")[0] == 2

    def test_bad_grid(self):
        assert run("table", "--p", "2", "--fn", "sin_p", "--n", "1")[0] == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ptrig.cli", "constants", "--p", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "pi_p=3.141592653589793" in proc.stdout
