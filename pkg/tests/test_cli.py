import json
import subprocess
import sys

from click.testing import CliRunner

from qdhahn.cli import main


def invoke(*args, env=None):
    runner = CliRunner()
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


def run_script(*args):
    """Run through the console entry point to exercise exit codes."""
    return subprocess.run(
        [sys.executable, "-m", "qdhahn.cli", *args],
        capture_output=True,
        text=True,
    )


class TestEval:
    def test_single_polynomial_row(self):
        result = invoke(
            "eval", "--family", "cdqh", "--what", "poly", "--n", "3",
            "--z", "2.0", "--A", ".3", "--B", ".3", "--C", ".3", "--D", ".3",
            "--q", ".5",
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("# family=cdqh")
        assert lines[1] == "n_or_x,re,im"
        assert len(lines) == 3

    def test_weight_grid_rows(self):
        result = invoke(
            "eval", "--family", "cdqh", "--what", "weight",
            "--grid", "-0.99:0.99:199",
            "--A", ".4", "--B", ".4", "--C", ".5", "--D", ".4", "--q", ".5",
        )
        assert result.exit_code == 0
        rows = [l for l in result.output.strip().splitlines() if not l.startswith("#")]
        assert len(rows) == 200  # header + 199 points
        values = [float(r.split(",")[1]) for r in rows[1:]]
        assert all(v > 0 for v in values)

    def test_missing_parameter_exit_2(self):
        proc = run_script(
            "eval", "--family", "cdqh", "--what", "poly", "--n", "3",
            "--z", "2.0", "--A", ".3", "--B", ".3", "--C", ".3", "--q", ".5",
        )
        assert proc.returncode == 2
        assert "missing: D" in proc.stderr

    def test_numeric_error_exit_3(self):
        # on-cut evaluation of a branch-sensitive solution
        proc = run_script(
            "eval", "--family", "cdqh", "--what", "solution", "--which",
            "minimal", "--n", "2", "--z", "2.0", "--A", ".3", "--B", ".3",
            "--C", ".3", "--D", ".3", "--q", ".5",
        )
        assert proc.returncode == 3
        assert "BranchAmbiguous" in proc.stderr

    def test_limit_family_solution(self):
        result = invoke(
            "eval", "--family", "wall", "--what", "solution", "--which", "1",
            "--n", "2", "--z", "2.4", "--A", ".3", "--B", ".4", "--q", ".5",
        )
        assert result.exit_code == 0

    def test_unknown_family_exit_2(self):
        proc = run_script(
            "eval", "--family", "nope", "--what", "poly", "--z", "2.0", "--q", ".5"
        )
        assert proc.returncode == 2

    def test_base_out_of_range_exit_2(self):
        proc = run_script(
            "eval", "--family", "fourth-limit", "--what", "poly", "--n", "2",
            "--z", "2.0", "--q", "1.5",
        )
        assert proc.returncode == 2
        assert "q" in proc.stderr

    def test_seventeen_significant_digits(self):
        result = invoke(
            "eval", "--family", "fourth-limit", "--what", "poly", "--n", "4",
            "--z", "2.31", "--q", ".5",
        )
        row = [l for l in result.output.splitlines() if not l.startswith("#")][1]
        value = row.split(",")[1]
        assert float(value) == float(f"{float(value):.17g}")
        assert len(value.replace("-", "").replace(".", "").lstrip("0")) >= 16

    def test_deterministic_output(self):
        args = (
            "eval", "--family", "cdqh", "--what", "cf", "--z", "20.0",
            "--A", ".3", "--B", ".4", "--C", ".35", "--D", ".45", "--q", ".5",
        )
        assert invoke(*args).output == invoke(*args).output

    def test_byte_identical_across_processes(self):
        args = (
            "table", "--family", "wall", "--n-hi", "4", "--grid", "2:4:5",
            "--A", ".3", "--B", ".4", "--q", ".5",
        )
        first = run_script(*args)
        second = run_script(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode == 0

    def test_tolerance_env_override(self, monkeypatch):
        args = (
            "eval", "--family", "cdqh", "--what", "cf", "--z", "20.0",
            "--A", ".3", "--B", ".4", "--C", ".35", "--D", ".45", "--q", ".5",
        )
        tight = invoke(*args, env={"QDH_TOL": "1e-13"})
        loose = invoke(*args, env={"QDH_TOL": "1e-3"})
        assert tight.exit_code == 0 and loose.exit_code == 0
        v_tight = float(tight.output.splitlines()[-1].split(",")[1])
        v_loose = float(loose.output.splitlines()[-1].split(",")[1])
        # the loose tolerance truncates the series visibly earlier
        assert abs(v_tight - v_loose) > 1e-12 * abs(v_tight)


class TestVerify:
    def test_single_check_passes(self):
        result = invoke("verify", "--check", "symmetries", "--fast")
        assert result.exit_code == 0
        assert "PASS symmetries" in result.output

    def test_unknown_check_exit_2(self):
        proc = run_script("verify", "--check", "bogus")
        assert proc.returncode == 2

    def test_json_format(self):
        result = invoke("verify", "--check", "limits", "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert isinstance(payload, list)
        assert payload[0]["check_id"] == "limit-edges"
        assert payload[0]["pass"] is True

    def test_seed_recorded(self):
        result = invoke("verify", "--check", "limits", "--seed", "123")
        assert "seed=123" in result.output


class TestZeros:
    def test_negative_zeros_csv(self):
        result = invoke("zeros", "--f", "fourth-limit", "--n", "-1", "--q", "0.5")
        assert result.exit_code == 0
        rows = result.output.strip().splitlines()
        assert rows[0] == "zero,bracket_lo,bracket_hi"
        zeros = [float(r.split(",")[0]) for r in rows[1:]]
        assert zeros and all(z < 0 for z in zeros)

    def test_interlace_report(self):
        result = invoke(
            "zeros", "--f", "fourth-limit", "--n", "0", "--q", "0.5",
            "--max-zeros", "6", "--interlace",
        )
        assert result.exit_code == 0
        assert "interlace n=0 vs n=1: pass" in result.output

    def test_positive_axis_scan_is_empty(self):
        result = invoke(
            "zeros", "--f", "fourth-limit", "--n", "0", "--q", "0.5",
            "--scan-lo", "1e-4", "--scan-hi", "1e4",
        )
        rows = result.output.strip().splitlines()
        assert rows == ["zero,bracket_lo,bracket_hi"]


class TestTable:
    def test_matrix_shape(self):
        result = invoke(
            "table", "--family", "cdqh", "--n-hi", "5", "--grid", "25:29:21",
            "--A", ".3", "--B", ".4", "--C", ".35", "--D", ".45", "--q", ".5",
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("# family=cdqh q=0.5")
        assert lines[1] == "z,n0,n1,n2,n3,n4,n5"
        assert len(lines) == 2 + 21

    def test_empty_degree_range_header_only(self):
        result = invoke(
            "table", "--family", "fourth-limit", "--n-lo", "3", "--n-hi", "2",
            "--grid", "1:2:3", "--q", ".5",
        )
        lines = result.output.strip().splitlines()
        assert lines[-1] == "z"

    def test_single_point_grid(self):
        result = invoke(
            "table", "--family", "fourth-limit", "--n-hi", "2",
            "--grid", "2:2:1", "--q", ".5",
        )
        rows = [l for l in result.output.strip().splitlines() if not l.startswith("#")]
        assert len(rows) == 2
