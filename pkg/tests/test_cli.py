"""Command-line behavior: exit codes, output formats, determinism."""

import json
import subprocess
import sys

from tracewitt.cli import main, run_fuzz


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "tracewitt", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )


class TestExitCodes:
    def test_valid_sequence_exits_zero(self):
        assert run_cli("check-traces", "--traces", "1,3").returncode == 0

    def test_invalid_sequence_exits_one(self):
        assert run_cli("check-traces", "--traces", "0,1").returncode == 1

    def test_parse_error_exits_two(self):
        proc = run_cli("check-traces", "--traces", "1,x")
        assert proc.returncode == 2
        assert "x" in proc.stderr

    def test_missing_file_exits_two(self):
        assert run_cli("traces", "/no/such/file.json", "--count", "3").returncode == 2

    def test_unknown_flag_exits_two(self):
        assert run_cli("check-traces", "--traces", "1,3", "--bogus").returncode == 2

    def test_unknown_command_exits_two(self):
        assert run_cli("frobnicate").returncode == 2

    def test_synthesize_invalid_exits_one(self):
        proc = run_cli("synthesize", "--traces", "0,1")
        assert proc.returncode == 1
        assert "FAIL" in proc.stdout


class TestCheckTraces:
    def test_failing_row_identified(self):
        proc = run_cli("check-traces", "--traces", "0,1", "--format", "json", "--no-timestamp")
        report = json.loads(proc.stdout)
        assert report["overall"] is False
        bad = [c for c in report["checks"] if not c["pass"]]
        assert [(c["n"], c["p"], c["k"]) for c in bad] == [(2, 2, 1)]

    def test_text_table_headers(self):
        proc = run_cli("check-traces", "--traces", "1,3")
        assert "b_n" in proc.stdout and "b_{n/p}" in proc.stdout
        assert "overall: PASS" in proc.stdout

    def test_positional_argument(self):
        assert run_cli("check-traces", "1,3").returncode == 0

    def test_stdin_input(self):
        proc = run_cli("check-traces", "-", stdin="1 3 4 7\n")
        assert proc.returncode == 0

    def test_flag_and_positional_conflict(self):
        assert run_cli("check-traces", "1,3", "--traces", "1,3").returncode == 2

    def test_no_sequence_given(self):
        assert run_cli("check-traces").returncode == 2


class TestSynthesize:
    def test_fibonacci_exact_output(self):
        proc = run_cli("synthesize", "--traces", "1,3")
        assert proc.stdout.strip() == '{"dim":2,"entries":[[0,1],[1,1]]}'

    def test_scalar_exact_output(self):
        proc = run_cli("synthesize", "--traces", "2")
        assert proc.stdout.strip() == '{"dim":1,"entries":[[2]]}'

    def test_round_trips_through_traces(self):
        matrix_json = run_cli("synthesize", "--traces", "1,3,4,7").stdout
        proc = run_cli("traces", "-", "--count", "4", stdin=matrix_json)
        assert proc.stdout.strip() == "1,3,4,7"


class TestConversions:
    def test_traces_of_fibonacci_matrix(self, tmp_path):
        path = tmp_path / "fib.json"
        path.write_text('{"dim":2,"entries":[[0,1],[1,1]]}')
        proc = run_cli("traces", str(path), "--count", "4")
        assert proc.stdout.strip() == "1,3,4,7"

    def test_charpoly(self, tmp_path):
        path = tmp_path / "fib.json"
        path.write_text('{"dim":2,"entries":[[0,1],[1,1]]}')
        proc = run_cli("charpoly", str(path))
        assert proc.stdout.strip() == "1,-1"

    def test_witt_of_powers_of_two(self):
        proc = run_cli("witt", "--traces", "2,4,8,16")
        assert proc.stdout.strip() == "2,0,0,0"

    def test_witt_rational_rendering(self):
        proc = run_cli("witt", "--traces", "0,1")
        assert proc.stdout.strip() == "0,1/2"

    def test_ghost_teichmueller(self):
        proc = run_cli("ghost", "--traces", "1", "--count", "3")
        assert proc.stdout.strip() == "1,1,1"

    def test_ghost_accepts_rationals(self):
        proc = run_cli("ghost", "--traces", "0,1/2", "--count", "2")
        assert proc.stdout.strip() == "0,1"

    def test_values_json_format(self):
        proc = run_cli("witt", "--traces", "0,1", "--format", "json", "--no-timestamp")
        assert json.loads(proc.stdout) == {"values": [0, "1/2"]}


class TestCharacterCommand:
    def test_regular_table_passes(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(json.dumps({"order": 4, "values": {"0": 4, "1": 0, "2": 0, "3": 0}}))
        assert run_cli("check-character", str(path)).returncode == 0

    def test_corrupted_table_fails(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(json.dumps({"order": 2, "values": {"0": 2, "1": 1}}))
        assert run_cli("check-character", str(path)).returncode == 1

    def test_schema_violation_exits_two(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(json.dumps({"order": 2, "values": {"0": 2}}))
        assert run_cli("check-character", str(path)).returncode == 2

    def test_policy_in_json_report(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(json.dumps({"order": 2, "values": {"0": 1, "1": 1}}))
        proc = run_cli("check-character", str(path), "--format", "json", "--no-timestamp")
        report = json.loads(proc.stdout)
        assert report["policy"]["kind"] == "character"
        assert "k_bounds" in report["policy"]

    def test_kmax_cap(self, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(json.dumps({"order": 2, "values": {"0": 1, "1": 1}}))
        proc = run_cli("check-character", str(path), "--kmax", "1", "--format", "json", "--no-timestamp")
        report = json.loads(proc.stdout)
        assert all(c["k"] == 1 for c in report["checks"])


class TestExteriorCommand:
    def test_fibonacci_matrix_passes(self, tmp_path):
        path = tmp_path / "fib.json"
        path.write_text('{"dim":2,"entries":[[0,1],[1,1]]}')
        proc = run_cli("check-exterior", str(path), "--prime", "2", "--kmax", "2")
        assert proc.returncode == 0
        assert "overall: PASS" in proc.stdout

    def test_composite_prime_rejected(self, tmp_path):
        path = tmp_path / "fib.json"
        path.write_text('{"dim":2,"entries":[[0,1],[1,1]]}')
        assert run_cli("check-exterior", str(path), "--prime", "4").returncode == 2


class TestTimestamps:
    def test_report_json_has_timestamp_by_default(self):
        proc = run_cli("check-traces", "--traces", "1,3", "--format", "json")
        assert "timestamp" in json.loads(proc.stdout)

    def test_no_timestamp_flag(self):
        proc = run_cli("check-traces", "--traces", "1,3", "--format", "json", "--no-timestamp")
        assert "timestamp" not in json.loads(proc.stdout)

    def test_matrix_output_never_timestamped(self):
        proc = run_cli("synthesize", "--traces", "1,3")
        assert "timestamp" not in proc.stdout


class TestFuzz:
    def test_clean_run(self):
        proc = run_cli("fuzz", "--trials", "5", "--dim", "3", "--seed", "7")
        assert proc.returncode == 0
        assert "violations: 0" in proc.stdout

    def test_dim_zero_trivial(self):
        proc = run_cli("fuzz", "--trials", "1", "--dim", "0", "--seed", "1")
        assert proc.returncode == 0

    def test_zero_trials_rejected(self):
        assert run_cli("fuzz", "--trials", "0").returncode == 2

    def test_byte_identical_given_seed(self):
        args = ("fuzz", "--trials", "4", "--dim", "2", "--seed", "123",
                "--format", "json", "--no-timestamp")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_summary_counts(self):
        summary = run_fuzz(trials=3, dim=2, entry_bound=2, seed=5)
        # 8 trace checks per trial (N=8: one row per prime-power part)
        assert summary["trials"] == 3
        assert summary["ok"] is True
        assert summary["trace_checks"] > 0
        assert summary["exterior_checks"] == 3 * 2 * 2 * 2  # trials * primes * k * dim


class TestInProcessMain:
    def test_check_ok(self, capsys):
        assert main(["check-traces", "--traces", "1,3"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_check_fail(self, capsys):
        assert main(["check-traces", "--traces", "0,1"]) == 1
        capsys.readouterr()

    def test_parse_error(self, capsys):
        assert main(["check-traces", "--traces", "nope"]) == 2
        assert "nope" in capsys.readouterr().err

    def test_synthesize(self, capsys):
        assert main(["synthesize", "--traces", "2"]) == 0
        assert capsys.readouterr().out.strip() == '{"dim":1,"entries":[[2]]}'
