import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from necklace_walks.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(text):
    lines = [l for l in text.strip().split("\n") if not l.startswith("#")]
    return [line.split(",") for line in lines[1:]], lines[0]


class TestSpectrumCommand:
    def test_cycle_k4(self, capsys):
        code, out, _ = run_cli(["spectrum", "--cycle", "--K", "4"], capsys)
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "k,n,lambda"
        assert len(rows) == 4
        lams = sorted(float(r[2]) for r in rows)
        assert np.abs(np.array(lams) - [-2.0, 0.0, 0.0, 2.0]).max() < 1e-12

    def test_comb1_k8_matches_closed_form(self, capsys):
        code, out, _ = run_cli(["spectrum", "--comb-d", "1", "--K", "8"], capsys)
        assert code == 0
        rows, _ = csv_rows(out)
        assert len(rows) == 16
        for r in rows:
            k, n, lam = int(r[0]), int(r[1]), float(r[2])
            c = math.cos(2 * math.pi * k / 8)
            expected = c + (1 if n else -1) * math.sqrt(1 + c * c)
            assert lam == pytest.approx(expected, abs=1e-12)

    def test_pearl_file_with_self_loop_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"m": 3, "edges": [[1, 1]], "root_in": 0, "root_out": 2}')
        code, _, err = run_cli(["spectrum", "--pearl-file", str(bad), "--K", "4"], capsys)
        assert code == 1
        assert "self-loop edge (2, 2)" in err

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run_cli(["spectrum", "--cycle", "--comb-d", "1", "--K", "4"], capsys)
        assert code == 1
        assert "exactly one pearl source" in err

    def test_vectors_out(self, tmp_path, capsys):
        path = tmp_path / "vecs.json"
        code, _, _ = run_cli(
            ["spectrum", "--cycle", "--K", "3", "--vectors-out", str(path)], capsys
        )
        assert code == 0
        records = json.loads(path.read_text())
        assert len(records) == 3
        vec = np.array(records[1]["vector_re"]) + 1j * np.array(records[1]["vector_im"])
        assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)


class TestLimitingCommand:
    def test_cycle_k8_values(self, capsys):
        code, out, _ = run_cli(
            ["limiting", "--cycle", "--K", "8", "--start", "1"], capsys
        )
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "j,m,vertex_type,pi"
        values = {int(r[0]): float(r[3]) for r in rows}
        assert values[1] == pytest.approx(0.21875, abs=1e-12)
        assert values[5] == pytest.approx(0.21875, abs=1e-12)  # antipode of 1
        assert values[2] == pytest.approx(0.09375, abs=1e-12)
        assert sum(values.values()) == pytest.approx(1.0, abs=1e-9)

    def test_comb1_closed_form_deviation(self, capsys):
        code, out, _ = run_cli(
            ["limiting", "--comb-d", "1", "--K", "21", "--start", "5,base",
             "--closed-form"], capsys
        )
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "j,m,vertex_type,pi,pi_analytic"
        footer = [l for l in out.strip().split("\n") if l.startswith("#")]
        assert len(footer) == 1
        deviation = float(footer[0].split("=")[1])
        assert deviation <= 1e-9

    def test_closed_form_rejected_off_comb1(self, capsys):
        code, _, err = run_cli(
            ["limiting", "--cycle", "--K", "8", "--start", "0", "--closed-form"],
            capsys,
        )
        assert code == 1
        assert "comb-d 1" in err

    def test_tooth_start(self, capsys):
        code, out, _ = run_cli(
            ["limiting", "--comb-d", "1", "--K", "9", "--start", "2,tooth"], capsys
        )
        assert code == 0
        rows, _ = csv_rows(out)
        assert sum(float(r[3]) for r in rows) == pytest.approx(1.0, abs=1e-9)

    def test_bad_start(self, capsys):
        code, _, err = run_cli(
            ["limiting", "--cycle", "--K", "8", "--start", "9"], capsys
        )
        assert code == 1
        assert "start pearl" in err


class TestMixCommand:
    def test_bound_dominates_and_reports_tmix(self, capsys):
        code, out, _ = run_cli(
            ["mix", "--cycle", "--K", "16", "--start", "0", "--eps", "0.1",
             "--T-hi", "1e3"], capsys
        )
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "T,tv_distance,tv_bound"
        for r in rows:
            assert float(r[2]) >= float(r[1]) - 1e-12
        footer = out.strip().split("\n")[-1]
        assert footer.startswith("# T_mix(eps=0.1) = ")

    def test_eps_two_first_grid_point(self, capsys):
        code, out, _ = run_cli(
            ["mix", "--cycle", "--K", "8", "--start", "0", "--eps", "2",
             "--T-hi", "100"], capsys
        )
        assert code == 0
        assert "# T_mix(eps=2) = 1" in out

    def test_bound_curve_column(self, capsys):
        c = (math.sqrt(2) - 1) / math.sqrt(2)
        code, out, _ = run_cli(
            ["mix", "--comb-d", "1", "--K", "16", "--start", "0,base",
             "--eps", "0.1", "--T-hi", "1e3", "--cos-bound-c", str(c)], capsys
        )
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "T,tv_distance,tv_bound,mixing_bound"
        t0, curve0 = float(rows[0][0]), float(rows[0][3])
        expected = 16 / t0 * math.log(8.0) ** 2 / (8 * c)
        assert curve0 == pytest.approx(expected, rel=1e-12)


class TestGapScanCommand:
    def test_cycle_slope(self, capsys):
        code, out, _ = run_cli(
            ["gap-scan", "--d", "0", "--K", "16,32,64,128"], capsys
        )
        assert code == 0
        footer = [l for l in out.strip().split("\n") if l.startswith("#")]
        slope = float(footer[0].split()[-1])
        assert abs(slope + 2.0) < 0.05

    def test_range_expansion_log(self, capsys):
        code, out, _ = run_cli(["gap-scan", "--d", "1", "--K", "16..64"], capsys)
        assert code == 0
        rows, _ = csv_rows(out)
        ks = [int(r[1]) for r in rows]
        assert ks[0] == 16 and ks[-1] == 64
        assert len(ks) >= 3

    def test_single_record_smoke(self, capsys):
        code, out, _ = run_cli(["gap-scan", "--d", "15", "--K", "8"], capsys)
        assert code == 0
        rows, header = csv_rows(out)
        assert header == "d,K,min_gap"
        assert len(rows) == 1
        assert float(rows[0][2]) > 0


class TestOracleCheckCommand:
    @pytest.mark.parametrize(
        "source", [["--comb-d", "3", "--K", "5"], ["--cycle", "--K", "9"],
                   ["--comb-d", "2", "--K", "6"]]
    )
    def test_all_checks_pass(self, source, capsys):
        code, out, _ = run_cli(["oracle-check"] + source, capsys)
        assert code == 0
        report = json.loads(out)
        assert report["pass"]
        assert report["checks"]["spectrum_match"]["max_deviation"] <= 1e-9
        if "--cycle" in source:
            assert "limiting_closed_form" in report["checks"]

    def test_cycle_k9_closed_form_check_present(self, capsys):
        code, out, _ = run_cli(["oracle-check", "--cycle", "--K", "9"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["checks"]["limiting_closed_form"]["pass"]


class TestDeterminism:
    def test_byte_identical_across_runs_and_threads(self, tmp_path):
        """Same config, repeated runs and 1 vs 4 threads: identical bytes."""
        env = dict(os.environ)
        outputs = []
        for threads, name in ((None, "a.csv"), (None, "b.csv"), (4, "c.csv")):
            path = tmp_path / name
            args = [
                sys.executable, "-m", "necklace_walks.cli",
                "limiting", "--comb-d", "2", "--K", "12", "--start", "3,base",
                "--output", str(path),
            ]
            if threads is not None:
                args += ["--threads", str(threads)]
            proc = subprocess.run(args, env=env, capture_output=True)
            assert proc.returncode == 0, proc.stderr
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_env_var_thread_count(self, tmp_path):
        env = dict(os.environ)
        env["NECKLACE_WALKS_THREADS"] = "3"
        path = tmp_path / "env.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "necklace_walks.cli", "spectrum",
             "--comb-d", "1", "--K", "8", "--output", str(path)],
            env=env, capture_output=True,
        )
        assert proc.returncode == 0, proc.stderr
        reference = subprocess.run(
            [sys.executable, "-m", "necklace_walks.cli", "spectrum",
             "--comb-d", "1", "--K", "8"],
            capture_output=True,
        )
        assert path.read_bytes() == reference.stdout


class TestExitCodes:
    def test_config_error_is_one(self, capsys):
        code, _, _ = run_cli(["spectrum", "--cycle", "--K", "2"], capsys)
        assert code == 1

    def test_io_error_is_two(self, capsys):
        code, _, err = run_cli(
            ["spectrum", "--cycle", "--K", "4", "--output",
             "/nonexistent-dir/out.csv"], capsys
        )
        assert code == 2
        assert "I/O error" in err

    def test_fifteen_significant_digits(self, capsys):
        _, out, _ = run_cli(["spectrum", "--comb-d", "1", "--K", "3"], capsys)
        rows, _ = csv_rows(out)
        lam = dict(((int(r[0]), int(r[1])), r[2]) for r in rows)[(0, 1)]
        assert lam == f"{1 + math.sqrt(2):.15g}"
