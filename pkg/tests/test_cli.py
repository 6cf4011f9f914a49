import json

import numpy as np
import pytest

from levygof.cli import (EXIT_DATA, EXIT_ESTIMATION, EXIT_OK, EXIT_USAGE,
                         main, read_observations)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


class TestSample:
    def test_deterministic(self, tmp_path, capsys):
        f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
        for f in (f1, f2):
            code, _, _ = run(capsys, "--out", str(f), "sample", "--dist", "levy",
                             "--c", "2", "--n", "5", "--seed", "7")
            assert code == EXIT_OK
        assert f1.read_text() == f2.read_text()

    def test_pareto_support(self, capsys):
        code, out, _ = run(capsys, "sample", "--dist", "pareto", "--params",
                           "0.75,1.0", "--n", "100", "--seed", "1")
        assert code == EXIT_OK
        assert min(float(v) for v in out.split()) >= 0.75

    def test_missing_params(self, capsys):
        code, _, err = run(capsys, "sample", "--dist", "gamma", "--n", "5", "--seed", "1")
        assert code == EXIT_USAGE

    def test_levy_median(self, capsys):
        code, out, _ = run(capsys, "sample", "--dist", "levy", "--c", "1",
                           "--n", "100000", "--seed", "3")
        vals = np.array([float(v) for v in out.split()])
        assert np.median(vals) == pytest.approx(2.198, rel=0.02)


class TestEstimate:
    def test_mle_constant(self, tmp_path, capsys):
        f = tmp_path / "d.txt"
        f.write_text("4.0\n# a comment\n4.0\n\n4.0\n")
        code, out, _ = run(capsys, "estimate", "--method", "mle", "--input", str(f))
        assert code == EXIT_OK
        assert records(out)[0]["estimate"] == pytest.approx(4.0)

    def test_round_trip_with_sample(self, tmp_path, capsys):
        f = tmp_path / "draws.txt"
        run(capsys, "--out", str(f), "sample", "--dist", "levy", "--c", "2",
            "--n", "200000", "--seed", "9")
        code, out, _ = run(capsys, "estimate", "--method", "qcm", "--split",
                           "0.02,0.48", "--input", str(f))
        assert code == EXIT_OK
        assert records(out)[0]["estimate"] == pytest.approx(2.0, abs=0.05)

    def test_estimation_error_exit(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("1.0\n-3.0\n2.0\n")
        code, _, err = run(capsys, "estimate", "--method", "mle", "--input", str(f))
        assert code == EXIT_ESTIMATION
        assert "positive" in err

    def test_parse_error_names_line(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("1.0\nhello\n")
        code, _, err = run(capsys, "estimate", "--method", "mle", "--input", str(f))
        assert code == EXIT_DATA
        assert ":2:" in err

    def test_missing_input(self, capsys):
        code, _, _ = run(capsys, "estimate", "--method", "mle")
        assert code == EXIT_USAGE

    def test_csv_column(self, tmp_path):
        f = tmp_path / "d.csv"
        f.write_text("a,1.5\nb,2.5\n")
        vals = read_observations(str(f), column=1)
        assert np.array_equal(vals, [1.5, 2.5])


class TestTest:
    def test_single_stat_on_fixture(self, capsys):
        code, out, _ = run(capsys, "test", "--stat", "vn", "--fixture", "vessels",
                           "--replicates", "1000", "--seed", "11")
        assert code == EXIT_OK
        rec = records(out)[0]
        assert rec["stat"] == "vn"
        assert rec["value"] == pytest.approx(1.233, abs=0.001)
        assert 0.0 < rec["p_value"] <= 1.0
        assert isinstance(rec["reject"], bool)

    def test_all_battery(self, capsys):
        code, out, _ = run(capsys, "test", "--all", "--fixture", "rainfall",
                           "--replicates", "500", "--seed", "1")
        assert code == EXIT_OK
        kinds = [r["stat"] for r in records(out)]
        assert kinds == ["vn", "tn", "on", "deltan", "ran"]

    def test_cn_location_invariance_via_cli(self, tmp_path, capsys):
        rng = np.random.default_rng(0)
        data = rng.gamma(2.0, 1.0, size=40)
        f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
        f1.write_text("\n".join(map(str, data)))
        f2.write_text("\n".join(str(v + 1000.0) for v in data))
        vals = []
        for f in (f1, f2):
            _, out, _ = run(capsys, "test", "--stat", "cn", "--input", str(f),
                            "--replicates", "200", "--seed", "4")
            vals.append(records(out)[0]["value"])
        assert vals[0] == pytest.approx(vals[1], rel=1e-9)

    def test_requires_stat_or_all(self, capsys):
        code, _, _ = run(capsys, "test", "--fixture", "vessels")
        assert code == EXIT_USAGE


class TestOtherCommands:
    def test_calibrate_grid(self, capsys):
        code, out, _ = run(capsys, "calibrate", "--stat", "vn", "--n-grid", "20,30",
                           "--replicates", "500", "--seed", "2")
        assert code == EXIT_OK
        recs = records(out)
        assert [r["n"] for r in recs] == [20, 30]
        assert all(r["lower"] < r["upper"] for r in recs)

    def test_power_record(self, capsys):
        code, out, _ = run(capsys, "power", "--stat", "vn", "--alt", "lognormal:0,1",
                           "--n", "30", "--replicates", "500", "--seed", "3")
        assert code == EXIT_OK
        rec = records(out)[0]
        assert 0.0 <= rec["power"] <= 1.0
        assert rec["alt"] == "lognormal(0,1)"

    def test_diagnose_record(self, capsys):
        code, out, _ = run(capsys, "diagnose", "--stat", "tn", "--n", "50",
                           "--replicates", "1000", "--bins", "20", "--seed", "6")
        assert code == EXIT_OK
        rec = records(out)[0]
        assert sum(rec["counts"]) == 1000
        assert len(rec["bin_edges"]) == 21

    def test_ppplot_vessels_near_diagonal(self, capsys):
        code, out, _ = run(capsys, "ppplot", "--fixture", "vessels")
        assert code == EXIT_OK
        recs = records(out)
        dev = max(abs(r["empirical"] - r["fitted"]) for r in recs)
        assert dev < 0.2

    def test_ppplot_rainfall_worse_than_vessels(self, capsys):
        devs = {}
        for name in ("vessels", "rainfall"):
            _, out, _ = run(capsys, "ppplot", "--fixture", name)
            devs[name] = max(abs(r["empirical"] - r["fitted"]) for r in records(out))
        assert devs["rainfall"] > devs["vessels"]

    def test_ppplot_null_self_consistency(self, tmp_path, capsys):
        f = tmp_path / "levy.txt"
        run(capsys, "--out", str(f), "sample", "--dist", "levy", "--n", "100000",
            "--seed", "8")
        _, out, _ = run(capsys, "ppplot", "--input", str(f))
        dev = max(abs(r["empirical"] - r["fitted"]) for r in records(out))
        assert dev < 0.01

    def test_table_mode(self, capsys):
        code, out, _ = run(capsys, "--table", "estimate", "--method", "mle",
                           "--fixture", "rainfall")
        assert code == EXIT_OK
        assert "estimate" in out.splitlines()[0]

    def test_usage_exit_code(self, capsys):
        assert main(["no-such-command"]) == EXIT_USAGE
