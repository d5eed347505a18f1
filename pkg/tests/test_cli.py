import json
import math

import pytest

from gausspage.cli import DEFAULT_SEED, main


def run_cli(args, tmp_path, name="out.csv"):
    path = tmp_path / name
    code = main(args + ["--out", str(path)])
    return code, path


def read_rows(path):
    lines = path.read_text().splitlines()
    assert lines[0] == "# gaussian-page v1"
    header = lines[1].split(",")
    return header, [line.split(",") for line in lines[2:]]


class TestPageCurve:
    def test_gaussian_exact_anchor(self, tmp_path):
        code, path = run_cli(["page-curve", "--N", "2", "--ensemble", "gaussian", "--mode", "exact"], tmp_path)
        assert code == 0
        header, rows = read_rows(path)
        value = float(rows[1][header.index("value")])
        assert abs(value - 0.5) <= 1e-12

    def test_page_exact_anchor(self, tmp_path):
        code, path = run_cli(["page-curve", "--N", "2", "--ensemble", "haar-pure", "--mode", "exact"], tmp_path)
        assert code == 0
        header, rows = read_rows(path)
        value = float(rows[1][header.index("value")])
        assert abs(value - 1.0 / 3.0) <= 1e-12

    def test_sweep_covers_half(self, tmp_path):
        code, path = run_cli(["page-curve", "--N", "8", "--mode", "exact"], tmp_path)
        _, rows = read_rows(path)
        assert [int(r[1]) for r in rows] == [0, 1, 2, 3, 4]

    def test_mc_mode(self, tmp_path):
        code, path = run_cli(
            ["page-curve", "--N", "4", "--NA", "2", "--mode", "mc", "--samples", "2000", "--seed", "9"],
            tmp_path,
        )
        assert code == 0
        header, rows = read_rows(path)
        value = float(rows[0][header.index("value")])
        assert 0.5 < value < 2 * math.log(2.0)

    def test_byte_stability(self, tmp_path):
        args = ["page-curve", "--N", "4", "--NA", "1", "--mode", "mc", "--samples", "500", "--seed", "3"]
        _, a = run_cli(args, tmp_path, "a.csv")
        _, b = run_cli(args, tmp_path, "b.csv")
        assert a.read_bytes() == b.read_bytes()

    def test_json_format(self, tmp_path):
        code, path = run_cli(
            ["page-curve", "--N", "2", "--mode", "exact", "--format", "json"], tmp_path, "out.json"
        )
        payload = json.loads(path.read_text())
        assert payload["version"] == "gaussian-page v1"
        assert payload["columns"][0] == "N"
        assert abs(float(payload["rows"][1][3]) - 0.5) <= 1e-12


class TestDensity:
    def test_uniform_density(self, tmp_path):
        code, path = run_cli(["density", "--N", "2", "--NA", "1", "--points", "11"], tmp_path)
        assert code == 0
        header, rows = read_rows(path)
        assert len(rows) == 11
        assert all(abs(float(r[1]) - 1.0) <= 1e-12 for r in rows)


class TestVariance:
    def test_columns(self, tmp_path):
        code, path = run_cli(["variance", "--N", "8", "--NA", "4", "--samples", "0"], tmp_path)
        assert code == 0
        header, rows = read_rows(path)
        finite = float(rows[0][header.index("variance_finite")])
        limit = float(rows[0][header.index("variance_limit")])
        assert abs(limit - (0.75 - math.log(2.0)) / 2.0) <= 1e-12
        assert 0.02 < finite < 0.04


class TestSampleAndDist:
    def test_sample_rows(self, tmp_path):
        code, path = run_cli(
            ["sample", "--N", "4", "--NA", "2", "--samples", "50", "--seed", "1"], tmp_path
        )
        assert code == 0
        _, rows = read_rows(path)
        assert len(rows) == 50

    def test_dist_counts(self, tmp_path):
        code, path = run_cli(
            ["dist", "--N", "4", "--NA", "2", "--samples", "400", "--bins", "8", "--seed", "1"], tmp_path
        )
        assert code == 0
        _, rows = read_rows(path)
        assert sum(int(r[2]) for r in rows) == 400


class TestErrorPaths:
    def test_invalid_combination(self, capsys):
        code = main(["page-curve", "--N", "4", "--ensemble", "hamiltonian", "--mode", "exact"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_resource_guard(self, capsys):
        code = main(["page-curve", "--N", "20", "--ensemble", "haar-pure", "--mode", "mc", "--samples", "10"])
        assert code == 3
        assert "error" in capsys.readouterr().err


class TestSeedHandling:
    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GAUSSIAN_PAGE_SEED", "777")
        _, a = run_cli(["variance", "--N", "4", "--NA", "2", "--samples", "100"], tmp_path, "a.csv")
        header, rows = read_rows(a)
        assert int(rows[0][header.index("seed")]) == 777

    def test_flag_beats_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("GAUSSIAN_PAGE_SEED", "777")
        _, a = run_cli(["variance", "--N", "4", "--NA", "2", "--samples", "100", "--seed", "5"], tmp_path, "a.csv")
        header, rows = read_rows(a)
        assert int(rows[0][header.index("seed")]) == 5

    def test_default_seed_constant(self, tmp_path):
        _, a = run_cli(["variance", "--N", "4", "--NA", "2", "--samples", "100"], tmp_path, "a.csv")
        header, rows = read_rows(a)
        assert int(rows[0][header.index("seed")]) == DEFAULT_SEED
