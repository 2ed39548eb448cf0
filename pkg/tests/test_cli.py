import json
import math

import pytest

from websep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestList:
    def test_h3_table(self, capsys):
        code, out, _ = run(capsys, "list", "H3")
        assert code == 0
        assert "34 webs" in out

    def test_h2_json(self, capsys):
        code, out, _ = run(capsys, "list", "H2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["schema"] == "websep/1"
        assert len(data["webs"]) == 9
        assert all("tensor" in w for w in data["webs"])

    def test_reducible_only(self, capsys):
        code, out, _ = run(capsys, "list", "dS3", "--reducible-only", "--json")
        data = json.loads(out)
        sections = {w["section"] for w in data["webs"]}
        assert sections == {
            "4.1", "4.2", "4.3", "4.4", "4.5", "4.6", "4.7", "4.8", "4.9",
            "4.13", "4.14", "4.15", "4.16", "4.17", "4.21",
        }


class TestDescribe:
    def test_h7_contains_combination_lines(self, capsys):
        code, out, _ = run(capsys, "describe", "H-7")
        assert code == 0
        assert "t^2+x^2" in out

    def test_ds9_four_charts(self, capsys):
        code, out, _ = run(capsys, "describe", "dS-9", "--json")
        data = json.loads(out)
        assert len(data["charts"]) == 4

    def test_missing_web(self, capsys):
        code, _, err = run(capsys, "describe", "H-99")
        assert code == 2
        assert "H-99" in err


class TestVerifyCommand:
    def test_single_web(self, capsys):
        code, out, _ = run(capsys, "verify", "H-19", "--samples", "50")
        assert code == 0
        assert "pass" in out

    def test_report_written(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        code, _, _ = run(
            capsys, "verify", "H-1", "--samples", "20", "--report", str(path)
        )
        assert code == 0
        data = json.loads(path.read_text())
        assert data["charts"][0]["web_id"] == "H-1"

    def test_all_h2(self, capsys):
        code, out, _ = run(capsys, "verify", "--all", "H2", "--samples", "30")
        assert code == 0
        assert "9/9 webs pass" in out

    def test_tampered_catalog_fails(self, capsys, tmp_path, monkeypatch):
        from websep.catalog import catalog_to_json, load_catalog

        data = catalog_to_json(load_catalog())
        entry = next(e for e in data["spaces"]["H2"] if e["id"] == "H2-3")
        item = entry["charts"][0]["map"][0]
        assert item["src"] == "cosh(v)"
        item["src"] = "sinh(v)"
        item["tree"] = {"op": "call", "name": "sinh", "args": [{"op": "sym", "name": "v"}]}
        path = tmp_path / "tampered.json"
        path.write_text(json.dumps(data))
        monkeypatch.setenv("WEBSEP_CATALOG", str(path))
        code, out, _ = run(capsys, "verify", "--all", "H2", "--samples", "20")
        assert code == 1
        assert "embedding" in out or "FAIL" in out


class TestClassifyCommand:
    def test_classify_json(self, capsys, tmp_path):
        tensor = {
            "n": 4,
            "nu": 1,
            "basis": "cartesian",
            "matrix": [
                [0.0, 0, 0, 0],
                [0, 0.3, 0, 0],
                [0, 0, 0.7, 0],
                [0, 0, 0, 1.0],
            ],
        }
        path = tmp_path / "tensor.json"
        path.write_text(json.dumps(tensor))
        code, out, _ = run(
            capsys, "classify", "--input", str(path), "--space", "dS3", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["section"] == "4.10"
        assert data["webs"] == ["dS-19"]

    def test_non_self_adjoint_rejected(self, capsys, tmp_path):
        tensor = {
            "n": 4,
            "nu": 1,
            "basis": "cartesian",
            "matrix": [
                [0.0, 1, 0, 0],
                [1, 0.3, 0, 0],
                [0, 0, 0.7, 0],
                [0, 0, 0, 1.0],
            ],
        }
        path = tmp_path / "tensor.json"
        path.write_text(json.dumps(tensor))
        code, _, err = run(capsys, "classify", "--input", str(path), "--space", "H3")
        assert code == 2
        assert "self-adjoint" in err


class TestChartCommand:
    def test_h1_point(self, capsys):
        code, out, _ = run(
            capsys, "chart", "H-1", "--point", f"1,{math.pi / 2},{math.pi / 2}", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["ambient"][0] == pytest.approx(math.cosh(1))
        assert abs(data["hyperquadric_residual"]) < 1e-12

    def test_param_override(self, capsys):
        code, out, _ = run(
            capsys,
            "chart",
            "H-19",
            "--point",
            "1.7,0.8,0.4",
            "--params",
            "a=0.25",
            "--params",
            "b=0.5",
            "--json",
        )
        assert code == 0
        data = json.loads(out)
        for got, stated in zip(data["induced_metric_exact"], data["stated_metric"]):
            assert got == pytest.approx(stated, rel=1e-9)

    def test_out_of_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "chart", "H-19", "--point", "0.5,0.8,0.4")
        assert code == 2
