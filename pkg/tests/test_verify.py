import json

import numpy as np
import pytest

from websep.catalog import build_catalog, load_catalog, raw_variant
from websep.catalog.core import build_chart
from websep.verify import (
    Tolerances,
    report_table,
    summary_to_json_str,
    verify_all,
    verify_chart,
)


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


class TestVerifyChart:
    def test_h1_passes(self, catalog):
        rep = verify_chart("H-1", 0, samples=100, catalog=catalog)
        assert rep.passed
        assert rep.residuals["embedding"] < 1e-9
        assert rep.residuals["off_diagonal"] < 1e-9
        assert not rep.errata_applied

    def test_ds2_raw_fails_corrected_passes(self, catalog):
        entry = catalog.get("dS-2")
        raw = raw_variant(entry.charts[0])
        rep_raw = verify_chart("dS-2", 0, samples=50, catalog=catalog, chart=raw)
        assert not rep_raw.passed
        assert rep_raw.residuals["embedding"] > 1e-2  # order-one failure
        rep_fix = verify_chart("dS-2", 0, samples=50, catalog=catalog)
        assert rep_fix.passed
        assert rep_fix.errata_applied

    def test_h19_roundtrip(self, catalog):
        rep = verify_chart("H-19", 0, samples=100, catalog=catalog)
        assert rep.passed
        assert rep.residuals["roundtrip"] < 1e-8
        assert "roundtrip" in rep.criteria

    def test_determinism(self, catalog):
        a = verify_chart("H-7", 0, samples=40, seed=5, catalog=catalog)
        b = verify_chart("H-7", 0, samples=40, seed=5, catalog=catalog)
        assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(
            b.to_json(), sort_keys=True
        )
        c = verify_chart("H-7", 0, samples=40, seed=6, catalog=catalog)
        assert a.residuals != c.residuals

    def test_negative_control_sign_flip(self, catalog):
        # flipping one sign in the chart map must trip at least one criterion
        entry = catalog.get("H-5")
        chart = entry.charts[0]
        spec = {
            "coords": chart.coords,
            "ranges": [(r.name, r.lo_src, r.hi_src) for r in chart.ranges],
            "map": [
                (t, src.replace("cosh(u)*cosh(v)", "cosh(u)*sinh(v)") if t == "t" else src)
                for t, src in chart.target_srcs
            ],
            "metric": list(chart.metric_srcs),
            "region": chart.region_src,
        }
        tampered = build_chart(chart.web_id, chart.space, chart.index, spec)
        rep = verify_chart("H-5", 0, samples=30, catalog=catalog, chart=tampered)
        assert not rep.passed

    def test_tolerance_overrides(self, catalog):
        strict = Tolerances.with_overrides({"embedding": 1e-30})
        rep = verify_chart("H-1", 0, samples=20, tolerances=strict, catalog=catalog)
        assert not rep.passed
        assert not rep.criteria["embedding"]


class TestVerifyAll:
    def test_h2_space(self, catalog):
        summary = verify_all("H2", samples=40, catalog=catalog)
        assert summary.passed
        assert sum(summary.web_pass.values()) == 9

    def test_report_table_and_json(self, catalog):
        summary = verify_all("H2", samples=20, catalog=catalog)
        table = report_table(summary)
        assert "H2-9[0]" in table
        assert "9/9 webs pass" in table
        payload = json.loads(summary_to_json_str(summary))
        assert payload["webs_total"] == 9
        assert payload["passed"] is True

    def test_summary_deterministic(self, catalog):
        s1 = summary_to_json_str(verify_all("H2", samples=15, seed=3, catalog=catalog))
        s2 = summary_to_json_str(verify_all("H2", samples=15, seed=3, catalog=catalog))
        assert s1 == s2

    def test_modulus_sweep(self, catalog):
        summary = verify_all("H2", samples=20, catalog=catalog, sweep=(0.3, 0.9))
        assert summary.passed
