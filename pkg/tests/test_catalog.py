import json
import math

import numpy as np
import pytest

from websep.catalog import (
    ambient_from_spec,
    build_catalog,
    cartesian_realization,
    catalog_to_json,
    classify_to_web,
    default_catalog_path,
    load_catalog,
    raw_variant,
)
from websep.catalog.core import (
    ambient_space,
    chart_jacobian,
    chart_map,
    chart_metric,
    ict_ambient_operator,
    ict_chain_holds,
    kappa_of,
    region_holds,
    sample_box,
)
from websep.concircular import ict_metric, is_reducible, restrict_ct
from websep.errors import BoundaryError, CatalogError, ChartRangeError, ConstraintError
from websep.pseudo_euclidean import (
    E4_1,
    SelfAdjointOperator,
    random_isometry,
)


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


class TestCounts:
    def test_exact_counts(self, catalog):
        assert len(catalog.webs("H3")) == 34
        assert len(catalog.webs("dS3")) == 34
        assert len(catalog.webs("H2")) == 9

    def test_ids_follow_numbering(self, catalog):
        assert [e.id for e in catalog.webs("H3")][:3] == ["H-1", "H-2", "H-3"]
        assert catalog.webs("dS3")[-1].id == "dS-34"

    def test_unknown_lookups(self, catalog):
        with pytest.raises(CatalogError):
            catalog.get("H-99")
        with pytest.raises(CatalogError):
            catalog.webs("S3")


class TestChartMap:
    def test_h1_point(self, catalog):
        entry = catalog.get("H-1")
        p = chart_map(entry.charts[0], (1.0, math.pi / 2, math.pi / 2), {})
        np.testing.assert_allclose(
            p, [math.cosh(1), 0.0, math.sinh(1), 0.0], atol=1e-12
        )

    def test_ds12_point(self, catalog):
        entry = catalog.get("dS-12")
        p = chart_map(entry.charts[0], (1.0, 1e-12, 1e-12), {})
        np.testing.assert_allclose(
            p, [math.sinh(1), 0.0, 0.0, math.cosh(1)], atol=1e-9
        )

    def test_h19_signed_sum(self, catalog):
        entry = catalog.get("H-19")
        params = entry.resolve_params({"a": 0.25, "b": 0.5})
        p = chart_map(entry.charts[0], (1.7, 0.8, 0.4), params)
        assert np.all(p > 0)
        g = ambient_space("H3").g
        assert p @ g @ p == pytest.approx(-1.0, abs=1e-12)

    def test_out_of_range(self, catalog):
        entry = catalog.get("H-19")
        with pytest.raises(ChartRangeError):
            chart_map(entry.charts[0], (0.9, 0.8, 0.4), entry.resolve_params())

    def test_constraint_violation(self, catalog):
        entry = catalog.get("H-2")
        with pytest.raises(ConstraintError):
            entry.resolve_params({"a": 1.4})


class TestChartMetric:
    def test_h5(self, catalog):
        entry = catalog.get("H-5")
        u, v, w = 0.7, 1.1, 0.4
        got = chart_metric(entry.charts[0], (u, v, w), {})
        np.testing.assert_allclose(
            got,
            [1.0, math.cosh(u) ** 2, math.cosh(u) ** 2 * math.sinh(v) ** 2],
            rtol=1e-14,
        )

    def test_ds1_lorentzian(self, catalog):
        entry = catalog.get("dS-1")
        u, v, w = 0.3, 1.0, 2.0
        got = chart_metric(entry.charts[0], (u, v, w), {})
        np.testing.assert_allclose(
            got,
            [-1.0, math.cosh(u) ** 2, math.cosh(u) ** 2 * math.sin(v) ** 2],
            rtol=1e-14,
        )

    def test_h30_matches_ict_oracle(self, catalog):
        entry = catalog.get("H-30")
        params = entry.resolve_params()
        data = entry.ict_data()
        q = (1.5, 0.7, 0.2)
        stated = chart_metric(entry.charts[0], q, params)
        oracle = ict_metric(q, data.eigenvalues, -1)
        np.testing.assert_allclose(stated, oracle, rtol=1e-12)


class TestReducibleFlags:
    def test_flags_match_is_reducible(self, catalog):
        for space in ("H3", "dS3", "H2"):
            for entry in catalog.webs(space):
                assert entry.reducible == is_reducible(entry.realize()), entry.id

    def test_known_values(self, catalog):
        assert catalog.get("H-1").reducible
        assert not catalog.get("H-19").reducible
        assert catalog.get("H-33").reducible
        assert not catalog.get("dS-34").reducible


class TestClassification:
    def test_all_entries_roundtrip(self, catalog):
        for space in ("H3", "dS3", "H2"):
            for entry in catalog.webs(space):
                res = classify_to_web(entry.realize(), space, catalog)
                assert res.section == entry.section, entry.id
                assert entry.id in res.web_ids, entry.id

    def test_case_4_1_example(self, catalog):
        op = SelfAdjointOperator(np.diag([1.0, 0.0, 0.0, 0.0]), E4_1)
        res = classify_to_web(op, "H3", catalog)
        assert res.section == "4.1"
        assert res.web_ids == ("H-1", "H-2")

    def test_case_4_10_affine(self, catalog):
        base = catalog.get("H-19")
        op = cartesian_realization(base.form({"a": 0.2, "b": 0.5}))
        shifted = op.shifted(7.0, 3.0)
        res = classify_to_web(shifted, "H3", catalog)
        assert res.section == "4.10"
        assert res.params["a"] == pytest.approx(0.2, abs=1e-9)
        assert res.params["b"] == pytest.approx(0.5, abs=1e-9)

    def test_case_4_20_header(self, catalog):
        op = cartesian_realization(catalog.get("H-32").form({"a": 0.37}))
        res = classify_to_web(op, "H3", catalog)
        assert res.section == "4.20"
        assert res.params["a"] == pytest.approx(0.37, abs=1e-9)

    def test_case_4_22_both_spaces(self, catalog):
        op = cartesian_realization(catalog.get("H-34").form())
        assert classify_to_web(op, "H3", catalog).web_ids == ("H-34",)
        assert classify_to_web(op, "dS3", catalog).web_ids == ("dS-34",)

    def test_conjugation_invariance(self, catalog):
        rng = np.random.default_rng(11)
        for wid in ("H-13", "H-21", "H-26", "H-30", "dS-20"):
            entry = catalog.get(wid)
            op = cartesian_realization(entry.form())
            for _ in range(5):
                alpha = float(rng.uniform(0.5, 3.0)) * (1 if rng.uniform() < 0.5 else -1)
                beta = float(rng.uniform(-2.0, 2.0))
                lam = random_isometry(op.space, rng)
                M = lam @ (alpha * op.M + beta * np.eye(4)) @ np.linalg.inv(lam)
                res = classify_to_web(SelfAdjointOperator(M, op.space), entry.space, catalog)
                assert res.section == entry.section, wid

    def test_boundary_error(self, catalog):
        op = SelfAdjointOperator(0.5 * np.eye(4), E4_1)
        with pytest.raises(BoundaryError):
            classify_to_web(op, "H3", catalog)

    def test_h2_unique_ids(self, catalog):
        for entry in catalog.webs("H2"):
            res = classify_to_web(entry.realize(), "H2", catalog)
            assert res.web_ids == (entry.id,)


def random_quadric_points(kappa, n, rng, count):
    g = np.diag([-1.0] + [1.0] * (n - 1))
    out = []
    while len(out) < count:
        p = rng.normal(size=n) * 1.5
        n2 = float(p @ g @ p)
        if n2 * kappa <= 1e-9:
            continue
        out.append(p / math.sqrt(abs(n2)))
    return out


class TestRegions:
    def test_map_lands_in_region(self, catalog):
        rng = np.random.default_rng(19)
        for space in ("H3", "dS3", "H2"):
            for entry in catalog.webs(space):
                params = entry.resolve_params()
                for chart in entry.charts:
                    for _ in range(5):
                        q = sample_box(chart, params, rng)
                        p = chart_map(chart, q, params, validate=False)
                        assert region_holds(chart, p, params), f"{entry.id}[{chart.index}]"
                        assert ict_chain_holds(entry, chart, p, params), (
                            f"{entry.id}[{chart.index}] chain"
                        )

    def test_multichart_webs_disjoint(self, catalog):
        rng = np.random.default_rng(23)
        for entry in catalog.webs("dS3"):
            if len(entry.charts) < 2:
                continue
            params = entry.resolve_params()
            count = 10_000 if entry.id == "dS-9" else 1_000
            for p in random_quadric_points(1, 4, rng, count):
                hits = [
                    c.index
                    for c in entry.charts
                    if region_holds(c, p, params)
                    and ict_chain_holds(entry, c, p, params, allow_conjugate=False)
                ]
                assert len(hits) <= 1, f"{entry.id}: {hits} at {p}"


class TestIctRoundtrip:
    def test_eigenfunctions_reproduce_coordinates(self, catalog):
        rng = np.random.default_rng(29)
        for space in ("H3", "dS3"):
            kap = kappa_of(space)
            for entry in catalog.webs(space):
                if entry.ict_spec is None:
                    continue
                params = entry.resolve_params()
                op = ict_ambient_operator(entry, params)
                flips = [1.0, -1.0] if entry.ict_spec.get("complex_pair") else [1.0]
                for chart in entry.charts:
                    for _ in range(5):
                        q = sample_box(chart, params, rng)
                        p = chart_map(chart, q, params, validate=False)
                        best = min(
                            float(
                                np.abs(
                                    np.sort(
                                        restrict_ct(
                                            op, kap, p * np.array([1, f, 1, 1]), tol=1e-8
                                        ).eigenvalues()
                                    )
                                    - np.sort(q)
                                ).max()
                            )
                            for f in flips
                        )
                        assert best < 1e-8, f"{entry.id}[{chart.index}]"


class TestSerialization:
    def test_shipped_catalog_matches_built(self, catalog):
        assert catalog_to_json(catalog) == catalog_to_json(build_catalog())

    def test_schema_header(self):
        with open(default_catalog_path()) as fh:
            data = json.load(fh)
        assert data["schema"] == "websep/1"

    def test_raw_variants_exist_for_errata(self, catalog):
        n = 0
        for space in ("H3", "dS3", "H2"):
            for entry in catalog.webs(space):
                for chart in entry.charts:
                    raw = raw_variant(chart)
                    if chart.errata_applied:
                        assert raw is not None
                        n += 1
                    else:
                        assert raw is None
        assert n >= 20  # the source tables carry that many glitches

    def test_ds2_erratum_recorded(self, catalog):
        chart = catalog.get("dS-2").charts[0]
        assert chart.errata_applied
        assert "sinh" in dict(chart.raw_target_srcs)["x"]
        assert "cosh" in dict(chart.target_srcs)["x"]


class TestWpData:
    def test_reducible_webs_carry_expectations(self, catalog):
        for space in ("H3", "dS3"):
            for entry in catalog.webs(space):
                if entry.reducible:
                    assert entry.wp is not None, entry.id
                    assert entry.wp_tensor is not None, entry.id
                else:
                    assert entry.wp is None, entry.id

    def test_wp_tensor_is_case_equivalent(self, catalog):
        for entry in catalog.webs("H3"):
            if entry.wp_tensor is None:
                continue
            op = ambient_from_spec(entry.wp_tensor, entry.resolve_params(), "H3")
            res = classify_to_web(op, "H3", catalog)
            assert res.section == entry.section, entry.id
