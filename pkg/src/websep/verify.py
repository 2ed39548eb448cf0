"""Per-chart certification and whole-catalog verification.

Every criterion is evaluated on seeded interior samples, so identical seed
and configuration reproduce identical reports. The residuals per chart:

- embedding: |<p, p> - 1/kappa| at mapped points
- metric match: stated diagonal vs the exact (dual-number) induced metric,
  relative; off-diagonals relative to the metric scale (exact and FD paths)
- signature: Riemannian (H^3, H^2) or exactly one negative entry (dS_3)
- killing / concircular: finite-difference residuals of the characteristic
  Killing tensor and of the restricted tensor, in chart coordinates
- conserved: drift of K(gamma', gamma') along closed-form geodesics
- ict roundtrip: eigenfunctions of the restricted tensor at chart_map(q)
  against q (irreducible-CT webs only)
"""

from __future__ import annotations

import json
import zlib
from dataclasses import dataclass, field, asdict

import numpy as np

from .catalog import (
    Catalog,
    ambient_from_spec,
    cartesian_realization,
    load_catalog,
    raw_variant,
)
from .catalog.core import (
    SPACES,
    Chart,
    WebEntry,
    ambient_space,
    chart_jacobian,
    chart_map,
    chart_metric,
    ict_ambient_operator,
    kappa_of,
    region_holds,
    sample_box,
)
from .concircular import restrict_ct
from .errors import CatalogError, WebsepError
from .geometry import (
    christoffels_fd,
    concircular_residual,
    hyperquadric_residual,
    induced_metric_fd,
    killing_residual,
)
from .pseudo_euclidean import SelfAdjointOperator

__all__ = ["Tolerances", "ChartReport", "SpaceSummary", "verify_chart", "verify_all"]

DEFAULT_SAMPLES = 100
RESIDUAL_SUBSET = 20
GEODESICS = 10


@dataclass(frozen=True)
class Tolerances:
    embedding: float = 1e-9
    off_diagonal: float = 1e-9  # exact-derivative path, relative to metric scale
    off_diagonal_fd: float = 1e-6
    metric_match: float = 1e-6  # relative, diagonal entries
    killing: float = 1e-5
    concircular: float = 1e-5
    conserved: float = 1e-8
    roundtrip: float = 1e-8
    max_excluded: float = 0.10

    @classmethod
    def with_overrides(cls, overrides: dict | None) -> "Tolerances":
        return cls(**overrides) if overrides else cls()


@dataclass
class ChartReport:
    web_id: str
    chart_index: int
    samples: int
    seed: int
    errata_applied: bool
    excluded: int = 0
    residuals: dict = field(default_factory=dict)
    signature_ok: bool = True
    region_ok: bool = True
    criteria: dict = field(default_factory=dict)
    passed: bool = False

    def to_json(self) -> dict:
        out = asdict(self)
        out["residuals"] = {k: float(v) for k, v in self.residuals.items()}
        out["criteria"] = {k: bool(v) for k, v in self.criteria.items()}
        out["passed"] = bool(self.passed)
        return out


@dataclass
class SpaceSummary:
    space: str
    samples: int
    seed: int
    reports: list
    web_pass: dict
    passed: bool
    failures: list

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "samples": self.samples,
            "seed": self.seed,
            "webs_total": len(self.web_pass),
            "webs_passed": sum(self.web_pass.values()),
            "passed": self.passed,
            "failures": self.failures,
            "web_pass": self.web_pass,
            "charts": [r.to_json() for r in self.reports],
        }


def _chart_rng(seed: int, web_id: str, index: int) -> np.random.Generator:
    tag = zlib.crc32(f"{web_id}:{index}".encode())
    return np.random.default_rng([seed, tag])


def entry_ambient_operator(entry: WebEntry, params: dict) -> SelfAdjointOperator:
    """The web's parameter tensor in the chart's pseudo-Cartesian frame."""
    if entry.ict_spec is not None:
        return ict_ambient_operator(entry, params)
    if entry.wp_tensor is not None:
        return ambient_from_spec(entry.wp_tensor, params, entry.space)
    return cartesian_realization(entry.form())


def _geodesic_pair(p, v, w2: float, s: float):
    """Closed-form geodesic point and velocity for omega^2 = kappa <v, v>."""
    if w2 > 0:
        return np.cos(s) * p + np.sin(s) * v, -np.sin(s) * p + np.cos(s) * v
    if w2 < 0:
        return np.cosh(s) * p + np.sinh(s) * v, np.sinh(s) * p + np.cosh(s) * v
    return p + s * v, v


def verify_chart(
    web_id: str,
    chart_index: int = 0,
    samples: int = DEFAULT_SAMPLES,
    tolerances: Tolerances | None = None,
    seed: int = 0,
    catalog: Catalog | None = None,
    params: dict | None = None,
    chart: Chart | None = None,
) -> ChartReport:
    """Certify one chart; ``chart`` may override the stored one (e.g. the
    printed pre-errata variant from :func:`websep.catalog.raw_variant`)."""
    catalog = catalog or load_catalog()
    entry = catalog.get(web_id)
    if not 0 <= chart_index < len(entry.charts):
        raise CatalogError(f"{web_id} has charts 0..{len(entry.charts) - 1}")
    chart = chart or entry.charts[chart_index]
    tol = tolerances or Tolerances()
    values = entry.resolve_params(params)
    space = ambient_space(entry.space)
    kap = kappa_of(entry.space)
    g_amb = space.g
    riemannian = entry.space in ("H3", "H2")
    m = len(chart.coords)

    rng = _chart_rng(seed, entry.id, chart.index)
    report = ChartReport(
        web_id=entry.id,
        chart_index=chart.index,
        samples=samples,
        seed=seed,
        errata_applied=chart.errata_applied,
    )

    res = {
        "embedding": 0.0,
        "off_diagonal": 0.0,
        "off_diagonal_fd": 0.0,
        "metric_match": 0.0,
        "metric_match_fd": 0.0,
        "killing": 0.0,
        "concircular": 0.0,
        "conserved": 0.0,
        "roundtrip": 0.0,
    }
    points: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
    excluded = 0
    for _ in range(samples):
        q = sample_box(chart, values, rng)
        try:
            p, J = chart_jacobian(chart, q, values)
            stated = chart_metric(chart, q, values, validate=False)
        except WebsepError:
            excluded += 1
            continue
        points.append((q, p, J))
        res["embedding"] = max(res["embedding"], abs(hyperquadric_residual(p, kap, space)))
        G = J.T @ g_amb @ J
        scale = max(1.0, float(np.abs(np.diag(G)).max()))
        off = np.abs(G - np.diag(np.diag(G))).max() / scale
        res["off_diagonal"] = max(res["off_diagonal"], float(off))
        for i in range(m):
            rel = abs(G[i, i] - stated[i]) / max(abs(stated[i]), 1e-10)
            res["metric_match"] = max(res["metric_match"], rel)
        negs = int(np.sum(np.linalg.eigvalsh(G) < 0))
        if negs != (0 if riemannian else 1):
            report.signature_ok = False
        if not region_holds(chart, p, values):
            report.region_ok = False
    report.excluded = excluded

    subset = points[:RESIDUAL_SUBSET]

    # independent finite-difference path for the induced metric
    def map_fn(qq):
        return chart_map(chart, qq, values, validate=False)

    for q, p, J in subset:
        G = induced_metric_fd(map_fn, q, space)
        stated = chart_metric(chart, q, values, validate=False)
        scale = max(1.0, float(np.abs(np.diag(G)).max()))
        res["off_diagonal_fd"] = max(
            res["off_diagonal_fd"],
            float(np.abs(G - np.diag(np.diag(G))).max() / scale),
        )
        stated_scale = max(float(np.abs(stated).max()), 1e-10)
        for i in range(m):
            # normwise comparison: the FD noise floor is set by the largest
            # metric entry at the point, not by each entry separately
            denom = max(abs(stated[i]), stated_scale)
            rel = abs(G[i, i] - stated[i]) / denom
            res["metric_match_fd"] = max(res["metric_match_fd"], rel)

    # killing / concircular residuals of the pulled-back tensor fields
    A = entry_ambient_operator(entry, values)

    def metric_fn(qq):
        return np.diag(chart_metric(chart, qq, values, validate=False))

    def L_cov(qq):
        _, J = chart_jacobian(chart, qq, values)
        return J.T @ (g_amb @ A.M) @ J

    def K_cov(qq):
        _, J = chart_jacobian(chart, qq, values)
        G = J.T @ g_amb @ J
        L = J.T @ (g_amb @ A.M) @ J
        return L - float(np.trace(np.linalg.solve(G, L))) * G

    for q, p, J in subset:
        try:
            res["killing"] = max(
                res["killing"], killing_residual(K_cov, metric_fn, q, normalized=True)
            )
            res["concircular"] = max(
                res["concircular"],
                concircular_residual(L_cov, metric_fn, q, normalized=True),
            )
        except WebsepError:
            excluded += 1

    # conserved quantity along closed-form geodesics, launched from the most
    # moderate sample points (extreme coordinates amplify the float error of
    # the initial conditions through the cancelling invariant terms)
    moderate = sorted(points, key=lambda item: float(np.abs(item[1]).max()))
    for q, p, J in moderate[:GEODESICS]:
        v = J @ rng.normal(size=m)
        vv = float(v @ g_amb @ v)
        if abs(vv) < 1e-8:
            continue
        v = v / np.sqrt(abs(vv))
        v = v - kap * p * float(p @ g_amb @ v)  # exact tangency
        vv = float(v @ g_amb @ v)
        v = v / np.sqrt(abs(vv))
        w2 = kap * round(float(v @ g_amb @ v))
        vals, term_scale = [], 1.0
        for s in np.linspace(0.0, 1.0, 10):
            gp, gv = _geodesic_pair(p, v, w2, s)
            trace_l = _restricted_trace(A.M, g_amb, gp, kap)
            t1 = float(gv @ g_amb @ A.M @ gv)
            t2 = trace_l * float(gv @ g_amb @ gv)
            vals.append(t1 - t2)
            term_scale = max(term_scale, abs(t1), abs(t2))
        # scale-free drift: the invariant is a difference of terms of size
        # term_scale, which bounds the attainable float accuracy
        drift = float(np.max(vals) - np.min(vals)) / term_scale
        res["conserved"] = max(res["conserved"], drift)

    # eigenfunction round-trip (irreducible-CT webs)
    if entry.ict_spec is not None:
        flips = [1.0]
        if entry.ict_spec.get("complex_pair"):
            # the printed t^2+-x^2 combinations lose sign(t x); allow the
            # conjugate representative
            flips = [1.0, -1.0]
        for q, p, J in subset:
            best = np.inf
            for flip in flips:
                pf = p.copy()
                pf[1] *= flip
                vals = restrict_ct(A, kap, pf, tol=1e-8).eigenvalues()
                best = min(best, float(np.abs(np.sort(vals) - np.sort(q)).max()))
            res["roundtrip"] = max(res["roundtrip"], best)

    report.residuals = res
    crit = {
        "embedding": res["embedding"] < tol.embedding,
        "off_diagonal": res["off_diagonal"] < tol.off_diagonal,
        "off_diagonal_fd": res["off_diagonal_fd"] < tol.off_diagonal_fd,
        "metric_match": res["metric_match"] < tol.metric_match,
        "metric_match_fd": res["metric_match_fd"] < tol.metric_match,
        "signature": report.signature_ok,
        "region": report.region_ok,
        "killing": res["killing"] < tol.killing,
        "concircular": res["concircular"] < tol.concircular,
        "conserved": res["conserved"] < tol.conserved,
        "exclusions": excluded <= tol.max_excluded * samples,
    }
    if entry.ict_spec is not None:
        crit["roundtrip"] = res["roundtrip"] < tol.roundtrip
    report.criteria = crit
    report.passed = all(crit.values())
    return report


def _restricted_trace(M: np.ndarray, g: np.ndarray, p: np.ndarray, kap: int) -> float:
    proj = np.eye(len(p)) - kap * np.outer(p, g @ p)
    return float(np.trace(proj @ M @ proj))


def verify_all(
    space: str,
    samples: int = DEFAULT_SAMPLES,
    tolerances: Tolerances | None = None,
    seed: int = 0,
    catalog: Catalog | None = None,
    sweep: tuple[float, ...] = (),
) -> SpaceSummary:
    """Verify every chart of every web of a space.

    ``sweep`` re-runs each modulus-constrained chart at the given values of
    the modulus a (reduced sample count), on top of the default parameters.
    """
    catalog = catalog or load_catalog()
    tol = tolerances or Tolerances()
    reports: list[ChartReport] = []
    web_pass: dict[str, bool] = {}
    failures: list[str] = []
    for entry in catalog.webs(space):
        ok = True
        for chart in entry.charts:
            rep = verify_chart(
                entry.id,
                chart.index,
                samples=samples,
                tolerances=tol,
                seed=seed,
                catalog=catalog,
            )
            reports.append(rep)
            if not rep.passed:
                ok = False
                worst = max(rep.residuals, key=lambda k: rep.residuals[k])
                bad = [k for k, v in rep.criteria.items() if not v]
                failures.append(
                    f"{entry.id}[{chart.index}]: {','.join(bad)} "
                    f"(worst {worst}={rep.residuals[worst]:.3e})"
                )
            if sweep and entry.constraint == "a2b2":
                for a in sweep:
                    srep = verify_chart(
                        entry.id,
                        chart.index,
                        samples=max(10, samples // 5),
                        tolerances=tol,
                        seed=seed,
                        catalog=catalog,
                        params={"a": a},
                    )
                    if not srep.passed:
                        ok = False
                        failures.append(f"{entry.id}[{chart.index}] sweep a={a}")
        web_pass[entry.id] = ok
    return SpaceSummary(
        space=space,
        samples=samples,
        seed=seed,
        reports=reports,
        web_pass=web_pass,
        passed=all(web_pass.values()),
        failures=failures,
    )


def report_table(summary: SpaceSummary) -> str:
    """Human-readable one-row-per-chart table."""
    cols = [
        "chart",
        "embed",
        "offdiag",
        "metric",
        "killing",
        "concirc",
        "conserv",
        "roundtrip",
        "status",
    ]
    lines = [" ".join(f"{c:>10}" for c in cols)]
    for rep in summary.reports:
        r = rep.residuals
        row = [
            f"{rep.web_id}[{rep.chart_index}]",
            f"{r['embedding']:.1e}",
            f"{r['off_diagonal']:.1e}",
            f"{r['metric_match']:.1e}",
            f"{r['killing']:.1e}",
            f"{r['concircular']:.1e}",
            f"{r['conserved']:.1e}",
            f"{r['roundtrip']:.1e}" if "roundtrip" in rep.criteria else "-",
            "pass" if rep.passed else "FAIL",
        ]
        lines.append(" ".join(f"{c:>10}" for c in row))
    lines.append(
        f"{summary.space}: {sum(summary.web_pass.values())}/{len(summary.web_pass)} webs pass"
    )
    return "\n".join(lines)


def summary_to_json_str(summary: SpaceSummary) -> str:
    return json.dumps(summary.to_json(), indent=1, sort_keys=True)
