"""Catalog data model: webs, charts, evaluation, sampling, serialization.

A chart stores its map exactly as the source tables print it: a list of
(target, expression) pairs where a target is a pseudo-Cartesian coordinate or
one of the squared/bilinear combinations ("t+x", "t^2", "t^2+x^2", "(t+x)*y",
...). Evaluating a chart solves the target system back to (t, x, y, z),
taking the all-positive branch for squared targets (other sheets follow by
the discrete isometries x^i -> -x^i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ..concircular import ICTData, restrict_ct
from ..elliptic import complete_K
from ..errors import (
    CatalogError,
    ChartRangeError,
    ConstraintError,
    DomainError,
)
from ..expr import Dual, EvalContext, Expr, parse, parse_pred
from ..pseudo_euclidean import (
    AmbientSpace,
    MetricJordanForm,
    SelfAdjointOperator,
    SignedJordanBlock,
    realize_canonical,
)

SCHEMA = "websep/1"

SPACES = {
    "H3": {"n": 4, "kappa": -1, "coords": ("t", "x", "y", "z")},
    "dS3": {"n": 4, "kappa": 1, "coords": ("t", "x", "y", "z")},
    "H2": {"n": 3, "kappa": -1, "coords": ("t", "x", "y")},
}


def ambient_space(space: str) -> AmbientSpace:
    return AmbientSpace(SPACES[space]["n"], 1)


def kappa_of(space: str) -> int:
    return SPACES[space]["kappa"]


@dataclass(frozen=True)
class RangeSpec:
    name: str
    lo_src: str
    hi_src: str
    lo: Expr
    hi: Expr

    @classmethod
    def build(cls, name: str, lo_src: str, hi_src: str) -> "RangeSpec":
        return cls(name, lo_src, hi_src, parse(lo_src), parse(hi_src))


@dataclass(frozen=True)
class Chart:
    web_id: str
    index: int
    space: str
    coords: tuple[str, ...]
    ranges: tuple[RangeSpec, ...]  # in sampling order
    targets: tuple[tuple[str, Expr], ...]
    target_srcs: tuple[tuple[str, str], ...]
    metric: tuple[Expr, ...]  # diagonal entries, coordinate order
    metric_srcs: tuple[str, ...]
    region_src: str | None = None
    region: Expr | None = None
    raw_target_srcs: tuple[tuple[str, str], ...] | None = None
    raw_metric_srcs: tuple[str, ...] | None = None
    erratum: str | None = None
    timelike_coord: str | None = None
    branch_note: str | None = None

    @property
    def errata_applied(self) -> bool:
        return self.erratum is not None


@dataclass(frozen=True)
class WPExpectation:
    choices: tuple[str, ...]
    factors: tuple[str, ...]
    image_src: str


@dataclass(frozen=True)
class WebEntry:
    id: str
    space: str
    name: str
    section: str
    form_spec: tuple  # ((k, eps, lam_src) | ("complex", re_src, im_src), ...)
    params: Mapping[str, float]
    constraint: str | None
    charts: tuple[Chart, ...]
    ict_spec: dict | None = None
    wp: tuple[WPExpectation, ...] | None = None
    wp_tensor: dict | None = None
    reducible: bool = False
    note: str | None = None

    @property
    def kappa(self) -> int:
        return kappa_of(self.space)

    @property
    def ambient(self) -> AmbientSpace:
        return ambient_space(self.space)

    def resolve_params(self, overrides: Mapping[str, float] | None = None) -> dict:
        values = dict(self.params)
        if overrides:
            unknown = set(overrides) - set(values)
            if unknown:
                raise ConstraintError(f"{self.id} has no parameters {sorted(unknown)}")
            values.update(overrides)
        if self.constraint == "a2b2":
            # a is an elliptic modulus; the complementary b is always derived
            a = values["a"]
            if not 0.0 < a < 1.0:
                raise ConstraintError(f"{self.id}: modulus a={a} outside (0, 1)")
            values["b"] = math.sqrt(1.0 - a * a)
        elif self.constraint == "unit":
            if not 0.0 < values["a"] < 1.0:
                raise ConstraintError(f"{self.id}: needs 0 < a < 1, got {values['a']}")
        elif self.constraint == "apos":
            if not values["a"] > 0.0:
                raise ConstraintError(f"{self.id}: needs a > 0, got {values['a']}")
        elif self.constraint == "opair":
            if not 0.0 < values["a"] < values["b"] < 1.0:
                raise ConstraintError(f"{self.id}: needs 0 < a < b < 1")
        elif self.constraint == "rpair":
            if not values["a"] < values["b"]:
                raise ConstraintError(f"{self.id}: needs a < b")
        elif self.constraint is not None:
            raise CatalogError(f"unknown constraint {self.constraint!r}")
        return values

    def form(self, overrides: Mapping[str, float] | None = None) -> MetricJordanForm:
        values = self.resolve_params(overrides)
        ctx = EvalContext(values)
        blocks = []
        for spec in self.form_spec:
            if spec[0] == "complex":
                blocks.append(
                    SignedJordanBlock(
                        1, 0, float(parse(spec[1])(ctx)), float(parse(spec[2])(ctx))
                    )
                )
            else:
                k, eps, lam_src = spec
                blocks.append(SignedJordanBlock(k, eps, float(parse(lam_src)(ctx))))
        return MetricJordanForm(tuple(blocks))

    def realize(
        self, overrides: Mapping[str, float] | None = None
    ) -> SelfAdjointOperator:
        return realize_canonical(self.form(overrides))

    def ict_data(self, overrides: Mapping[str, float] | None = None) -> ICTData:
        if self.ict_spec is None:
            raise CatalogError(f"{self.id} is not an irreducible-CT web")
        values = self.resolve_params(overrides)
        ctx = EvalContext(values)
        diag = tuple(
            (name, float(parse(lam_src)(ctx)), eps)
            for name, lam_src, eps in self.ict_spec.get("diag", ())
        )
        pair = self.ict_spec.get("complex_pair")
        complex_pair = None
        if pair is not None:
            complex_pair = (float(parse(pair[0])(ctx)), float(parse(pair[1])(ctx)))
        return ICTData(
            k=self.ict_spec.get("k", 0),
            eps0=self.ict_spec.get("eps0", 1),
            diag=diag,
            complex_pair=complex_pair,
        )


# ---------------------------------------------------------------------------
# chart evaluation


def _sqrt(x, what: str):
    re_ = x.re if isinstance(x, Dual) else x
    if re_ < -1e-12 * max(1.0, abs(re_)):
        raise ChartRangeError(f"{what} = {re_} is negative at this point")
    if isinstance(x, Dual):
        if re_ <= 0.0:
            raise ChartRangeError(f"{what} vanishes: branch point for derivatives")
        return Dual(math.sqrt(re_), 0.5 / math.sqrt(re_) * x.d)
    return math.sqrt(max(re_, 0.0))


def solve_targets(vals: dict, n: int):
    """Recover the pseudo-Cartesian point from a chart's target values."""
    out = {}
    keys = set(vals)
    if "t" in keys:
        out["t"] = vals["t"]
    if "x" in keys:
        out["x"] = vals["x"]
    if "t+x" in keys:
        s, d = vals["t+x"], vals["t-x"]
        out["t"] = 0.5 * (s + d)
        out["x"] = 0.5 * (s - d)
    if "t^2" in keys:
        out["t"] = _sqrt(vals["t^2"], "t^2")
    if "x^2" in keys:
        out["x"] = _sqrt(vals["x^2"], "x^2")
    if "t^2+x^2" in keys:
        p = vals["t^2+x^2"]
        if "t^2-x^2" in keys:
            m = vals["t^2-x^2"]
        elif "x^2-t^2" in keys:
            m = -vals["x^2-t^2"]
        else:
            m = -vals["-t^2+x^2"]
        out["t"] = _sqrt(0.5 * (p + m), "t^2")
        out["x"] = _sqrt(0.5 * (p - m), "x^2")
    if "(t+x)^2" in keys:
        eta = _sqrt(vals["(t+x)^2"], "(t+x)^2")
        if "(t+x)*y" in keys:
            y = vals["(t+x)*y"] / eta
            out["y"] = y
            m = vals["-t^2+x^2+y^2"] - y * y
        else:
            m = vals["-t^2+x^2"]
        ximx = m / eta  # x - t = (-t^2+x^2)/(t+x)
        out["t"] = 0.5 * (eta - ximx)
        out["x"] = 0.5 * (eta + ximx)
    for name in ("y", "z"):
        if name in keys:
            out[name] = vals[name]
        elif f"{name}^2" in keys:
            out[name] = _sqrt(vals[f"{name}^2"], f"{name}^2")
    order = ("t", "x", "y", "z")[:n]
    missing = [c for c in order if c not in out]
    if missing:
        raise CatalogError(f"chart map does not determine {missing}")
    return [out[c] for c in order]


def build_chart(web_id: str, space: str, index: int, spec: dict) -> Chart:
    """Compile a chart from the definition-table source strings."""
    map_spec = [tuple(pair) for pair in spec["map"]]
    metric_spec = tuple(spec["metric"])
    return Chart(
        web_id=web_id,
        index=index,
        space=space,
        coords=tuple(spec.get("coords", ("u", "v", "w"))),
        ranges=tuple(RangeSpec.build(*r) for r in spec["ranges"]),
        targets=tuple((t, parse(src)) for t, src in map_spec),
        target_srcs=tuple(map_spec),
        metric=tuple(parse(src) for src in metric_spec),
        metric_srcs=metric_spec,
        region_src=spec.get("region"),
        region=parse_pred(spec["region"]) if spec.get("region") else None,
        raw_target_srcs=(
            tuple(tuple(p) for p in spec["map_raw"]) if "map_raw" in spec else None
        ),
        raw_metric_srcs=tuple(spec["metric_raw"]) if "metric_raw" in spec else None,
        erratum=spec.get("erratum"),
        timelike_coord=spec.get("timelike"),
        branch_note=spec.get("branch_note"),
    )


def check_ranges(chart: Chart, q, params: dict) -> None:
    values = dict(params)
    values.update(zip(chart.coords, q))
    ctx = EvalContext(values)
    for r in chart.ranges:
        lo, hi = float(r.lo(ctx)), float(r.hi(ctx))
        val = values[r.name]
        if not lo < val < hi:
            raise ChartRangeError(
                f"{chart.web_id}[{chart.index}]: {r.name} = {val} outside ({lo}, {hi})"
            )


def chart_map(chart: Chart, q, params: dict, validate: bool = True):
    """Evaluate the chart at q = (u, v, w); returns the ambient point."""
    if len(q) != len(chart.coords):
        raise ChartRangeError(f"chart expects {len(chart.coords)} coordinates")
    if validate:
        check_ranges(chart, q, params)
    values = dict(params)
    values.update(zip(chart.coords, q))
    ctx = EvalContext(values)
    vals = {name: tree(ctx) for name, tree in chart.targets}
    n = SPACES[chart.space]["n"]
    return np.array(solve_targets(vals, n), dtype=float)


def chart_jacobian(chart: Chart, q, params: dict):
    """Exact d(map)/d(coords) via dual numbers; returns (point, n x m J)."""
    coords = dict(zip(chart.coords, (float(v) for v in q)))
    ctx = EvalContext.dual(coords, params)
    vals = {name: tree(ctx) for name, tree in chart.targets}
    n = SPACES[chart.space]["n"]
    solved = solve_targets(vals, n)
    point = np.array([s.re if isinstance(s, Dual) else s for s in solved])
    m = len(chart.coords)
    J = np.zeros((n, m))
    for i, s in enumerate(solved):
        if isinstance(s, Dual):
            J[i] = s.d
    return point, J


def chart_metric(chart: Chart, q, params: dict, validate: bool = True):
    """The stated diagonal metric entries at q, in coordinate order."""
    if validate:
        check_ranges(chart, q, params)
    values = dict(params)
    values.update(zip(chart.coords, q))
    ctx = EvalContext(values)
    return tuple(float(tree(ctx)) for tree in chart.metric)


# unbounded ranges are truncated per the sampling policy
_TRUNC = 3.0
_MARGIN = 0.05


def sample_box(chart: Chart, params: dict, rng: np.random.Generator) -> np.ndarray:
    """One interior point, uniform in the (truncated, 5%-margin) ranges."""
    values = dict(params)
    for r in chart.ranges:
        ctx = EvalContext(values)
        lo, hi = float(r.lo(ctx)), float(r.hi(ctx))
        if math.isinf(lo) and math.isinf(hi):
            lo, hi = -_TRUNC, _TRUNC
        elif math.isinf(hi):
            hi = lo + _TRUNC
        elif math.isinf(lo):
            lo = hi - _TRUNC
        width = hi - lo
        values[r.name] = rng.uniform(lo + _MARGIN * width, hi - _MARGIN * width)
    return np.array([values[c] for c in chart.coords])


def region_holds(chart: Chart, point, params: dict) -> bool:
    if chart.region is None:
        return True
    names = SPACES[chart.space]["coords"]
    values = dict(params)
    values.update(zip(names, (float(v) for v in point)))
    return bool(chart.region(EvalContext(values)))


def ict_chain_holds(
    entry: WebEntry, chart: Chart, point, params: dict, allow_conjugate: bool = True
) -> bool:
    """Region test for squared-coordinate webs: the sorted eigenvalues of the
    restricted tensor must satisfy this chart's range chain.

    Complex-pair webs lose sign(t x) in their printed combinations, so by
    default the x -> -x (conjugate) representative of the point is accepted as
    well; pass allow_conjugate=False to test membership in this web's own
    leaf family (e.g. for chart disjointness).
    """
    if entry.ict_spec is None:
        return True
    op = _paper_operator(entry, params)
    point = np.asarray(point, dtype=float)
    reps = [point]
    if allow_conjugate and entry.ict_spec.get("complex_pair"):
        reps.append(point * np.array([1.0, -1.0] + [1.0] * (len(point) - 2)))
    return any(_chain_at(entry, chart, op, p, params) for p in reps)


def _chain_at(entry, chart, op, point, params) -> bool:
    vals = np.sort(restrict_ct(op, entry.kappa, point).eigenvalues())
    order = sorted(chart.ranges, key=lambda r: chart.coords.index(r.name))
    by_name = dict(zip([r.name for r in order], vals[::-1]))
    # coords are listed u, v, w with u the largest eigenfunction (w < v < u)
    values = dict(params)
    values.update(by_name)
    ctx = EvalContext(values)
    for r in chart.ranges:
        lo, hi = float(r.lo(ctx)), float(r.hi(ctx))
        if not lo <= values[r.name] <= hi:
            return False
    return True


def _paper_operator(entry: WebEntry, params: dict) -> SelfAdjointOperator:
    return ict_ambient_operator(entry, params)


def ict_ambient_operator(entry: WebEntry, params: dict) -> SelfAdjointOperator:
    """The chart's parameter tensor in pseudo-Cartesian coordinates.

    Unlike the canonically ordered realization, this places each eigenvalue on
    the axis the chart assigns it to (the ict table's slot names), so the
    eigenfunctions of the restricted tensor at chart_map(q) are exactly q.
    """
    if entry.ict_spec is None:
        raise CatalogError(f"{entry.id} is not an irreducible-CT web")
    values = entry.resolve_params(
        {k: v for k, v in params.items() if k in entry.params}
    )
    return ambient_from_spec(entry.ict_spec, values, entry.space)


def ambient_from_spec(spec: dict, values: dict, space_name: str) -> SelfAdjointOperator:
    """Cartesian-coordinates operator from a {k, diag, complex_pair} table.

    The nilpotent block lives on the lightcone pair eta = t + x, xi = (x-t)/2
    (coordinate vector fields d_eta = (d_t + d_x)/2, d_xi = d_x - d_t), with
    the unit spacelike middle vector on y for k = 3; diagonal eigenvalues sit
    on their named axes.
    """
    ctx = EvalContext(values)
    n = SPACES[space_name]["n"]
    names = SPACES[space_name]["coords"]
    space = AmbientSpace(n, 1)
    g = space.g
    M = np.zeros((n, n))
    d_xi = np.zeros(n)
    d_xi[0], d_xi[1] = -1.0, 1.0
    k = spec.get("k", 0)
    if k == 2:
        # A d_eta = d_xi, A d_xi = 0
        M += np.outer(d_xi, g @ d_xi)
    elif k == 3:
        # A d_eta = d_y, A d_y = d_xi, A d_xi = 0
        yhat = np.zeros(n)
        yhat[2] = 1.0
        M += np.outer(yhat, g @ d_xi) + np.outer(d_xi, g @ yhat)
    if spec.get("complex_pair") is not None:
        re = float(parse(spec["complex_pair"][0])(ctx))
        im = float(parse(spec["complex_pair"][1])(ctx))
        M[0, 0] = M[1, 1] = re
        M[0, 1], M[1, 0] = -im, im
    for item in spec.get("diag", ()):
        name, lam_src = item[0], item[1]
        M[names.index(name)][names.index(name)] = float(parse(lam_src)(ctx))
    return SelfAdjointOperator(M, space)


def cartesian_realization(form: MetricJordanForm) -> SelfAdjointOperator:
    """Realize a metric-Jordan form in pseudo-Cartesian coordinates (t, x, ...).

    Nilpotent blocks take the lightcone pair eta = t + x, xi = (x - t)/2 (with
    the unit spacelike middle vector on y for a J_3 block), a complex pair
    takes the (t, x) plane, the timelike J_1 block takes t, and the remaining
    J_1 blocks fill x, y, z in canonical order.
    """
    n = form.n
    space = AmbientSpace(n, form.nu)
    eta = np.zeros(n)
    eta[0] = eta[1] = 1.0
    xi = np.zeros(n)
    xi[0], xi[1] = -0.5, 0.5
    axes = [np.eye(n)[i] for i in range(n)]
    used = [False] * n
    cols: list[np.ndarray] = []
    A_blocks: list[np.ndarray] = []

    def take(i: int) -> np.ndarray:
        used[i] = True
        return axes[i]

    for b in form.blocks:
        if b.im > 0.0:
            cols += [take(0), take(1)]
            A_blocks.append(np.array([[b.lam, -b.im], [b.im, b.lam]]))
        elif b.k == 3:
            used[0] = used[1] = used[2] = True
            cols += [eta, axes[2], xi]
            A_blocks.append(b.lam * np.eye(3) + np.diag([1.0, 1.0], -1))
        elif b.k == 2:
            used[0] = used[1] = True
            cols += [eta * (1 if b.eps > 0 else -1), xi]
            A_blocks.append(b.lam * np.eye(2) + np.diag([1.0], -1))
        elif b.eps < 0:
            cols.append(take(0))
            A_blocks.append(np.array([[b.lam]]))
        else:
            i = next(j for j in range(1, n) if not used[j])
            cols.append(take(i))
            A_blocks.append(np.array([[b.lam]]))
    T = np.column_stack(cols)
    A_b = _block_diag_local(A_blocks)
    M = T @ A_b @ np.linalg.inv(T)
    return SelfAdjointOperator(M, space)


def _block_diag_local(blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n))
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i : i + k, i : i + k] = b
        i += k
    return out


# ---------------------------------------------------------------------------
# serialization


def chart_to_json(chart: Chart) -> dict:
    out = {
        "coords": list(chart.coords),
        "ranges": [[r.name, r.lo_src, r.hi_src] for r in chart.ranges],
        "map": [
            {"target": name, "src": src, "tree": tree.to_dict()}
            for (name, src), (tname, tree) in zip(chart.target_srcs, chart.targets)
        ],
        "metric": [
            {"src": src, "tree": tree.to_dict()}
            for src, tree in zip(chart.metric_srcs, chart.metric)
        ],
    }
    if chart.region_src:
        out["region"] = {"src": chart.region_src, "tree": chart.region.to_dict()}
    if chart.erratum:
        out["erratum"] = chart.erratum
        if chart.raw_target_srcs is not None:
            out["raw_map"] = [list(pair) for pair in chart.raw_target_srcs]
        if chart.raw_metric_srcs is not None:
            out["raw_metric"] = list(chart.raw_metric_srcs)
    if chart.timelike_coord:
        out["timelike"] = chart.timelike_coord
    if chart.branch_note:
        out["branch_note"] = chart.branch_note
    return out


def chart_from_json(web_id: str, space: str, index: int, data: dict) -> Chart:
    targets = tuple(
        (item["target"], Expr.from_dict(item["tree"])) for item in data["map"]
    )
    target_srcs = tuple((item["target"], item["src"]) for item in data["map"])
    metric = tuple(Expr.from_dict(item["tree"]) for item in data["metric"])
    metric_srcs = tuple(item["src"] for item in data["metric"])
    region_src = region = None
    if "region" in data:
        region_src = data["region"]["src"]
        region = Expr.from_dict(data["region"]["tree"])
    return Chart(
        web_id=web_id,
        index=index,
        space=space,
        coords=tuple(data["coords"]),
        ranges=tuple(RangeSpec.build(*spec) for spec in data["ranges"]),
        targets=targets,
        target_srcs=target_srcs,
        metric=metric,
        metric_srcs=metric_srcs,
        region_src=region_src,
        region=region,
        raw_target_srcs=(
            tuple(tuple(p) for p in data["raw_map"]) if "raw_map" in data else None
        ),
        raw_metric_srcs=(
            tuple(data["raw_metric"]) if "raw_metric" in data else None
        ),
        erratum=data.get("erratum"),
        timelike_coord=data.get("timelike"),
        branch_note=data.get("branch_note"),
    )


def entry_to_json(entry: WebEntry) -> dict:
    out = {
        "id": entry.id,
        "space": entry.space,
        "name": entry.name,
        "section": entry.section,
        "form": [list(spec) for spec in entry.form_spec],
        "params": dict(entry.params),
        "constraint": entry.constraint,
        "reducible": entry.reducible,
        "charts": [chart_to_json(c) for c in entry.charts],
    }
    if entry.ict_spec is not None:
        out["ict"] = {
            "k": entry.ict_spec.get("k", 0),
            "eps0": entry.ict_spec.get("eps0", 1),
            "diag": [list(d) for d in entry.ict_spec.get("diag", ())],
        }
        if entry.ict_spec.get("complex_pair"):
            out["ict"]["complex_pair"] = list(entry.ict_spec["complex_pair"])
    if entry.wp_tensor is not None:
        out["wp_tensor"] = {
            "k": entry.wp_tensor.get("k", 0),
            "diag": [list(d) for d in entry.wp_tensor.get("diag", ())],
        }
        if entry.wp_tensor.get("complex_pair"):
            out["wp_tensor"]["complex_pair"] = list(entry.wp_tensor["complex_pair"])
    if entry.wp is not None:
        out["wp"] = [
            {
                "choices": list(w.choices),
                "factors": list(w.factors),
                "image": w.image_src,
            }
            for w in entry.wp
        ]
    if entry.note:
        out["note"] = entry.note
    return out


def entry_from_json(data: dict) -> WebEntry:
    charts = tuple(
        chart_from_json(data["id"], data["space"], i, cdata)
        for i, cdata in enumerate(data["charts"])
    )
    ict_spec = None
    if "ict" in data:
        ict_spec = {
            "k": data["ict"]["k"],
            "eps0": data["ict"]["eps0"],
            "diag": tuple(tuple(d) for d in data["ict"]["diag"]),
        }
        if "complex_pair" in data["ict"]:
            ict_spec["complex_pair"] = tuple(data["ict"]["complex_pair"])
    wp_tensor = None
    if "wp_tensor" in data:
        wp_tensor = {
            "k": data["wp_tensor"].get("k", 0),
            "diag": tuple(tuple(d) for d in data["wp_tensor"].get("diag", ())),
        }
        if "complex_pair" in data["wp_tensor"]:
            wp_tensor["complex_pair"] = tuple(data["wp_tensor"]["complex_pair"])
    wp = None
    if "wp" in data:
        wp = tuple(
            WPExpectation(
                choices=tuple(item["choices"]),
                factors=tuple(item["factors"]),
                image_src=item["image"],
            )
            for item in data["wp"]
        )
    return WebEntry(
        id=data["id"],
        space=data["space"],
        name=data["name"],
        section=data["section"],
        form_spec=tuple(tuple(spec) for spec in data["form"]),
        params=data["params"],
        constraint=data.get("constraint"),
        charts=charts,
        ict_spec=ict_spec,
        wp=wp,
        wp_tensor=wp_tensor,
        reducible=data["reducible"],
        note=data.get("note"),
    )
