"""The websep command line: list, describe, verify, classify, chart.

Exit codes: 0 success / verification pass, 1 verification failure,
2 usage or input errors. JSON output is schema-stable ("schema": "websep/1").
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import catalog as cat_mod
from .catalog import classify_to_web, load_catalog
from .catalog.core import SCHEMA, ambient_space, chart_jacobian, chart_metric, kappa_of
from .errors import WebsepError
from .geometry import hyperquadric_residual, induced_metric_fd
from .pseudo_euclidean import operator_from_json
from .verify import Tolerances, report_table, verify_all, verify_chart

USAGE_ERROR = 2


def _catalog(args):
    return load_catalog(args.catalog)


def _entry_summary(entry) -> dict:
    return {
        "id": entry.id,
        "space": entry.space,
        "name": entry.name,
        "section": entry.section,
        "reducible": entry.reducible,
        "charts": len(entry.charts),
        "params": dict(entry.params),
        "constraint": entry.constraint,
        "form": entry.form().label(),
    }


def cmd_list(args) -> int:
    catalog = _catalog(args)
    entries = catalog.webs(args.space)
    if args.reducible_only:
        entries = [e for e in entries if e.reducible]
    if args.json:
        payload = {
            "schema": SCHEMA,
            "space": args.space,
            "webs": [
                dict(_entry_summary(e), tensor=_form_json(e)) for e in entries
            ],
        }
        print(json.dumps(payload, indent=1, sort_keys=True))
        return 0
    print(f"{'id':8} {'section':8} {'red.':5} {'charts':6} name")
    for e in entries:
        print(
            f"{e.id:8} {e.section:8} {'yes' if e.reducible else 'no':5} "
            f"{len(e.charts):6} {e.name}"
        )
    print(f"{len(entries)} webs")
    return 0


def _form_json(entry) -> dict:
    op = entry.realize()
    return {
        "blocks": entry.form().label(),
        "matrix": [[float(x) for x in row] for row in op.M],
        "basis_metric": [[float(x) for x in row] for row in op.space.g],
    }


def cmd_describe(args) -> int:
    catalog = _catalog(args)
    entry = catalog.get(args.web_id)
    payload = {
        "schema": SCHEMA,
        **_entry_summary(entry),
        "note": entry.note,
        "tensor": _form_json(entry),
        "charts": [],
    }
    for chart in entry.charts:
        cdata = {
            "index": chart.index,
            "coordinates": list(chart.coords),
            "ranges": [f"{r.lo_src} < {r.name} < {r.hi_src}" for r in chart.ranges],
            "region": chart.region_src,
            "map": [f"{t} = {src}" for t, src in chart.target_srcs],
            "metric": list(chart.metric_srcs),
        }
        if chart.erratum:
            cdata["erratum"] = chart.erratum
            if chart.raw_target_srcs:
                cdata["printed_map"] = [f"{t} = {s}" for t, s in chart.raw_target_srcs]
            if chart.raw_metric_srcs:
                cdata["printed_metric"] = list(chart.raw_metric_srcs)
        if chart.branch_note:
            cdata["branch"] = chart.branch_note
        if chart.timelike_coord:
            cdata["timelike"] = chart.timelike_coord
        payload["charts"].append(cdata)
    if entry.wp is not None:
        payload["warped_products"] = [
            {"choices": list(w.choices), "factors": list(w.factors), "image": w.image_src}
            for w in entry.wp
        ]
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
        return 0
    print(f"{entry.id}  {entry.name}  (section {entry.section}, {entry.space})")
    print(f"  tensor: {payload['tensor']['blocks']}")
    if entry.note:
        print(f"  note: {entry.note}")
    for cdata in payload["charts"]:
        print(f"  chart {cdata['index']}:")
        for line in cdata["map"]:
            print(f"    {line}")
        print(f"    ds^2 diag: {cdata['metric']}")
        print(f"    ranges: {'; '.join(cdata['ranges'])}")
        if cdata.get("region"):
            print(f"    region: {cdata['region']}")
        if cdata.get("erratum"):
            print(f"    erratum: {cdata['erratum']}")
    return 0


def _parse_tol(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        key, _, value = pair.partition("=")
        out[key] = float(value)
    return out


def cmd_verify(args) -> int:
    catalog = _catalog(args)
    tol = Tolerances.with_overrides(_parse_tol(args.tol))
    if args.all:
        summary = verify_all(
            args.all,
            samples=args.samples,
            tolerances=tol,
            seed=args.seed,
            catalog=catalog,
            sweep=tuple(args.sweep or ()),
        )
        if args.report:
            with open(args.report, "w") as fh:
                json.dump(summary.to_json(), fh, indent=1, sort_keys=True)
        if args.json:
            print(json.dumps(summary.to_json(), indent=1, sort_keys=True))
        else:
            print(report_table(summary))
        return 0 if summary.passed else 1
    entry = catalog.get(args.web_id)
    reports = []
    for chart in entry.charts:
        if args.chart is not None and chart.index != args.chart:
            continue
        reports.append(
            verify_chart(
                entry.id,
                chart.index,
                samples=args.samples,
                tolerances=tol,
                seed=args.seed,
                catalog=catalog,
            )
        )
    payload = {"schema": SCHEMA, "charts": [r.to_json() for r in reports]}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            worst = {k: f"{v:.2e}" for k, v in r.residuals.items()}
            print(f"{r.web_id}[{r.chart_index}] {status} {worst}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_classify(args) -> int:
    catalog = _catalog(args)
    with open(args.input) as fh:
        op = operator_from_json(json.load(fh))
    result = classify_to_web(op, args.space, catalog)
    payload = {
        "schema": SCHEMA,
        "space": args.space,
        "section": result.section,
        "webs": list(result.web_ids),
        "parameters": {k: float(v) for k, v in result.params.items()},
        "alpha": result.alpha,
        "beta": result.beta,
    }
    if result.note:
        payload["note"] = result.note
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        params = ", ".join(f"{k}={v:.6g}" for k, v in result.params.items())
        print(
            f"case {result.section} -> {' / '.join(result.web_ids)}"
            + (f", {params}" if params else "")
            + f"  (alpha={result.alpha:.6g}, beta={result.beta:.6g})"
        )
    return 0


def cmd_chart(args) -> int:
    catalog = _catalog(args)
    entry = catalog.get(args.web_id)
    chart = entry.charts[args.chart]
    overrides = {}
    for pair in args.params or ():
        key, _, value = pair.partition("=")
        overrides[key] = float(value)
    values = entry.resolve_params(overrides)
    q = [float(x) for x in args.point.split(",")]
    point, J = chart_jacobian(chart, q, values)
    space = ambient_space(entry.space)
    stated = chart_metric(chart, q, values)
    G_exact = J.T @ space.g @ J
    G_fd = induced_metric_fd(
        lambda qq: cat_mod.chart_map(chart, qq, values, validate=False), q, space
    )
    payload = {
        "schema": SCHEMA,
        "web": entry.id,
        "chart": chart.index,
        "point": q,
        "ambient": [float(x) for x in point],
        "hyperquadric_residual": float(
            hyperquadric_residual(point, kappa_of(entry.space), space)
        ),
        "stated_metric": [float(x) for x in stated],
        "induced_metric_exact": [float(G_exact[i, i]) for i in range(len(q))],
        "induced_metric_fd": [float(G_fd[i, i]) for i in range(len(q))],
    }
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(f"{entry.id}[{chart.index}] at ({args.point})")
        print(f"  ambient point: {np.round(point, 12).tolist()}")
        print(f"  hyperquadric residual: {payload['hyperquadric_residual']:.3e}")
        print(f"  stated metric diag:  {np.round(stated, 12).tolist()}")
        print(f"  exact induced diag:  {np.round(np.diag(G_exact), 12).tolist()}")
        print(f"  FD induced diag:     {np.round(np.diag(G_fd), 12).tolist()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="websep",
        description="Separable webs on H^3 and dS_3: catalog, classification, verification",
    )
    parser.add_argument(
        "--catalog",
        help="catalog JSON path (default: embedded; or WEBSEP_CATALOG env var)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list the webs of a space")
    p.add_argument("space", choices=["H3", "dS3", "H2"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--reducible-only", action="store_true")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("describe", help="dump one web entry")
    p.add_argument("web_id")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("verify", help="run the verification engine")
    p.add_argument("web_id", nargs="?")
    p.add_argument("--all", metavar="SPACE", choices=["H3", "dS3", "H2"])
    p.add_argument("--chart", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", action="append", metavar="NAME=VALUE")
    p.add_argument("--sweep", type=float, action="append", metavar="A")
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a parameter tensor JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--space", required=True, choices=["H3", "dS3", "H2"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chart", help="evaluate a chart at a point")
    p.add_argument("web_id")
    p.add_argument("--chart", type=int, default=0)
    p.add_argument("--point", required=True, metavar="U,V,W")
    p.add_argument("--params", action="append", metavar="NAME=VALUE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chart)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.all and not args.web_id:
        parser.error("verify needs a web id or --all SPACE")
    try:
        return args.func(args)
    except WebsepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
