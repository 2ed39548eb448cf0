"""The machine-readable web catalog: 34 webs on H^3 and dS_3, 9 on H^2.

The shipped catalog is a versioned JSON document (data/webs.json) generated
from the definition tables; `load_catalog` honors an explicit path or the
WEBSEP_CATALOG environment variable, so a modified catalog can be swapped in
and will be re-verified like any other input.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from importlib import resources

import numpy as np

from ..concircular import is_reducible
from ..errors import CatalogError
from ..pseudo_euclidean import SelfAdjointOperator
from .classify import Classification, classify_operator
from .core import (
    SCHEMA,
    SPACES,
    Chart,
    RangeSpec,
    WebEntry,
    WPExpectation,
    ambient_from_spec,
    ambient_space,
    build_chart,
    cartesian_realization,
    chart_jacobian,
    chart_map,
    chart_metric,
    check_ranges,
    entry_from_json,
    entry_to_json,
    ict_chain_holds,
    kappa_of,
    region_holds,
    sample_box,
)

__all__ = [
    "Catalog",
    "ClassifyResult",
    "build_catalog",
    "load_catalog",
    "catalog_to_json",
    "default_catalog_path",
    "list_webs",
    "chart_map",
    "chart_metric",
    "chart_jacobian",
    "classify_to_web",
    "raw_variant",
    "ambient_from_spec",
    "cartesian_realization",
    "ambient_space",
    "kappa_of",
    "sample_box",
    "region_holds",
    "ict_chain_holds",
    "SPACES",
]


@dataclass(frozen=True)
class Catalog:
    entries: dict  # space -> tuple[WebEntry, ...]

    def spaces(self):
        return tuple(self.entries)

    def webs(self, space: str) -> tuple[WebEntry, ...]:
        try:
            return self.entries[space]
        except KeyError:
            raise CatalogError(
                f"unknown space {space!r}: expected one of {sorted(SPACES)}"
            ) from None

    def get(self, web_id: str) -> WebEntry:
        for entries in self.entries.values():
            for entry in entries:
                if entry.id == web_id:
                    return entry
        raise CatalogError(f"no web with id {web_id!r}")

    def sections(self, space: str) -> dict:
        out: dict[str, list[str]] = {}
        for entry in self.webs(space):
            out.setdefault(entry.section, []).append(entry.id)
        return out


def build_catalog() -> Catalog:
    """Compile the catalog from the definition tables."""
    from . import definitions

    entries: dict[str, tuple[WebEntry, ...]] = {}
    for space, webs in definitions.ALL_WEBS.items():
        built = []
        for spec in webs:
            charts = tuple(
                build_chart(spec["id"], space, i, c)
                for i, c in enumerate(spec["charts"])
            )
            wp_specs = definitions.WP_CASES.get((space, spec["section"]))
            wp = None
            if wp_specs is not None:
                wp = tuple(
                    WPExpectation(
                        choices=tuple(w["choices"]),
                        factors=tuple(w["factors"]),
                        image_src=w["image"],
                    )
                    for w in wp_specs
                )
            entry = WebEntry(
                id=spec["id"],
                space=space,
                name=spec["name"],
                section=spec["section"],
                form_spec=tuple(tuple(b) for b in spec["form"]),
                params=dict(spec["params"]),
                constraint=spec["constraint"],
                charts=charts,
                ict_spec=_ict_spec(spec.get("ict")),
                wp=wp,
                wp_tensor=_ict_spec(definitions.WP_TENSORS.get(spec["section"]))
                if wp is not None
                else None,
                note=spec.get("note"),
            )
            entry = replace(entry, reducible=is_reducible(entry.realize()))
            built.append(entry)
        entries[space] = tuple(built)
    return Catalog(entries)


def _ict_spec(raw: dict | None) -> dict | None:
    if raw is None:
        return None
    out = {
        "k": raw.get("k", 0),
        "eps0": raw.get("eps0", 1),
        "diag": tuple(tuple(d) for d in raw.get("diag", ())),
    }
    if raw.get("complex_pair"):
        out["complex_pair"] = tuple(raw["complex_pair"])
    return out


def catalog_to_json(catalog: Catalog) -> dict:
    return {
        "schema": SCHEMA,
        "spaces": {
            space: [entry_to_json(e) for e in entries]
            for space, entries in catalog.entries.items()
        },
    }


def catalog_from_json(data: dict) -> Catalog:
    if data.get("schema") != SCHEMA:
        raise CatalogError(f"unsupported catalog schema {data.get('schema')!r}")
    return Catalog(
        {
            space: tuple(entry_from_json(e) for e in items)
            for space, items in data["spaces"].items()
        }
    )


def default_catalog_path() -> str:
    return str(resources.files("websep.catalog").joinpath("data/webs.json"))


_cached: Catalog | None = None


def load_catalog(path: str | None = None) -> Catalog:
    """Load the catalog: explicit path > WEBSEP_CATALOG > embedded default."""
    global _cached
    path = path or os.environ.get("WEBSEP_CATALOG")
    if path is None:
        if _cached is None:
            with open(default_catalog_path()) as fh:
                _cached = catalog_from_json(json.load(fh))
        return _cached
    with open(path) as fh:
        return catalog_from_json(json.load(fh))


def list_webs(space: str, catalog: Catalog | None = None) -> tuple[WebEntry, ...]:
    """All webs of a space, in the source numbering order."""
    return (catalog or load_catalog()).webs(space)


@dataclass(frozen=True)
class ClassifyResult:
    section: str
    web_ids: tuple[str, ...]
    params: dict
    alpha: float
    beta: float
    note: str = ""


def classify_to_web(
    A: SelfAdjointOperator, space: str, catalog: Catalog | None = None
) -> ClassifyResult:
    """The catalog case geometrically equivalent to A, with its member webs.

    Several webs can share one case (they differ by the web chosen on a
    spherical factor, which the ambient tensor does not see); all member ids
    for the requested space are returned.
    """
    catalog = catalog or load_catalog()
    if space not in SPACES:
        raise CatalogError(f"unknown space {space!r}")
    expected_n = SPACES[space]["n"]
    if A.space.n != expected_n:
        raise CatalogError(f"{space} classification needs an E^{expected_n}_1 tensor")
    cls = classify_operator(A)
    members = catalog.sections(space).get(cls.section, [])
    return ClassifyResult(
        section=cls.section,
        web_ids=tuple(members),
        params=cls.params,
        alpha=cls.alpha,
        beta=cls.beta,
        note=cls.note,
    )


def raw_variant(chart: Chart) -> Chart | None:
    """The chart as printed (pre-errata), or None if no erratum applies."""
    if not chart.errata_applied:
        return None
    spec = {
        "coords": chart.coords,
        "ranges": [(r.name, r.lo_src, r.hi_src) for r in chart.ranges],
        "map": list(chart.raw_target_srcs or chart.target_srcs),
        "metric": list(chart.raw_metric_srcs or chart.metric_srcs),
    }
    if chart.region_src:
        spec["region"] = chart.region_src
    return build_chart(chart.web_id, chart.space, chart.index, spec)
