"""Development smoke loop: embedding + metric residuals for every chart."""

import sys

sys.path.insert(0, "src")

import numpy as np

from websep.catalog import build_catalog, chart_jacobian, chart_map, raw_variant
from websep.catalog.core import SPACES, ambient_space, chart_metric, kappa_of, sample_box
from websep.geometry import hyperquadric_residual


def check_chart(entry, chart, n=25, seed=0, label=""):
    rng = np.random.default_rng(seed)
    params = entry.resolve_params()
    space = ambient_space(entry.space)
    kap = kappa_of(entry.space)
    worst_embed = worst_diag = worst_off = 0.0
    sig_bad = 0
    fails = []
    for _ in range(n):
        q = sample_box(chart, params, rng)
        try:
            p, J = chart_jacobian(chart, q, params)
        except Exception as exc:
            fails.append(f"eval {type(exc).__name__}: {exc}")
            break
        worst_embed = max(worst_embed, abs(hyperquadric_residual(p, kap, space)))
        G = J.T @ space.g @ J
        stated = chart_metric(chart, q, params, validate=False)
        for i in range(len(q)):
            denom = max(abs(stated[i]), 1e-10)
            worst_diag = max(worst_diag, abs(G[i, i] - stated[i]) / denom)
        off = G - np.diag(np.diag(G))
        worst_off = max(
            worst_off, np.abs(off).max() / max(1.0, np.abs(np.diag(G)).max())
        )
        negs = int(np.sum(np.linalg.eigvalsh(G) < 0))
        want = 0 if entry.space in ("H3", "H2") else 1
        if negs != want:
            sig_bad += 1
    status = "OK "
    if fails or worst_embed > 1e-9 or worst_diag > 1e-6 or worst_off > 1e-9 or sig_bad:
        status = "FAIL"
    print(
        f"{status} {entry.id}[{chart.index}]{label}: embed={worst_embed:.2e} "
        f"diag={worst_diag:.2e} off={worst_off:.2e} sig_bad={sig_bad} {fails[:1]}"
    )
    return status == "OK "


def main():
    cat = build_catalog()
    bad = []
    for space in ("H3", "dS3", "H2"):
        for entry in cat.webs(space):
            for chart in entry.charts:
                if not check_chart(entry, chart):
                    bad.append(f"{entry.id}[{chart.index}]")
                raw = raw_variant(chart)
                if raw is not None:
                    ok_raw = check_chart(entry, raw, n=10, label=" RAW")
                    if ok_raw:
                        bad.append(f"{entry.id}[{chart.index}] RAW unexpectedly OK")
    print()
    print("BAD:", bad if bad else "none")


if __name__ == "__main__":
    main()
