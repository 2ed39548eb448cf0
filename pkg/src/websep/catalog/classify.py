"""Classification of parameter tensors to their catalog case.

The dispatch works on the metric-Jordan form of the input: block structure
first (complex pair / nilpotent index / eigenvalue multiplicities with their
timelike-or-spacelike assignment), then the affine normalization (alpha, beta)
that carries the input onto the case's header form, recovering the continuous
case parameters. The recovered (alpha, beta) satisfies: alpha*A + beta*Id has
the header's metric-Jordan form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import BoundaryError, ClassificationError
from ..pseudo_euclidean import (
    MetricJordanForm,
    SelfAdjointOperator,
    metric_jordan_form,
)

__all__ = ["Classification", "classify_operator"]

_NEAR = 1e-8


@dataclass(frozen=True)
class Classification:
    section: str
    params: dict
    alpha: float
    beta: float
    note: str = ""


def _distinct(values: list[float], scale: float) -> list[float]:
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > _NEAR * scale:
            out.append(v)
    return out


def classify_operator(A: SelfAdjointOperator) -> Classification:
    """Match A to its section-4 case (n=4) or appendix-B web (n=3)."""
    form = metric_jordan_form(A)
    scale = max(1.0, *(abs(b.lam) + b.im for b in form.blocks))
    if A.space.n == 4:
        return _classify_e4(form, scale)
    return _classify_e3(form, scale)


# ---------------------------------------------------------------------------
# E^4_1


def _classify_e4(form: MetricJordanForm, scale: float) -> Classification:
    blocks = form.blocks
    pairs = [b for b in blocks if b.im > 0]
    j3 = [b for b in blocks if b.k == 3]
    j2 = [b for b in blocks if b.k == 2]
    singles = [b for b in blocks if b.k == 1 and b.im == 0.0]

    if pairs:
        re, im = pairs[0].lam, pairs[0].im
        alpha, beta = 1.0 / im, -re / im
        vals = sorted(alpha * b.lam + beta for b in singles)
        if vals[1] - vals[0] <= _NEAR * scale:
            return Classification(
                "4.9",
                {"c": round(vals[0], 12)},
                alpha,
                beta,
                note="the repeated real eigenvalue is not visible in the chart",
            )
        return Classification("4.12", {"a": vals[0], "b": vals[1]}, alpha, beta)

    if j3:
        mu = j3[0].lam
        s = singles[0].lam
        if abs(s - mu) <= _NEAR * scale:
            return Classification("4.21", {}, 1.0, -mu)
        alpha = np.sign(s - mu)
        return Classification("4.22", {"a": abs(s - mu)}, alpha, -alpha * mu)

    if j2:
        mu, eps = j2[0].lam, j2[0].eps
        rel = sorted(s.lam - mu for s in singles)
        near_mu = [r for r in rel if abs(r) <= _NEAR * scale]
        away = [r for r in rel if abs(r) > _NEAR * scale]
        if len(near_mu) == 2:
            return Classification("4.13", {}, float(eps), -eps * mu)
        if len(near_mu) == 1:
            s = away[0]
            alpha = eps / abs(s)
            iota = eps * np.sign(s)
            section = "4.14" if iota > 0 else "4.15"
            return Classification(section, {"c": float(iota)}, alpha, -alpha * mu)
        if abs(away[0] - away[1]) <= _NEAR * scale:
            s = away[0]
            alpha = eps / abs(s)
            iota = eps * np.sign(s)
            section = "4.16" if iota > 0 else "4.17"
            return Classification(section, {"c": float(iota)}, alpha, -alpha * mu)
        oriented = sorted(eps * r for r in away)
        if oriented[0] > 0:  # both on the positive side after orientation
            alpha = eps / oriented[1]
            return Classification(
                "4.18", {"a": oriented[0] / oriented[1], "b": 1.0}, alpha, -alpha * mu
            )
        if oriented[1] < 0:
            alpha = -eps / abs(oriented[0])
            return Classification(
                "4.20",
                {"a": abs(oriented[1]) / abs(oriented[0]), "b": 1.0},
                alpha,
                -alpha * mu,
            )
        alpha = eps / abs(oriented[0])
        return Classification(
            "4.19", {"a": oriented[1] / abs(oriented[0]), "b": -1.0}, alpha, -alpha * mu
        )

    # diagonalizable with real eigenvalues
    t_val = next(b.lam for b in singles if b.eps < 0)
    s_vals = sorted(b.lam for b in singles if b.eps > 0)
    values = _distinct([t_val] + s_vals, scale)
    counts = {
        v: sum(1 for b in singles if abs(b.lam - v) <= _NEAR * scale) for v in values
    }

    if len(values) == 1:
        raise BoundaryError("A is proportional to the metric: no web is induced")

    if len(values) == 2:
        lo, hi = values
        t_in_lo = abs(t_val - lo) <= _NEAR * scale
        lor, spc = (lo, hi) if t_in_lo else (hi, lo)
        if counts[lor] == 3:
            alpha = 1.0 / (spc - lor)
            return Classification("4.2", {}, alpha, -alpha * lor)
        if counts[lor] == 1:
            alpha = 1.0 / (lor - spc)
            return Classification("4.1", {}, alpha, -alpha * spc)
        alpha = 1.0 / (spc - lor)
        return Classification("4.3", {}, alpha, -alpha * lor)

    if len(values) == 3:
        mu = next(v for v in values if counts[v] == 2)
        s1, s2 = sorted(v for v in values if counts[v] == 1)
        lorentzian_double = abs(t_val - mu) <= _NEAR * scale
        if lorentzian_double:
            if s1 < mu < s2:
                # double in the middle: header -a^2, 0, 1
                denom = max(s2 - mu, mu - s1)
                near, far = (
                    (s2, s1) if s2 - mu >= mu - s1 else (s1, s2)
                )
                alpha = 1.0 / (near - mu)
                a2 = -(alpha * (far - mu))
                _require_unit(a2, "4.5")
                return Classification("4.5", {"a2": a2}, alpha, -alpha * mu)
            near, far = (s1, s2) if abs(s1 - mu) <= abs(s2 - mu) else (s2, s1)
            alpha = 1.0 / (far - mu)
            return Classification(
                "4.4", {"a2": alpha * (near - mu)}, alpha, -alpha * mu
            )
        # spacelike double; simples carry the timelike direction and one axis
        timelike_is = abs(t_val - s1) <= _NEAR * scale
        t_s = s1 if timelike_is else s2
        x_s = s2 if timelike_is else s1
        if min(s1, s2) < mu < max(s1, s2):
            alpha = 1.0 / (t_s - mu)
            a2 = -(alpha * (x_s - mu))
            _require_unit(a2, "4.8")
            return Classification("4.8", {"a2": a2}, alpha, -alpha * mu)
        if abs(x_s - mu) < abs(t_s - mu):
            alpha = 1.0 / (t_s - mu)
            return Classification("4.6", {"a2": alpha * (x_s - mu)}, alpha, -alpha * mu)
        alpha = 1.0 / (x_s - mu)
        return Classification("4.7", {"a2": alpha * (t_s - mu)}, alpha, -alpha * mu)

    # four distinct eigenvalues
    idx = next(i for i, v in enumerate(values) if abs(v - t_val) <= _NEAR * scale)
    if idx in (0, 3):
        ordered = values if idx == 0 else values[::-1]
        alpha = 1.0 / (ordered[3] - ordered[0])
        beta = -alpha * ordered[0]
        return Classification(
            "4.10",
            {"a": alpha * ordered[1] + beta, "b": alpha * ordered[2] + beta},
            alpha,
            beta,
        )
    ordered = values if idx == 1 else values[::-1]
    alpha = 1.0 / (ordered[3] - ordered[0])
    beta = -alpha * ordered[0]
    return Classification(
        "4.11",
        {"a": alpha * ordered[1] + beta, "b": alpha * ordered[2] + beta},
        alpha,
        beta,
    )


def _require_unit(a2: float, section: str) -> None:
    if not 0.0 < a2 < 1.0 - 1e-9:
        raise BoundaryError(
            f"case {section} parameter a^2 = {a2} falls outside (0, 1): "
            "boundary of the case family"
        )


# ---------------------------------------------------------------------------
# E^3_1 (the H^2 appendix webs)


def _classify_e3(form: MetricJordanForm, scale: float) -> Classification:
    blocks = form.blocks
    pairs = [b for b in blocks if b.im > 0]
    j3 = [b for b in blocks if b.k == 3]
    j2 = [b for b in blocks if b.k == 2]
    singles = [b for b in blocks if b.k == 1 and b.im == 0.0]

    if pairs:
        re, im = pairs[0].lam, pairs[0].im
        alpha, beta = 1.0 / im, -re / im
        c = alpha * singles[0].lam + beta
        return Classification("B.5", {"c": round(c, 12)}, alpha, beta)
    if j3:
        return Classification("B.9", {}, 1.0, -j3[0].lam)
    if j2:
        mu, eps = j2[0].lam, j2[0].eps
        s = singles[0].lam - mu
        if abs(s) <= _NEAR * scale:
            return Classification("B.8", {}, float(eps), -eps * mu)
        alpha = eps / abs(s)
        iota = eps * np.sign(s)
        return Classification(
            "B.6" if iota > 0 else "B.7", {"c": float(iota)}, alpha, -alpha * mu
        )

    t_val = next(b.lam for b in singles if b.eps < 0)
    values = _distinct([b.lam for b in singles], scale)
    counts = {
        v: sum(1 for b in singles if abs(b.lam - v) <= _NEAR * scale) for v in values
    }
    if len(values) == 1:
        raise BoundaryError("A is proportional to the metric: no web is induced")
    if len(values) == 2:
        mu = next(v for v in values if counts[v] == 2)
        s = next(v for v in values if counts[v] == 1)
        if abs(t_val - mu) <= _NEAR * scale:
            alpha = 1.0 / (s - mu)
            return Classification("B.4", {}, alpha, -alpha * mu)
        alpha = 1.0 / (t_val - mu)
        return Classification("B.3", {}, alpha, -alpha * mu)
    idx = next(i for i, v in enumerate(values) if abs(v - t_val) <= _NEAR * scale)
    if idx == 1:
        alpha = 1.0 / (values[2] - values[0])
        beta = -alpha * values[0]
        return Classification("B.2", {"a2": alpha * t_val + beta}, alpha, beta)
    ordered = values if idx == 0 else values[::-1]
    alpha = 1.0 / (ordered[2] - ordered[0])
    beta = -alpha * ordered[0]
    return Classification("B.1", {"a2": alpha * ordered[1] + beta}, alpha, beta)
