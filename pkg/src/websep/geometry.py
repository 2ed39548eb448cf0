"""Hyperquadric geometry and finite-difference differential geometry.

Geodesics of E^n_nu(kappa) are closed-form (trigonometric, hyperbolic, or
affine depending on kappa <v, v>), so conserved-quantity checks carry no
integration error. The finite-difference operators here (induced metrics,
Christoffel symbols, Killing and concircular residuals) act on arbitrary
callables in chart coordinates and serve as the oracle side of the exact
dual-number derivative path.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, OffSurfaceError, SingularityError
from .pseudo_euclidean import AmbientSpace, scalar_product

__all__ = [
    "hyperquadric_residual",
    "require_on_surface",
    "geodesic",
    "induced_metric_fd",
    "christoffels_fd",
    "killing_residual",
    "concircular_residual",
    "chart_velocity",
]

JACOBIAN_CONDITION_LIMIT = 1e8


def hyperquadric_residual(p, kappa: int, space: AmbientSpace) -> float:
    """<p, p> - 1/kappa."""
    return scalar_product(p, p, space) - 1.0 / kappa


def require_on_surface(p, kappa: int, space: AmbientSpace, tol: float = 1e-10):
    res = hyperquadric_residual(p, kappa, space)
    if abs(res) > tol:
        raise OffSurfaceError(f"hyperquadric residual {res} exceeds {tol}")
    return np.asarray(p, dtype=float)


def geodesic(p, v, kappa: int, s: float, space: AmbientSpace) -> np.ndarray:
    """The geodesic of E^n_nu(kappa) with gamma(0) = p, gamma'(0) = v at s.

    v must be tangent (<p, v> = 0) and normalized so <v, v> is -1, 0, or 1.
    """
    p = require_on_surface(p, kappa, space)
    v = np.asarray(v, dtype=float)
    pv = scalar_product(p, v, space)
    if abs(pv) > 1e-9:
        raise DomainError(f"<p, v> = {pv}: not a tangent vector")
    vv = scalar_product(v, v, space)
    if min(abs(vv), abs(abs(vv) - 1.0)) > 1e-8:
        raise DomainError(f"<v, v> = {vv} is not normalized to -1, 0, or 1")
    w2 = kappa * round(vv)
    if w2 > 0:
        return np.cos(s) * p + np.sin(s) * v
    if w2 < 0:
        return np.cosh(s) * p + np.sinh(s) * v
    return p + s * v


def _partial(fn, q, l: int, h: float, richardson: bool):
    """Central-difference partial, Richardson-extrapolated by default."""
    q = np.asarray(q, dtype=float)

    def central(hl):
        qp, qm = q.copy(), q.copy()
        qp[l] += hl
        qm[l] -= hl
        return (np.asarray(fn(qp), dtype=float) - np.asarray(fn(qm), dtype=float)) / (
            2 * hl
        )

    hl = h * max(1.0, abs(q[l]))
    if not richardson:
        return central(hl)
    return (4.0 * central(0.5 * hl) - central(hl)) / 3.0


def induced_metric_fd(
    map_fn, q, space: AmbientSpace, h: float = 1e-5, richardson: bool = True
) -> np.ndarray:
    """Pullback J^T g J of the ambient metric with a central-difference J."""
    q = np.asarray(q, dtype=float)
    cols = [_partial(map_fn, q, i, h, richardson) for i in range(len(q))]
    J = np.column_stack(cols)
    return J.T @ space.g @ J


def christoffels_fd(metric_fn, q, h: float = 1e-4, richardson: bool = True) -> np.ndarray:
    """Gamma^i_{jk} from finite differences of the metric evaluator."""
    q = np.asarray(q, dtype=float)
    m = len(q)
    g0 = np.asarray(metric_fn(q), dtype=float)
    dg = np.zeros((m, m, m))  # dg[l] = d g / d q^l
    for l in range(m):
        dg[l] = _partial(metric_fn, q, l, h, richardson)
    try:
        ginv = np.linalg.inv(g0)
    except np.linalg.LinAlgError:
        raise SingularityError("singular metric in christoffels_fd") from None
    gamma = np.zeros((m, m, m))
    for i in range(m):
        for j in range(m):
            for k in range(m):
                acc = 0.0
                for l in range(m):
                    acc += ginv[i, l] * (dg[j][l, k] + dg[k][j, l] - dg[l][j, k])
                gamma[i, j, k] = 0.5 * acc
    return gamma


def _tensor_partials(tensor_fn, q, h: float, richardson: bool = True):
    q = np.asarray(q, dtype=float)
    m = len(q)
    t0 = np.asarray(tensor_fn(q), dtype=float)
    dt = np.zeros((m, m, m))
    for l in range(m):
        dt[l] = _partial(tensor_fn, q, l, h, richardson)
    return t0, dt


def _covariant_derivative(t0, dt, gamma) -> np.ndarray:
    """nabla_k T_ij for a symmetric covariant 2-tensor."""
    m = t0.shape[0]
    out = np.zeros((m, m, m))  # out[k, i, j]
    for k in range(m):
        out[k] = dt[k] - np.einsum("li,lj->ij", gamma[:, k, :], t0) - np.einsum(
            "lj,il->ij", gamma[:, k, :], t0
        )
    return out


def killing_residual(
    K_fn, metric_fn, q, h: float = 1e-5, richardson: bool = True,
    normalized: bool = False,
) -> float:
    """max |nabla_(i K_jk)| by central differences.

    With ``normalized`` the symmetrized residual is divided by
    max(1, |nabla K|): charts whose tensors blow up towards a pole keep a
    scale-free criterion there.
    """
    t0, dt = _tensor_partials(K_fn, q, h, richardson)
    gamma = christoffels_fd(metric_fn, q, h=max(h, 1e-5), richardson=richardson)
    nab = _covariant_derivative(t0, dt, gamma)
    sym = (nab + nab.transpose(1, 2, 0) + nab.transpose(2, 0, 1)) / 3.0
    scale = max(1.0, float(np.abs(nab).max())) if normalized else 1.0
    return float(np.abs(sym).max()) / scale


def concircular_residual(
    L_fn, metric_fn, q, h: float = 1e-5, richardson: bool = True,
    normalized: bool = False,
) -> float:
    """max |nabla_k L_ij - alpha_(i g_j)k| with alpha = d tr(L).

    ``normalized`` divides by max(1, |nabla L|, |model|), as for
    :func:`killing_residual`.
    """
    q = np.asarray(q, dtype=float)
    m = len(q)
    t0, dt = _tensor_partials(L_fn, q, h, richardson)
    g0 = np.asarray(metric_fn(q), dtype=float)
    gamma = christoffels_fd(metric_fn, q, h=max(h, 1e-5), richardson=richardson)
    nab = _covariant_derivative(t0, dt, gamma)

    def trace(qq):
        gq = np.asarray(metric_fn(qq), dtype=float)
        return float(np.trace(np.linalg.solve(gq, np.asarray(L_fn(qq), dtype=float))))

    alpha = np.zeros(m)
    for i in range(m):
        alpha[i] = float(_partial(trace, q, i, h, richardson))

    res = scale = 0.0
    for k in range(m):
        model = 0.5 * (np.outer(alpha, g0[:, k]) + np.outer(g0[:, k], alpha))
        res = max(res, float(np.abs(nab[k] - model).max()))
        scale = max(scale, float(np.abs(nab[k]).max()), float(np.abs(model).max()))
    return res / max(1.0, scale) if normalized else res


def chart_velocity(J: np.ndarray, v_amb, g_amb: np.ndarray) -> np.ndarray:
    """Chart components of an ambient tangent vector: (J^T g J)^-1 J^T g v.

    Rejects ill-conditioned Jacobians (the caller resamples).
    """
    if np.linalg.cond(J) > JACOBIAN_CONDITION_LIMIT:
        raise SingularityError("chart Jacobian condition number exceeds 1e8")
    G = J.T @ g_amb @ J
    return np.linalg.solve(G, J.T @ g_amb @ np.asarray(v_amb, dtype=float))
