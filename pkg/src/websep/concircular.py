"""Concircular tensors in E^n_nu and their restriction to hyperquadrics.

The general concircular tensor in the ambient space is A + 2 w (.) r + m r (.) r;
its pullback along the inclusion of the hyperquadric <p, p> = 1/kappa is the
projection of the constant part A onto the tangent space. Irreducible
restricted tensors (simple, functionally independent eigenfunctions) induce
separable coordinates; the machinery here turns the eigenfunctions back into
ambient coordinates and produces the induced diagonal metric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ChartRangeError,
    DimensionError,
    OffSurfaceError,
    SingularityError,
)
from .pseudo_euclidean import (
    AmbientSpace,
    SelfAdjointOperator,
    metric_jordan_form,
    scalar_product,
)

__all__ = [
    "AmbientCT",
    "TangentOperator",
    "ICTData",
    "evaluate_ambient_ct",
    "restrict_ct",
    "is_reducible",
    "ict_chart_to_ambient",
    "ict_metric",
    "characteristic_killing_tensor",
    "ON_SURFACE_TOL",
]

ON_SURFACE_TOL = 1e-10


@dataclass(frozen=True)
class AmbientCT:
    """L = A + 2 w (.) r + m r (.) r with constant A, w, m."""

    A: SelfAdjointOperator
    w: np.ndarray
    m: float

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        object.__setattr__(self, "w", w)
        if w.shape != (self.A.space.n,):
            raise DimensionError("w must be an ambient vector")


def evaluate_ambient_ct(ct: AmbientCT, p) -> np.ndarray:
    """Operator of the concircular tensor at the point p (r = p)."""
    p = np.asarray(p, dtype=float)
    g = ct.A.space.g
    # operator of u (.) v is (u <v,.> + v <u,.>) / 2
    wp = np.outer(ct.w, p @ g) + np.outer(p, ct.w @ g)
    return ct.A.M + wp + ct.m * np.outer(p, p @ g)


@dataclass(frozen=True)
class TangentOperator:
    """A self-adjoint operator on T_p of a hyperquadric, in a signed
    orthonormal frame (``eps`` holds the frame's <e_i, e_i> signs)."""

    p: np.ndarray
    kappa: int
    space: AmbientSpace
    frame: np.ndarray  # n x (n-1), columns are the frame vectors
    eps: np.ndarray
    matrix: np.ndarray  # (n-1) x (n-1) operator matrix in the frame

    def eigenvalues(self) -> np.ndarray:
        vals = np.linalg.eigvals(self.matrix)
        return np.sort(vals.real + 0.0)

    def induced_metric(self) -> np.ndarray:
        return np.diag(self.eps.astype(float))

    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def covariant(self) -> np.ndarray:
        """Frame components of the metrically equivalent symmetric tensor."""
        return np.diag(self.eps.astype(float)) @ self.matrix

    def shifted(self, alpha: float, beta: float) -> "TangentOperator":
        return TangentOperator(
            self.p,
            self.kappa,
            self.space,
            self.frame,
            self.eps,
            alpha * self.matrix + beta * np.eye(self.matrix.shape[0]),
        )


def tangent_frame(p, space: AmbientSpace, kappa: int) -> tuple[np.ndarray, np.ndarray]:
    """A signed g-orthonormal frame of p-perp, by pivoted Gram-Schmidt."""
    p = np.asarray(p, dtype=float)
    g = space.g
    n = space.n
    cand = [np.eye(n)[i] - kappa * p * scalar_product(p, np.eye(n)[i], space) for i in range(n)]
    frame: list[np.ndarray] = []
    eps: list[int] = []
    for _ in range(n - 1):
        best, best_norm = None, 0.0
        for v in cand:
            w = v.copy()
            for e, s in zip(frame, eps):
                w -= s * float(w @ g @ e) * e
            norm2 = float(w @ g @ w)
            if abs(norm2) > abs(best_norm):
                best, best_norm = w, norm2
        if best is None or abs(best_norm) < 1e-12:
            raise SingularityError("cannot build a non-degenerate tangent frame")
        frame.append(best / np.sqrt(abs(best_norm)))
        eps.append(1 if best_norm > 0 else -1)
    return np.column_stack(frame), np.array(eps)


def restrict_ct(
    A: SelfAdjointOperator, kappa: int, p, tol: float = ON_SURFACE_TOL
) -> TangentOperator:
    """The pullback of A to the hyperquadric at p, as a tangent operator."""
    p = np.asarray(p, dtype=float)
    pp = scalar_product(p, p, A.space)
    if abs(pp - 1.0 / kappa) > tol:
        raise OffSurfaceError(f"<p,p> = {pp} but 1/kappa = {1.0 / kappa}")
    frame, eps = tangent_frame(p, A.space, kappa)
    g = A.space.g
    # M_ij = eps_i <e_i, A e_j>; the projector is absorbed by tangency
    M = np.diag(eps.astype(float)) @ (frame.T @ g @ A.M @ frame)
    return TangentOperator(p, kappa, A.space, frame, eps, M)


def is_reducible(A: SelfAdjointOperator) -> bool:
    """True iff A has a real eigenspace of dimension >= 2."""
    form = metric_jordan_form(A)
    geo: dict[float, int] = {}
    for b in form.blocks:
        if b.im > 0.0:
            continue
        geo[b.lam] = geo.get(b.lam, 0) + 1  # every block owns one eigenvector
    return any(count >= 2 for count in geo.values())


def characteristic_killing_tensor(
    A: SelfAdjointOperator, kappa: int, p
) -> TangentOperator:
    """K = Ltilde - tr(Ltilde) g: the standard Killing companion of the CT."""
    lt = restrict_ct(A, kappa, p)
    return lt.shifted(1.0, -lt.trace())


# ---------------------------------------------------------------------------
# irreducible-CT coordinate machinery


@dataclass(frozen=True)
class ICTData:
    """Shape data of A = J_k(0)^T (+) diag(lambda_{k+1}..lambda_n).

    ``diag`` lists (coordinate name, eigenvalue, eps) for the diagonal slots;
    ``complex_pair`` optionally replaces two diagonal slots by the conjugate
    pair lam +- i*im realized on the (t, x) plane (k must then be 0).
    """

    k: int  # nilpotent index: 0, 2 or 3
    eps0: int = 1
    diag: tuple[tuple[str, float, int], ...] = ()
    complex_pair: tuple[float, float] | None = None

    @property
    def eigenvalues(self) -> list[complex]:
        vals: list[complex] = [0.0] * self.k
        if self.complex_pair is not None:
            re, im = self.complex_pair
            vals += [complex(re, im), complex(re, -im)]
        vals += [lam for _, lam, _ in self.diag]
        return vals

    def char_poly_coeffs(self) -> np.ndarray:
        """Ascending complex coefficients of the full characteristic polynomial."""
        coeffs = np.zeros(self.k + 1, dtype=complex)
        coeffs[self.k] = 1.0
        if self.complex_pair is not None:
            re, im = self.complex_pair
            quad = np.array([re * re + im * im, -2.0 * re, 1.0], dtype=complex)
            coeffs = np.convolve(coeffs, quad)
        for _, lam, _ in self.diag:
            coeffs = np.convolve(coeffs, np.array([-lam, 1.0], dtype=complex))
        return coeffs

    def char_poly_prime(self, z: complex) -> complex:
        coeffs = self.char_poly_coeffs()
        dcoeffs = coeffs[1:] * np.arange(1, len(coeffs))
        return _horner(dcoeffs, z)


def _horner(coeffs_ascending, z: complex) -> complex:
    out = 0.0 + 0.0j
    for c in reversed(coeffs_ascending):
        out = out * z + c
    return out


def _poly_from_roots(roots) -> np.ndarray:
    """Ascending coefficient list of prod (z - r_i)."""
    coeffs = np.array([1.0])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([-r, 1.0]))
    return coeffs


def _series_quotient(num: np.ndarray, den: np.ndarray, order: int) -> np.ndarray:
    """Taylor coefficients (at 0) of num/den up to the given order."""
    if abs(den[0]) < 1e-300:
        raise SingularityError("denominator polynomial vanishes at 0")
    out = np.zeros(order + 1)
    for l in range(order + 1):
        acc = num[l] if l < len(num) else 0.0
        for j in range(1, l + 1):
            if j < len(den):
                acc -= den[j] * out[l - j]
        out[l] = acc / den[0]
    return out


def ict_chart_to_ambient(
    data: ICTData, kappa: int, u: tuple[float, ...]
) -> dict[str, float]:
    """Ambient (squared / bilinear) coordinate values from the eigenfunctions.

    Returns a map of target expressions over the pseudo-Cartesian coordinates:
    squared diagonal slots like "y^2", and for the nilpotent block the
    lightcone combinations "(t+x)^2", "(t+x)*y", "-t^2+x^2", "-t^2+x^2+y^2";
    a complex pair contributes "t^2+x^2" and "t^2-x^2".
    """
    u = tuple(float(v) for v in u)
    if len(set(u)) != len(u):
        raise SingularityError(f"repeated eigenfunction in {u}")
    out: dict[str, float] = {}

    if data.k:
        p_coeffs = _poly_from_roots(u)
        den = _poly_from_roots([lam for _, lam, _ in data.diag])
        taylor = _series_quotient(p_coeffs, den, data.k - 1)
        s = [data.eps0 / kappa * taylor[l] for l in range(data.k)]
        # lightcone order (eta, xi) for k=2 and (eta, y, xi) for k=3
        out["(t+x)^2"] = s[0]
        if out["(t+x)^2"] < 0:
            raise ChartRangeError("(t+x)^2 came out negative: outside the web region")
        if data.k == 2:
            out["-t^2+x^2"] = s[1]  # = 2 eta xi
        else:
            out["(t+x)*y"] = 0.5 * s[1]
            out["-t^2+x^2+y^2"] = s[2]

    if data.complex_pair is not None:
        re, im = data.complex_pair
        lam = complex(re, im)
        # the complex slot carries an effective eps of -1: fixed by matching
        # the printed complex-ellipsoidal displays (t^2-x^2 line)
        chi2 = (-1.0 / kappa) * _p_of(u, lam) / data.char_poly_prime(lam)
        out["t^2+x^2"] = 2.0 * abs(chi2)
        out["t^2-x^2"] = 2.0 * chi2.real

    for name, lam, eps in data.diag:
        val = (eps / kappa) * (_p_of(u, lam) / data.char_poly_prime(lam)).real
        if val < -1e-12:
            raise ChartRangeError(
                f"{name}^2 = {val} is negative: outside the web region"
            )
        out[f"{name}^2"] = max(val, 0.0)
    return out


def _p_of(u, z: complex) -> complex:
    out = 1.0 + 0.0j
    for ui in u:
        out *= z - ui
    return out


def ict_metric(u, lambdas, kappa: int) -> tuple[float, ...]:
    """Diagonal metric g_ii = -(1/4 kappa) prod_{j!=i}(u_i-u_j) / prod_j (u_i-lam_j)."""
    u = tuple(float(v) for v in u)
    out = []
    for i, ui in enumerate(u):
        num = 1.0
        for j, uj in enumerate(u):
            if j != i:
                if ui == uj:
                    raise SingularityError("coincident eigenfunctions")
                num *= ui - uj
        den = 1.0 + 0.0j
        for lam in lambdas:
            den *= ui - lam
        if abs(den) < 1e-300:
            raise SingularityError("eigenfunction coincides with an eigenvalue")
        out.append(float((-num / (4.0 * kappa * den)).real))
    return tuple(out)
