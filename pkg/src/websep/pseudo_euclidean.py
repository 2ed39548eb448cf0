"""Linear algebra over the pseudo-Euclidean spaces E^n_nu (nu <= 1).

Provides scalar products, self-adjoint operators, their metric-Jordan
canonical forms (the classification invariant of a pair (A, g)), canonical
realizations, and geometric equivalence A1 = alpha*A2 + beta*g up to isometry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BoundaryError,
    ClassificationError,
    DimensionError,
    DomainError,
    SelfAdjointnessError,
)

__all__ = [
    "AmbientSpace",
    "SelfAdjointOperator",
    "SignedJordanBlock",
    "MetricJordanForm",
    "scalar_product",
    "metric_jordan_form",
    "realize_canonical",
    "geometric_equivalence",
    "random_isometry",
    "operator_to_json",
    "operator_from_json",
]

SELF_ADJOINT_TOL = 1e-13
CLUSTER_TOL = 1e-9  # relative eigenvalue clustering width
RANK_TOL = 1e-10  # relative singular-value threshold for nilpotent structure
NIL_TOL = 1e-4  # absorption width for eigvals smearing around defective eigenvalues


def _skew_normal(k: int) -> np.ndarray:
    return np.eye(k)[::-1].copy()


@dataclass(frozen=True)
class AmbientSpace:
    """E^n_nu with an explicit bilinear form matrix.

    ``basis`` is "cartesian" (g = diag(-1,...,+1,...)), "lightcone"
    (skew-normal pair on the first two coordinates, +1 on the rest), or
    "custom" with the form supplied explicitly.
    """

    n: int
    nu: int
    basis: str = "cartesian"
    g_custom: tuple | None = None

    def __post_init__(self):
        if self.nu not in (0, 1) or self.n < 2:
            raise DimensionError(f"unsupported space E^{self.n}_{self.nu}")
        if self.basis == "lightcone" and self.nu != 1:
            raise DimensionError("lightcone basis needs signature index 1")

    @property
    def g(self) -> np.ndarray:
        if self.basis == "cartesian":
            return np.diag([-1.0] * self.nu + [1.0] * (self.n - self.nu))
        if self.basis == "lightcone":
            g = np.eye(self.n)
            g[:2, :2] = _skew_normal(2)
            return g
        if self.basis == "custom":
            return np.array(self.g_custom, dtype=float)
        raise DimensionError(f"unknown basis {self.basis!r}")

    @classmethod
    def custom(cls, g: np.ndarray, nu: int) -> "AmbientSpace":
        g = np.asarray(g, dtype=float)
        return cls(n=g.shape[0], nu=nu, basis="custom", g_custom=tuple(map(tuple, g)))


E4_1 = AmbientSpace(4, 1)
E3_1 = AmbientSpace(3, 1)


def scalar_product(x, y, space: AmbientSpace) -> float:
    """<x, y> in the given space."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (space.n,) or y.shape != (space.n,):
        raise DimensionError(
            f"vectors of shape {x.shape}, {y.shape} in E^{space.n}_{space.nu}"
        )
    return float(x @ space.g @ y)


@dataclass(frozen=True)
class SelfAdjointOperator:
    """An operator M on E^n_nu with g M symmetric."""

    M: np.ndarray
    space: AmbientSpace

    def __post_init__(self):
        M = np.asarray(self.M, dtype=float)
        object.__setattr__(self, "M", M)
        if M.shape != (self.space.n, self.space.n):
            raise DimensionError(f"operator shape {M.shape} in E^{self.space.n}")
        gM = self.space.g @ M
        scale = max(1.0, float(np.abs(gM).max()))
        if np.abs(gM - gM.T).max() > SELF_ADJOINT_TOL * scale:
            raise SelfAdjointnessError(
                "g*M is not symmetric: operator is not self-adjoint"
            )

    @property
    def norm(self) -> float:
        return max(float(np.linalg.norm(self.M, 2)), 1e-300)

    def covariant(self) -> np.ndarray:
        """The symmetric tensor g M metrically equivalent to the operator."""
        return self.space.g @ self.M

    def shifted(self, alpha: float, beta: float) -> "SelfAdjointOperator":
        """alpha*A + beta*Id (the operator of alpha*A + beta*g)."""
        return SelfAdjointOperator(
            alpha * self.M + beta * np.eye(self.space.n), self.space
        )


@dataclass(frozen=True)
class SignedJordanBlock:
    """J_{eps k}(lam); a conjugate complex pair is stored once with im > 0.

    eps is 0 for a complex pair (the realizing plane is Lorentzian), else +-1.
    """

    k: int
    eps: int
    lam: float
    im: float = 0.0

    @property
    def dim(self) -> int:
        return 2 if self.im > 0.0 else self.k

    @property
    def negatives(self) -> int:
        # timelike directions contributed by the realizing metric block
        if self.im > 0.0:
            return 1
        if self.k == 1:
            return 1 if self.eps < 0 else 0
        return self.k // 2 if self.eps > 0 else (self.k + 1) // 2

    def sort_key(self):
        eps_rank = {-1: 0, 0: 1, 1: 2}[self.eps]
        return (-self.k, -self.im, eps_rank, self.lam)

    def label(self) -> str:
        if self.im > 0.0:
            return f"J1({self.lam:+g}{self.im:+g}i) pair"
        sign = "-" if self.eps < 0 else ""
        return f"J{sign}{self.k}({self.lam:g})"


@dataclass(frozen=True)
class MetricJordanForm:
    blocks: tuple[SignedJordanBlock, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=lambda b: b.sort_key()))
        )

    @property
    def n(self) -> int:
        return sum(b.dim for b in self.blocks)

    @property
    def nu(self) -> int:
        return sum(b.negatives for b in self.blocks)

    def structure(self) -> tuple:
        """Eigenvalue-free shape: used as the first-stage comparison key."""
        return tuple((b.k, b.eps, b.im > 0.0) for b in self.blocks)

    def close_to(self, other: "MetricJordanForm", tol: float = 1e-8) -> bool:
        if self.structure() != other.structure():
            return False
        scale = max(
            1.0,
            *(abs(b.lam) + b.im for b in self.blocks),
            *(abs(b.lam) + b.im for b in other.blocks),
        )
        return all(
            abs(b1.lam - b2.lam) <= tol * scale and abs(b1.im - b2.im) <= tol * scale
            for b1, b2 in zip(self.blocks, other.blocks)
        )

    def label(self) -> str:
        return " + ".join(b.label() for b in self.blocks)


def _null_space(M: np.ndarray, tol: float) -> np.ndarray:
    """Columns spanning ker(M): singular values below the absolute tol are zero."""
    _, s, vt = np.linalg.svd(M)
    rank = int(np.sum(s > tol))
    return vt[rank:].T


def _gram_signature(V: np.ndarray, g: np.ndarray, tol: float) -> tuple[int, int, int]:
    gram = V.T @ g @ V
    w = np.linalg.eigvalsh(0.5 * (gram + gram.T))
    pos = int(np.sum(w > tol))
    neg = int(np.sum(w < -tol))
    return pos, neg, V.shape[1] - pos - neg


def metric_jordan_form(A: SelfAdjointOperator) -> MetricJordanForm:
    """Canonical form of the pair (A, g); unique up to the canonical ordering.

    Real eigenvalues within CLUSTER_TOL * ||A|| are clustered; the nilpotent
    structure inside a cluster is read off the rank sequence of (A - lam I)^m.
    np.linalg.eigvals smears a defective eigenvalue over a radius of order
    eps**(1/k), so candidate clusters are first formed at the coarse NIL_TOL
    width, then verified against the rank data and split when it disagrees.
    The sign of a J_{eps 2}(lam) block is fixed as eps = sign<v1, (A-lam)v1>
    for a height-2 generalized eigenvector v1 (choice-independent).
    """
    M, g = A.M, A.space.g
    n = A.space.n
    scale = A.norm

    eig = np.linalg.eigvals(M)
    real = sorted(float(z.real) for z in eig if abs(z.imag) <= NIL_TOL * scale)
    complexes = [z for z in eig if z.imag > NIL_TOL * scale]

    blocks: list[SignedJordanBlock] = []
    for z in complexes:
        blocks.append(SignedJordanBlock(k=1, eps=0, lam=float(z.real), im=float(z.imag)))

    clusters: list[list[float]] = []
    for lam in real:
        if clusters and lam - clusters[-1][-1] <= NIL_TOL * scale:
            clusters[-1].append(lam)
        else:
            clusters.append([lam])
    for members in clusters:
        blocks.extend(_analyze_cluster(M, g, scale, members))

    form = MetricJordanForm(tuple(blocks))
    if form.n != n or form.nu != A.space.nu:
        raise ClassificationError(
            f"computed form {form.label()} does not realize signature "
            f"({A.space.nu}, {n - A.space.nu})"
        )
    return form


def _analyze_cluster(
    M: np.ndarray, g: np.ndarray, scale: float, members: list[float]
) -> list[SignedJordanBlock]:
    """Jordan blocks for one candidate eigenvalue cluster, splitting on demand."""
    rep = float(np.mean(members))
    mult = len(members)
    n = M.shape[0]
    try:
        # powers of the normalized shift keep the rank threshold meaningful
        B = (M - rep * np.eye(n)) / max(scale, 1e-300)
        kers = [
            _null_space(np.linalg.matrix_power(B, m + 1), RANK_TOL)
            for m in range(min(3, mult))
        ]
        B = B * scale
        dims = [K.shape[1] for K in kers]
        if dims[0] == 0:
            raise _SplitCluster
        # number of blocks of size >= j is dims[j-1] - dims[j-2]
        sizes = [dims[0]] + [d2 - d1 for d1, d2 in zip(dims, dims[1:])]
        counts = [
            sizes[j] - (sizes[j + 1] if j + 1 < len(sizes) else 0)
            for j in range(len(sizes))
        ]
        if sum((j + 1) * c for j, c in enumerate(counts)) != mult:
            raise _SplitCluster
        n_j2 = counts[1] if len(counts) > 1 else 0
        n_j3 = counts[2] if len(counts) > 2 else 0

        blocks: list[SignedJordanBlock] = []
        if n_j3 > 0:
            v1 = _cycle_top(B, kers[2], kers[1])
            v2 = B @ v1
            if float(v2 @ g @ v2) <= 0.0:
                raise ClassificationError("J_{-3} block is inadmissible in E^n_1")
            blocks.append(SignedJordanBlock(k=3, eps=1, lam=rep))
        if n_j2 > 0:
            v1 = _cycle_top(B, kers[1], kers[0])
            eps = 1 if float(v1 @ g @ (B @ v1)) > 0.0 else -1
            blocks.append(SignedJordanBlock(k=2, eps=eps, lam=rep))

        # k>=2 blocks own one eigenvector each, which shows up as a null
        # direction of g restricted to the eigenspace; the signed J_1 blocks
        # are read off the remaining signature
        pos, neg, zero = _gram_signature(kers[0], g, RANK_TOL * max(scale, 1.0))
        if zero != n_j2 + n_j3 or pos + neg + zero != dims[0]:
            raise _SplitCluster
        blocks.extend(SignedJordanBlock(k=1, eps=1, lam=rep) for _ in range(pos))
        blocks.extend(SignedJordanBlock(k=1, eps=-1, lam=rep) for _ in range(neg))
        return blocks
    except _SplitCluster:
        groups = _split_members(members, 3.0 * CLUSTER_TOL * scale)
        if len(groups) == 1:
            raise ClassificationError(
                f"eigenvalue clustering ambiguous near {rep:.6e}"
            ) from None
        out: list[SignedJordanBlock] = []
        for group in groups:
            out.extend(_analyze_cluster(M, g, scale, group))
        return out


class _SplitCluster(Exception):
    """Internal: rank data contradicts the candidate cluster."""


def _split_members(members: list[float], gap: float) -> list[list[float]]:
    groups: list[list[float]] = [[members[0]]]
    for lam in members[1:]:
        if lam - groups[-1][-1] > gap:
            groups.append([lam])
        else:
            groups[-1].append(lam)
    return groups


def _cycle_top(B: np.ndarray, ker_hi: np.ndarray, ker_lo: np.ndarray) -> np.ndarray:
    """A generalized eigenvector in ker_hi with the largest component off ker_lo."""
    proj = ker_hi - ker_lo @ (ker_lo.T @ ker_hi)
    norms = np.linalg.norm(proj, axis=0)
    v = proj[:, int(np.argmax(norms))]
    return v / np.linalg.norm(v)


def realize_canonical(form: MetricJordanForm) -> SelfAdjointOperator:
    """Matrices (A, g) realizing the form, A = (+) J_k(lam)^T, g = (+) eps S_k."""
    if form.nu > 1:
        raise DomainError(f"form needs signature index {form.nu} > 1")
    A_blocks, g_blocks = [], []
    for b in form.blocks:
        if b.im > 0.0:
            A_blocks.append(np.array([[b.lam, -b.im], [b.im, b.lam]]))
            g_blocks.append(np.diag([-1.0, 1.0]))
        elif b.k == 1:
            A_blocks.append(np.array([[b.lam]]))
            g_blocks.append(np.array([[float(b.eps)]]))
        else:
            if b.k == 3 and b.eps < 0:
                raise DomainError("J_{-3} is inadmissible")
            J = b.lam * np.eye(b.k) + np.diag(np.ones(b.k - 1), -1)
            A_blocks.append(J)
            g_blocks.append(b.eps * _skew_normal(b.k))
    A = _block_diag(A_blocks)
    g = _block_diag(g_blocks)
    space = AmbientSpace.custom(g, nu=form.nu)
    return SelfAdjointOperator(A, space)


def _block_diag(blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n))
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i : i + k, i : i + k] = b
        i += k
    return out


def geometric_equivalence(
    A1: SelfAdjointOperator, A2: SelfAdjointOperator, tol: float = 1e-8
) -> tuple[float, float] | None:
    """Search (alpha != 0, beta) with mJf(A1) = mJf(alpha*A2 + beta*g).

    Returns None when no affine reparameterization matches. A1 and A2 may
    live in different bases of the same abstract space.
    """
    if A1.space.n != A2.space.n or A1.space.nu != A2.space.nu:
        return None
    f1 = metric_jordan_form(A1)
    f2 = metric_jordan_form(A2)

    scale = max(1.0, A1.norm, A2.norm)
    vals1 = _anchor_values(f1)
    vals2 = _anchor_values(f2)
    candidates: list[tuple[float, float]] = []

    im1 = [b.im for b in f1.blocks if b.im > 0]
    im2 = [b.im for b in f2.blocks if b.im > 0]
    if im1 and im2:
        re1 = next(b.lam for b in f1.blocks if b.im > 0)
        re2 = next(b.lam for b in f2.blocks if b.im > 0)
        for sgn in (1.0, -1.0):
            alpha = sgn * im1[0] / im2[0]
            candidates.append((alpha, re1 - alpha * re2))
    if len(vals1) >= 2 and len(vals2) >= 2:
        span1 = vals1[-1] - vals1[0]
        span2 = vals2[-1] - vals2[0]
        if span2 > 0:
            alpha = span1 / span2
            candidates.append((alpha, vals1[0] - alpha * vals2[0]))
            candidates.append((-alpha, vals1[0] + alpha * vals2[-1]))
    if len(vals1) == 1 and len(vals2) == 1:
        candidates.append((1.0, vals1[0] - vals2[0]))
        candidates.append((-1.0, vals1[0] + vals2[0]))

    for alpha, beta in candidates:
        if abs(alpha) < 1e-14:
            continue
        try:
            shifted = metric_jordan_form(A2.shifted(alpha, beta))
        except ClassificationError:
            continue
        if f1.close_to(shifted, tol=tol * max(1.0, scale)):
            return float(alpha), float(beta)
    return None


def _anchor_values(form: MetricJordanForm) -> list[float]:
    """Sorted distinct real eigenvalues (complex pairs contribute Re)."""
    vals = sorted({round(b.lam, 12) for b in form.blocks})
    return [float(v) for v in vals]


def random_isometry(space: AmbientSpace, rng: np.random.Generator) -> np.ndarray:
    """A random element of O(g) built from plane rotations and boosts."""
    g = space.g
    n = space.n
    lam = np.eye(n)
    diag = np.diag(g)
    for i, j in itertools.combinations(range(n), 2):
        if space.basis != "cartesian":
            raise DomainError("random_isometry expects a cartesian-basis space")
        R = np.eye(n)
        if diag[i] * diag[j] > 0:
            th = rng.uniform(0, 2 * np.pi)
            R[i, i] = R[j, j] = np.cos(th)
            R[i, j] = -np.sin(th)
            R[j, i] = np.sin(th)
        else:
            phi = rng.uniform(-1.0, 1.0)
            R[i, i] = R[j, j] = np.cosh(phi)
            R[i, j] = R[j, i] = np.sinh(phi)
        lam = lam @ R
    return lam


def operator_to_json(op: SelfAdjointOperator) -> dict:
    if op.space.basis not in ("cartesian", "lightcone"):
        raise DomainError("JSON interchange supports cartesian or lightcone bases")
    return {
        "n": op.space.n,
        "nu": op.space.nu,
        "basis": op.space.basis,
        "matrix": [[float(v) for v in row] for row in op.M],
    }


def operator_from_json(data: dict) -> SelfAdjointOperator:
    try:
        space = AmbientSpace(int(data["n"]), int(data["nu"]), str(data["basis"]))
        return SelfAdjointOperator(np.array(data["matrix"], dtype=float), space)
    except KeyError as exc:
        raise DomainError(f"parameter-tensor JSON missing field {exc}") from None


def require_boundary_free(value: float, lo: float, hi: float, what: str) -> float:
    """Reject recovered case parameters that sit on a case boundary."""
    margin = 1e-7 * max(1.0, abs(hi), abs(lo))
    if not (lo + margin < value < hi - margin):
        raise BoundaryError(f"{what} = {value} lies on a case boundary ({lo}, {hi})")
    return value
