"""Warped-product decompositions of E^n_nu adapted to reducible tensors.

Initial data (pbar; V_0 (+) ... (+) V_k; a_1..a_k) in canonical form
determines spherical factors N_i (planes, quadrics, or parabolic embeddings),
warping functions rho_i = <a_i, .>, and the decomposition map psi. The
construction from a parameter tensor follows the eigenspace algorithm: one
factor per multidimensional eigenspace, with the unit-vector choice in a
non-degenerate eigenspace exposed to the caller.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    DomainError,
    EmptyRestrictionError,
    FactorMembershipError,
    IrreducibleError,
    SingularityError,
)
from .pseudo_euclidean import (
    RANK_TOL,
    AmbientSpace,
    SelfAdjointOperator,
    _null_space,
    scalar_product,
)

__all__ = [
    "InitialData",
    "SphereFactor",
    "WarpedProductDecomposition",
    "RestrictedDecomposition",
    "sphere_determined_by",
    "build_decomposition",
    "warped_map",
    "image_membership",
    "algorithm_wp",
    "restrict_to_hyperquadric",
]

_TOL = 1e-10


def _proj_matrix(B: np.ndarray, g: np.ndarray) -> np.ndarray:
    """g-orthogonal projector onto the span of the columns of B."""
    gram = B.T @ g @ B
    if abs(np.linalg.det(gram)) < 1e-12:
        raise SingularityError("projection onto a degenerate subspace")
    return B @ np.linalg.solve(gram, B.T @ g)


def _orth_complement(B: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Basis of the g-orthogonal complement of span(B)."""
    if B.size == 0:
        return np.eye(g.shape[0])
    return _null_space(B.T @ g, RANK_TOL)


@dataclass(frozen=True)
class InitialData:
    """Canonical-form initial data for a warped product of E^n_nu."""

    space: AmbientSpace
    p_bar: np.ndarray
    V0: np.ndarray  # n x d0 basis
    subspaces: tuple[np.ndarray, ...]  # V_1..V_k bases
    a_vectors: tuple[np.ndarray, ...]

    def __post_init__(self):
        g = self.space.g
        k = len(self.subspaces)
        if len(self.a_vectors) != k or k == 0:
            raise DimensionError("need one a_i per spherical subspace")
        dims = self.V0.shape[1] + sum(V.shape[1] for V in self.subspaces)
        if dims != self.space.n:
            raise DimensionError("subspaces do not span the ambient space")
        for i, Vi in enumerate(self.subspaces):
            for Vj in self.subspaces[i + 1 :]:
                if np.abs(Vi.T @ g @ Vj).max() > 1e-9:
                    raise DomainError("spherical subspaces are not orthogonal")
            if np.abs(Vi.T @ g @ self.V0).max() > 1e-9:
                raise DomainError("V_i is not orthogonal to V_0")
        for i, ai in enumerate(self.a_vectors):
            if abs(scalar_product(self.p_bar, ai, self.space) - 1.0) > 1e-9:
                raise DomainError(f"<pbar, a_{i + 1}> != 1: data not canonical")
            for aj in self.a_vectors[i + 1 :]:
                if abs(scalar_product(ai, aj, self.space)) > 1e-9:
                    raise DomainError("a_i are not pairwise orthogonal")

    @property
    def k(self) -> int:
        return len(self.subspaces)


@dataclass(frozen=True)
class SphereFactor:
    """The maximal sphere N_i determined by (pbar; V_i; a_i)."""

    kind: str  # "plane" | "curved" | "parabolic"
    space: AmbientSpace
    p_bar: np.ndarray
    a: np.ndarray
    V: np.ndarray
    center: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.V.shape[1]

    @property
    def curvature(self) -> float:
        if self.kind != "curved":
            raise DomainError(f"{self.kind} factor has no curvature scalar")
        return scalar_product(self.a, self.a, self.space)

    def type_name(self) -> str:
        d = self.dim
        if self.kind == "plane":
            return f"E{d}"
        if self.kind == "parabolic":
            return f"E{d} (parabolic)"
        g = self.space.g
        span = np.column_stack([self.a.reshape(-1, 1), self.V])
        negs = int(np.sum(np.linalg.eigvalsh(span.T @ g @ span) < 0))
        if self.curvature < 0:
            return f"H{d}"
        return f"dS{d}" if negs == 1 else f"S{d}"

    def is_disconnected(self) -> bool:
        """Quadrics with a second component: H^d (two sheets) and dS_1."""
        if self.kind != "curved":
            return False
        return self.curvature < 0 or (self.dim == 1 and self.type_name() == "dS1")

    def contains(self, q, tol: float = 1e-8) -> bool:
        g = self.space.g
        if self.kind == "plane":
            res = q - self.p_bar - _proj_matrix(self.V, g) @ (q - self.p_bar)
            return bool(np.abs(res).max() < tol)
        if self.kind == "curved":
            span = np.column_stack([self.a.reshape(-1, 1), self.V])
            rel = q - self.center
            res = rel - _proj_matrix(span, g) @ rel
            on_quadric = abs(float(rel @ g @ rel) - 1.0 / self.curvature) < tol
            on_sheet = True
            if self.is_disconnected():
                on_sheet = float(rel @ g @ self.a) > 0
            return bool(np.abs(res).max() < tol) and on_quadric and on_sheet
        w = _proj_matrix(self.V, g) @ (q - self.p_bar)
        model = self.p_bar + w - 0.5 * float(w @ g @ w) * self.a
        return bool(np.abs(q - model).max() < tol)

    def sample(self, rng: np.random.Generator):
        """A point of N_i (on the connected component through pbar)."""
        g = self.space.g
        if self.kind == "plane":
            return self.p_bar + self.V @ rng.normal(size=self.dim)
        if self.kind == "parabolic":
            w = self.V @ rng.normal(size=self.dim)
            return self.p_bar + w - 0.5 * float(w @ g @ w) * self.a
        span = np.column_stack([self.a.reshape(-1, 1), self.V])
        target = 1.0 / self.curvature
        for _ in range(1000):
            x = span @ rng.normal(size=span.shape[1])
            n2 = float(x @ g @ x)
            if n2 * target <= 0:
                continue
            x = x / np.sqrt(abs(n2 / target))
            if self.is_disconnected() and float(x @ g @ self.a) <= 0:
                x = -x
            return self.center + x
        raise SingularityError("factor sampling failed")

    def tangent_basis(self, q) -> np.ndarray:
        g = self.space.g
        if self.kind == "plane":
            return self.V
        if self.kind == "parabolic":
            w = _proj_matrix(self.V, g) @ (q - self.p_bar)
            cols = [
                self.V[:, j] - float(w @ g @ self.V[:, j]) * self.a
                for j in range(self.dim)
            ]
            return np.column_stack(cols)
        rel = q - self.center
        span = np.column_stack([self.a.reshape(-1, 1), self.V])
        cols = []
        for j in range(span.shape[1]):
            v = span[:, j] - float(rel @ g @ span[:, j]) / float(rel @ g @ rel) * rel
            if np.abs(v).max() > 1e-9:
                cols.append(v)
        M = np.column_stack(cols)
        q_, r_ = np.linalg.qr(M)
        keep = np.abs(np.diag(r_)) > 1e-9 * max(1.0, np.abs(r_).max())
        return q_[:, keep]


def sphere_determined_by(p_bar, V, a, space: AmbientSpace) -> SphereFactor:
    """Case split on <a, a>: plane, curved quadric, or parabolic embedding."""
    p_bar = np.asarray(p_bar, dtype=float)
    V = np.asarray(V, dtype=float)
    a = np.asarray(a, dtype=float)
    if V.ndim != 2 or V.shape[0] != space.n or V.shape[1] == 0:
        raise DimensionError("V must be an n x d basis with d >= 1")
    if np.linalg.matrix_rank(V) < V.shape[1]:
        raise DomainError("degenerate V basis")
    if np.abs(a).max() < _TOL:
        return SphereFactor("plane", space, p_bar, np.zeros(space.n), V)
    aa = scalar_product(a, a, space)
    if abs(aa) < _TOL * float(a @ a):
        return SphereFactor("parabolic", space, p_bar, a, V)
    center = p_bar - a / aa
    return SphereFactor("curved", space, p_bar, a, V, center=center)


@dataclass(frozen=True)
class WarpedProductDecomposition:
    initial: InitialData
    factors: tuple[SphereFactor, ...]
    null_b: np.ndarray | None = None  # second null leg, only when a_1 is lightlike

    @property
    def space(self) -> AmbientSpace:
        return self.initial.space

    @property
    def is_null(self) -> bool:
        return self.null_b is not None

    def rho(self, p0) -> np.ndarray:
        return np.array(
            [scalar_product(p0, a, self.space) for a in self.initial.a_vectors]
        )

    def sample_base(self, rng: np.random.Generator, kappa: int | None = None):
        """A point of N_0 (all rho_i > 0), optionally on the kappa quadric."""
        g = self.space.g
        V0 = self.initial.V0
        for _ in range(2000):
            p0 = V0 @ rng.normal(size=V0.shape[1])
            if kappa is not None:
                n2 = float(p0 @ g @ p0)
                if n2 * kappa <= 0:
                    continue
                p0 = p0 / np.sqrt(abs(n2 * kappa))
            if np.all(self.rho(p0) > 1e-6):
                return p0
        raise EmptyRestrictionError("could not sample the geodesic factor")


def build_decomposition(initial: InitialData) -> WarpedProductDecomposition:
    g = initial.space.g
    factors = tuple(
        sphere_determined_by(initial.p_bar, V, a, initial.space)
        for V, a in zip(initial.subspaces, initial.a_vectors)
    )
    null_b = None
    null_count = sum(1 for f in factors if f.kind == "parabolic")
    if null_count > 1:
        raise DomainError("at most one lightlike a_i is supported")
    if null_count == 1:
        if len(factors) != 1:
            raise DomainError("a lightlike factor cannot be mixed with others")
        a1 = initial.a_vectors[0]
        # b in V_0, null, <a_1, b> = 1
        V0 = initial.V0
        w = None
        for j in range(V0.shape[1]):
            if abs(scalar_product(V0[:, j], a1, initial.space)) > 1e-9:
                w = V0[:, j]
                break
        if w is None:
            raise DomainError("V_0 does not pair with the null a_1")
        w = w / scalar_product(w, a1, initial.space)
        null_b = w - 0.5 * float(w @ g @ w) * a1
    return WarpedProductDecomposition(initial, factors, null_b)


def warped_map(decomp: WarpedProductDecomposition, p0, points) -> np.ndarray:
    """psi(p_0, p_1, ..., p_k): an ambient point of E^n_nu."""
    initial = decomp.initial
    g = decomp.space.g
    p0 = np.asarray(p0, dtype=float)
    points = [np.asarray(p, dtype=float) for p in points]
    if len(points) != initial.k:
        raise DimensionError("one factor point per spherical factor")
    rho = decomp.rho(p0)
    if np.any(rho <= 0):
        raise FactorMembershipError(f"rho(p0) = {rho} must be positive on N_0")
    for f, p in zip(decomp.factors, points):
        if not f.contains(p):
            raise FactorMembershipError(f"point {p} is not on the {f.type_name()} factor")

    if decomp.is_null:
        a1, b = initial.a_vectors[0], decomp.null_b
        W0 = _orth_complement(
            np.column_stack([a1.reshape(-1, 1), b.reshape(-1, 1)]), g
        )
        W0 = _intersect(W0, initial.V0, g)
        P0 = _proj_matrix(W0, g) if W0.shape[1] else np.zeros((decomp.space.n,) * 2)
        P1 = _proj_matrix(initial.subspaces[0], g)
        p1 = points[0]
        pp1 = P1 @ p1
        r = scalar_product(a1, p0, decomp.space)
        return (
            P0 @ p0
            + (scalar_product(b, p0, decomp.space) - 0.5 * r * float(pp1 @ g @ pp1)) * a1
            + r * b
            + r * pp1
        )

    A = np.column_stack([a.reshape(-1, 1) for a in initial.a_vectors])
    W0 = _intersect(_orth_complement(A, g), initial.V0, g)
    out = _proj_matrix(W0, g) @ p0 if W0.shape[1] else np.zeros(decomp.space.n)
    for f, p, r in zip(decomp.factors, points, rho):
        out = out + r * (p - f.center)
    return out


def _intersect(B1: np.ndarray, B2: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Basis of span(B1) n span(B2)."""
    comp = np.column_stack([_orth_complement(B1, g), _orth_complement(B2, g)])
    return _orth_complement(comp, g)


def image_membership(decomp: WarpedProductDecomposition, q) -> bool:
    """Whether q lies in the image of psi (connected factors enforced)."""
    q = np.asarray(q, dtype=float)
    g = decomp.space.g
    if decomp.is_null:
        return scalar_product(decomp.initial.a_vectors[0], q, decomp.space) > 0
    for f, a in zip(decomp.factors, decomp.initial.a_vectors):
        span = np.column_stack([a.reshape(-1, 1), f.V])
        pq = _proj_matrix(span, g) @ q
        n2 = float(pq @ g @ pq)
        if np.sign(n2) != np.sign(f.curvature):
            return False
        if f.is_disconnected() and scalar_product(a, pq, decomp.space) <= 0:
            return False
    return True


def algorithm_wp(
    A: SelfAdjointOperator, choices: tuple[str, ...] | None = None
) -> WarpedProductDecomposition:
    """Warped product adapted to A + r (.) r, one factor per multidimensional
    eigenspace of A.

    ``choices`` selects the unit vector a_i ("spacelike" or "timelike") in
    each non-degenerate multidimensional eigenspace, in ascending eigenvalue
    order; degenerate eigenspaces take the lightlike cycle bottom and consume
    no choice entry.
    """
    from .pseudo_euclidean import metric_jordan_form

    g = A.space.g
    n = A.space.n
    scale = A.norm
    form = metric_jordan_form(A)
    by_lam: dict[float, list] = {}
    for blk in form.blocks:
        if blk.im == 0.0:
            by_lam.setdefault(blk.lam, []).append(blk)

    subspaces: list[np.ndarray] = []
    a_vectors: list[np.ndarray] = []
    choice_cursor = 0
    choices = choices or ()
    for lam in sorted(by_lam):
        blks = by_lam[lam]
        if len(blks) < 2:  # geometric multiplicity 1: not an eigenspace factor
            continue
        B = (A.M - lam * np.eye(n)) / max(scale, 1e-300)
        E = _null_space(B, 1e-8)
        height = max(blk.k for blk in blks)
        if height > 1:
            # the cycle bottom v_r is the lightlike eigenvector; a_i = v_r
            kers = [
                _null_space(np.linalg.matrix_power(B, m), RANK_TOL)
                for m in range(1, height + 1)
            ]
            v1 = _pick_off(kers[-1], kers[-2])
            vr = np.linalg.matrix_power(B, height - 1) @ v1 * scale ** (height - 1)
            pairing = scalar_product(v1, vr, A.space)
            s = 1.0 / np.sqrt(abs(pairing))
            v1, vr = v1 * s, vr * s
            # deterministic orientation of the lightlike a_i (SVD sign is
            # arbitrary); the probe picks the eta > 0 convention in the
            # standard lightcone realizations
            probe = g @ (1.0 + 0.1 * np.arange(n))
            sign_ref = float(vr @ probe)
            if sign_ref == 0.0:
                sign_ref = vr[np.flatnonzero(vr)[0]]
            if sign_ref < 0:
                v1, vr = -v1, -vr
            a_i = vr
            Vi = _intersect(E, _orth_complement(v1.reshape(-1, 1), g), g)
        else:
            gram = E.T @ g @ E
            w, vecs = np.linalg.eigh(0.5 * (gram + gram.T))
            want = choices[choice_cursor] if choice_cursor < len(choices) else "spacelike"
            choice_cursor += 1
            target = -1.0 if want == "timelike" else 1.0
            idx = [j for j in range(len(w)) if np.sign(w[j]) == target]
            if not idx:
                raise DomainError(f"eigenspace has no {want} directions")
            a_i = E @ vecs[:, idx[0]]
            a_i = a_i / np.sqrt(abs(scalar_product(a_i, a_i, A.space)))
            if want == "timelike" and a_i[0] > 0:
                a_i = -a_i  # past-pointing representative, as in the -d_t choice
            Vi = _intersect(E, _orth_complement(a_i.reshape(-1, 1), g), g)
        subspaces.append(Vi)
        a_vectors.append(a_i)

    if not subspaces:
        raise IrreducibleError("A has no multidimensional eigenspace")

    V_all = np.column_stack(subspaces)
    V0 = _orth_complement(V_all, g)
    p_bar = np.zeros(n)
    non_null = [a for a in a_vectors if abs(scalar_product(a, a, A.space)) > 1e-9]
    for a in non_null:
        p_bar = p_bar + a / scalar_product(a, a, A.space)
    if len(non_null) != len(a_vectors):
        null_a = next(
            a for a in a_vectors if abs(scalar_product(a, a, A.space)) <= 1e-9
        )
        w = None
        for j in range(V0.shape[1]):
            if abs(scalar_product(V0[:, j], null_a, A.space)) > 1e-9:
                w = V0[:, j]
                break
        if w is None:
            raise DomainError("V_0 does not pair with the null a_1")
        w = w / scalar_product(w, null_a, A.space)
        p_bar = p_bar + w - 0.5 * float(w @ g @ w) * null_a

    initial = InitialData(
        space=A.space,
        p_bar=p_bar,
        V0=V0,
        subspaces=tuple(subspaces),
        a_vectors=tuple(a_vectors),
    )
    return build_decomposition(initial)


def _pick_off(ker_hi: np.ndarray, ker_lo: np.ndarray) -> np.ndarray:
    proj = ker_hi - ker_lo @ (ker_lo.T @ ker_hi)
    norms = np.linalg.norm(proj, axis=0)
    v = proj[:, int(np.argmax(norms))]
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class RestrictedDecomposition:
    """The warped product restricted to N_0(kappa) x N_1 x ... x N_k."""

    base: WarpedProductDecomposition
    kappa: int
    geodesic_type: str
    restricted_A: np.ndarray  # matrix of A|V0 in the V0 basis
    restricted_g: np.ndarray  # induced metric on V0 in the same basis

    def restricted_operator(self) -> SelfAdjointOperator:
        nu = int(np.sum(np.linalg.eigvalsh(self.restricted_g) < 0))
        space = AmbientSpace.custom(self.restricted_g, nu=nu)
        return SelfAdjointOperator(self.restricted_A, space)

    def factor_types(self) -> tuple[str, ...]:
        return (self.geodesic_type,) + tuple(
            f.type_name() for f in self.base.factors
        )


def restrict_to_hyperquadric(
    decomp: WarpedProductDecomposition,
    kappa: int,
    A: SelfAdjointOperator | None = None,
) -> RestrictedDecomposition:
    """Replace the geodesic factor by N_0(kappa); fails when it is empty."""
    g = decomp.space.g
    V0 = decomp.initial.V0
    try:
        rng = np.random.default_rng(12345)
        decomp.sample_base(rng, kappa=kappa)
    except EmptyRestrictionError:
        raise EmptyRestrictionError(
            f"N_0({kappa}) is empty: the warped product does not restrict"
        ) from None

    g0 = V0.T @ g @ V0
    negs = int(np.sum(np.linalg.eigvalsh(g0) < 0))
    d = V0.shape[1] - 1
    if kappa == -1:
        geo = f"H{d}"
    else:
        geo = f"dS{d}" if negs == 1 else f"S{d}"

    if A is not None:
        # A restricted to its invariant subspace V0, in the V0 basis
        AV0 = A.M @ V0
        coeff, *_ = np.linalg.lstsq(V0, AV0, rcond=None)
        if np.abs(V0 @ coeff - AV0).max() > 1e-8 * max(1.0, A.norm):
            raise DomainError("V_0 is not invariant under A")
        restricted_A = coeff
    else:
        restricted_A = np.zeros((V0.shape[1],) * 2)
    return RestrictedDecomposition(decomp, kappa, geo, restricted_A, g0)
