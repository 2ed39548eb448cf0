import numpy as np
import pytest

from websep.errors import (
    DomainError,
    EmptyRestrictionError,
    FactorMembershipError,
    IrreducibleError,
)
from websep.pseudo_euclidean import E4_1, SelfAdjointOperator, scalar_product
from websep.warped import (
    InitialData,
    algorithm_wp,
    build_decomposition,
    image_membership,
    restrict_to_hyperquadric,
    sphere_determined_by,
    warped_map,
)


def op4(M):
    return SelfAdjointOperator(np.array(M, dtype=float), E4_1)


def diag4(*vals):
    return op4(np.diag(vals))


def e(i):
    out = np.zeros(4)
    out[i] = 1.0
    return out


class TestSphereDeterminedBy:
    def test_plane(self):
        f = sphere_determined_by(e(1), np.column_stack([e(2), e(3)]), np.zeros(4), E4_1)
        assert f.kind == "plane"
        assert f.contains(e(1) + 2 * e(2) - e(3))

    def test_unit_sphere(self):
        # a = d_x, pbar = d_x, V = span{d_y, d_z}: center 0, curvature 1
        f = sphere_determined_by(e(1), np.column_stack([e(2), e(3)]), e(1), E4_1)
        assert f.kind == "curved"
        np.testing.assert_allclose(f.center, 0.0, atol=1e-14)
        assert f.curvature == pytest.approx(1.0)
        assert f.type_name() == "S2"
        assert f.contains(e(2))

    def test_hyperbolic_factor(self):
        # timelike a = -d_t: two-sheet quadric, the pbar sheet is t > 0
        f = sphere_determined_by(-e(0), np.column_stack([e(1), e(2)]), -e(0), E4_1)
        assert f.type_name() == "H2"
        assert f.curvature == pytest.approx(-1.0)
        assert f.is_disconnected()
        assert f.contains(-e(0))
        assert not f.contains(e(0))

    def test_parabolic(self):
        eta = e(0) + e(1)
        xi = 0.5 * (e(1) - e(0))
        f = sphere_determined_by(eta, np.column_stack([e(2), e(3)]), xi, E4_1)
        assert f.kind == "parabolic"
        w = 2 * e(2)
        assert f.contains(eta + w - 0.5 * float(w @ E4_1.g @ w) * xi)

    def test_sampling_and_tangency(self):
        rng = np.random.default_rng(5)
        f = sphere_determined_by(-e(0), np.column_stack([e(1), e(2)]), -e(0), E4_1)
        for _ in range(20):
            p = f.sample(rng)
            assert f.contains(p)
            T = f.tangent_basis(p)
            rel = p - f.center
            for j in range(T.shape[1]):
                assert scalar_product(rel, T[:, j], E4_1) == pytest.approx(0, abs=1e-9)


def case_4_1():
    # A = J_{-1}(1) (+) J_1(0)^3 realized as diag(1,0,0,0)
    return diag4(1.0, 0.0, 0.0, 0.0)


class TestAlgorithmWP:
    def test_case_4_1(self):
        decomp = algorithm_wp(case_4_1(), choices=("spacelike",))
        assert len(decomp.factors) == 1
        assert decomp.factors[0].type_name() == "S2"
        # V_0 is the Lorentzian plane spanned by d_t and the chosen axis
        g0 = decomp.initial.V0.T @ E4_1.g @ decomp.initial.V0
        assert sorted(np.sign(np.linalg.eigvalsh(g0))) == [-1.0, 1.0]

    def test_case_4_2_timelike_and_spacelike(self):
        A = diag4(0.0, 0.0, 0.0, 1.0)
        d1 = algorithm_wp(A, choices=("timelike",))
        assert d1.factors[0].type_name() == "H2"
        d2 = algorithm_wp(A, choices=("spacelike",))
        assert d2.factors[0].type_name() == "dS2"

    def test_case_4_3_two_factors(self):
        A = diag4(0.0, 0.0, 1.0, 1.0)
        d = algorithm_wp(A, choices=("timelike", "spacelike"))
        names = sorted(f.type_name() for f in d.factors)
        assert names == ["H1", "S1"]

    def test_case_4_13_null(self):
        # A = d_xi (.) d_xi: A d_eta = d_xi, A d_xi = 0 (cartesian components)
        xi = 0.5 * (e(1) - e(0))
        A = op4(np.outer(xi, xi @ E4_1.g))
        d = algorithm_wp(A)
        assert d.is_null
        assert d.factors[0].kind == "parabolic"
        assert d.factors[0].type_name() == "E2 (parabolic)"
        np.testing.assert_allclose(
            d.initial.a_vectors[0] / np.abs(d.initial.a_vectors[0]).max(),
            xi / np.abs(xi).max(),
            atol=1e-8,
        )

    def test_irreducible_rejected(self):
        with pytest.raises(IrreducibleError):
            algorithm_wp(diag4(0.0, 0.3, 0.6, 1.0))

    def test_canonical_form(self):
        d = algorithm_wp(case_4_1(), choices=("spacelike",))
        for a in d.initial.a_vectors:
            assert scalar_product(d.initial.p_bar, a, E4_1) == pytest.approx(1.0)


class TestWarpedMap:
    def test_case_4_1_display(self):
        # psi(t d_t + x d_x, p) = t d_t + x p for p on the unit sphere
        d = algorithm_wp(case_4_1(), choices=("spacelike",))
        a = d.initial.a_vectors[0]
        t, r = 1.5, 2.0
        p0 = t * e(0) + r * a
        p = d.factors[0].sample(np.random.default_rng(1))
        out = warped_map(d, p0, [p])
        np.testing.assert_allclose(out, t * e(0) + r * p, atol=1e-10)

    def test_identity_at_seed(self):
        d = algorithm_wp(case_4_1(), choices=("spacelike",))
        out = warped_map(d, d.initial.p_bar, [d.initial.p_bar])
        np.testing.assert_allclose(out, d.initial.p_bar, atol=1e-10)

    def test_case_4_13_display(self):
        # psi = (xi - eta (Pp)^2/2) d_xi + eta d_eta + eta Pp
        xi = 0.5 * (e(1) - e(0))
        d = algorithm_wp(op4(np.outer(xi, xi @ E4_1.g)))
        eta_v = e(0) + e(1)
        xi_v = 0.5 * (e(1) - e(0))
        eta, xi = 2.0, -0.7
        p0 = eta * eta_v + xi * xi_v
        w = 0.8 * e(2) - 0.3 * e(3)
        p1 = d.initial.p_bar + w - 0.5 * float(w @ E4_1.g @ w) * d.initial.a_vectors[0]
        out = warped_map(d, p0, [p1])
        expected = (
            (xi - 0.5 * eta * float(w @ E4_1.g @ w)) * xi_v + eta * eta_v + eta * w
        )
        np.testing.assert_allclose(out, expected, atol=1e-9)

    def test_membership_violation(self):
        d = algorithm_wp(case_4_1(), choices=("spacelike",))
        bad_p0 = -d.initial.p_bar
        with pytest.raises(FactorMembershipError):
            warped_map(d, bad_p0, [d.initial.p_bar])

    def test_image_membership_along_map(self):
        rng = np.random.default_rng(9)
        d = algorithm_wp(diag4(0.0, 0.0, 0.0, 1.0), choices=("timelike",))
        for _ in range(25):
            p0 = d.sample_base(rng)
            p1 = d.factors[0].sample(rng)
            q = warped_map(d, p0, [p1])
            assert image_membership(d, q)


class TestImages:
    def test_case_4_2_psi1(self):
        # timelike choice: image is -t^2+x^2+y^2 < 0 with t > 0
        A = diag4(0.0, 0.0, 0.0, 1.0)
        d = algorithm_wp(A, choices=("timelike",))
        rng = np.random.default_rng(11)
        for _ in range(300):
            q = rng.normal(size=4)
            inside = -q[0] ** 2 + q[1] ** 2 + q[2] ** 2 < 0 and q[0] > 0
            assert image_membership(d, q) == inside

    def test_case_4_2_psi2(self):
        A = diag4(0.0, 0.0, 0.0, 1.0)
        d = algorithm_wp(A, choices=("spacelike",))
        rng = np.random.default_rng(13)
        hits = 0
        for _ in range(300):
            q = rng.normal(size=4)
            got = image_membership(d, q)
            region = -q[0] ** 2 + q[1] ** 2 + q[2] ** 2 > 0
            # dS2 is connected: membership is exactly the open region
            assert got == region
            hits += got
        assert hits > 0

    def test_case_4_13_image(self):
        xi = 0.5 * (e(1) - e(0))
        d = algorithm_wp(op4(np.outer(xi, xi @ E4_1.g)))
        a1 = d.initial.a_vectors[0]
        rng = np.random.default_rng(17)
        for _ in range(200):
            q = rng.normal(size=4)
            assert image_membership(d, q) == (scalar_product(a1, q, E4_1) > 0)


class TestRestriction:
    def test_case_4_1_h3(self):
        d = algorithm_wp(case_4_1(), choices=("spacelike",))
        r = restrict_to_hyperquadric(d, -1, A=case_4_1())
        assert r.factor_types() == ("H1", "S2")

    def test_case_4_2_psi2_h3_empty(self):
        d = algorithm_wp(diag4(0.0, 0.0, 0.0, 1.0), choices=("spacelike",))
        with pytest.raises(EmptyRestrictionError):
            restrict_to_hyperquadric(d, -1)

    def test_case_4_4_ds3(self):
        A = diag4(0.0, 0.0, 0.36, 1.0)
        d1 = algorithm_wp(A, choices=("timelike",))
        r1 = restrict_to_hyperquadric(d1, 1, A=A)
        assert r1.factor_types() == ("dS2", "H1")
        d2 = algorithm_wp(A, choices=("spacelike",))
        r2 = restrict_to_hyperquadric(d2, 1, A=A)
        assert r2.factor_types() == ("S2", "dS1")
        # restricted tensor has eigenvalues {0, 0.36, 1}
        vals = np.sort(np.linalg.eigvals(r1.restricted_A).real)
        np.testing.assert_allclose(vals, [0.0, 0.36, 1.0], atol=1e-9)

    def test_isometry_property(self):
        # pullback of the ambient metric through psi matches the warped metric
        rng = np.random.default_rng(23)
        A = diag4(0.0, 0.0, 0.0, 1.0)
        d = algorithm_wp(A, choices=("timelike",))
        g = E4_1.g
        for _ in range(5):
            p0 = d.sample_base(rng)
            p1 = d.factors[0].sample(rng)
            rho = d.rho(p0)[0]
            T0 = d.initial.V0
            T1 = d.factors[0].tangent_basis(p1)
            h = 1e-6

            def psi(q0, q1):
                return warped_map(d, q0, [q1])

            # factor-0 directions are isometric, factor-1 scales by rho^2
            for j in range(T0.shape[1]):
                dpsi = (psi(p0 + h * T0[:, j], p1) - psi(p0 - h * T0[:, j], p1)) / (2 * h)
                got = float(dpsi @ g @ dpsi)
                want = float(T0[:, j] @ g @ T0[:, j])
                assert got == pytest.approx(want, abs=2e-5)
            for j in range(T1.shape[1]):
                dpsi = (psi(p0, p1 + h * T1[:, j]) - psi(p0, p1 - h * T1[:, j])) / (2 * h)
                got = float(dpsi @ g @ dpsi)
                want = rho**2 * float(T1[:, j] @ g @ T1[:, j])
                assert got == pytest.approx(want, rel=1e-4, abs=2e-5)

    def test_adaptedness(self):
        # psi_* of factor tangents is an invariant subspace of the restricted CT
        from websep.concircular import restrict_ct

        rng = np.random.default_rng(29)
        A = diag4(0.0, 0.0, 0.0, 1.0)
        d = algorithm_wp(A, choices=("timelike",))
        for _ in range(5):
            p0 = d.sample_base(rng, kappa=-1)
            p1 = d.factors[0].sample(rng)
            q = warped_map(d, p0, [p1])
            h = 1e-6
            T1 = d.factors[0].tangent_basis(p1)
            cols = []
            for j in range(T1.shape[1]):
                cols.append(
                    (warped_map(d, p0, [p1 + h * T1[:, j]]) - warped_map(d, p0, [p1 - h * T1[:, j]]))
                    / (2 * h)
                )
            push = np.column_stack(cols)
            lt = restrict_ct(A, -1, q)
            amb = lt.frame @ lt.matrix @ np.diag(lt.eps.astype(float)) @ lt.frame.T @ E4_1.g
            img = amb @ push
            # img columns must stay inside span(push)
            coeff, *_ = np.linalg.lstsq(push, img, rcond=None)
            assert np.abs(push @ coeff - img).max() < 1e-8
