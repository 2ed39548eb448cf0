import math

import numpy as np
import pytest

from websep.concircular import (
    AmbientCT,
    ICTData,
    characteristic_killing_tensor,
    evaluate_ambient_ct,
    ict_chart_to_ambient,
    ict_metric,
    is_reducible,
    restrict_ct,
)
from websep.errors import ChartRangeError, OffSurfaceError, SingularityError
from websep.pseudo_euclidean import (
    E4_1,
    AmbientSpace,
    MetricJordanForm,
    SelfAdjointOperator,
    SignedJordanBlock,
    realize_canonical,
)

E3_1 = AmbientSpace(3, 1)


def op4(M):
    return SelfAdjointOperator(np.array(M, dtype=float), E4_1)


def diag4(*vals):
    return op4(np.diag(vals))


class TestAmbientCT:
    def test_constant_part(self):
        A = diag4(1.0, 2.0, 3.0, 4.0)
        ct = AmbientCT(A, np.zeros(4), 0.0)
        np.testing.assert_allclose(evaluate_ambient_ct(ct, [5, 1, 2, 3]), A.M)

    def test_radial_part_rank_one(self):
        ct = AmbientCT(diag4(0, 0, 0, 0), np.zeros(4), 1.0)
        L = evaluate_ambient_ct(ct, [1.0, 2.0, 0.0, 0.0])
        assert np.linalg.matrix_rank(L) == 1

    def test_hand_expansion_on_hyperquadric(self):
        A = diag4(1.0, 2.0, 3.0, 4.0)
        ct = AmbientCT(A, np.zeros(4), 1.0)
        p = np.array([math.sqrt(2.0), 1.0, 0.0, 0.0])  # <p,p> = -1
        L = evaluate_ambient_ct(ct, p)
        expected = A.M + np.outer(p, p @ E4_1.g)
        np.testing.assert_allclose(L, expected, atol=1e-14)

    def test_linear_part(self):
        w = np.array([0.0, 1.0, 0.0, 0.0])
        ct = AmbientCT(diag4(0, 0, 0, 0), w, 0.0)
        p = np.array([0.0, 0.0, 2.0, 0.0])
        L = evaluate_ambient_ct(ct, p)
        expected = np.outer(w, p @ E4_1.g) + np.outer(p, w @ E4_1.g)
        np.testing.assert_allclose(L, expected, atol=1e-14)


class TestRestrictCT:
    def test_identity_restricts_to_identity(self):
        A = diag4(1.0, 1.0, 1.0, 1.0)
        lt = restrict_ct(A, -1, [1.0, 0.0, 0.0, 0.0])
        np.testing.assert_allclose(lt.matrix, np.eye(3), atol=1e-13)

    def test_projection_eigenvalues_vary_on_h3(self):
        # A = diag(1,0,0,0): nonzero eigenvalue -sinh(u)^2, double zero
        A = diag4(1.0, 0.0, 0.0, 0.0)
        for u in (0.3, 0.7, 1.1, 1.6, 2.2):
            p = [math.cosh(u), math.sinh(u), 0.0, 0.0]
            vals = restrict_ct(A, -1, p).eigenvalues()
            np.testing.assert_allclose(
                vals, [-math.sinh(u) ** 2, 0.0, 0.0], atol=1e-11
            )

    def test_off_surface(self):
        with pytest.raises(OffSurfaceError):
            restrict_ct(diag4(1, 0, 0, 0), -1, [2.0, 0.0, 0.0, 0.0])

    def test_self_adjoint_in_frame(self):
        rng = np.random.default_rng(0)
        A = diag4(0.0, 0.2, 0.5, 1.0)
        for _ in range(5):
            v = rng.normal(size=3)
            p = np.array([math.sqrt(1 + v @ v), *v])
            lt = restrict_ct(A, -1, p)
            gL = lt.covariant()
            np.testing.assert_allclose(gL, gL.T, atol=1e-12)


class TestReducibility:
    def test_case_4_1_reducible(self):
        form = MetricJordanForm(
            (SignedJordanBlock(1, -1, 1.0),)
            + tuple(SignedJordanBlock(1, 1, 0.0) for _ in range(3))
        )
        assert is_reducible(realize_canonical(form))

    def test_case_4_10_irreducible(self):
        assert not is_reducible(diag4(0.0, 0.3, 0.6, 1.0))

    def test_case_4_9_reducible_via_real_double(self):
        form = MetricJordanForm(
            (
                SignedJordanBlock(1, 0, 0.0, 1.0),
                SignedJordanBlock(1, 1, 0.7),
                SignedJordanBlock(1, 1, 0.7),
            )
        )
        assert is_reducible(realize_canonical(form))

    def test_nilpotent_degenerate_eigenspace(self):
        # 4.14: J2(0)^T + J1(0) + J1(1) has a degenerate 2d eigenspace
        form = MetricJordanForm(
            (
                SignedJordanBlock(2, 1, 0.0),
                SignedJordanBlock(1, 1, 0.0),
                SignedJordanBlock(1, 1, 1.0),
            )
        )
        assert is_reducible(realize_canonical(form))
        # 4.18: J2(0)^T + J1(a) + J1(b) is irreducible
        form = MetricJordanForm(
            (
                SignedJordanBlock(2, 1, 0.0),
                SignedJordanBlock(1, 1, 0.4),
                SignedJordanBlock(1, 1, 1.0),
            )
        )
        assert not is_reducible(realize_canonical(form))


class TestICTFormulas:
    def test_h19_transformation(self):
        a, b = 0.25, 0.5
        data = ICTData(
            k=0, diag=(("t", 0.0, -1), ("x", a, 1), ("y", b, 1), ("z", 1.0, 1))
        )
        u, v, w = 1.7, 0.8, 0.4
        got = ict_chart_to_ambient(data, -1, (u, v, w))
        assert got["t^2"] == pytest.approx(u * v * w / (a * b), abs=1e-12)
        assert got["x^2"] == pytest.approx(
            (u - a) * (v - a) * (w - a) / (a * (b - a) * (1 - a)), abs=1e-12
        )
        assert got["y^2"] == pytest.approx(
            (u - b) * (v - b) * (b - w) / (b * (b - a) * (1 - b)), abs=1e-12
        )
        assert got["z^2"] == pytest.approx(
            (u - 1) * (1 - v) * (1 - w) / ((1 - a) * (1 - b)), abs=1e-12
        )

    def test_h30_nilpotent_k2(self):
        a = 0.45
        data = ICTData(k=2, diag=(("y", a, 1), ("z", 1.0, 1)))
        u, v, w = 1.5, 0.7, 0.2
        got = ict_chart_to_ambient(data, -1, (u, v, w))
        assert got["(t+x)^2"] == pytest.approx(u * v * w / a, abs=1e-12)
        assert got["-t^2+x^2"] == pytest.approx(
            ((1 + a) * u * v * w - a * (u * v + u * w + v * w)) / a**2, abs=1e-12
        )

    def test_h34_nilpotent_k3(self):
        a = 0.6
        data = ICTData(k=3, diag=(("z", a, 1),))
        u, v, w = 1.1, 0.3, -0.5
        got = ict_chart_to_ambient(data, -1, (u, v, w))
        assert got["(t+x)^2"] == pytest.approx(-u * v * w / a, abs=1e-12)
        assert got["(t+x)*y"] == pytest.approx(
            (u * v + u * w + v * w) / (2 * a) - u * v * w / (2 * a**2), abs=1e-12
        )
        assert got["-t^2+x^2+y^2"] == pytest.approx(
            -(u + v + w) / a + (u * v + u * w + v * w) / a**2 - u * v * w / a**3,
            abs=1e-12,
        )

    def test_h21_complex(self):
        a, b = -0.5, 0.5
        data = ICTData(k=0, complex_pair=(0.0, 1.0), diag=(("y", a, 1), ("z", b, 1)))
        u, v, w = 1.3, 0.1, -1.2
        got = ict_chart_to_ambient(data, -1, (u, v, w))
        norm = (a * a + 1) * (b * b + 1)
        assert got["t^2+x^2"] == pytest.approx(
            math.sqrt((u * u + 1) * (v * v + 1) * (w * w + 1)) / math.sqrt(norm),
            abs=1e-12,
        )
        assert got["t^2-x^2"] == pytest.approx(
            ((a + b) * (u + v + w - u * v * w) + (a * b - 1) * (u * v + u * w + v * w - 1))
            / norm,
            abs=1e-12,
        )

    def test_degenerate_root_gives_zero(self):
        a, b = 0.25, 0.5
        data = ICTData(
            k=0, diag=(("t", 0.0, -1), ("x", a, 1), ("y", b, 1), ("z", 1.0, 1))
        )
        got = ict_chart_to_ambient(data, -1, (1.7, 0.8, a))
        assert got["x^2"] == 0.0

    def test_errors(self):
        data = ICTData(k=0, diag=(("t", 0.0, -1), ("x", 0.25, 1), ("y", 0.5, 1), ("z", 1.0, 1)))
        with pytest.raises(SingularityError):
            ict_chart_to_ambient(data, -1, (0.8, 0.8, 0.4))
        with pytest.raises(ChartRangeError):
            # out of region: all eigenfunctions below a
            ict_chart_to_ambient(data, -1, (0.2, 0.1, 0.05))

    def test_metric_h19(self):
        a, b = 0.25, 0.5
        u, v, w = 1.7, 0.8, 0.4
        g = ict_metric((u, v, w), [0.0, a, b, 1.0], -1)
        assert g[0] == pytest.approx(
            (u - v) * (u - w) / (4 * u * (u - a) * (u - b) * (u - 1)), abs=1e-13
        )
        assert g[2] == pytest.approx(
            (u - w) * (v - w) / (4 * w * (w - a) * (b - w) * (1 - w)), abs=1e-13
        )

    def test_metric_signature_ds19(self):
        # kappa=+1, lambda=(0,a,b,1), chain w<0<a<v<b<u<1 makes w timelike
        a, b = 0.25, 0.5
        g = ict_metric((0.8, 0.4, -0.3), [0.0, a, b, 1.0], 1)
        signs = np.sign(g)
        assert list(signs) == [1.0, 1.0, -1.0]

    def test_metric_coincident_error(self):
        with pytest.raises(SingularityError):
            ict_metric((0.5, 0.5, 0.1), [0.0, 0.25, 0.6, 1.0], -1)


class TestCharacteristicKillingTensor:
    def test_identity_shifts(self):
        A = diag4(1.0, 1.0, 1.0, 1.0)
        k = characteristic_killing_tensor(A, -1, [1.0, 0.0, 0.0, 0.0])
        np.testing.assert_allclose(k.matrix, -2.0 * np.eye(3), atol=1e-12)

    def test_diagonal_shift(self):
        A = diag4(0.0, 0.2, 0.5, 1.0)
        p = [1.0, 0.0, 0.0, 0.0]
        lt = restrict_ct(A, -1, p)
        k = characteristic_killing_tensor(A, -1, p)
        np.testing.assert_allclose(
            np.sort(np.linalg.eigvals(k.matrix).real),
            np.sort(np.linalg.eigvals(lt.matrix).real - lt.trace()),
            atol=1e-11,
        )
