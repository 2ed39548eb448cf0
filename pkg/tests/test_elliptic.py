import math

import numpy as np
import pytest
import scipy.special

from websep.elliptic import (
    GLYPH_NAMES,
    Modulus,
    complete_K,
    jacobi_glyph,
    jacobi_sncndn,
)
from websep.errors import DomainError, PoleError

# reference values frozen from mpmath (mp.dps=30, parameter m = a**2)
K_REF = {
    0.25: 1.5962422221317835101,
    0.6: 1.7507538029157525118,
    0.8: 1.9953027776647294737,
    0.9: 2.2805491384227703005,
}
SNCNDN_REF = {
    (0.5, 0.6): (0.47317538554245180359, 0.88096824830225980891, 0.9588523450594626143),
    (1.3, 0.8): (0.90550265844962148318, 0.42434058907989009338, 0.689377660463426644),
    (-0.7, 0.25): (-0.64173956497317906154, 0.76692263674247801522, 0.98704642528695284294),
}


def agm_oracle_K(a):
    # independent oracle: K = pi / (2 agm(1, b)), written out locally
    x, y = 1.0, math.sqrt(1.0 - a * a)
    for _ in range(60):
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return math.pi / (2.0 * x)


class TestModulus:
    def test_from_a(self):
        m = Modulus.from_a(0.6)
        assert m.b == pytest.approx(0.8, abs=1e-15)

    @pytest.mark.parametrize("a", [0.0, 1.0, -0.3, 1.5])
    def test_rejects_out_of_range(self, a):
        with pytest.raises(DomainError):
            Modulus.from_a(a)

    def test_rejects_inconsistent_pair(self):
        with pytest.raises(DomainError):
            Modulus(0.6, 0.7)


class TestCompleteK:
    def test_circular_limit(self):
        assert complete_K(0.0) == pytest.approx(math.pi / 2, abs=1e-15)

    @pytest.mark.parametrize("a", [1.0, 1.2, -0.1])
    def test_domain(self, a):
        with pytest.raises(DomainError):
            complete_K(a)

    @pytest.mark.parametrize("a,ref", sorted(K_REF.items()))
    def test_frozen_values(self, a, ref):
        assert complete_K(a) == pytest.approx(ref, abs=1e-15)

    def test_agm_oracle(self):
        assert complete_K(0.8) == pytest.approx(agm_oracle_K(0.8), abs=1e-14)

    def test_strictly_increasing(self):
        grid = np.linspace(0.0, 0.99, 40)
        vals = [complete_K(a) for a in grid]
        assert all(v2 > v1 for v1, v2 in zip(vals, vals[1:]))


class TestSncndn:
    def test_origin(self):
        assert jacobi_sncndn(0.0, 0.37) == (0.0, 1.0, 1.0)

    def test_quarter_period(self):
        a = 0.6
        sn, cn, dn = jacobi_sncndn(complete_K(a), a)
        assert sn == pytest.approx(1.0, abs=1e-12)
        assert cn == pytest.approx(0.0, abs=1e-12)
        assert dn == pytest.approx(0.8, abs=1e-12)

    @pytest.mark.parametrize("ua,ref", sorted(SNCNDN_REF.items()))
    def test_frozen_values(self, ua, ref):
        got = jacobi_sncndn(*ua)
        np.testing.assert_allclose(got, ref, rtol=0, atol=1e-12)

    def test_identities_on_grid(self):
        # 10^4 (u, a) pairs; both Pythagorean identities below 1e-12
        worst = 0.0
        for a in np.linspace(0.1, 0.9, 25):
            ks = complete_K(a)
            for u in np.linspace(-4 * ks, 4 * ks, 400):
                sn, cn, dn = jacobi_sncndn(u, a)
                worst = max(
                    worst,
                    abs(sn * sn + cn * cn - 1.0),
                    abs(dn * dn + a * a * sn * sn - 1.0),
                )
        assert worst < 1e-12

    def test_parity_and_period(self):
        a = 0.45
        period = 4 * complete_K(a)
        for u in np.linspace(0.1, 2.9, 17):
            sn, cn, dn = jacobi_sncndn(u, a)
            sm, cm, dm = jacobi_sncndn(-u, a)
            assert sm == pytest.approx(-sn, abs=1e-13)
            assert cm == pytest.approx(cn, abs=1e-13)
            assert dm == pytest.approx(dn, abs=1e-13)
            sp, cp, dp = jacobi_sncndn(u + period, a)
            assert sp == pytest.approx(sn, abs=1e-12)
            assert cp == pytest.approx(cn, abs=1e-12)

    def test_against_scipy(self):
        # independent evaluation path (scipy uses the parameter m = a^2)
        for a in (0.1, 0.3, 0.6, 0.9):
            for u in np.linspace(-5.0, 5.0, 41):
                sn, cn, dn = jacobi_sncndn(u, a)
                s2, c2, d2, _ = scipy.special.ellipj(u, a * a)
                np.testing.assert_allclose([sn, cn, dn], [s2, c2, d2], rtol=0, atol=1e-11)

    def test_circular_degeneration(self):
        for u in (-1.1, 0.4, 2.0):
            sn, cn, dn = jacobi_sncndn(u, 0.0)
            assert sn == pytest.approx(math.sin(u), abs=1e-15)
            assert cn == pytest.approx(math.cos(u), abs=1e-15)
            assert dn == 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            jacobi_sncndn(0.5, 1.0)


class TestGlyphs:
    def test_cd_at_origin(self):
        assert jacobi_glyph("cd", 0.0, 0.7) == pytest.approx(1.0, abs=1e-15)

    def test_ns_at_quarter_period(self):
        a = 0.55
        assert jacobi_glyph("ns", complete_K(a), a) == pytest.approx(1.0, abs=1e-12)

    def test_sac_is_sn_over_cn(self):
        # frozen from mpmath: sn/cn (0.3; 0.7)
        assert jacobi_glyph("sac", 0.3, 0.7) == pytest.approx(
            0.30696978585536885049, abs=1e-12
        )
        assert jacobi_glyph("sac", 0.3, 0.7) == jacobi_glyph("sc", 0.3, 0.7)

    def test_cd_frozen(self):
        assert jacobi_glyph("cd", 2.2, 0.45) == pytest.approx(
            -0.50909733071350369096, abs=1e-12
        )

    def test_all_glyphs_consistent(self):
        u, a = 0.83, 0.62
        sn, cn, dn = jacobi_sncndn(u, a)
        parts = {"s": sn, "c": cn, "d": dn, "n": 1.0}
        for name in GLYPH_NAMES:
            num, den = (name[0], name[1]) if len(name) == 2 else ("s", "c")
            assert jacobi_glyph(name, u, a) == pytest.approx(
                parts[num] / parts[den], abs=1e-14
            )

    def test_pole(self):
        with pytest.raises(PoleError):
            jacobi_glyph("ns", 0.0, 0.5)
        with pytest.raises(PoleError):
            jacobi_glyph("ds", 1e-14, 0.5)

    def test_unknown_glyph(self):
        with pytest.raises(DomainError):
            jacobi_glyph("qq", 0.3, 0.5)
