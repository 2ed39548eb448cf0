import math

import numpy as np
import pytest

from websep.elliptic import complete_K, jacobi_sncndn
from websep.errors import DomainError, SingularityError
from websep.expr import Dual, EvalContext, parse, parse_pred


def num_eval(src, **values):
    return parse(src)(EvalContext(values))


class TestParseEval:
    def test_arithmetic(self):
        assert num_eval("2*u + 3", u=5.0) == 13.0
        assert num_eval("(u - v)^2 / 4", u=3.0, v=1.0) == 1.0
        assert num_eval("-u^2", u=3.0) == -9.0
        assert num_eval("u**-2", u=2.0) == 0.25

    def test_functions(self):
        assert num_eval("cosh(u)^2 - sinh(u)^2", u=1.3) == pytest.approx(1.0)
        assert num_eval("sec(v)*cos(v)", v=0.7) == pytest.approx(1.0)
        assert num_eval("csch(w)*sinh(w)", w=0.4) == pytest.approx(1.0)
        assert num_eval("exp(2*u)", u=0.5) == pytest.approx(math.e)

    def test_constants(self):
        assert num_eval("pi/2") == pytest.approx(math.pi / 2)
        assert num_eval("inf") == math.inf

    def test_glyph_and_K(self):
        sn, cn, dn = jacobi_sncndn(0.8, 0.6)
        assert num_eval("sn(2*v;a)", v=0.4, a=0.6, b=0.8) == pytest.approx(sn)
        assert num_eval("dc(v;b)", v=0.8, a=0.6, b=0.8) == pytest.approx(
            jacobi_sncndn(0.8, 0.8)[2] / jacobi_sncndn(0.8, 0.8)[1]
        )
        assert num_eval("K(a)", a=0.6) == pytest.approx(complete_K(0.6))

    def test_errors(self):
        with pytest.raises(DomainError):
            parse("frob(u)")
        with pytest.raises(DomainError):
            parse("u +")
        with pytest.raises(DomainError):
            num_eval("u + q", u=1.0)
        with pytest.raises(SingularityError):
            num_eval("1/u", u=0.0)

    def test_roundtrip_serialization(self):
        for src in (
            "cosh(u)*sn(v;a)*dn(w;b)",
            "(u-v)*(u-w)/(4*u*(u-a)*(u-b)*(u-1))",
            "-t^2 + x^2 + y^2",
            "K(a) - v",
        ):
            tree = parse(src)
            clone = type(tree).from_dict(tree.to_dict())
            assert clone == tree

    def test_free_symbols(self):
        assert parse("cosh(u)*sn(v;a)*K(b)").free_symbols() == {"u", "v", "a", "b"}


class TestDual:
    def grad(self, src, coords, params=None):
        ctx = EvalContext.dual(coords, params or {})
        out = parse(src)(ctx)
        return out.re, out.d

    def test_polynomial_gradient(self):
        val, d = self.grad("u^2*v + w", {"u": 2.0, "v": 3.0, "w": 1.0})
        assert val == 13.0
        np.testing.assert_allclose(d, [12.0, 4.0, 1.0])

    def test_matches_finite_differences(self):
        src = "cosh(u)*sn(2*v;a)*dc(w;b) + exp(u)/tan(w)"
        coords = {"u": 0.7, "v": 0.3, "w": 0.9}
        params = {"a": 0.6, "b": 0.8}
        _, d = self.grad(src, coords, params)
        tree = parse(src)
        h = 1e-6
        for i, name in enumerate(coords):
            up = dict(coords)
            dn_ = dict(coords)
            up[name] += h
            dn_[name] -= h
            fd = (
                tree(EvalContext({**up, **params})) - tree(EvalContext({**dn_, **params}))
            ) / (2 * h)
            assert d[i] == pytest.approx(fd, rel=1e-8, abs=1e-8)

    def test_params_are_constant(self):
        _, d = self.grad("a*u", {"u": 2.0}, {"a": 5.0})
        np.testing.assert_allclose(d, [5.0])


class TestPredicates:
    def test_region_predicate(self):
        pred = parse_pred("-t^2 + x^2 + y^2 < 0 and t > 0")
        assert pred(EvalContext({"t": 2.0, "x": 0.5, "y": 0.5}))
        assert not pred(EvalContext({"t": -2.0, "x": 0.5, "y": 0.5}))
        assert not pred(EvalContext({"t": 1.0, "x": 2.0, "y": 0.5}))

    def test_abs_and_or(self):
        pred = parse_pred("abs(x) > 1 or x >= 10")
        assert pred(EvalContext({"x": -2.0}))
        assert not pred(EvalContext({"x": 0.5}))
