"""Expression trees for chart maps, metrics, ranges, and region predicates.

Charts are entered as plain strings ("cosh(u)*sn(v;a)*dn(w;b)") and parsed
into small immutable trees. The trees evaluate either on floats or on
forward-mode dual numbers (exact first derivatives with respect to the chart
coordinates), and serialize to the catalog's prefix JSON grammar
({"op": "mul", "args": [...]}; elliptic glyph leaves carry a modulus slot).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

import numpy as np

from .elliptic import _GLYPH_PARTS, complete_K, jacobi_sncndn
from .errors import DomainError, PoleError, SingularityError

__all__ = ["Expr", "Dual", "EvalContext", "parse", "parse_pred", "INFINITY"]

INFINITY = float("inf")

Scalar = Union[float, "Dual"]


class Dual:
    """Value plus gradient with respect to the chart coordinates."""

    __slots__ = ("re", "d")

    def __init__(self, re_: float, d: np.ndarray):
        self.re = re_
        self.d = d

    @classmethod
    def seed(cls, value: float, index: int, nvars: int) -> "Dual":
        d = np.zeros(nvars)
        d[index] = 1.0
        return cls(value, d)

    def __add__(self, o):
        if isinstance(o, Dual):
            return Dual(self.re + o.re, self.d + o.d)
        return Dual(self.re + o, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.re, -self.d)

    def __sub__(self, o):
        return self + (-o if isinstance(o, Dual) else -o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Dual):
            return Dual(self.re * o.re, self.re * o.d + o.re * self.d)
        return Dual(self.re * o, o * self.d)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, Dual):
            return Dual(self.re / o.re, (self.d * o.re - self.re * o.d) / (o.re * o.re))
        return Dual(self.re / o, self.d / o)

    def __rtruediv__(self, o):
        return Dual(o / self.re, -o * self.d / (self.re * self.re))

    def __pow__(self, n: int):
        return Dual(self.re**n, n * self.re ** (n - 1) * self.d)

    def __repr__(self):
        return f"Dual({self.re}, {self.d})"


def _lift(fn, dfn):
    def apply(x: Scalar) -> Scalar:
        if isinstance(x, Dual):
            return Dual(fn(x.re), dfn(x.re) * x.d)
        return fn(x)

    return apply


_FUNCTIONS = {
    "sin": _lift(math.sin, math.cos),
    "cos": _lift(math.cos, lambda x: -math.sin(x)),
    "tan": _lift(math.tan, lambda x: 1.0 / math.cos(x) ** 2),
    "sec": _lift(lambda x: 1.0 / math.cos(x), lambda x: math.sin(x) / math.cos(x) ** 2),
    "csc": _lift(lambda x: 1.0 / math.sin(x), lambda x: -math.cos(x) / math.sin(x) ** 2),
    "cot": _lift(lambda x: math.cos(x) / math.sin(x), lambda x: -1.0 / math.sin(x) ** 2),
    "sinh": _lift(math.sinh, math.cosh),
    "cosh": _lift(math.cosh, math.sinh),
    "tanh": _lift(math.tanh, lambda x: 1.0 / math.cosh(x) ** 2),
    "sech": _lift(lambda x: 1.0 / math.cosh(x), lambda x: -math.tanh(x) / math.cosh(x)),
    "csch": _lift(lambda x: 1.0 / math.sinh(x), lambda x: -math.cosh(x) / math.sinh(x) ** 2),
    "coth": _lift(
        lambda x: math.cosh(x) / math.sinh(x), lambda x: -1.0 / math.sinh(x) ** 2
    ),
    "exp": _lift(math.exp, math.exp),
    "sqrt": _lift(math.sqrt, lambda x: 0.5 / math.sqrt(x)),
    "abs": _lift(abs, lambda x: math.copysign(1.0, x)),
}

# derivative of each primitive w.r.t. u: sn' = cn dn, cn' = -sn dn, dn' = -a^2 sn cn
_COMPARISONS = {
    "lt": lambda p, q: p < q,
    "le": lambda p, q: p <= q,
    "gt": lambda p, q: p > q,
    "ge": lambda p, q: p >= q,
}


@dataclass(frozen=True)
class Expr:
    op: str
    args: tuple["Expr", ...] = ()
    value: float | int | None = None  # numeric literal, or integer exponent for pow
    name: str | None = None  # symbol / function / glyph name
    modulus: str | None = None  # modulus slot "a" | "b" for glyph and K nodes

    def __call__(self, ctx: "EvalContext") -> Scalar:
        return _evaluate(self, ctx)

    def free_symbols(self) -> set[str]:
        out: set[str] = set()
        for node in self.walk():
            if node.op == "sym":
                out.add(node.name)
            elif node.op in ("glyph", "K"):
                out.add(node.modulus)
        return out

    def walk(self) -> Iterator["Expr"]:
        yield self
        for arg in self.args:
            yield from arg.walk()

    def to_dict(self) -> dict:
        d: dict = {"op": self.op}
        if self.value is not None:
            d["value"] = self.value
        if self.name is not None:
            d["name"] = self.name
        if self.modulus is not None:
            d["modulus"] = self.modulus
        if self.args:
            d["args"] = [a.to_dict() for a in self.args]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Expr":
        return cls(
            op=d["op"],
            args=tuple(cls.from_dict(a) for a in d.get("args", ())),
            value=d.get("value"),
            name=d.get("name"),
            modulus=d.get("modulus"),
        )


@dataclass
class EvalContext:
    """Symbol values for one evaluation, with a shared sn/cn/dn memo.

    ``coords`` maps coordinate names to their slot index when evaluating with
    dual numbers; parameters always enter as plain constants.
    """

    values: Mapping[str, Scalar]
    _sncndn_cache: dict = field(default_factory=dict)

    def lookup(self, name: str) -> Scalar:
        try:
            return self.values[name]
        except KeyError:
            raise DomainError(f"unbound symbol {name!r} in expression") from None

    def modulus_value(self, slot: str) -> float:
        mod = self.values.get(slot)
        if mod is None:
            raise DomainError(f"modulus slot {slot!r} has no value")
        if isinstance(mod, Dual):
            mod = mod.re
        return mod

    def sncndn(self, u: float, a: float) -> tuple[float, float, float]:
        key = (u, a)
        hit = self._sncndn_cache.get(key)
        if hit is None:
            hit = self._sncndn_cache[key] = jacobi_sncndn(u, a)
        return hit

    @classmethod
    def dual(
        cls, coords: Mapping[str, float], params: Mapping[str, float]
    ) -> "EvalContext":
        names = list(coords)
        vals: dict[str, Scalar] = {
            n: Dual.seed(v, i, len(names)) for i, (n, v) in enumerate(coords.items())
        }
        vals.update(params)
        return cls(vals)


def _eval_glyph(node: Expr, ctx: EvalContext) -> Scalar:
    arg = _evaluate(node.args[0], ctx)
    a = ctx.modulus_value(node.modulus)
    num_code, den_code = _GLYPH_PARTS[node.name]
    if isinstance(arg, Dual):
        sn, cn, dn = ctx.sncndn(arg.re, a)
        prim = {"s": sn, "c": cn, "d": dn, "n": 1.0}
        dprim = {"s": cn * dn, "c": -sn * dn, "d": -a * a * sn * cn, "n": 0.0}
        p, q = prim[num_code], prim[den_code]
        if abs(q) < 1e-12:
            raise PoleError(f"{node.name} within 1e-12 of a pole at u={arg.re}")
        dval = (dprim[num_code] * q - p * dprim[den_code]) / (q * q)
        return Dual(p / q, dval * arg.d)
    sn, cn, dn = ctx.sncndn(arg, a)
    prim = {"s": sn, "c": cn, "d": dn, "n": 1.0}
    q = prim[den_code]
    if abs(q) < 1e-12:
        raise PoleError(f"{node.name} within 1e-12 of a pole at u={arg}")
    return prim[num_code] / q


def _evaluate(node: Expr, ctx: EvalContext) -> Scalar:
    op = node.op
    if op == "num":
        return node.value
    if op == "sym":
        return ctx.lookup(node.name)
    if op == "add":
        total = _evaluate(node.args[0], ctx)
        for arg in node.args[1:]:
            total = total + _evaluate(arg, ctx)
        return total
    if op == "mul":
        total = _evaluate(node.args[0], ctx)
        for arg in node.args[1:]:
            total = total * _evaluate(arg, ctx)
        return total
    if op == "sub":
        return _evaluate(node.args[0], ctx) - _evaluate(node.args[1], ctx)
    if op == "div":
        den = _evaluate(node.args[1], ctx)
        den_re = den.re if isinstance(den, Dual) else den
        if den_re == 0.0:
            raise SingularityError("division by zero in expression")
        return _evaluate(node.args[0], ctx) / den
    if op == "neg":
        return -_evaluate(node.args[0], ctx)
    if op == "pow":
        return _evaluate(node.args[0], ctx) ** node.value
    if op == "call":
        return _FUNCTIONS[node.name](_evaluate(node.args[0], ctx))
    if op == "glyph":
        return _eval_glyph(node, ctx)
    if op == "K":
        return complete_K(ctx.modulus_value(node.modulus))
    if op in _COMPARISONS:
        lhs = _evaluate(node.args[0], ctx)
        rhs = _evaluate(node.args[1], ctx)
        return _COMPARISONS[op](lhs, rhs)
    if op == "and":
        return all(_evaluate(a, ctx) for a in node.args)
    if op == "or":
        return any(_evaluate(a, ctx) for a in node.args)
    raise DomainError(f"cannot evaluate node op {op!r}")


# ---------------------------------------------------------------------------
# parser

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\*\*|<=|>=|[-+*/^();,<>]))"
)

_CONSTANTS = {"pi": math.pi, "inf": INFINITY}


def _tokenize(src: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m or m.end() == pos:
            if src[pos:].strip():
                raise DomainError(f"cannot tokenize {src[pos:]!r}")
            break
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> tuple[str, str]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> None:
        kind, val = self.next()
        if val != text:
            raise DomainError(f"expected {text!r} at token {val!r} in {self.src!r}")

    def parse_or(self) -> Expr:
        node = self.parse_and()
        while self.peek() == ("name", "or"):
            self.next()
            node = Expr("or", (node, self.parse_and()))
        return node

    def parse_and(self) -> Expr:
        node = self.parse_comparison()
        while self.peek() == ("name", "and"):
            self.next()
            node = Expr("and", (node, self.parse_comparison()))
        return node

    def parse_comparison(self) -> Expr:
        node = self.parse_sum()
        kind, val = self.peek()
        if kind == "op" and val in ("<", ">", "<=", ">="):
            self.next()
            opname = {"<": "lt", ">": "gt", "<=": "le", ">=": "ge"}[val]
            return Expr(opname, (node, self.parse_sum()))
        return node

    def parse_sum(self) -> Expr:
        node = self.parse_term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "+":
                self.next()
                node = Expr("add", (node, self.parse_term()))
            elif kind == "op" and val == "-":
                self.next()
                node = Expr("sub", (node, self.parse_term()))
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                node = Expr("mul", (node, self.parse_unary()))
            elif kind == "op" and val == "/":
                self.next()
                node = Expr("div", (node, self.parse_unary()))
            else:
                return node

    def parse_unary(self) -> Expr:
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return Expr("neg", (self.parse_unary(),))
        if kind == "op" and val == "+":
            self.next()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val in ("^", "**"):
            self.next()
            sign = 1
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "-":
                self.next()
                sign = -1
            k2, v2 = self.next()
            if k2 != "num" or "." in v2:
                raise DomainError(f"exponent must be an integer in {self.src!r}")
            return Expr("pow", (base,), value=sign * int(v2))
        return base

    def parse_atom(self) -> Expr:
        kind, val = self.next()
        if kind == "num":
            return Expr("num", value=float(val))
        if kind == "op" and val == "(":
            node = self.parse_sum()
            self.expect(")")
            return node
        if kind == "name":
            if val in _CONSTANTS:
                return Expr("num", value=_CONSTANTS[val])
            k2, v2 = self.peek()
            if (k2, v2) != ("op", "("):
                return Expr("sym", name=val)
            self.next()
            if val == "K":
                k3, slot = self.next()
                if k3 != "name" or slot not in ("a", "b"):
                    raise DomainError(f"K takes modulus slot a or b in {self.src!r}")
                self.expect(")")
                return Expr("K", modulus=slot)
            arg = self.parse_sum()
            if val in _GLYPH_PARTS:
                self.expect(";")
                k3, slot = self.next()
                if k3 != "name" or slot not in ("a", "b"):
                    raise DomainError(
                        f"glyph {val} needs modulus slot a or b in {self.src!r}"
                    )
                self.expect(")")
                return Expr("glyph", (arg,), name=val, modulus=slot)
            if val not in _FUNCTIONS:
                raise DomainError(f"unknown function {val!r} in {self.src!r}")
            self.expect(")")
            return Expr("call", (arg,), name=val)
        raise DomainError(f"unexpected token {val!r} in {self.src!r}")


def parse(src: str) -> Expr:
    """Parse an arithmetic expression string."""
    p = _Parser(src)
    node = p.parse_sum()
    if p.peek() != ("end", ""):
        raise DomainError(f"trailing input in {src!r}")
    return node


def parse_pred(src: str) -> Expr:
    """Parse a boolean region predicate (comparisons joined by and/or)."""
    p = _Parser(src)
    node = p.parse_or()
    if p.peek() != ("end", ""):
        raise DomainError(f"trailing input in {src!r}")
    return node
