"""Textual syntax for scalars, algebra elements, and module vectors.

Grammar (whitespace insignificant outside tokens):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | atom
    atom    := rational | 'z' ('^' int)?          -- scalars
             | 't' '[' ints ']' tail?             -- torus monomial
             | 'ad' '[' ints ']' tail?            -- inner derivation
             | 'D' '[' '(' scalars ')' ';' ints ']' tail?
             | 'v' '[' '(' scalars ')' ';' ints ']'   -- module component
             | '[' expr ',' expr ']'              -- Lie bracket
             | '(' expr ')'
    tail    := ('⊗' | '@') 'z' ('^' int)?         -- B tensor factor

'z' as a scalar is the primitive 2N-th root of unity of the ambient
field; inside a tail it is the B generator.  '*' multiplies scalars,
scales elements, and multiplies torus elements (the associative product);
brackets are Lie brackets in tau.  Expressions evaluate to a scalar, a
loop element, or a module vector; mixing them where undefined is a
syntax-level error with a position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import Cyclotomic, format_scalar
from .fock import FVector, ModuleParams, act
from .loop import BElement, GElement, LoopElement
from .torus import TorusElement


class ParseError(ValueError):
    """Expression syntax or evaluation error, with a position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.reason = message
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]+)|(?P<op>⊗|@|\[|\]|\(|\)|,|;|\+|-|\*|\^))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx, alg, params=None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.alg = alg
        self.params = params

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if kind and tok[0] != kind:
            raise ParseError(f"expected {value or kind}, found {tok[1]!r}", tok[2])
        if value and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    # -- value model: Cyclotomic | LoopElement | FVector ------------------

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[1] in ("+", "-"):
            op, _, pos = self.take()[1], None, self.toks[self.i - 1][2]
            rhs = self.term()
            try:
                val = val + rhs if op == "+" else val - rhs
            except TypeError:
                raise ParseError("cannot add values of different kinds", pos) from None
        return val

    def term(self):
        val = self.factor()
        while self.peek()[1] == "*":
            pos = self.take()[2]
            rhs = self.factor()
            val = self._mul(val, rhs, pos)
        return val

    def _mul(self, a, b, pos):
        if isinstance(a, Cyclotomic) and isinstance(b, Cyclotomic):
            return a * b
        if isinstance(a, Cyclotomic):
            return b.scaled(a)
        if isinstance(b, Cyclotomic):
            return a.scaled(b)
        if isinstance(a, LoopElement) and isinstance(b, LoopElement):
            try:
                return a.torus_product(b)
            except TypeError:
                raise ParseError(
                    "product is only defined between torus elements", pos
                ) from None
        raise ParseError("cannot multiply these values", pos)

    def factor(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return -self.factor()
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return self.ctx.field.rational(Fraction(value))
        if kind == "name":
            if value == "z":
                self.take()
                return self.ctx.field.zeta(self._opt_power())
            if value == "t":
                self.take()
                degs = self._int_list()
                g = GElement.t(self.ctx, degs)
                return self._with_tail(g)
            if value == "ad":
                self.take()
                degs = self._int_list()
                g = GElement.ad(self.ctx, degs)
                return self._with_tail(g)
            if value == "D":
                self.take()
                u, r = self._paired_list()
                g = GElement.D(self.ctx, u, r)
                return self._with_tail(g)
            if value == "v":
                if self.params is None:
                    raise ParseError("module vectors need --act-on context", pos)
                self.take()
                comp, deg = self._paired_list()
                return FVector.basis(self.params, deg, comp)
            raise ParseError(f"unknown name {value!r}", pos)
        if value == "[":
            self.take()
            x = self.expr()
            self.take(value=",")
            y = self.expr()
            self.take(value="]")
            if not (isinstance(x, LoopElement) and isinstance(y, LoopElement)):
                raise ParseError("bracket arguments must be algebra elements", pos)
            return x.bracket(y)
        if value == "(":
            self.take()
            x = self.expr()
            self.take(value=")")
            return x
        raise ParseError(f"expected a value, found {value!r}", pos)

    def _opt_power(self) -> int:
        if self.peek()[1] == "^":
            self.take()
            return self._signed_int()
        return 1

    def _signed_int(self) -> int:
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        tok = self.take("num")
        if "/" in tok[1]:
            raise ParseError("expected an integer", tok[2])
        return sign * int(tok[1])

    def _int_list(self):
        self.take(value="[")
        out = [self._signed_int()]
        while self.peek()[1] == ",":
            self.take()
            out.append(self._signed_int())
        self.take(value="]")
        return tuple(out)

    def _scalar_value(self):
        val = self.expr()
        if not isinstance(val, Cyclotomic):
            raise ParseError("expected a scalar", self.peek()[2])
        return val

    def _paired_list(self):
        # "[(" scalars ");" ints "]"
        self.take(value="[")
        self.take(value="(")
        scalars = [self._scalar_value()]
        while self.peek()[1] == ",":
            self.take()
            scalars.append(self._scalar_value())
        self.take(value=")")
        self.take(value=";")
        ints = [self._signed_int()]
        while self.peek()[1] == ",":
            self.take()
            ints.append(self._signed_int())
        self.take(value="]")
        return tuple(scalars), tuple(ints)

    def _with_tail(self, g: GElement):
        if self.peek()[1] in ("⊗", "@"):
            self.take()
            tok = self.take("name")
            if tok[1] != "z":
                raise ParseError("expected z after the tensor sign", tok[2])
            exp = self._opt_power()
            return LoopElement.make(g, self.alg, self.alg.check_index(exp))
        return LoopElement.make(g, self.alg, 0)


def parse_expression(text: str, ctx, alg, params: ModuleParams = None):
    """Parse and evaluate; returns a scalar, LoopElement, or FVector."""
    return _Parser(text, ctx, alg, params).parse()


def evaluate(text: str, ctx, alg, params=None, act_on: str = None):
    """CLI entry: evaluate an expression, optionally acting on a vector."""
    val = parse_expression(text, ctx, alg, params)
    if act_on is not None:
        if params is None:
            raise ParseError("--act-on requires module parameters", 0)
        if not isinstance(val, LoopElement):
            raise ParseError("only algebra elements act on vectors", 0)
        target = parse_expression(act_on, ctx, alg, params)
        if not isinstance(target, FVector):
            raise ParseError("--act-on must evaluate to a module vector", 0)
        return act(val, target)
    return val


# ---------------------------------------------------------------------------
# canonical formatting


def _coeff_prefix(c: Cyclotomic):
    """(sign, body) for a coefficient: body '' means magnitude one."""
    s = format_scalar(c)
    if s == "1":
        return "+", ""
    if s == "-1":
        return "-", ""
    if s.startswith("-") and "+" not in s and " - " not in s[1:]:
        return "-", s[1:]
    if " " in s:  # multi-term scalars get parenthesized
        return "+", f"({s})"
    return "+", s


def _join(parts):
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {'-' if sign == '-' else '+'} {body}"
    return out


def _atom_term(c: Cyclotomic, atom: str):
    sign, body = _coeff_prefix(c)
    return sign, atom if not body else f"{body}*{atom}"


def _ints(vec):
    return ",".join(str(x) for x in vec)


def format_torus(x: TorusElement) -> str:
    parts = [_atom_term(c, f"t[{_ints(a)}]") for a, c in sorted(x.terms.items())]
    return _join(parts)


def format_b(b: BElement) -> str:
    parts = []
    for i, c in sorted(b.terms.items()):
        atom = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
        if i == 0:
            sign, body = _coeff_prefix(c)
            parts.append((sign, body if body else "1"))
        else:
            parts.append(_atom_term(c, atom))
    return _join(parts)


def _g_atoms(g: GElement):
    for a, c in sorted(g.torus.items()):
        yield f"t[{_ints(a)}]", c
    for a, c in sorted(g.inner.items()):
        yield f"ad[{_ints(a)}]", c
    for a, u in sorted(g.witt.items()):
        yield f"D[({','.join(format_scalar(x) for x in u)});{_ints(a)}]", None


def format_g(g: GElement) -> str:
    parts = []
    for atom, c in _g_atoms(g):
        if c is None:
            parts.append(("+", atom))
        else:
            parts.append(_atom_term(c, atom))
    return _join(parts)


def format_loop(x: LoopElement) -> str:
    parts = []
    for i in sorted(x.parts):
        tail = "" if i == 0 else ("⊗z" if i == 1 else f"⊗z^{i}")
        for atom, c in _g_atoms(x.parts[i]):
            if c is None:
                parts.append(("+", atom + tail))
            else:
                parts.append(_atom_term(c, atom + tail))
    return _join(parts)


def format_fvector(xi: FVector) -> str:
    parts = []
    for s, v in sorted(xi.comps.items()):
        body = f"v[({','.join(format_scalar(c) for c in v)});{_ints(s)}]"
        parts.append(("+", body))
    return _join(parts)


def format_value(val) -> str:
    if isinstance(val, Cyclotomic):
        return format_scalar(val)
    if isinstance(val, LoopElement):
        return format_loop(val)
    if isinstance(val, FVector):
        return format_fvector(val)
    if isinstance(val, TorusElement):
        return format_torus(val)
    if isinstance(val, GElement):
        return format_g(val)
    if isinstance(val, BElement):
        return format_b(val)
    raise TypeError(f"cannot format {type(val).__name__}")
