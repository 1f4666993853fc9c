"""Recursive-descent parser from text to MPoly.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

``u`` always denotes the parameter of the coefficient field.  Division is
only permitted by expressions that are scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .mpoly import MPoly
from .scalars import QuadExt, Radical, U


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UndeclaredVariable(ParseError):
    def __init__(self, name: str, position: int, text: str = ""):
        self.name = name
        super().__init__(f"undeclared name {name!r}", position, text)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(.))")


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text, variables, radicals, names):
        self.text = text
        self.vars = tuple(variables)
        self.radicals = radicals
        self.names = names
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1] or 'end of input'!r}", t[2], self.text)

    def parse(self):
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2], self.text)
        return e

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self):
        left = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op, _, pos = self.take()[1], None, self.peek()[2]
            right = self.unary()
            if op == "*":
                left = left * right
            else:
                if not right.is_constant():
                    raise ParseError("division by a non-constant expression", pos, self.text)
                c = right.constant_coeff()
                if not c:
                    raise ParseError("division by zero", pos, self.text)
                left = left / c
        return left

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] == "op" and e[1] == "(":
                e2 = self.take()
                if e2[0] != "int":
                    raise ParseError("exponent must be a nonnegative integer", e2[2], self.text)
                self.expect(")")
                e = e2
            if e[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", e[2], self.text)
            return base ** int(e[1])
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            return MPoly.const(Fraction(int(val)), self.vars)
        if kind == "name":
            if val in self.vars:
                return MPoly.var(val, self.vars)
            if val == "u":
                return MPoly.const(U, self.vars)
            if val in self.radicals:
                return MPoly.const(QuadExt.root(self.radicals[val]), self.vars)
            if val in self.names:
                p = self.names[val]
                if isinstance(p, MPoly):
                    return p.with_vars(self.vars + tuple(v for v in p.vars if v not in self.vars))
                return MPoly.const(p, self.vars)
            raise UndeclaredVariable(val, pos, self.text)
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos, self.text)


def parse(text: str, variables=(), radicals=None, names=None) -> MPoly:
    """Parse text into an MPoly over the declared variables.

    radicals maps a name to a Radical; names maps identifiers to known
    polynomials or scalars that may be referenced in the text.
    """
    rad = {}
    for k, r in (radicals or {}).items():
        if not isinstance(r, Radical):
            raise TypeError("radicals must map names to Radical instances")
        rad[k] = r
    p = _Parser(text, variables, rad, names or {}).parse()
    return p.with_vars(tuple(variables)) if p.vars != tuple(variables) else p


def parse_scalar(text: str, radicals=None):
    p = parse(text, (), radicals)
    return p.constant_coeff()
