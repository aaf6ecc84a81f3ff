"""
Canonical text rendering of ring elements and the companion parser.

Grammar accepted by the parser:

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := INTEGER | 'q' ['^' ['-'] INTEGER] | 'u' ['^' ['-'] INTEGER] | '(' expr ')'

Division is allowed by an element free of u or by a single u-power term.
Rendering sorts terms by (u-exponent desc, q-exponent desc), e.g.
``-q^3 + q^-1 + q^-3 + q^-5`` or ``(q)/(q^2 - 1)*u - (q)/(q^2 - 1)*u^-1``.
"""

import re
from fractions import Fraction
from typing import List, Tuple

from common.exceptions import ParseError
from ring.ground import GroundElem
from ring.laurent import LaurentQ
from ring.rational import RationalQ


# ============================================================================
# RENDERING
# ============================================================================

def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


def _monomial(coefficient: Fraction, q_exp: int, u_exp: int) -> str:
    """Render |coefficient| * q^q_exp * u^u_exp without sign"""
    c = abs(coefficient)
    parts = [p for p in (_power("q", q_exp), _power("u", u_exp)) if p]
    if not parts:
        return str(c)
    if c == 1:
        return "*".join(parts)
    return "*".join([str(c)] + parts)


def _join(chunks: List[Tuple[bool, str]]) -> str:
    if not chunks:
        return "0"
    out = []
    for i, (negative, text) in enumerate(chunks):
        if i == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def _laurent_chunks(p: LaurentQ, u_exp: int = 0) -> List[Tuple[bool, str]]:
    return [
        (c < 0, _monomial(c, k, u_exp))
        for k, c in sorted(p.items(), key=lambda kv: -kv[0])
    ]


def render_laurent(p: LaurentQ) -> str:
    return _join(_laurent_chunks(p))


def render_rational(r: RationalQ) -> str:
    if r.is_laurent():
        return render_laurent(r.num)
    return f"({render_laurent(r.num)})/({render_laurent(r.den)})"


def render_ground(e: GroundElem) -> str:
    chunks: List[Tuple[bool, str]] = []
    for k, c in sorted(e.items(), key=lambda kv: -kv[0]):
        if c.is_laurent():
            chunks.extend(_laurent_chunks(c.num, k))
        else:
            negative = c.num.leading_coefficient() < 0
            num = -c.num if negative else c.num
            text = f"({render_laurent(num)})/({render_laurent(c.den)})"
            if k:
                text = f"{text}*{_power('u', k)}"
            chunks.append((negative, text))
    return _join(chunks)


# ============================================================================
# PARSING
# ============================================================================

_TOKEN = re.compile(r"\s*(?:(\d+)|([qu])|(\^)|([-+*/()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", position=pos)
        if m.group(1):
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("var", m.group(2), m.start(2)))
        elif m.group(3):
            tokens.append(("^", "^", m.start(3)))
        else:
            tokens.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0
        self.length = len(text)

    def peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", position=self.length)
        self.index += 1
        return tok

    def expect_op(self, op: str):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", position=tok[2])

    def parse(self) -> GroundElem:
        if self.peek() is None:
            raise ParseError("empty expression", position=0)
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", position=tok[2])
        return value

    def expr(self) -> GroundElem:
        negative = False
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            negative = tok[1] == "-"
        value = self.term()
        if negative:
            value = -value
        while True:
            tok = self.peek()
            if not tok or tok[0] != "op" or tok[1] not in "+-":
                return value
            self.take()
            rhs = self.term()
            value = value + rhs if tok[1] == "+" else value - rhs

    def term(self) -> GroundElem:
        value = self.factor()
        while True:
            tok = self.peek()
            if not tok or tok[0] != "op" or tok[1] not in "*/":
                return value
            self.take()
            rhs = self.factor()
            if tok[1] == "*":
                value = value * rhs
            else:
                value = _divide(value, rhs, tok[2])

    def exponent(self) -> int:
        tok = self.peek()
        if not tok or tok[0] != "^":
            return 1
        self.take()
        sign = 1
        tok = self.take()
        if tok[0] == "op" and tok[1] == "-":
            sign = -1
            tok = self.take()
        if tok[0] != "num":
            raise ParseError("expected integer exponent", position=tok[2])
        return sign * int(tok[1])

    def factor(self) -> GroundElem:
        tok = self.take()
        if tok[0] == "num":
            return GroundElem.coerce(int(tok[1]))
        if tok[0] == "var":
            k = self.exponent()
            if tok[1] == "q":
                return GroundElem.coerce(RationalQ.q_power(k))
            return GroundElem.u_power(k)
        if tok[0] == "op" and tok[1] == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {tok[1]!r}", position=tok[2])


def _divide(value: GroundElem, divisor: GroundElem, position: int) -> GroundElem:
    if divisor.is_zero():
        raise ParseError("division by zero", position=position)
    if divisor.is_u_free():
        c = divisor.coefficient(0).inv()
        return value * c
    if divisor.is_u_monomial():
        return value * divisor.inv()
    raise ParseError("division only by u-free or single u-power terms", position=position)


def parse_ground(text: str) -> GroundElem:
    return _Parser(text).parse()


def parse_rational(text: str) -> RationalQ:
    value = parse_ground(text)
    if not value.is_u_free():
        raise ParseError("expression depends on u", position=0)
    return value.coefficient(0)
