"""Parser for rational expressions in x1..xn and operator text in d1..dn.

Grammar (Pratt style), loosest to tightest binding::

    + -      left associative
    * /      left associative
    unary -
    ^        right associative, exponent must be an integer literal

Operator text such as ``x1*d1 + x2*d2 - 1`` uses the same grammar; the
symbols d1..dn stand for the partial derivatives and must appear linearly
(their coefficients commute with them, so ``d1*x1`` means ``x1*d1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .derivations import VectorA
from .errors import NonIntegerExponentError, ParseError, UnknownVariableError, ZeroDenominatorError
from .field import RatFunc
from .operators import NHOperator

_TOKEN = re.compile(r"(\d+)|([xd])(\d+)|([-+*/^()])")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", "d", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(src):
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        if m.group(1):
            out.append(Token("num", m.group(1), pos))
        elif m.group(2):
            out.append(Token(m.group(2), m.group(3), pos))
        else:
            out.append(Token("op", m.group(4), pos))
        pos = m.end()
    out.append(Token("end", "", len(src)))
    return out


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Var:
    index: int  # one-based
    pos: int = 0


@dataclass(frozen=True)
class DSym:
    index: int  # one-based
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int = 0


_BINARY = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_UNARY_BP = 30


class _Parser:
    def __init__(self, src, n, allow_d):
        self.tokens = tokenize(src)
        self.i = 0
        self.n = n
        self.allow_d = allow_d

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr(0)
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self, min_bp):
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in _BINARY:
                break
            bp = _BINARY[tok.text]
            if bp <= min_bp:
                break
            self.next()
            if tok.text == "^":
                right = self.expr(bp - 1)
                left = Pow(left, _integer_exponent(right, tok.pos), tok.pos)
            else:
                left = BinOp(tok.text, left, self.expr(bp), tok.pos)
        return left

    def prefix(self):
        tok = self.next()
        if tok.kind == "num":
            return Num(int(tok.text), tok.pos)
        if tok.kind == "x":
            k = int(tok.text)
            if not 1 <= k <= self.n:
                raise UnknownVariableError(f"unknown variable x{tok.text} (n={self.n})", tok.pos)
            return Var(k, tok.pos)
        if tok.kind == "d":
            k = int(tok.text)
            if not self.allow_d:
                raise UnknownVariableError(f"unknown variable d{tok.text}", tok.pos)
            if not 1 <= k <= self.n:
                raise UnknownVariableError(f"unknown derivative d{tok.text} (n={self.n})", tok.pos)
            return DSym(k, tok.pos)
        if tok.kind == "op" and tok.text == "-":
            return Neg(self.expr(_UNARY_BP), tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr(0)
            close = self.next()
            if close.kind != "op" or close.text != ")":
                raise ParseError("expected ')'", close.pos)
            return node
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def _integer_exponent(node, pos):
    sign = 1
    while isinstance(node, Neg):
        sign = -sign
        node = node.operand
    if isinstance(node, Num):
        return sign * node.value
    raise NonIntegerExponentError("exponent must be an integer literal", pos)


def parse(src: str, n: int) -> object:
    """Parse an expression in x1..xn."""
    return _Parser(src, n, allow_d=False).parse()


def parse_operator_expr(src: str, n: int) -> object:
    return _Parser(src, n, allow_d=True).parse()


# -- lowering ----------------------------------------------------------------

def lower(node, n: int) -> RatFunc:
    if isinstance(node, Num):
        return RatFunc.constant(n, node.value)
    if isinstance(node, Var):
        return RatFunc.var(n, node.index - 1)
    if isinstance(node, Neg):
        return -lower(node.operand, n)
    if isinstance(node, Pow):
        base = lower(node.base, n)
        if node.exponent < 0 and base.is_zero():
            raise ZeroDenominatorError(f"zero raised to a negative power (at position {node.pos})")
        return base ** node.exponent
    if isinstance(node, BinOp):
        a = lower(node.left, n)
        b = lower(node.right, n)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero():
            raise ZeroDenominatorError(f"division by an expression equal to zero (at position {node.pos})")
        return a / b
    if isinstance(node, DSym):
        raise ParseError("derivative symbol in a plain expression", node.pos)
    raise TypeError(f"not an expression node: {node!r}")


def parse_ratfunc(src: str, n: int) -> RatFunc:
    return lower(parse(src, n), n)


def _lower_linear(node, n):
    """Return a list of n+1 RatFunc: coefficients of d1..dn, then the zeroth-order part."""

    def pure(f):
        return [RatFunc.zero(n)] * n + [f]

    def is_pure(form):
        return all(c.is_zero() for c in form[:n])

    if isinstance(node, DSym):
        form = pure(RatFunc.zero(n))
        form[node.index - 1] = RatFunc.one(n)
        return form
    if isinstance(node, (Num, Var)):
        return pure(lower(node, n))
    if isinstance(node, Neg):
        return [-c for c in _lower_linear(node.operand, n)]
    if isinstance(node, Pow):
        base = _lower_linear(node.base, n)
        if not is_pure(base):
            raise ParseError("derivative symbols cannot be raised to a power", node.pos)
        if node.exponent < 0 and base[n].is_zero():
            raise ZeroDenominatorError(f"zero raised to a negative power (at position {node.pos})")
        return pure(base[n] ** node.exponent)
    if isinstance(node, BinOp):
        a = _lower_linear(node.left, n)
        b = _lower_linear(node.right, n)
        if node.op == "+":
            return [x + y for x, y in zip(a, b)]
        if node.op == "-":
            return [x - y for x, y in zip(a, b)]
        if node.op == "*":
            if is_pure(a):
                return [a[n] * y for y in b]
            if is_pure(b):
                return [x * b[n] for x in a]
            raise ParseError("product of derivative symbols is not a first-order operator", node.pos)
        if not is_pure(b):
            raise ParseError("cannot divide by a derivative symbol", node.pos)
        if b[n].is_zero():
            raise ZeroDenominatorError(f"division by an expression equal to zero (at position {node.pos})")
        return [x / b[n] for x in a]
    raise TypeError(f"not an expression node: {node!r}")


def parse_operator(src: str, n: int) -> NHOperator:
    """Parse text like ``x1*d1 + x2*d2 - 1`` into an operator L + q."""
    form = _lower_linear(parse_operator_expr(src, n), n)
    return NHOperator(VectorA(tuple(form[:n])), form[n])
