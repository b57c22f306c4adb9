"""A small expression language for Laurent polynomials.

Grammar (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' exponent)?
    atom   := rational | 'i' | var | '(' expr ')'
    ratio  := expr ['/' factor]
    exponent := ['-'] int | '(' ['-'] int ['/' '2'] ')'

``rational`` is ``p`` or ``p/q``.  Variables are ``t`` for a rank-1 torus
and ``t1 .. tr`` otherwise.  A half-integer exponent such as ``t^(3/2)`` is
allowed on monomials, so every canonical rendering parses back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..errors import ParseError
from ..scalars.gaussian import I, format_scalar
from ..scalars.laurent import LaurentPoly, variable_names
from ..scalars.ratfunc import RatFunc


# ------------------------------------------------------------------- AST
@dataclass(frozen=True)
class Num:
    value: object


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Neg:
    arg: "PolyExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: Fraction


PolyExpr = Union[Num, Var, Neg, BinOp, Pow]


def evaluate(node: PolyExpr, rank: int) -> LaurentPoly:
    if isinstance(node, Num):
        return LaurentPoly.const(rank, node.value)
    if isinstance(node, Var):
        return LaurentPoly.variable(rank, node.index)
    if isinstance(node, Neg):
        return -evaluate(node.arg, rank)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left, rank), evaluate(node.right, rank)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    if isinstance(node, Pow):
        base = evaluate(node.base, rank)
        return _power(base, node.exponent)
    raise TypeError(f"not an expression node: {node!r}")


def _power(base: LaurentPoly, k: Fraction) -> LaurentPoly:
    if k.denominator == 1:
        if k < 0 and not base.is_monomial():
            raise ValueError("negative powers are only defined for monomials")
        return base ** int(k)
    if not base.is_monomial():
        raise ValueError("fractional powers are only defined for monomials")
    (e, c), = base.items()
    if c != 1:
        raise ValueError("fractional powers need a coefficient-1 monomial")
    u = [x * k for x in e]
    if any(x.denominator != 1 for x in u):
        raise ValueError("exponent does not give a half-integer power of t")
    return LaurentPoly.monomial([int(x) for x in u])


def render_expr(node: PolyExpr, names=None, rank: int = 1) -> str:
    """Source text for ``node`` (fully parenthesised, reparses to the same AST value)."""
    names = names or variable_names(rank)
    if isinstance(node, Num):
        return f"({format_scalar(node.value)})"
    if isinstance(node, Var):
        return names[node.index]
    if isinstance(node, Neg):
        return f"(-{render_expr(node.arg, names, rank)})"
    if isinstance(node, BinOp):
        return f"({render_expr(node.left, names, rank)} {node.op} {render_expr(node.right, names, rank)})"
    if isinstance(node, Pow):
        k = node.exponent
        exp = str(k.numerator) if k.denominator == 1 else f"({k.numerator}/{k.denominator})"
        return f"({render_expr(node.base, names, rank)}^{exp})"
    raise TypeError(f"not an expression node: {node!r}")


# ----------------------------------------------------------------- lexer
@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, end
    text: str
    line: int
    column: int


def _tokenize(src: str) -> List[Token]:
    out: List[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(Token("num", src[i:j], line, start_col))
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("name", src[i:j], line, start_col))
        elif ch in "+-*/^()":
            j = i + 1
            out.append(Token("op", ch, line, start_col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
        col += j - i
        i = j
    out.append(Token("end", "", line, col))
    return out


# ---------------------------------------------------------------- parser
class _Parser:
    def __init__(self, src: str, rank: int):
        self.tokens = _tokenize(src)
        self.pos = 0
        self.rank = rank
        self.names = variable_names(rank)

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.column)

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.take()

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == text

    def parse(self) -> PolyExpr:
        node = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> PolyExpr:
        if self.at("-"):
            self.take()
            node: PolyExpr = Neg(self.term())
        else:
            if self.at("+"):
                self.take()
            node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> PolyExpr:
        node = self.factor()
        while self.at("*"):
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> PolyExpr:
        node = self.atom()
        if self.at("^"):
            self.take()
            node = Pow(node, self.exponent())
        return node

    def _int(self, signed: bool = True) -> int:
        sign = 1
        if signed and self.at("-"):
            self.take()
            sign = -1
        tok = self.peek()
        if tok.kind != "num":
            raise self.error("expected an integer exponent")
        self.take()
        return sign * int(tok.text)

    def exponent(self) -> Fraction:
        if self.at("("):
            self.take()
            p = self._int()
            q = 1
            if self.at("/"):
                self.take()
                q = self._int(signed=False)
                if q == 0:
                    raise self.error("zero denominator in exponent")
            self.expect(")")
            k = Fraction(p, q)
            if (2 * k).denominator != 1:
                raise self.error("exponents must be integers or halves")
            return k
        return Fraction(self._int())

    def atom(self) -> PolyExpr:
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            value = Fraction(int(tok.text))
            if self.at("/") and self.tokens[self.pos + 1].kind == "num":
                self.take()
                den = self.take()
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                value = Fraction(int(tok.text), int(den.text))
            return Num(value)
        if tok.kind == "name":
            self.take()
            if tok.text == "i":
                return Num(I)
            if tok.text in self.names:
                return Var(self.names.index(tok.text))
            raise self.error(f"unknown variable {tok.text!r} for torus rank {self.rank}", tok)
        if self.at("("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_poly(src: str, rank: int = 1) -> PolyExpr:
    """Parse ``src`` into an expression tree; raises ParseError with a position."""
    if rank < 1:
        raise ValueError("torus rank must be positive")
    return _Parser(src, rank).parse()


def parse_laurent(src: str, rank: int = 1) -> LaurentPoly:
    """Parse and evaluate to a :class:`LaurentPoly`."""
    node = parse_poly(src, rank)
    try:
        return evaluate(node, rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), 1, 1) from exc


def parse_ratfunc(src: str, rank: int = 1) -> RatFunc:
    """Parse ``expr`` or ``expr / factor`` (the form rational functions print in)."""
    p = _Parser(src, rank)
    num = p.expr()
    den: Optional[PolyExpr] = None
    if p.at("/"):
        p.take()
        den = p.factor()
    if p.peek().kind != "end":
        raise p.error(f"unexpected {p.peek().text!r}")
    try:
        n = evaluate(num, rank)
        d = evaluate(den, rank) if den is not None else LaurentPoly.one(rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), 1, 1) from exc
    if d.is_zero():
        raise ParseError("division by zero", 1, 1)
    return RatFunc(n, d)
