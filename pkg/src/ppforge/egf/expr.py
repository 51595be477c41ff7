"""Trigonometric expressions over sin(jx), cos(jx), x and rational constants.

Grammar (whitespace ignored)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | atom
    atom  := INT ['/' INT] | 'x' | FUNC '(' [INT ['*']] 'x' ')' | '(' expr ')'
    FUNC  := 'sin' | 'cos'

``p/q`` between two integer literals is read as one rational constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_FREQUENCY = 64


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Trig:
    func: str  # "sin" or "cos"
    freq: int


@dataclass(frozen=True)
class Neg:
    operand: "TrigExpr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "TrigExpr"
    right: "TrigExpr"


TrigExpr = Const | Var | Trig | Neg | BinOp


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(e: TrigExpr) -> str:
    """Render with the fewest parentheses that re-parse to the same tree."""
    if isinstance(e, Const):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Trig):
        return f"{e.func}(x)" if e.freq == 1 else f"{e.func}({e.freq}x)"
    if isinstance(e, Neg):
        inner = to_text(e.operand)
        if isinstance(e.operand, (BinOp, Neg)) or (
            isinstance(e.operand, Const) and e.operand.value.denominator != 1
        ):
            inner = f"({inner})"
        return "-" + inner
    p = _PREC[e.op]
    left = to_text(e.left)
    if _needs_parens(e.left, p, right_side=False):
        left = f"({left})"
    right = to_text(e.right)
    if _needs_parens(e.right, p, right_side=True):
        right = f"({right})"
    return f"{left}{e.op}{right}"


def _needs_parens(child: TrigExpr, parent_prec: int, right_side: bool) -> bool:
    if isinstance(child, Const) and child.value.denominator != 1:
        # a rational literal is one token, but "a*1/2" would re-read as (a*1)/2
        return parent_prec == 2 and right_side
    if isinstance(child, Neg):
        return right_side or parent_prec == 2
    if not isinstance(child, BinOp):
        return False
    cp = _PREC[child.op]
    if cp < parent_prec:
        return True
    return right_side and cp == parent_prec


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ExprSyntaxError(message, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start : self.pos])

    def parse(self) -> TrigExpr:
        e = self.expr()
        if self.peek():
            self.error("unexpected input")
        return e

    def expr(self) -> TrigExpr:
        e = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> TrigExpr:
        e = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            e = BinOp(op, e, self.unary())
        return e

    def unary(self) -> TrigExpr:
        c = self.peek()
        if c == "-":
            self.pos += 1
            return Neg(self.unary())
        if c == "+":
            self.pos += 1
            return self.unary()
        return self.atom()

    def atom(self) -> TrigExpr:
        c = self.peek()
        if c.isdigit():
            num = self.integer()
            save = self.pos
            if self.peek() == "/":
                self.pos += 1
                if self.peek().isdigit():
                    den = self.integer()
                    if den == 0:
                        self.error("zero denominator")
                    return Const(Fraction(num, den))
                self.pos = save
            return Const(Fraction(num))
        if c == "(":
            self.pos += 1
            e = self.expr()
            self.take(")")
            return e
        if c.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            name = self.text[start : self.pos]
            if name == "x":
                return Var()
            if name not in ("sin", "cos"):
                self.pos = start
                self.error(f"unsupported function {name!r}")
            self.take("(")
            freq = 1
            if self.peek().isdigit():
                freq = self.integer()
                if self.peek() == "*":
                    self.pos += 1
            self.skip()
            if self.text[self.pos : self.pos + 1] != "x":
                self.error("expected x")
            self.pos += 1
            self.take(")")
            if not 1 <= freq <= MAX_FREQUENCY:
                self.error(f"frequency must be in 1..{MAX_FREQUENCY}")
            return Trig(name, freq)
        self.error("unexpected character" if c else "unexpected end of input")


def parse(text: str) -> TrigExpr:
    """Parse an expression such as ``"(sin(x)+cos(3x))/cos(4x)"``."""
    return _Parser(text).parse()
