"""Recursive-descent parser for polynomial texts.

Grammar::

    expr     := sign? term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nonneg-int)?
    base     := rational | identifier | '(' expr ')'
    rational := int ('/' positive-int)?

Juxtaposition (``2x``, ``x y``) is rejected.  The optional leading sign is
what lets printed polynomials with a negative leading term parse back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial, VariableContext

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class UnknownVariableError(PolynomialSyntaxError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, pos: int | None = None):
        raise PolynomialSyntaxError(message, self.text, self.peek()[2] if pos is None else pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            if kind in ("int", "ident", "("):
                self.fail("implicit multiplication is not allowed; use '*'")
            self.fail(f"unexpected {val!r}")
        return p

    def expr(self) -> Polynomial:
        negate = False
        if self.peek()[0] in ("+", "-"):
            negate = self.take()[0] == "-"
        p = self.term()
        if negate:
            p = -p
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        b = self.base()
        if self.peek()[0] != "^":
            return b
        self.take()
        kind, val, pos = self.peek()
        if kind == "-":
            self.fail("negative exponent")
        if kind != "int":
            self.fail("exponent must be a nonnegative integer")
        self.take()
        if self.peek()[0] in ("/", "^"):
            self.fail("exponent must be a nonnegative integer")
        return b ** int(val)

    def base(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(val)
            if self.peek()[0] == "/":
                self.take()
                dk, dv, dpos = self.peek()
                if dk != "int" or int(dv) == 0:
                    self.fail("denominator must be a positive integer")
                self.take()
                return self.ctx.constant(Fraction(num, int(dv)))
            return self.ctx.constant(num)
        if kind == "ident":
            self.take()
            if val not in self.ctx.names:
                raise UnknownVariableError(
                    f"unknown variable {val!r} (known: {', '.join(self.ctx.names)})",
                    self.text,
                    pos,
                )
            return self.ctx.var(val)
        if kind == "(":
            self.take()
            p = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return p
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {val!r}")


def parse_polynomial(text: str, ctx: VariableContext) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ctx``."""
    return _Parser(text, ctx).parse()


def parse_point(text: str) -> list[Fraction]:
    """Parse a comma-separated list of rationals such as ``"1,-1/2"``."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not re.fullmatch(r"[+-]?\d+(/0*[1-9]\d*)?", chunk):
            raise ValueError(f"not a rational number: {chunk!r}")
        out.append(Fraction(chunk))
    return out
