"""Recursive-descent parser for the scalar-field expression grammar.

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := '-' factor | atom ('^' exponent)*
    atom     := number | 'x'|'y'|'z' | '(' expr ')' | 'sqrt' '(' expr ')'
    exponent := integer | '(' integer '/' integer ')'

Whitespace insensitive; '^' is right-associative (exponent towers must
fold to an exact rational); number is a decimal literal.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MalformedExponentError, ParseError, UnknownIdentifierError
from . import expr
from .expr import ScalarField


class _Token:
    __slots__ = ("kind", "text", "offset")

    def __init__(self, kind: str, text: str, offset: int):
        self.kind = kind  # num | name | op | end
        self.text = text
        self.offset = offset


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            seen_dot = False
            while j < n and (text[j].isdigit() or (text[j] == "." and not seen_dot)):
                seen_dot = seen_dot or text[j] == "."
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
        elif c in "+-*/^()":
            tokens.append(_Token("op", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            raise ParseError(f"expected {text!r}", self.cur.offset)

    def parse(self) -> ScalarField:
        node = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected trailing input {self.cur.text!r}", self.cur.offset)
        return node

    def expr(self) -> ScalarField:
        node = self.term()
        while True:
            if self.accept("+"):
                node = expr.add(node, self.term())
            elif self.accept("-"):
                node = expr.add(node, expr.mul(-1, self.term()))
            else:
                return node

    def term(self) -> ScalarField:
        node = self.factor()
        while True:
            if self.accept("*"):
                node = expr.mul(node, self.factor())
            elif self.accept("/"):
                node = expr.div(node, self.factor())
            else:
                return node

    def factor(self) -> ScalarField:
        if self.accept("-"):
            return expr.mul(-1, self.factor())
        node = self.atom()
        exponents = []
        while self.accept("^"):
            exponents.append(self.exponent())
        if exponents:
            # right-associative tower must fold to one exact rational
            folded, _ = exponents[-1]
            for base, off in reversed(exponents[:-1]):
                if folded.denominator == 1:
                    try:
                        folded = base ** int(folded)
                    except ZeroDivisionError:
                        raise MalformedExponentError(
                            "zero base with negative exponent", off) from None
                else:
                    result = expr._fraction_pow_exact(base, folded)
                    if result is None:
                        raise MalformedExponentError("exponent tower is not rational", off)
                    folded = result
            node = expr.power(node, folded)
        return node

    def exponent(self):
        tok = self.cur
        if tok.kind == "num":
            self.advance()
            if "." in tok.text:
                raise MalformedExponentError("exponent must be an integer or (p/q)", tok.offset)
            return (Fraction(int(tok.text)), tok.offset)
        if self.accept("-"):
            inner, off = self.exponent()
            return (-inner, off)
        if self.accept("("):
            num = self.signed_integer()
            self.expect("/")
            den_tok = self.cur
            den = self.signed_integer()
            if den == 0:
                raise MalformedExponentError("zero exponent denominator", den_tok.offset)
            self.expect(")")
            return (Fraction(num, den), tok.offset)
        raise MalformedExponentError("expected integer or (p/q) exponent", tok.offset)

    def signed_integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        tok = self.cur
        if tok.kind != "num" or "." in tok.text:
            raise MalformedExponentError("expected integer", tok.offset)
        self.advance()
        return sign * int(tok.text)

    def atom(self) -> ScalarField:
        tok = self.cur
        if tok.kind == "num":
            self.advance()
            return expr.const(Fraction(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text in expr.AXES:
                return expr.variable(tok.text)
            if tok.text == "sqrt":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return expr.sqrt_of(inner)
            raise UnknownIdentifierError(f"unknown identifier {tok.text!r}", tok.offset)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"expected a number, coordinate, or '(' ", tok.offset)


def parse(text: str) -> ScalarField:
    """Parse expression text into a scalar field.

    Raises ParseError (with byte offset), UnknownIdentifierError, or
    MalformedExponentError.
    """
    return _Parser(text).parse()
