"""Recursive-descent parser for univariate polynomial expressions in x.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := factor (("*" | <juxtaposition>) factor)*
    factor   := base ("^" nat)?
    base     := rational | "x" | "(" expr ")" | "-" factor
    rational := int ("/" posint)?

Juxtaposition means an implicit product, so ``4x^2`` reads as ``4*x^2``.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .unipoly import UniPoly, X

__all__ = ["ParseError", "NonMonicWarning", "parse_polynomial", "parse_expression"]


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class NonMonicWarning(UserWarning):
    """Input was divided by its leading coefficient."""


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "x", "op", "end"
    text: str
    pos: int


def tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
        elif c == "x":
            tokens.append(Token("x", c, i))
            i += 1
        elif c in "+-*/^()":
            tokens.append(Token("op", c, i))
            i += 1
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            raise ParseError(f"unknown variable {text[i:j]!r} (only x is allowed)", i)
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind, text, what):
        if not self.at(kind, text):
            raise ParseError(f"expected {what}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def parse(self):
        if self.at("end"):
            raise ParseError("empty input", 0)
        value = self.expr()
        if not self.at("end"):
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self):
        value = self.term()
        while self.at("op", "+") or self.at("op", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_base(self):
        return self.at("int") or self.at("x") or self.at("op", "(")

    def term(self):
        value = self.factor()
        while True:
            if self.at("op", "*"):
                self.advance()
                value = value * self.factor()
            elif self._starts_base():
                value = value * self.factor()
            else:
                return value

    def factor(self):
        base = self.base()
        if self.at("op", "^"):
            self.advance()
            if self.at("op", "-"):
                raise ParseError("negative exponent", self.tok.pos)
            tok = self.expect("int", None, "a non-negative integer exponent")
            return base ** int(tok.text)
        return base

    def base(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            num = int(t.text)
            if self.at("op", "/"):
                self.advance()
                den_tok = self.expect("int", None, "a positive integer denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.pos)
                return UniPoly((Fraction(num, den),))
            return UniPoly((num,))
        if t.kind == "x":
            self.advance()
            return X
        if self.at("op", "("):
            self.advance()
            inner = self.expr()
            if not self.at("op", ")"):
                raise ParseError("unbalanced parentheses: expected ')'", self.tok.pos)
            self.advance()
            return inner
        if self.at("op", "-"):
            self.advance()
            return -self.factor()
        if self.at("op", ")"):
            raise ParseError("unbalanced parentheses: unexpected ')'", t.pos)
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def parse_expression(text):
    """Expand ``text`` to a UniPoly without any normalization."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    return _Parser(text).parse()


def parse_polynomial(text, monic=True, min_degree=0):
    """Parse and expand; optionally rescale to monic with a NonMonicWarning."""
    p = parse_expression(text)
    if p.is_zero():
        raise ParseError("zero polynomial", 0)
    if p.degree < min_degree:
        raise ParseError(f"degree {p.degree} is below the required minimum {min_degree}", 0)
    if monic and not p.is_monic():
        warnings.warn(
            f"leading coefficient {p.lc()} divided out to make the input monic",
            NonMonicWarning,
            stacklevel=2,
        )
        p = p.monic()
    return p
