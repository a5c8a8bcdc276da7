"""Text front end: polynomial and operator expressions, and the monomial-ideal file format.

Polynomial grammar (whitespace is insignificant)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER | GEN | '(' expr ')'
    NUMBER  := INT ('/' INT)?
    GEN     := 'x' INT

``^`` binds tighter than unary minus, which binds tighter than ``*``, which
binds tighter than binary ``+``/``-``; all binary operators associate left.
Multiplication must be written out: ``x1x2`` and ``2x1`` are rejected.

Operator words are products ``e6``, ``e1*e5``, ``e1*e1*e4`` of generators ``e<n>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .poly import Partition, Poly


class ParseError(ValueError):
    """Malformed input; ``pos`` is a 0-based offset into ``text``."""

    kind = "syntax error"

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{self.kind} at position {pos}: {message}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^"


class LexError(ParseError):
    kind = "lexical error"


class ExprSyntaxError(ParseError):
    kind = "syntax error"


class GeneratorIndexError(ParseError):
    kind = "index error"


class ExponentError(ParseError):
    kind = "exponent error"


@dataclass(frozen=True)
class Token:
    kind: str  # INT, GEN, OP, END
    text: str
    pos: int
    value: int = 0


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xe])(\d*)|([-+*/^()])|(\S))")


def tokenize(text: str, gen_letter: str = "x") -> List[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].isspace():
            break
        m = _TOKEN_RE.match(text, pos)
        raw = m.group(0)
        start = pos + len(raw) - len(raw.lstrip())
        if m.group(1) is not None:
            tokens.append(Token("INT", m.group(1), start, int(m.group(1))))
        elif m.group(2) is not None:
            letter, digits = m.group(2), m.group(3)
            if letter != gen_letter:
                raise LexError(f"unexpected generator letter {letter!r}", text, start)
            if not digits:
                if re.match(r"-\d", text[m.end():]):
                    raise GeneratorIndexError("generator index must be >= 1", text, m.end())
                raise LexError(f"generator {letter!r} needs an index", text, start)
            idx = int(digits)
            if idx < 1:
                raise GeneratorIndexError(f"generator index must be >= 1, got {letter}{digits}",
                                          text, start + 1)
            tokens.append(Token("GEN", m.group(0).strip(), start, idx))
        elif m.group(4) is not None:
            tokens.append(Token("OP", m.group(4), start))
        else:
            raise LexError(f"unknown character {m.group(5)!r}", text, start)
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text, "x")
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: Optional[Token] = None) -> ExprSyntaxError:
        tok = tok or self.peek()
        return ExprSyntaxError(msg, self.text, tok.pos)

    def parse(self) -> Poly:
        if self.peek().kind == "END":
            raise self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            if tok.kind in ("INT", "GEN") or tok.text == "(":
                raise self.error("missing '*' (implicit multiplication is not allowed)")
            raise self.error(f"unexpected {tok.text!r}")
        return value

    def expr(self) -> Poly:
        value = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "OP":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.unary()
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> Poly:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.take()
            exp_tok = self.peek()
            if exp_tok.kind == "OP" and exp_tok.text == "-":
                raise ExponentError("exponent must be a nonnegative integer", self.text,
                                    exp_tok.pos)
            if exp_tok.kind != "INT":
                raise self.error("expected an integer exponent", exp_tok)
            self.take()
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "^":
                raise self.error("chained '^' is ambiguous; use parentheses", nxt)
            return base ** exp_tok.value
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok.kind == "INT":
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "/":
                self.take()
                den = self.take()
                if den.kind != "INT":
                    raise self.error("expected an integer denominator", den)
                if den.value == 0:
                    raise self.error("zero denominator", den)
                return Poly.const(Fraction(tok.value, den.value))
            return Poly.const(tok.value)
        if tok.kind == "GEN":
            return Poly.x(tok.value)
        if tok.kind == "OP" and tok.text == "(":
            value = self.expr()
            close = self.take()
            if close.text != ")":
                raise self.error("expected ')'", close)
            return value
        if tok.kind == "END":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_poly(text: str) -> Poly:
    """Parse a polynomial expression in the generators ``x1, x2, ...``."""
    return _Parser(text).parse()


def parse_operator(text: str) -> Tuple[int, ...]:
    """Parse an operator word such as ``e1*e5`` into its index sequence, in written order."""
    tokens = tokenize(text, "e")
    word: List[int] = []
    expect_gen = True
    for tok in tokens:
        if tok.kind == "END":
            break
        if expect_gen:
            if tok.kind != "GEN":
                raise ExprSyntaxError(f"expected a generator e<n>, got {tok.text!r}", text, tok.pos)
            word.append(tok.value)
            expect_gen = False
        else:
            if tok.kind == "OP" and tok.text in "+-":
                raise ExprSyntaxError("operator sums are not supported; apply each word separately",
                                      text, tok.pos)
            if tok.kind == "OP" and tok.text == "^":
                raise ExprSyntaxError("powers of operators must be written out (e1*e1)",
                                      text, tok.pos)
            if not (tok.kind == "OP" and tok.text == "*"):
                raise ExprSyntaxError(f"expected '*', got {tok.text!r}", text, tok.pos)
            expect_gen = True
    if not word:
        raise ExprSyntaxError("empty operator word", text, len(text))
    if expect_gen:
        raise ExprSyntaxError("dangling '*'", text, len(text))
    return tuple(word)


# -- rendering ---------------------------------------------------------------------

def _render_coef(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_monomial(lam: Partition) -> str:
    parts = []
    k = 0
    while k < len(lam):
        a = lam[k]
        m = 1
        while k + m < len(lam) and lam[k + m] == a:
            m += 1
        parts.append(f"x{a}^{m}" if m > 1 else f"x{a}")
        k += m
    return "*".join(parts)


def render(f: Poly) -> str:
    """Canonical text: terms in descending partition order, reduced fractions."""
    if not f:
        return "0"
    pieces = []
    for lam, c in f.sorted_terms():
        neg = c < 0
        mag = -c if neg else c
        mono = render_monomial(lam)
        if not mono:
            body = _render_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_render_coef(mag)}*{mono}"
        pieces.append((neg, body))
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def render_operator(word) -> str:
    return "*".join(f"e{k}" for k in word)


# -- monomial-ideal files -------------------------------------------------------------

_VARS_RE = re.compile(r"^\s*vars\s*:\s*(\d+)\s*$")


def parse_monomial_ideal(contents: str):
    """Read one monomial per line; ``#`` starts a comment; ``vars: m`` fixes the ambient size."""
    from .monoideal import MonomialIdeal

    ambient: Optional[int] = None
    monos: List[Partition] = []
    for lineno, raw in enumerate(contents.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _VARS_RE.match(line)
        if m:
            ambient = int(m.group(1))
            continue
        try:
            f = parse_poly(line)
        except ParseError as exc:
            raise type(exc)(f"line {lineno}: {exc.message}", exc.text, exc.pos) from None
        if len(f) != 1:
            raise ExprSyntaxError(f"line {lineno}: not a monomial", line, 0)
        (lam, _c), = f.terms.items()
        monos.append(lam)
    seen = max((lam[-1] for lam in monos if lam), default=0)
    if ambient is None:
        ambient = seen
    elif ambient < seen:
        raise ExprSyntaxError(f"vars: {ambient} but x{seen} occurs", contents, 0)
    return MonomialIdeal.from_partitions(ambient, monos)


def render_monomial_ideal(ideal) -> str:
    lines = [f"vars: {ideal.ambient}"]
    lines += [render_monomial(lam) or "1" for lam in ideal.partitions()]
    return "\n".join(lines) + "\n"
