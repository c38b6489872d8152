"""Parser and printer for exact polynomial expressions.

Grammar (juxtaposition is not multiplication; powers bind to atoms only):

    expr   := ['-'] term (('+' | '-') term)*
    term   := power ('*' power)*
    power  := atom ['^' natural]
    atom   := rational | 'i' | variable | blade | '(' expr ')'

Rationals are "3/4" or the integer shorthand "5"; variables are x1..xm;
blades are 'e' followed by strictly increasing single digits ("e1", "e12",
"e135").  Multiplication is the noncommutative Clifford product taken left
to right.  The printer emits canonical graded-lex order and round-trips:
parse(print(parse(s))) == parse(s).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clifford import Multivector
from .poly import CliffPoly
from .scalars import GaussianRational


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


@dataclass
class _Token:
    kind: str  # NUM NAME OP LPAREN RPAREN EOF
    text: str
    line: int
    col: int
    value: Fraction | None = None


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            if j < len(text) and text[j] == "/":
                j += 1
                k = j
                while k < len(text) and text[k].isdigit():
                    k += 1
                if k == j:
                    raise ParseError("expected digits after '/'", line, col + (j - i))
                den = int(text[j:k])
                if den == 0:
                    raise ParseError("zero denominator", line, start_col)
                j = k
            tokens.append(_Token("NUM", text[i:j], line, start_col, Fraction(num, den)))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^":
            tokens.append(_Token("OP", ch, line, start_col))
        elif ch == "(":
            tokens.append(_Token("LPAREN", ch, line, start_col))
        elif ch == ")":
            tokens.append(_Token("RPAREN", ch, line, start_col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
        col += 1
        i += 1
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], m: int, alg: int):
        self.tokens = tokens
        self.pos = 0
        self.m = m
        self.alg = alg

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def parse(self) -> CliffPoly:
        result = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            if tok.kind in ("NUM", "NAME", "LPAREN"):
                self.fail("juxtaposition is not allowed; use '*'", tok)
            self.fail(f"unexpected {tok.text!r}", tok)
        return result

    def expr(self) -> CliffPoly:
        negate = False
        if self.peek().kind == "OP" and self.peek().text == "-":
            self.advance()
            negate = True
        total = self.term()
        if negate:
            total = -total
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs
        return total

    def term(self) -> CliffPoly:
        total = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                total = total * self.power()
            elif tok.kind in ("NUM", "NAME", "LPAREN"):
                self.fail("juxtaposition is not allowed; use '*'", tok)
            else:
                return total

    def power(self) -> CliffPoly:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind != "NUM" or exp_tok.value.denominator != 1:
                self.fail("exponent must be a natural number", exp_tok)
            self.advance()
            base = base ** int(exp_tok.value)
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "^":
                self.fail("exponent must apply to an atom or parenthesized expression", nxt)
        return base

    def atom(self) -> CliffPoly:
        tok = self.advance()
        if tok.kind == "NUM":
            return CliffPoly.constant(self.m, tok.value, alg=self.alg)
        if tok.kind == "NAME":
            return self.name_atom(tok)
        if tok.kind == "LPAREN":
            inner = self.expr()
            closing = self.advance()
            if closing.kind != "RPAREN":
                self.fail("expected ')'", closing)
            return inner
        self.fail(f"expected a value, got {tok.text!r}" if tok.text else "unexpected end of input", tok)

    def name_atom(self, tok: _Token) -> CliffPoly:
        name = tok.text
        if name == "i":
            return CliffPoly.constant(self.m, GaussianRational(0, 1), alg=self.alg)
        head, digits = name[0], name[1:]
        if head == "x" and digits:
            index = int(digits)
            if not 1 <= index <= self.m:
                self.fail(f"variable x{index} exceeds dimension {self.m}", tok)
            return CliffPoly.variable(index, self.m, alg=self.alg)
        if head == "e" and digits:
            indices = tuple(int(d) for d in digits)
            if list(indices) != sorted(set(indices)):
                self.fail(f"blade indices in {name!r} must be strictly increasing", tok)
            if indices[-1] > self.alg:
                self.fail(f"blade index e{indices[-1]} exceeds dimension {self.alg}", tok)
            blade = Multivector.blade(self.alg, indices)
            return CliffPoly.constant(self.m, blade, alg=self.alg)
        self.fail(f"unknown symbol {name!r}", tok)


def parse_poly(text: str, m: int, alg: int | None = None) -> CliffPoly:
    """Parse an expression into an exact CliffPoly over x_1..x_m.

    `alg` bounds the blade indices and defaults to m; spinor-valued input in
    odd dimension passes the even ambient algebra explicitly.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    alg = m if alg is None else alg
    return _Parser(_tokenize(text), m, alg).parse()


def _fraction_text(q: Fraction) -> str:
    return str(q)  # "3/4" or integer shorthand "5"


def _coefficient_parts(c: GaussianRational) -> tuple[str, str]:
    """Return (sign, magnitude-text); mixed complex values parenthesize."""
    if not c.im:
        sign = "-" if c.re < 0 else "+"
        return sign, _fraction_text(abs(c.re))
    if not c.re:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        return sign, "i" if mag == 1 else f"{_fraction_text(mag)}*i"
    re_txt = _fraction_text(c.re)
    im_sign = "-" if c.im < 0 else "+"
    mag = abs(c.im)
    im_txt = "i" if mag == 1 else f"{_fraction_text(mag)}*i"
    return "+", f"({re_txt}{im_sign}{im_txt})"


def _term_text(coeff: GaussianRational, exp: tuple[int, ...], blade: tuple[int, ...]) -> tuple[str, str]:
    factors = []
    for i, e in enumerate(exp, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    if blade:
        factors.append("e" + "".join(str(i) for i in blade))
    sign, mag = _coefficient_parts(coeff)
    if factors and mag == "1":
        return sign, "*".join(factors)
    if factors:
        return sign, mag + "*" + "*".join(factors)
    return sign, mag


def format_poly(p: CliffPoly) -> str:
    """Canonical expression text; parses back to the same polynomial."""
    pieces = []
    for exp, coeff in p.terms_sorted():
        for blade, value in coeff.blades_sorted():
            pieces.append(_term_text(value, exp, blade))
    if not pieces:
        return "0"
    sign, mag = pieces[0]
    out = ("-" if sign == "-" else "") + mag
    for sign, mag in pieces[1:]:
        out += f" {sign} {mag}"
    return out


def format_multivector(v: Multivector) -> str:
    """Constant multivector in the same expression syntax."""
    pieces = [_term_text(value, (), blade) for blade, value in v.blades_sorted()]
    if not pieces:
        return "0"
    sign, mag = pieces[0]
    out = ("-" if sign == "-" else "") + mag
    for sign, mag in pieces[1:]:
        out += f" {sign} {mag}"
    return out
