"""Text grammar for polynomials, automorphisms, and derivations.

Expression grammar (whitespace-insensitive):

    poly   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' factor) | ('/' INT))*
    factor := INT | VAR ['^' INT] | '(' poly ')'
    VAR    := 'x' INT        with variable index >= 1
    INT    := digits

Division is scalar division by an integer literal only; exponents are
non-negative integer literals.  File formats are line-oriented:

    automorphism:  "n=<int>" then lines "x<i> -> <poly>" for i = 1..n
    derivation:    "n=<int>" then lines "dx<i> <- <poly>" for i = 1..n

The canonical printers (to_text / str) emit exactly this grammar, and
print -> parse -> print is a fixed point byte for byte.
"""

from __future__ import annotations

import re

from .automorphisms import TriangularAutomorphism
from .derivations import TriangularDerivation
from .errors import ParseError
from .polynomials import Polynomial

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|x(\d+)|([+\-*/^()])|(\S))")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind      # "int", "var", or the operator character
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str, line_offset: int = 0) -> list[_Token]:
    tokens = []
    line = 1 + line_offset
    col = 1
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        for ch in text[pos:match.end()]:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        number, var, op, junk = match.groups()
        lexeme = match.group().lstrip()
        tok_col = col - len(lexeme)
        if number is not None:
            tokens.append(_Token("int", int(number), line, tok_col))
        elif var is not None:
            index = int(var)
            if index < 1:
                raise ParseError("variable index must be at least 1", line, tok_col)
            tokens.append(_Token("var", index, line, tok_col))
        elif op is not None:
            tokens.append(_Token(op, op, line, tok_col))
        else:
            raise ParseError(f"unexpected character {junk!r}", line, tok_col)
        pos = match.end()
    return tokens


class _ExprParser:
    def __init__(self, tokens: list[_Token], line: int, end_col: int):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.end_col = end_col

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError(f"expected {expected}, found end of input",
                             self.line, self.end_col)
        self.pos += 1
        return tok

    def _fail(self, tok: _Token, expected: str):
        shown = f"x{tok.value}" if tok.kind == "var" else str(tok.value)
        raise ParseError(f"expected {expected}, found {shown!r}", tok.line, tok.col)

    def parse(self) -> Polynomial:
        poly = self.poly()
        tok = self._peek()
        if tok is not None:
            self._fail(tok, "end of expression")
        return poly

    def poly(self) -> Polynomial:
        negate = False
        tok = self._peek()
        if tok is not None and tok.kind == "-":
            self.pos += 1
            negate = True
        result = self.term()
        if negate:
            result = -result
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in "+-":
                return result
            self.pos += 1
            operand = self.term()
            result = result + operand if tok.kind == "+" else result - operand

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in "*/":
                return result
            self.pos += 1
            if tok.kind == "*":
                result = result * self.factor()
            else:
                divisor = self._next("an integer divisor")
                if divisor.kind != "int":
                    self._fail(divisor, "an integer divisor")
                if divisor.value == 0:
                    raise ParseError("division by zero", divisor.line, divisor.col)
                result = result / divisor.value

    def factor(self) -> Polynomial:
        tok = self._next("a number, variable, or '('")
        if tok.kind == "int":
            return Polynomial.constant(tok.value)
        if tok.kind == "var":
            base = Polynomial.variable(tok.value)
            nxt = self._peek()
            if nxt is not None and nxt.kind == "^":
                self.pos += 1
                exp = self._next("a non-negative integer exponent")
                if exp.kind != "int":
                    self._fail(exp, "a non-negative integer exponent")
                return base ** exp.value
            return base
        if tok.kind == "(":
            inner = self.poly()
            closing = self._next("')'")
            if closing.kind != ")":
                self._fail(closing, "')'")
            return inner
        self._fail(tok, "a number, variable, or '('")


def parse_polynomial(text: str, line_offset: int = 0) -> Polynomial:
    """Parse one polynomial expression; the whole text must be consumed."""
    tokens = _tokenize(text, line_offset)
    lines = text.splitlines() or [""]
    parser = _ExprParser(tokens, line_offset + len(lines), len(lines[-1]) + 1)
    return parser.parse()


_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)$")
_AUT_LINE_RE = re.compile(r"^x(\d+)\s*->\s*(.*)$")
_DER_LINE_RE = re.compile(r"^dx(\d+)\s*<-\s*(.*)$")


def _mapping_lines(text: str, header: str):
    lines = [(num, line) for num, line in enumerate(text.splitlines(), start=1)
             if line.strip()]
    if not lines:
        raise ParseError("empty input; expected a header line 'n=<int>'")
    num, first = lines[0]
    match = _HEADER_RE.match(first.strip())
    if match is None:
        raise ParseError(f"expected header 'n=<int>', found {first.strip()!r}", num, 1)
    n = int(match.group(1))
    if n < 1:
        raise ParseError("dimension must be at least 1", num, 1)
    if len(lines) - 1 != n:
        raise ParseError(
            f"expected {n} {header} lines after the header, found {len(lines) - 1}")
    return n, lines[1:]


def parse_automorphism(text: str) -> TriangularAutomorphism:
    """Parse the automorphism file format and validate triangularity."""
    n, lines = _mapping_lines(text, "'x<i> -> <polynomial>'")
    lambdas = []
    tails = []
    for expected_index, (num, line) in enumerate(lines, start=1):
        match = _AUT_LINE_RE.match(line.strip())
        if match is None:
            raise ParseError(f"expected 'x{expected_index} -> <polynomial>', "
                             f"found {line.strip()!r}", num, 1)
        index = int(match.group(1))
        if index != expected_index:
            raise ParseError(f"coordinate lines must appear in order; expected "
                             f"x{expected_index}, found x{index}", num, 1)
        f = parse_polynomial(match.group(2), line_offset=num - 1)
        key = tuple(1 if j == index - 1 else 0 for j in range(max(f.nvars, index)))
        lam = f.promoted(len(key)).coefficient(key)
        tail = f - Polynomial.monomial(lam, key) if lam else f
        lambdas.append(lam)
        tails.append(tail)
    return TriangularAutomorphism(n, lambdas, tails)


def parse_derivation(text: str) -> TriangularDerivation:
    """Parse the derivation file format and validate triangularity."""
    n, lines = _mapping_lines(text, "'dx<i> <- <polynomial>'")
    coeffs = []
    for expected_index, (num, line) in enumerate(lines, start=1):
        match = _DER_LINE_RE.match(line.strip())
        if match is None:
            raise ParseError(f"expected 'dx{expected_index} <- <polynomial>', "
                             f"found {line.strip()!r}", num, 1)
        index = int(match.group(1))
        if index != expected_index:
            raise ParseError(f"coefficient lines must appear in order; expected "
                             f"dx{expected_index}, found dx{index}", num, 1)
        coeffs.append(parse_polynomial(match.group(2), line_offset=num - 1))
    return TriangularDerivation(n, coeffs)


def parse_derivation_blocks(text: str) -> list[TriangularDerivation]:
    """Parse a file of derivation blocks separated by blank lines."""
    blocks = [block for block in re.split(r"\n\s*\n", text) if block.strip()]
    if not blocks:
        raise ParseError("no derivation blocks found")
    return [parse_derivation(block) for block in blocks]
