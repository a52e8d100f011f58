"""Parser for linear combinations of words in the creation modes.

Grammar (whitespace-insensitive inside a record)::

    expr   := term (('+' | '-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    coeff  := rational | rational '*' 's3' | 's3'
    factor := ('L' | 'J') '(' '-' int ')' ['^' int]

``s3`` denotes sqrt(-3).  Factors are read left to right and act on the
lowest-weight vector with the rightmost mode applied first, e.g.
``L(-2)*J(-1)^2`` means L(-2) J(-1) J(-1) w.

Corpus files hold one expression per record; records are separated by
blank lines, and ``#`` starts a comment running to end of line.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .pbw import Mode, ModeAlgebra, ModuleParams, PbwMonomial, PbwVector
from .scalars import ONE, SQRT_M3, ZERO, QuadScalar

_TOKEN_RE = re.compile(
    r"""
    (?P<rational>\d+(?:/\d+)?)
  | (?P<s3>s3)
  | (?P<gen>[LJ])
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


class ExprSyntaxError(ValueError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {ch!r} at offset {pos}")
        tokens.append((m.lastgroup, m.group()))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: List[Tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ExprSyntaxError(f"expected {value!r}, got {tok[1]!r}")

    # expr := ['-'] term (('+'|'-') term)*
    def parse_expr(self) -> List[Tuple[QuadScalar, List[Mode]]]:
        sign = 1
        tok = self.peek()
        if tok is not None and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        terms = [self.parse_term(sign)]
        while True:
            tok = self.peek()
            if tok is None:
                return terms
            if tok[1] not in "+-":
                raise ExprSyntaxError(f"expected '+' or '-', got {tok[1]!r}")
            self.take()
            terms.append(self.parse_term(-1 if tok[1] == "-" else 1))

    # term := coeff ('*' factor)* | factor ('*' factor)*
    def parse_term(self, sign: int) -> Tuple[QuadScalar, List[Mode]]:
        coeff = ONE * sign
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("empty term")
        if tok[0] in ("rational", "s3") or tok[1] == "(":
            coeff = coeff * self.parse_coeff()
            word: List[Mode] = []
            while self.peek() is not None and self.peek()[1] == "*":
                self.take()
                word.extend(self.parse_factor())
            return coeff, word
        word = self.parse_factor()
        while self.peek() is not None and self.peek()[1] == "*":
            self.take()
            word.extend(self.parse_factor())
        return coeff, word

    # coeff := rational | rational '*' 's3' | 's3' | '(' rational ')' ...
    def parse_coeff(self) -> QuadScalar:
        tok = self.take()
        if tok[1] == "(":
            inner = self.take()
            if inner[0] != "rational":
                raise ExprSyntaxError("expected rational inside parentheses")
            self.expect(")")
            value = QuadScalar(Fraction(inner[1]))
        elif tok[0] == "rational":
            value = QuadScalar(Fraction(tok[1]))
        elif tok[0] == "s3":
            return SQRT_M3
        else:
            raise ExprSyntaxError(f"expected coefficient, got {tok[1]!r}")
        nxt = self.peek()
        if nxt is not None and nxt[1] == "*":
            after = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if after is not None and after[0] == "s3":
                self.take()
                self.take()
                value = value * SQRT_M3
        return value

    # factor := ('L'|'J') '(' '-' int ')' ['^' int]
    def parse_factor(self) -> List[Mode]:
        tok = self.take()
        if tok[0] != "gen":
            raise ExprSyntaxError(f"expected 'L' or 'J', got {tok[1]!r}")
        gen = tok[1]
        self.expect("(")
        self.expect("-")
        num = self.take()
        if num[0] != "rational" or "/" in num[1]:
            raise ExprSyntaxError("mode index must be an integer")
        index = -int(num[1])
        self.expect(")")
        power = 1
        nxt = self.peek()
        if nxt is not None and nxt[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "rational" or "/" in exp[1]:
                raise ExprSyntaxError("exponent must be an integer")
            power = int(exp[1])
        return [Mode(gen, index)] * power


def parse_terms(text: str) -> List[Tuple[QuadScalar, List[Mode]]]:
    """Parse an expression into (coefficient, mode word) pairs."""
    parser = _Parser(_tokenize(text))
    terms = parser.parse_expr()
    if parser.peek() is not None:
        raise ExprSyntaxError("trailing input after expression")
    return terms


def _word_as_canonical(word: List[Mode]) -> PbwMonomial | None:
    """Return the monomial when the word is already in canonical order."""
    lparts, jparts = [], []
    for mode in word:
        if mode.index >= 0:
            return None
        if mode.generator == "L":
            if jparts or (lparts and -mode.index > lparts[-1]):
                return None
            lparts.append(-mode.index)
        else:
            if jparts and -mode.index > jparts[-1]:
                return None
            jparts.append(-mode.index)
    return PbwMonomial(tuple(lparts), tuple(jparts))


def parse_vector(text: str, algebra: ModeAlgebra | None = None) -> PbwVector:
    """Parse an expression into a canonical PbwVector.

    Creation-only words already in canonical order need no rewriting and
    hence no module parameters; anything else requires ``algebra``.
    """
    result = PbwVector()
    for coeff, word in parse_terms(text):
        mon = _word_as_canonical(word)
        if mon is not None:
            result = result + PbwVector.monomial(mon, coeff)
        else:
            if algebra is None:
                raise ExprSyntaxError(
                    "expression is not in canonical creation-mode order; "
                    "module parameters are required to rewrite it"
                )
            result = result + algebra.monomial_vector(word).scale(coeff)
    return result


def load_records(path) -> List[str]:
    """Split a corpus file into records (blank-line separated, # comments)."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    lines = []
    for line in raw.splitlines():
        line = line.split("#", 1)[0].rstrip()
        lines.append(line)
    records, current = [], []
    for line in lines:
        if line.strip():
            current.append(line)
        elif current:
            records.append("\n".join(current))
            current = []
    if current:
        records.append("\n".join(current))
    return records


def load_vectors(path, algebra: ModeAlgebra | None = None) -> List[PbwVector]:
    return [parse_vector(rec, algebra) for rec in load_records(path)]
