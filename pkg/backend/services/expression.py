"""
Expression language for elements: tokenizer, recursive descent parser,
evaluator and canonical formatter

GRAMMAR

  expr     := term ('*' term)*
  term     := atom ("'" | '^' int)*
  atom     := literal | '(' expr ')'
  literal  := 'id'
            | 'shift' '(' int ')'
            | 'idem' '{' [nat (',' nat)*] '}'
            | 'perm' ('(' nat* ')')+
            | 'cfinj' '{' 'k' '=' int ';' 'N' '=' nat ';' 't' '=' '[' [row (',' row)*] ']' '}'
  row      := nat '->' (nat | '_')
  chain    := 'chain' '{' 'start' '=' expr ';' 'prefix' '=' '[' [nat (',' nat)*] ']' '}'

'*' is left-to-right composition, "'" is inversion and '^n' a power
(negative n for powers of the inverse). Whitespace is ignored.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from models.algebra import UNDEFINED_MARK, ChainSpec, CofiniteInjection
from services.core_algebra import (
    IDENTITY,
    compose,
    idempotent_on_complement,
    invert,
    normalize,
    permutation,
    power,
    shift_by,
)
from utils.errors import ParseError, ValidationError


class Token(NamedTuple):
    kind: str
    text: str
    position: int


TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<arrow>->)
  | (?P<number>[0-9]+)
  | (?P<name>[A-Za-z]+)
  | (?P<undefined>_)
  | (?P<symbol>[()\[\]{},;=*'^-])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character {text[position]!r}", position)
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass(frozen=True)
class Literal:
    value: CofiniteInjection


@dataclass(frozen=True)
class Compose:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Invert:
    operand: "Expr"


@dataclass(frozen=True)
class Power:
    operand: "Expr"
    exponent: int


Expr = Union[Literal, Compose, Invert, Power]


class Parser:
    """Recursive descent parser over the token list"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.current.position)
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.current.text == text:
            self.advance()
            return True
        return False

    def finish(self) -> None:
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.position)

    def natural(self) -> int:
        token = self.current
        if token.kind != "number":
            raise ParseError(f"expected a natural number, found {token.text or 'end of input'!r}", token.position)
        self.advance()
        return int(token.text)

    def integer(self) -> int:
        negative = self.accept("-")
        value = self.natural()
        return -value if negative else value

    def naturals(self, close: str) -> list[int]:
        values: list[int] = []
        if self.current.text == close:
            return values
        values.append(self.natural())
        while self.accept(","):
            values.append(self.natural())
        return values

    # expressions

    def expression(self) -> Expr:
        node = self.term()
        while self.accept("*"):
            node = Compose(node, self.term())
        return node

    def term(self) -> Expr:
        node = self.atom()
        while True:
            if self.accept("'"):
                node = Invert(node)
            elif self.accept("^"):
                node = Power(node, self.integer())
            else:
                return node

    def atom(self) -> Expr:
        token = self.current
        if self.accept("("):
            node = self.expression()
            self.expect(")")
            return node
        if token.kind != "name":
            raise ParseError(f"expected an element, found {token.text or 'end of input'!r}", token.position)

        self.advance()
        try:
            return Literal(self.literal(token))
        except ParseError:
            raise
        except ValidationError as exc:
            raise type(exc)(f"{exc.message} (in literal at position {token.position})") from exc

    def literal(self, token: Token) -> CofiniteInjection:
        name = token.text
        if name == "id":
            return IDENTITY
        if name == "shift":
            self.expect("(")
            k = self.integer()
            self.expect(")")
            return shift_by(k)
        if name == "idem":
            self.expect("{")
            points = self.naturals("}")
            self.expect("}")
            return idempotent_on_complement(points)
        if name == "perm":
            cycles = []
            self.expect("(")
            while True:
                cycle = []
                while self.current.kind == "number":
                    cycle.append(self.natural())
                self.expect(")")
                if cycle:
                    cycles.append(cycle)
                if not self.accept("("):
                    return permutation(cycles)
        if name == "cfinj":
            return self.table_literal()
        raise ParseError(f"unknown literal {name!r}", token.position)

    def table_literal(self) -> CofiniteInjection:
        self.expect("{")
        self.expect("k")
        self.expect("=")
        shift = self.integer()
        self.expect(";")
        self.expect("N")
        self.expect("=")
        threshold = self.natural()
        self.expect(";")
        self.expect("t")
        self.expect("=")
        self.expect("[")
        rows: dict[int, Optional[int]] = {}
        if self.current.text != "]":
            self.table_row(rows)
            while self.accept(","):
                self.table_row(rows)
        self.expect("]")
        self.expect("}")

        missing = [row for row in range(threshold) if row not in rows]
        if missing or len(rows) != threshold:
            raise ValidationError(f"table must list each row 0..{threshold - 1} exactly once")
        return normalize([rows[row] for row in range(threshold)], threshold, shift)

    def table_row(self, rows: dict[int, Optional[int]]) -> None:
        position = self.current.position
        row = self.natural()
        self.expect("->")
        if self.accept(UNDEFINED_MARK):
            value = None
        else:
            value = self.natural()
        if row in rows:
            raise ParseError(f"row {row} listed twice", position)
        rows[row] = value

    def chain(self) -> ChainSpec:
        self.expect("chain")
        self.expect("{")
        self.expect("start")
        self.expect("=")
        start = evaluate(self.expression())
        self.expect(";")
        self.expect("prefix")
        self.expect("=")
        self.expect("[")
        prefix = self.naturals("]")
        self.expect("]")
        self.expect("}")
        return ChainSpec(start=start, prefix=tuple(prefix))


def parse(text: str) -> Expr:
    """Parse an element expression"""
    parser = Parser(text)
    node = parser.expression()
    parser.finish()
    return node


def evaluate(node: Expr) -> CofiniteInjection:
    """Fold an expression tree through the monoid operations"""
    match node:
        case Literal(value):
            return value
        case Compose(left, right):
            return compose(evaluate(left), evaluate(right))
        case Invert(operand):
            return invert(evaluate(operand))
        case Power(operand, exponent):
            return power(evaluate(operand), exponent)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str) -> CofiniteInjection:
    return evaluate(parse(text))


def parse_chain(text: str) -> ChainSpec:
    """Parse `chain{start=<expr>; prefix=[a,b,...]}`"""
    parser = Parser(text)
    chain = parser.chain()
    parser.finish()
    return chain


def parse_prefix(text: str) -> tuple[int, ...]:
    """Parse `[a,b,...]`"""
    parser = Parser(text)
    parser.expect("[")
    prefix = parser.naturals("]")
    parser.expect("]")
    parser.finish()
    return tuple(prefix)


def format_element(alpha: CofiniteInjection) -> str:
    """Canonical text form, parseable back to the same element"""
    return alpha.to_text()
