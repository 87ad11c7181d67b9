"""Ring, polynomial and problem-file grammar.

    ring     := ('Q' | 'F' digits) '[' ident (',' ident)* ']' ['order=' ('lex' | 'degrevlex')]
    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := ('+' | '-') unary | power
    power    := atom ['^' digits]
    atom     := digits ['/' digits] | ident | '(' expr ')'

Problem files are line oriented: one ``ring`` line, then ``NAME = (f, g, ...)``
or ``NAME = maximal`` lines; ``#`` starts a comment.
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple

from idealpow.constants import Constants, is_reserved_name
from idealpow.errors import (
    DivisionByZero,
    ExpressionSyntaxError,
    ExponentOverflow,
    ReservedVariableName,
    UnknownIdeal,
    UnknownVariable,
)
from idealpow.field import FieldSpec
from idealpow.groebner import Ideal
from idealpow.poly import MonomialOrder, Poly, Ring

IDENT = r"[A-Za-z_][A-Za-z0-9_]*"

RING_PATTERN = re.compile(
    rf"\s*(?P<field>Q|F\d+)\s*\[(?P<vars>[^\]]*)\]\s*(?:order\s*=\s*(?P<order>\w+))?\s*$"
)

TOKEN_PATTERN = re.compile(
    rf"\s*(?:(?P<number>\d+)|(?P<ident>{IDENT})|(?P<op>[-+*^/(),])|(?P<bad>\S))"
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    position = 0
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        start = match.start(kind)
        if kind == "bad":
            raise ExpressionSyntaxError(f"unexpected character {match.group(kind)!r}", start)
        position = match.end()
        yield Token(kind, match.group(kind), start)
    yield Token("end", "", max(position, len(text.rstrip())))


def parse_ring(text: str) -> Ring:
    match = RING_PATTERN.match(text)
    if match is None:
        raise ExpressionSyntaxError(f"malformed ring {text.strip()!r}", 0)
    field_spec = FieldSpec.parse(match.group("field"))
    names: List[str] = []
    offset = match.start("vars")
    for piece in match.group("vars").split(","):
        name = piece.strip()
        if not re.fullmatch(IDENT, name):
            raise ExpressionSyntaxError(f"bad variable name {name!r}", offset)
        if is_reserved_name(name):
            raise ReservedVariableName(f"{name} is reserved for internal variables")
        if name in names:
            raise ExpressionSyntaxError(f"variable {name} declared twice", offset)
        names.append(name)
        offset += len(piece) + 1
    order_text = match.group("order") or Constants.default_order
    try:
        order = MonomialOrder.parse(order_text)
    except ValueError:
        raise ExpressionSyntaxError(
            f"unknown order {order_text!r}", match.start("order")
        ) from None
    if order.block_size:
        raise ExpressionSyntaxError("elimination orders are internal", match.start("order"))
    return Ring(field_spec, tuple(names), order)


class _PolynomialParser:
    def __init__(self, text: str, ring: Ring, line: int = None):
        self.ring = ring
        self.line = line
        self.tokens = list(tokenize(text))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.token.position, self.line)

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def expect(self, text: str):
        if self.token.text != text or self.token.kind == "end":
            raise self.error(f"expected {text!r}, found {self.token.text or 'end of input'!r}")
        self.advance()

    def parse(self) -> Poly:
        result = self.expr()
        if self.token.kind != "end":
            raise self.error(f"unexpected {self.token.text!r}")
        return result

    def expr(self) -> Poly:
        result = self.term()
        while self.token.text in ("+", "-") and self.token.kind == "op":
            op = self.advance().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> Poly:
        result = self.unary()
        while self.token.text == "*":
            star = self.advance()
            right = self.unary()
            try:
                result = result * right
            except ExponentOverflow as exc:
                raise ExpressionSyntaxError(str(exc), star.position, self.line) from None
        return result

    def unary(self) -> Poly:
        if self.token.text == "-":
            self.advance()
            return -self.unary()
        if self.token.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.token.text != "^":
            return base
        self.advance()
        if self.token.kind != "number":
            raise self.error("exponents are positive integers")
        token = self.advance()
        exponent = int(token.text)
        if exponent < 1:
            raise ExpressionSyntaxError("exponents are positive integers", token.position, self.line)
        if exponent > Constants.max_exponent:
            raise ExpressionSyntaxError(
                f"exponent {exponent} exceeds {Constants.max_exponent}", token.position, self.line
            )
        try:
            return base ** exponent
        except ExponentOverflow as exc:
            raise ExpressionSyntaxError(str(exc), token.position, self.line) from None

    def atom(self) -> Poly:
        token = self.token
        if token.kind == "number":
            self.advance()
            numerator, denominator = int(token.text), 1
            if self.token.text == "/":
                self.advance()
                if self.token.kind != "number":
                    raise self.error("expected a denominator")
                denominator = int(self.advance().text)
                if denominator == 0:
                    raise ExpressionSyntaxError("zero denominator", token.position, self.line)
            try:
                return self.ring.constant(self.ring.field.rational(numerator, denominator))
            except DivisionByZero:
                raise ExpressionSyntaxError(
                    f"{numerator}/{denominator} has no value in {self.ring.field}",
                    token.position,
                    self.line,
                ) from None
        if token.kind == "ident":
            self.advance()
            if token.text not in self.ring.variables:
                raise UnknownVariable(f"{token.text} is not a variable of {self.ring}")
            return self.ring.gen(token.text)
        if token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise self.error(f"unexpected {token.text or 'end of input'!r}")


def parse_polynomial(text: str, ring: Ring, line: int = None) -> Poly:
    return _PolynomialParser(text, ring, line).parse()


def parse_ideal(text: str, ring: Ring, line: int = None) -> Ideal:
    """``(f1, f2, ...)``; ``maximal`` names the ideal of all variables."""
    stripped = text.strip()
    if stripped == "maximal":
        return Ideal.maximal(ring)
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ExpressionSyntaxError("an ideal is written (f1, f2, ...)", 0, line)
    body = stripped[1:-1]
    if not body.strip():
        return Ideal(ring)
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append(body[start:i])
            start = i + 1
    pieces.append(body[start:])
    return Ideal(ring, [parse_polynomial(piece, ring, line) for piece in pieces])


@dataclass
class ProblemFile:
    ring: Ring
    ideals: Dict[str, Ideal] = field(default_factory=dict)

    def ideal(self, name: str) -> Ideal:
        try:
            return self.ideals[name]
        except KeyError:
            raise UnknownIdeal(f"no ideal named {name!r}") from None


def parse_problem(text: str) -> ProblemFile:
    ring = None
    ideals: Dict[str, Ideal] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring ") or line.startswith("ring\t"):
            if ring is not None:
                raise ExpressionSyntaxError("ring declared twice", 0, number)
            ring = parse_ring(line[4:])
            continue
        name, sep, rest = line.partition("=")
        name = name.strip()
        if not sep or not re.fullmatch(IDENT, name):
            raise ExpressionSyntaxError("expected NAME = (...)", 0, number)
        if ring is None:
            raise ExpressionSyntaxError("the ring line must come first", 0, number)
        if name in ideals:
            raise ExpressionSyntaxError(f"ideal {name} defined twice", 0, number)
        ideals[name] = parse_ideal(rest, ring, number)
    if ring is None:
        raise ExpressionSyntaxError("missing ring line", 0)
    return ProblemFile(ring, ideals)


def load_problem(path) -> ProblemFile:
    return parse_problem(Path(path).read_text())
