"""Shorthands for building rings, polynomials and ideals from text."""

from idealpow.field import FieldSpec
from idealpow.groebner import Ideal
from idealpow.poly import MonomialOrder, Poly, Ring
from utils.parsing import parse_ideal, parse_polynomial, parse_ring


def ring(text: str) -> Ring:
    return parse_ring(text)


def raw_ring(names, field: str = "Q", order: str = "degrevlex") -> Ring:
    """A ring that may use names the parser reserves (s, t0, ...)."""
    return Ring(FieldSpec.parse(field), tuple(names), MonomialOrder.parse(order))


def poly(text: str, r: Ring) -> Poly:
    return parse_polynomial(text, r)


def ideal(text: str, r: Ring) -> Ideal:
    return parse_ideal(text, r)
