from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from idealpow.errors import DivisionByZero, MixedFields, NonPrimeCharacteristic

# an element of FieldSpec.domain: a QQ rational or a GF(p) residue
Coeff = Any


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "F"


@lru_cache(maxsize=None)
def _domain(characteristic: int) -> Domain:
    return QQ if characteristic == 0 else GF(characteristic)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (characteristic 0) or a prime field.

    Coefficients are elements of the matching sympy ground domain (``QQ`` or
    ``GF(p)``); ``FieldElement`` is the checked, user-facing wrapper.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p < 2 or not isprime(p)):
            raise NonPrimeCharacteristic(f"characteristic {p} is not a prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip()
        if text == "Q":
            return cls(0)
        if text.startswith("F") and text[1:].isdigit():
            p = int(text[1:])
            if p == 0:
                raise NonPrimeCharacteristic("characteristic 0 is written Q")
            return cls(p)
        raise ValueError(f"invalid field spec: {text!r}")

    @property
    def kind(self) -> FieldKind:
        return FieldKind.RATIONALS if self.characteristic == 0 else FieldKind.PRIME_FIELD

    @property
    def domain(self) -> Domain:
        return _domain(self.characteristic)

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def rational(self, numerator: int, denominator: int = 1) -> Coeff:
        """numerator / denominator as a field element."""
        p = self.characteristic
        if denominator == 0 or (p and denominator % p == 0):
            raise DivisionByZero(f"{numerator}/{denominator} has no value in {self}")
        if p == 0:
            return QQ(numerator, denominator)
        return self.domain.quo(self.domain(numerator), self.domain(denominator))

    def normalize(self, value) -> Coeff:
        """Coerce ints, domain elements and fractions into the domain."""
        if self.domain.of_type(value):
            return value
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise MixedFields(f"{value} is an element of {value.spec}, not {self}")
            return value.value
        return self.rational(int(value.numerator), int(value.denominator))

    def zero(self) -> Coeff:
        return self.domain.zero

    def one(self) -> Coeff:
        return self.domain.one

    def inv(self, a: Coeff) -> Coeff:
        if not a:
            raise DivisionByZero("division by zero")
        return self.domain.quo(self.domain.one, a)

    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def to_sympy(self, a: Coeff):
        # residues come back with a sign, in (-p/2, p/2]
        return self.domain.to_sympy(a)

    def render(self, a: Coeff) -> str:
        return str(self.to_sympy(a))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: Coeff

    def __post_init__(self):
        object.__setattr__(self, "value", self.spec.normalize(self.value))

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            return FieldElement(self.spec, other)
        if other.spec != self.spec:
            raise MixedFields(f"cannot combine elements of {self.spec} and {other.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.value + other.value)

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.value - other.value)

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.value * other.value)

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.value * self.spec.inv(other.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, -self.value)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        return self.spec.render(self.value)


_OPS = {
    "add": FieldElement.__add__,
    "sub": FieldElement.__sub__,
    "mul": FieldElement.__mul__,
    "div": FieldElement.__truediv__,
}


def field_ops(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact field arithmetic; ``op`` is one of add, sub, mul, div."""
    if a.spec != b.spec:
        raise MixedFields(f"cannot combine elements of {a.spec} and {b.spec}")
    return _OPS[op](a, b)
