from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from operator import itemgetter
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.monomials import monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from idealpow.constants import Constants
from idealpow.errors import (
    BadVariableSet,
    ExponentOverflow,
    LengthMismatch,
    MissingImage,
    MixedRings,
    NotContained,
    ZeroPolynomial,
)
from idealpow.field import Coeff, FieldElement, FieldSpec

Exponents = Tuple[int, ...]


class OrderKind(Enum):
    LEX = "lex"
    DEGREVLEX = "degrevlex"
    ELIMINATION = "elimination"


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@lru_cache(maxsize=None)
def _block_order(block_size: int) -> ProductOrder:
    # cached: sympy compares product orders by their key functions
    return ProductOrder(
        (grevlex, itemgetter(slice(0, block_size))),
        (grevlex, itemgetter(slice(block_size, None))),
    )


@dataclass(frozen=True)
class MonomialOrder:
    """A global multiplicative monomial order.

    ``ELIMINATION`` is the block order: the first ``block_size`` variables are
    compared first (by DegRevLex), ties are broken by DegRevLex on the rest.
    """

    kind: OrderKind = OrderKind.DEGREVLEX
    block_size: int = 0

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        return cls(OrderKind(text.strip().lower()))

    @classmethod
    def elimination(cls, block_size: int) -> "MonomialOrder":
        return cls(OrderKind.ELIMINATION, block_size)

    @property
    def sympy_order(self):
        if self.kind is OrderKind.LEX:
            return lex
        if self.kind is OrderKind.DEGREVLEX:
            return grevlex
        return _block_order(self.block_size)

    def key(self, exps: Exponents) -> tuple:
        return self.sympy_order(exps)

    def __str__(self) -> str:
        if self.kind is OrderKind.ELIMINATION:
            return f"elimination({self.block_size})"
        return self.kind.value


def check_exponents(exps: Iterable[int]):
    exps = tuple(exps)
    if any(e > Constants.max_exponent for e in exps):
        raise ExponentOverflow(f"exponent above {Constants.max_exponent} in {exps}")


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        check_exponents(exps)
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_lengths(self.exponents, other.exponents)
        return Monomial(monomial_mul(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        _check_lengths(self.exponents, other.exponents)
        return monomial_divides(self.exponents, other.exponents)

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_lengths(self.exponents, other.exponents)
        return Monomial(monomial_lcm(self.exponents, other.exponents))

    def render(self, variables: Sequence[str]) -> str:
        return render_monomial(self.exponents, variables)


def render_monomial(exps: Exponents, variables: Sequence[str]) -> str:
    factors = []
    for name, e in zip(variables, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def _check_lengths(a: Exponents, b: Exponents):
    if len(a) != len(b):
        raise LengthMismatch(f"exponent vectors of length {len(a)} and {len(b)}")


@lru_cache(maxsize=None)
def _poly_ring(field: FieldSpec, variables: Tuple[str, ...], order: MonomialOrder) -> PolyRing:
    return PolyRing(variables, field.domain, order.sympy_order)


@dataclass(frozen=True)
class Ring:
    """The polynomial ring K[x_1, ..., x_n] with a monomial order.

    Arithmetic runs on the matching sympy ``PolyRing``; ``Ring`` adds the
    variable bookkeeping the constructions need.
    """

    field: FieldSpec
    variables: Tuple[str, ...]
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise BadVariableSet("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise BadVariableSet(f"duplicate variable names in {self.variables}")
        if self.order.block_size > len(self.variables):
            raise BadVariableSet(f"elimination block larger than {len(self.variables)} variables")

    @property
    def sympy(self) -> PolyRing:
        return _poly_ring(self.field, self.variables, self.order)

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise BadVariableSet(f"{name} is not a variable of {self}") from None

    def wrap(self, element: PolyElement) -> "Poly":
        return Poly(self, element)

    def zero(self) -> "Poly":
        return Poly(self, self.sympy.zero)

    def one(self) -> "Poly":
        return Poly(self, self.sympy.one)

    def constant(self, c) -> "Poly":
        return self.term((0,) * self.ngens, c)

    def term(self, exps: Exponents, c=1) -> "Poly":
        return self.from_dict({Monomial(exps).exponents: c})

    def gen(self, name) -> "Poly":
        i = name if isinstance(name, int) else self.index(name)
        return Poly(self, self.sympy.gens[i])

    def gens(self) -> List["Poly"]:
        return [Poly(self, g) for g in self.sympy.gens]

    def from_dict(self, terms: Mapping[Exponents, object]) -> "Poly":
        normalize = self.field.normalize
        return Poly(self, self.sympy.from_dict({e: normalize(c) for e, c in terms.items()}))

    def from_terms(self, terms: Iterable[Tuple[Exponents, Coeff]]) -> "Poly":
        """Terms with distinct exponents and coefficients already in the field's domain."""
        return Poly(self, self.sympy.from_dict(dict(terms)))

    def extend(self, names: Sequence[str], order: MonomialOrder = None) -> "Ring":
        """Append variables; the order defaults to DegRevLex on the result."""
        return Ring(self.field, self.variables + tuple(names), order or MonomialOrder())

    def elimination_ring(self, names: Sequence[str]) -> "Ring":
        """Ring with ``names`` as a leading block eliminated before the others."""
        return Ring(
            self.field, tuple(names) + self.variables, MonomialOrder.elimination(len(names))
        )

    def key(self, exps: Exponents) -> tuple:
        return self.order.key(exps)

    def __str__(self) -> str:
        text = f"{self.field}[{','.join(self.variables)}]"
        if self.order.kind is OrderKind.LEX:
            text += " order=lex"
        return text


class Poly:
    """Immutable polynomial over a ``Ring``, backed by a sympy ``PolyElement``.

    ``raw_terms`` lists ``(exponent tuple, domain coefficient)`` pairs sorted
    strictly descending in the ring order; ``terms`` wraps them as
    ``(FieldElement, Monomial)``.
    """

    __slots__ = ("ring", "_element", "_terms")

    def __init__(self, ring: Ring, element: PolyElement):
        self.ring = ring
        self._element = element
        self._terms = None

    @property
    def element(self) -> PolyElement:
        return self._element

    # accessors

    @property
    def raw_terms(self) -> Tuple[Tuple[Exponents, Coeff], ...]:
        if self._terms is None:
            self._terms = tuple(self._element.terms())
        return self._terms

    @property
    def terms(self) -> List[Tuple[FieldElement, Monomial]]:
        field = self.ring.field
        return [(FieldElement(field, c), Monomial(e)) for e, c in self.raw_terms]

    def as_dict(self) -> Dict[Exponents, Coeff]:
        return dict(self._element)

    def is_zero(self) -> bool:
        return not self._element

    def __bool__(self) -> bool:
        return bool(self._element)

    def __len__(self) -> int:
        return len(self._element)

    def is_constant(self) -> bool:
        return self._element.is_ground

    def constant_coefficient(self) -> Coeff:
        return self._element.get(self.ring.sympy.zero_monom, self.ring.field.zero())

    def lm(self) -> Exponents:
        if not self._element:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return self.raw_terms[0][0]

    def lc(self) -> Coeff:
        if not self._element:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return self.raw_terms[0][1]

    def leading_term(self) -> Tuple[FieldElement, Monomial]:
        return FieldElement(self.ring.field, self.lc()), Monomial(self.lm())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(map(sum, self._element), default=-1)

    def min_degree(self) -> int:
        return min(map(sum, self._element), default=-1)

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        parts: Dict[int, dict] = {}
        for exps, c in self._element.items():
            parts.setdefault(sum(exps), {})[exps] = c
        return {d: self.ring.from_terms(terms.items()) for d, terms in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(set(map(sum, self._element))) <= 1

    def support_variables(self) -> List[int]:
        if not self._element:
            return []
        return [i for i, d in enumerate(self._element.degrees()) if d > 0]

    # arithmetic

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise MixedRings(f"polynomials live in {self.ring} and {other.ring}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check_ring(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        return Poly(self.ring, self._element + other._element)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, -self._element)

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        return Poly(self.ring, self._element - other._element)

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(self.ring.field.normalize(other))
        self._check_ring(other)
        if self and other:
            # the top x_i-degree of a product is the sum of the factors' ones
            check_exponents(a + b for a, b in zip(self._element.degrees(), other._element.degrees()))
        return Poly(self.ring, self._element * other._element)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        if self and k:
            check_exponents(d * k for d in self._element.degrees())
        return Poly(self.ring, self._element ** k)

    def scale(self, c: Coeff) -> "Poly":
        return Poly(self.ring, self._element.mul_ground(c))

    def mul_term(self, exps: Exponents, c: Coeff) -> "Poly":
        if self._element:
            check_exponents(a + b for a, b in zip(self._element.degrees(), exps))
        return Poly(self.ring, self._element.mul_term((tuple(exps), c)))

    def monic(self) -> "Poly":
        if not self._element:
            return self
        return Poly(self.ring, self._element.monic())

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Quotient of an exact division; NotContained if a remainder is left."""
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        try:
            return Poly(self.ring, self._element.exquo(divisor._element))
        except ExactQuotientFailed:
            raise NotContained(f"{divisor} does not divide {self}") from None

    # ring changes

    def embed(self, target: Ring) -> "Poly":
        """Move into ``target`` by variable name; absent variables must not occur."""
        if target.field != self.ring.field:
            raise MixedRings(f"fields {self.ring.field} and {target.field} differ")
        if target == self.ring:
            return self
        positions = []
        for name in self.ring.variables:
            positions.append(target.variables.index(name) if name in target.variables else None)
        n = target.ngens
        out = {}
        for exps, c in self._element.items():
            image = [0] * n
            for i, e in enumerate(exps):
                if not e:
                    continue
                if positions[i] is None:
                    raise MissingImage(f"{self.ring.variables[i]} does not exist in {target}")
                image[positions[i]] = e
            out[tuple(image)] = c
        return target.from_terms(out.items())

    def evaluate_zero(self, names: Sequence[str]) -> "Poly":
        """Set the given variables to zero, staying in the same ring."""
        idx = [self.ring.index(name) for name in names]
        kept = ((e, c) for e, c in self._element.items() if not any(e[i] for i in idx))
        return self.ring.from_terms(kept)

    # comparison and printing

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and dict.__eq__(self._element, other._element)

    def __hash__(self) -> int:
        return hash(self._element)

    def __str__(self) -> str:
        if not self._element:
            return "0"
        field, names = self.ring.field, self.ring.variables
        pieces = []
        for exps, c in self.raw_terms:
            value = field.to_sympy(c)
            negative = value < 0
            magnitude = -value if negative else value
            mono = render_monomial(exps, names)
            if mono == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ring})"


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> Comparison:
    _check_lengths(a.exponents, b.exponents)
    ka, kb = order.key(a.exponents), order.key(b.exponents)
    if ka == kb:
        return Comparison.EQUAL
    return Comparison.GREATER if ka > kb else Comparison.LESS


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    f._check_ring(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: Poly, assignment: Mapping[str, Poly], target: Ring) -> Poly:
    """Image of f under the ring map sending each variable to ``assignment[name]``."""
    if f.ring.field != target.field:
        raise MixedRings(f"fields {f.ring.field} and {target.field} differ")
    images = []
    for name in f.ring.variables:
        image = assignment.get(name)
        if image is not None and image.ring != target:
            raise MixedRings(f"image of {name} lives in {image.ring}, expected {target}")
        images.append(image)
    for i in f.support_variables():
        if images[i] is None:
            raise MissingImage(f"no image for variable {f.ring.variables[i]}")

    powers: Dict[Tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = target.zero()
    for exps, c in f.raw_terms:
        term = target.constant(c)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def leading_term(f: Poly) -> Tuple[FieldElement, Monomial]:
    return f.leading_term()
