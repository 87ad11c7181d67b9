"""Graded and finite-length invariants.

Everything here is computed from monomial ideals: Hilbert series by the pivot
recursion on exponent matrices, standard monomial counts, Krull dimension as a
vertex-cover number. Lengths of quotients of polynomial ideals go through their
initial ideals (Macaulay's basis of standard monomials).
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, List, Sequence, Union

import numpy as np
from sympy import Poly as IntPoly
from sympy import ZZ, symbols
from sympy.polys.matrices import DomainMatrix

from idealpow.errors import MixedRings, NotContained, NotHomogeneous, NotMPrimary, UnitIdeal
from idealpow.field import Coeff, FieldSpec
from idealpow.groebner import Ideal, MonomialIdeal, distinct_monic, initial_ideal
from idealpow.ideal_ops import saturate_poly
from idealpow.poly import Exponents, Monomial, Poly
from idealpow.utils.logger import get_logger

logger = get_logger("invariants")

INFINITE = math.inf
Length = Union[int, float]

T = symbols("t")
_ONE_MINUS_T = IntPoly(1 - T, T, domain=ZZ)


def _int_poly(expr) -> IntPoly:
    return IntPoly(expr, T, domain=ZZ)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator/(1-t)^n of R/M with the derived dimension and multiplicity.

    The zero ring (M the unit ideal) has numerator 0, dimension -1 and multiplicity 0.
    """

    numerator: IntPoly
    ambient_dim: int
    dimension: int
    multiplicity: int

    @classmethod
    def from_numerator(cls, numerator: IntPoly, n: int) -> "HilbertData":
        if numerator.is_zero:
            return cls(numerator, n, -1, 0)
        reduced, dim = numerator, n
        while reduced.eval(1) == 0:
            reduced = reduced.exquo(_ONE_MINUS_T)
            dim -= 1
        return cls(numerator, n, dim, int(reduced.eval(1)))

    def coefficients(self, count: int) -> List[int]:
        """Values of the Hilbert function in degrees 0..count-1."""
        num = [int(c) for c in reversed(self.numerator.all_coeffs())]
        n = self.ambient_dim
        out = []
        for j in range(count):
            total = 0
            for i, c in enumerate(num[: j + 1]):
                total += c * math.comb(j - i + n - 1, n - 1)
            out.append(total)
        return out

    def numerator_text(self) -> str:
        return str(self.numerator.as_expr()).replace("**", "^")

    def __str__(self) -> str:
        return f"{self.numerator_text()}; {self.dimension}; {self.multiplicity}"


# monomial ideals as exponent matrices


def _minimalize(A: np.ndarray) -> np.ndarray:
    """Minimal generators among the rows of A."""
    kept: List[np.ndarray] = []
    for m in sorted(A, key=lambda row: int(row.sum())):
        if all(not np.all(m >= g) for g in kept):
            kept.append(m)
    if not kept:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return np.array(kept, dtype=np.int64)


def _pivot(A: np.ndarray, p: np.ndarray):
    """Split I on the monomial p into I + (p) and I : p."""
    left = [m for m in A if not np.all(m >= p)] + [p]
    right = np.where(A >= p, A - p, 0)
    return _minimalize(np.array(left, dtype=np.int64)), _minimalize(right)


def _mixed(A: np.ndarray) -> np.ndarray:
    return A[np.count_nonzero(A, axis=1) > 1]


def _base_numerator(A: np.ndarray) -> IntPoly:
    """Numerator for pure powers plus at most one mixed generator."""
    n = A.shape[1]
    pure = {int(np.flatnonzero(m)[0]): int(m.sum()) for m in A if np.count_nonzero(m) == 1}
    mixed = _mixed(A)
    result = _int_poly(1)
    for a in pure.values():
        result *= _int_poly(1 - T ** a)
    if len(mixed):
        m = mixed[0]
        colon = _int_poly(T ** int(m.sum()))
        for i in range(n):
            if i in pure:
                colon *= _int_poly(1 - T ** (pure[i] - int(m[i])))
        result -= colon
    return result


def _numerator(A: np.ndarray) -> IntPoly:
    if len(A) == 0:
        return _int_poly(1)
    if np.any(A.sum(axis=1) == 0):
        return _int_poly(0)
    mixed = _mixed(A)
    if len(mixed) <= 1:
        return _base_numerator(A)
    # pivot on the variable shared by most mixed generators, lowest exponent present
    j = int(np.argmax(np.count_nonzero(mixed, axis=0)))
    e = int(min(m[j] for m in mixed if m[j]))
    p = np.zeros(A.shape[1], dtype=np.int64)
    p[j] = e
    left, right = _pivot(A, p)
    return _numerator(left) + _int_poly(T ** e) * _numerator(right)


def _matrix(M: MonomialIdeal) -> np.ndarray:
    n = M.ring.ngens
    if not M.generators:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(M.generators, dtype=np.int64)


def hilbert_series(M: MonomialIdeal) -> HilbertData:
    numerator = _numerator(_matrix(M))
    return HilbertData.from_numerator(numerator, M.ring.ngens)


def std_monomial_count(M: MonomialIdeal) -> Length:
    """Number of monomials outside M, or INFINITE."""
    n = M.ring.ngens
    if M.is_unit():
        return 0
    pure = {i for g in M.generators for i in range(n) if sum(g) == g[i]}
    if len(pure) < n:
        return INFINITE
    data = hilbert_series(M)
    return data.multiplicity


def minimal_monomial_generators(M: MonomialIdeal) -> List[Monomial]:
    return M.minimal_generators


def _min_vertex_cover(supports: Sequence[frozenset], n: int) -> int:
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            chosen = set(cover)
            if all(chosen & s for s in supports):
                return size
    return n


def krull_dimension(ideal: Ideal) -> int:
    """dim R/I: n minus the smallest set of variables meeting every initial generator."""
    n = ideal.ring.ngens
    if ideal.is_zero():
        return n
    if ideal.is_unit():
        raise UnitIdeal("the unit ideal has no dimension")
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in initial_ideal(ideal).generators]
    return n - _min_vertex_cover(supports, n)


def local_colength(ideal: Ideal) -> int:
    """dim_K K[x]/I for an ideal whose only zero is the origin."""
    if ideal.is_unit():
        return 0
    if ideal.is_zero():
        raise NotMPrimary("the zero ideal is not primary to the maximal ideal")
    count = std_monomial_count(initial_ideal(ideal))
    if count == INFINITE:
        raise NotMPrimary(f"{ideal} has an infinite staircase")
    if not ideal.is_homogeneous():
        # finite colength alone allows zeros away from the origin
        for x in ideal.ring.gens():
            if not saturate_poly(ideal, x).is_unit():
                raise NotMPrimary(f"{x} is not nilpotent modulo {ideal}")
    return count


def quotient_length(inner: Ideal, outer: Ideal) -> Length:
    """Length of outer/inner from the Hilbert series of the two initial ideals.

    The monomials of in(outer) missing from in(inner) form a basis of the
    quotient; their generating series is the difference of the two series, a
    polynomial exactly when the quotient is finite.
    """
    if inner.ring != outer.ring:
        raise MixedRings(f"ideals live in {inner.ring} and {outer.ring}")
    if not inner.is_subset(outer):
        raise NotContained(f"{inner} is not contained in {outer}")
    n = inner.ring.ngens
    n_in = _numerator(_matrix(_initial_or_zero(inner)))
    n_out = _numerator(_matrix(_initial_or_zero(outer)))
    diff = n_in - n_out
    if diff.is_zero:
        return 0
    quotient, remainder = diff.div(_int_poly((1 - T) ** n))
    if not remainder.is_zero:
        return INFINITE
    return int(quotient.eval(1))


def _initial_or_zero(ideal: Ideal) -> MonomialIdeal:
    if ideal.is_zero():
        return MonomialIdeal(ideal.ring)
    return initial_ideal(ideal)


# exact linear algebra


def monomials_of_degree(n: int, d: int) -> List[Exponents]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


class _Echelon:
    """Reduced row echelon form of a set of sparse vectors keyed by monomials."""

    def __init__(self, field: FieldSpec, vectors: Sequence[Dict[Exponents, Coeff]]):
        self.field = field
        vectors = [v for v in vectors if v]
        columns = sorted({e for v in vectors for e in v})
        self.rows: List[tuple] = []
        if not vectors:
            return
        index = {e: i for i, e in enumerate(columns)}
        sparse = {r: {index[e]: c for e, c in v.items()} for r, v in enumerate(vectors)}
        matrix = DomainMatrix(sparse, (len(vectors), len(columns)), field.domain)
        reduced, pivots = matrix.rref()
        dense = reduced.rep.to_ddm()
        for r, p in enumerate(pivots):
            row = {columns[c]: value for c, value in enumerate(dense[r]) if value}
            self.rows.append((columns[p], row))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Dict[Exponents, Coeff]) -> Dict[Exponents, Coeff]:
        zero = self.field.zero()
        rest = dict(vector)
        for pivot, row in self.rows:
            c = rest.get(pivot)
            if not c:
                continue
            for e, x in row.items():
                value = rest.get(e, zero) - c * x
                if value:
                    rest[e] = value
                else:
                    rest.pop(e, None)
        return rest

    def contains(self, vector: Dict[Exponents, Coeff]) -> bool:
        return not self.reduce(vector)


def _products(gens: Sequence[Poly], degree: int, exact: bool) -> List[Dict[Exponents, Coeff]]:
    """Coefficient vectors of m*g: of total degree exactly ``degree``, or at most it."""
    n = gens[0].ring.ngens
    one = gens[0].ring.field.one()
    rows = []
    for g in gens:
        room = degree - g.degree()
        shifts = ([room] if room >= 0 else []) if exact else range(room + 1)
        for d in shifts:
            for m in monomials_of_degree(n, d):
                rows.append(g.mul_term(m, one).as_dict())
    return rows


def generator_degrees(ideal: Ideal) -> List[int]:
    """Degrees of a minimal homogeneous generating set, found degree by degree."""
    if not ideal.is_homogeneous():
        raise NotHomogeneous(f"{ideal!r} is not homogeneous")
    gens = sorted(distinct_monic(ideal.generators), key=lambda g: g.degree())
    if any(g.is_constant() for g in gens):
        return [0]
    field = ideal.ring.field
    chosen: List[Poly] = []
    for g in gens:
        d = g.degree()
        span = _Echelon(field, _products(chosen, d, exact=True)) if chosen else None
        if span is None or not span.contains(g.as_dict()):
            chosen.append(g)
    return [g.degree() for g in chosen]


def is_complete_intersection(ideal: Ideal) -> bool:
    """A homogeneous ideal is a complete intersection iff its minimal generators number its codimension."""
    if ideal.is_zero():
        return True
    if ideal.is_unit():
        return False
    codim = ideal.ring.ngens - krull_dimension(ideal)
    return len(generator_degrees(ideal)) == codim


class SliceMembershipOracle:
    """Membership in I by Gaussian elimination on the products m*g.

    For homogeneous I each homogeneous component of f is tested in its own
    degree, which decides membership exactly. Otherwise all products of
    degree at most ``degree_bound`` are used, which proves membership and can
    only miss members needing larger cofactors.
    """

    def __init__(self, ideal: Ideal, degree_bound: int):
        self.ideal = ideal
        self.degree_bound = degree_bound
        self.homogeneous = ideal.is_homogeneous()
        self._gens = distinct_monic(ideal.generators)
        self._slices: Dict[int, _Echelon] = {}

    def _echelon(self, degree: int) -> _Echelon:
        key = degree if self.homogeneous else -1
        if key not in self._slices:
            bound = degree if self.homogeneous else self.degree_bound
            rows = _products(self._gens, bound, exact=self.homogeneous) if self._gens else []
            self._slices[key] = _Echelon(self.ideal.ring.field, rows)
            logger.log(logging.DEBUG, f"slice of degree {bound} has rank {self._slices[key].rank}")
        return self._slices[key]

    def slice_rank(self, degree: int) -> int:
        """dim_K of I_d for homogeneous I."""
        if not self.homogeneous:
            raise NotHomogeneous("slices by degree need a homogeneous ideal")
        return self._echelon(degree).rank

    def __call__(self, f: Poly) -> bool:
        if f.ring != self.ideal.ring:
            raise MixedRings(f"{f} lives in {f.ring}, the ideal in {self.ideal.ring}")
        if f.is_zero():
            return True
        if f.degree() > self.degree_bound:
            raise ValueError(f"degree {f.degree()} exceeds the bound {self.degree_bound}")
        if self.homogeneous:
            parts = f.homogeneous_components()
            return all(self._echelon(d).contains(p.as_dict()) for d, p in parts.items())
        return self._echelon(self.degree_bound).contains(f.as_dict())


def slice_membership_oracle(ideal: Ideal, degree_bound: int) -> Callable[[Poly], bool]:
    return SliceMembershipOracle(ideal, degree_bound)
