import heapq
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.monomials import (
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_ldiv,
    monomial_mul,
)

from idealpow.errors import MixedRings, ZeroIdeal
from idealpow.field import Coeff
from idealpow.poly import Exponents, Monomial, Poly, Ring
from idealpow.utils.logger import get_logger

logger = get_logger("groebner")


def coprime(a: Exponents, b: Exponents) -> bool:
    return not any(monomial_gcd(a, b))


class MonomialIdeal:
    """Monomial ideal kept as its minimal generators, sorted descending."""

    def __init__(self, ring: Ring, generators: Iterable[Exponents] = ()):
        self.ring = ring
        key = ring.order.key
        self._gens = tuple(sorted(minimalize(generators), key=key, reverse=True))

    @property
    def generators(self) -> Tuple[Exponents, ...]:
        return self._gens

    @property
    def minimal_generators(self) -> List[Monomial]:
        return [Monomial(e) for e in self._gens]

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return any(not any(e) for e in self._gens)

    def contains(self, exps: Exponents) -> bool:
        return any(monomial_divides(g, exps) for g in self._gens)

    def __contains__(self, exps) -> bool:
        if isinstance(exps, Monomial):
            exps = exps.exponents
        return self.contains(exps)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self._gens + other._gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, (monomial_mul(a, b) for a in self._gens for b in other._gens))

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, (monomial_lcm(a, b) for a in self._gens for b in other._gens))

    def colon(self, exps: Exponents) -> "MonomialIdeal":
        return MonomialIdeal(
            self.ring, (tuple(max(a - b, 0) for a, b in zip(g, exps)) for g in self._gens)
        )

    def saturate(self, exps: Exponents) -> "MonomialIdeal":
        """I : u^oo drops every variable of u from the generators."""
        return MonomialIdeal(
            self.ring, (tuple(0 if b else a for a, b in zip(g, exps)) for g in self._gens)
        )

    def as_ideal(self) -> "Ideal":
        polys = [self.ring.term(g) for g in self._gens]
        return Ideal(self.ring, polys, groebner_basis=polys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self.ring, self._gens))

    def __str__(self) -> str:
        if not self._gens:
            return "(0)"
        return "(" + ", ".join(Monomial(g).render(self.ring.variables) for g in self._gens) + ")"


def minimalize(generators: Iterable[Exponents]) -> List[Exponents]:
    """Drop every monomial divisible by another one (and duplicates)."""
    kept: List[Exponents] = []
    for m in sorted(set(tuple(g) for g in generators), key=sum):
        if not any(monomial_divides(g, m) for g in kept):
            kept.append(m)
    return kept


class Ideal:
    """Ideal given by generators, with a write-once reduced Groebner basis cache."""

    def __init__(self, ring: Ring, generators: Iterable[Poly] = (), groebner_basis=None):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise MixedRings(f"generator {g} lives in {g.ring}, not {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self._gens = tuple(gens)
        self._gb = tuple(groebner_basis) if groebner_basis is not None else None

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        gens = ring.gens()
        return cls(ring, gens, groebner_basis=sorted(gens, key=lambda g: ring.key(g.lm()), reverse=True))

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()], groebner_basis=[ring.one()])

    @property
    def generators(self) -> Tuple[Poly, ...]:
        return self._gens

    def groebner_basis(self) -> Tuple[Poly, ...]:
        if self._gb is None:
            self._gb = reduced_groebner_basis(self.ring, self._gens)
        return self._gb

    def has_groebner_basis(self) -> bool:
        return self._gb is not None

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self._gens)

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self._gens)

    def monomial_ideal(self) -> MonomialIdeal:
        """The generators as a MonomialIdeal; only valid for monomial ideals."""
        return MonomialIdeal(self.ring, (g.lm() for g in self._gens))

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self).is_zero()

    def __contains__(self, f: Poly) -> bool:
        return self.contains(f)

    def is_subset(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise MixedRings(f"ideals live in {self.ring} and {other.ring}")
        return all(other.contains(g) for g in self._gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise MixedRings(f"ideals live in {self.ring} and {other.ring}")
        return Ideal(self.ring, self._gens + other._gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise MixedRings(f"ideals live in {self.ring} and {other.ring}")
        return Ideal(self.ring, distinct_monic(f * g for f in self._gens for g in other._gens))

    def embed(self, ring: Ring) -> "Ideal":
        return Ideal(ring, [g.embed(ring) for g in self._gens])

    def __str__(self) -> str:
        gb = self.groebner_basis()
        if not gb:
            return "(0)"
        return "(" + ", ".join(str(g) for g in gb) + ")"

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self._gens)}; {self.ring})"


def distinct_monic(polys: Iterable[Poly]) -> List[Poly]:
    """Monic, nonzero and without repeats, in input order."""
    seen, out = set(), []
    for p in polys:
        p = p.monic()
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


# division


class _Descending:
    """Heap entry ordering exponent tuples from the largest down."""

    __slots__ = ("key", "exps")

    def __init__(self, key: tuple, exps: Exponents):
        self.key = key
        self.exps = exps

    def __lt__(self, other: "_Descending") -> bool:
        return self.key > other.key


def reduce(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Full reduction of f by ``basis`` (multivariate division remainder)."""
    if not basis or not f:
        return f
    ring = f.ring
    field, key = ring.field, ring.order.key
    zero = field.zero()
    divisors = [(g.lm(), field.inv(g.lc()), g.raw_terms[1:]) for g in basis]

    rest: Dict[Exponents, Coeff] = f.as_dict()
    heap = [_Descending(key(e), e) for e in rest]
    heapq.heapify(heap)
    queued = set(rest)
    remainder: Dict[Exponents, Coeff] = {}

    while heap:
        lead = heapq.heappop(heap).exps
        queued.discard(lead)
        c = rest.pop(lead, None)
        if c is None:
            continue
        for lm, inv, tail in divisors:
            if monomial_divides(lm, lead):
                shift, factor = monomial_ldiv(lead, lm), c * inv
                for e, x in tail:
                    m = monomial_mul(e, shift)
                    v = rest.get(m, zero) - x * factor
                    if v:
                        rest[m] = v
                        if m not in queued:
                            queued.add(m)
                            heapq.heappush(heap, _Descending(key(m), m))
                    else:
                        rest.pop(m, None)
                break
        else:
            remainder[lead] = c
    return ring.from_terms(remainder.items())


def s_polynomial(f: Poly, g: Poly) -> Poly:
    field = f.ring.field
    lcm = monomial_lcm(f.lm(), g.lm())
    left = f.mul_term(monomial_ldiv(lcm, f.lm()), field.inv(f.lc()))
    right = g.mul_term(monomial_ldiv(lcm, g.lm()), field.inv(g.lc()))
    return left - right


# Buchberger


def _update(lms: List[Exponents], active: List[int], pairs: list, h: int, key):
    """Gebauer-Moeller installation of the new basis element ``h``."""
    lh = lms[h]
    candidates = [(g, monomial_lcm(lh, lms[g])) for g in active]
    kept = []
    while candidates:
        g1, l1 = candidates.pop(0)
        if coprime(lh, lms[g1]) or (
            not any(monomial_divides(l2, l1) for _, l2 in candidates)
            and not any(monomial_divides(l2, l1) for _, l2 in kept)
        ):
            kept.append((g1, l1))
    new_pairs = [((sum(l), key(l), g, h), g, h, l) for g, l in kept if not coprime(lh, lms[g])]

    survivors = []
    for entry in pairs:
        _, i, j, l = entry
        if (
            monomial_divides(lh, l)
            and monomial_lcm(lms[i], lh) != l
            and monomial_lcm(lh, lms[j]) != l
        ):
            continue
        survivors.append(entry)
    survivors.extend(new_pairs)

    active = [g for g in active if not monomial_divides(lh, lms[g])] + [h]
    return active, survivors


def reduced_groebner_basis(ring: Ring, generators: Sequence[Poly]) -> Tuple[Poly, ...]:
    """Reduced, monic Groebner basis sorted descending by leading monomial.

    Pairs are taken by the normal strategy (smallest lcm degree first, then
    smallest lcm in the order); both Buchberger criteria are applied through
    the Gebauer-Moeller update.
    """
    polys = [g.monic() for g in generators if g]
    if not polys:
        return ()
    if any(g.is_constant() for g in polys):
        return (ring.one(),)
    key = ring.order.key

    basis: List[Poly] = []
    lms: List[Exponents] = []
    active: List[int] = []
    pairs: list = []

    def install(h: Poly) -> bool:
        nonlocal active, pairs
        if h.is_constant():
            return False
        basis.append(h.monic())
        lms.append(h.lm())
        active, pairs = _update(lms, active, pairs, len(basis) - 1, key)
        return True

    for f in sorted(polys, key=lambda p: key(p.lm())):
        h = reduce(f, [basis[i] for i in active])
        if h and not install(h):
            return (ring.one(),)

    reductions = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda n: pairs[n][0])
        _, i, j, _ = pairs.pop(best)
        h = reduce(s_polynomial(basis[i], basis[j]), [basis[k] for k in active])
        reductions += 1
        if h and not install(h):
            return (ring.one(),)

    result = _interreduce([basis[i] for i in active])
    if logger.enabled(logging.DEBUG):
        logger.log(
            logging.DEBUG,
            f"{len(polys)} generators in {ring}: {reductions} S-polynomials, basis size {len(result)}",
        )
    return result


def _interreduce(basis: List[Poly]) -> Tuple[Poly, ...]:
    ring = basis[0].ring
    key = ring.order.key
    out = []
    for n, g in enumerate(basis):
        others = basis[:n] + basis[n + 1:]
        lead = ring.from_terms(g.raw_terms[:1])
        tail = ring.from_terms(g.raw_terms[1:])
        out.append((lead + reduce(tail, others)).monic())
    return tuple(sorted(out, key=lambda p: key(p.lm()), reverse=True))


def is_groebner(basis: Sequence[Poly]) -> bool:
    """Every S-polynomial reduces to zero."""
    basis = list(basis)
    for n, f in enumerate(basis):
        for g in basis[n + 1:]:
            if reduce(s_polynomial(f, g), basis):
                return False
    return True


def buchberger(ideal: Ideal) -> Ideal:
    ideal.groebner_basis()
    return ideal


def normal_form(f: Poly, ideal: Ideal) -> Poly:
    if f.ring != ideal.ring:
        raise MixedRings(f"{f} lives in {f.ring}, the ideal in {ideal.ring}")
    return reduce(f, ideal.groebner_basis())


def initial_ideal(ideal: Ideal) -> MonomialIdeal:
    gb = ideal.groebner_basis()
    if not gb:
        raise ZeroIdeal("the zero ideal has no initial ideal generators")
    return MonomialIdeal(ideal.ring, (g.lm() for g in gb))


def equal_ideals(first: Ideal, second: Ideal) -> bool:
    if first.ring != second.ring:
        raise MixedRings(f"ideals live in {first.ring} and {second.ring}")
    return first.groebner_basis() == second.groebner_basis()
