"""The ideal calculus: powers, intersections, colons, saturations, elimination."""

import logging
from functools import reduce as fold
from itertools import combinations_with_replacement, count
from typing import Dict, Iterable, Sequence

from idealpow.constants import Constants
from idealpow.errors import AlgebraError, BadVariableSet, MixedRings, ZeroDivisor, ZeroIdeal
from idealpow.field import Coeff
from idealpow.groebner import Ideal, distinct_monic, equal_ideals
from idealpow.poly import Exponents, MonomialOrder, OrderKind, Poly, Ring
from idealpow.utils.logger import get_logger
from idealpow.utils.workers import ordered_map

logger = get_logger("ideal_ops")


def fresh_auxiliary(variables: Sequence[str]) -> str:
    """First of t0, t1, ... not among ``variables``."""
    prefix = Constants.auxiliary_prefix
    return next(f"{prefix}{i}" for i in count() if f"{prefix}{i}" not in variables)


def _same_ring(first: Ideal, second: Ideal):
    if first.ring != second.ring:
        raise MixedRings(f"ideals live in {first.ring} and {second.ring}")


def power(ideal: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError(f"negative power {k}")
    ring = ideal.ring
    if k == 0:
        return Ideal.unit(ring)
    if k == 1:
        return ideal
    if ideal.is_monomial():
        base = ideal.monomial_ideal()
        return fold(lambda acc, _: acc * base, range(k - 1), base).as_ideal()
    gens = distinct_monic(ideal.generators)
    products = []
    for combo in combinations_with_replacement(gens, k):
        products.append(fold(lambda a, b: a * b, combo))
    return Ideal(ring, distinct_monic(products))


def eliminate_block(ideal: Ideal, block: int, target: Ring) -> Ideal:
    """Basis elements free of the leading ``block`` variables, moved to ``target``.

    ``ideal`` lives in a ring with an elimination order on that block.
    """
    kept = [g for g in ideal.groebner_basis() if not any(any(e[:block]) for e, _ in g.raw_terms)]
    gens = [g.embed(target) for g in kept]
    if target.order.kind is OrderKind.DEGREVLEX:
        # the block order restricts to DegRevLex on the remaining variables
        gens.sort(key=lambda g: target.key(g.lm()), reverse=True)
        return Ideal(target, gens, groebner_basis=gens)
    return Ideal(target, gens)


def intersection(first: Ideal, second: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    _same_ring(first, second)
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return Ideal(ring)
    if first.is_monomial() and second.is_monomial():
        return first.monomial_ideal().intersection(second.monomial_ideal()).as_ideal()
    if first.is_subset(second):
        return first
    if second.is_subset(first):
        return second
    name = fresh_auxiliary(ring.variables)
    aux = ring.elimination_ring([name])
    t = aux.gen(name)
    gens = [t * f.embed(aux) for f in first.generators]
    gens += [(1 - t) * g.embed(aux) for g in second.generators]
    return eliminate_block(Ideal(aux, gens), 1, ring)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    return fold(intersection, ideals)


def colon_poly(ideal: Ideal, f: Poly) -> Ideal:
    """I : f, computed as (I ∩ (f)) / f."""
    if f.ring != ideal.ring:
        raise MixedRings(f"{f} lives in {f.ring}, the ideal in {ideal.ring}")
    if f.is_zero():
        raise ZeroDivisor("colon by the zero polynomial")
    if f.is_constant():
        return ideal
    if ideal.is_monomial() and len(f) == 1:
        return ideal.monomial_ideal().colon(f.lm()).as_ideal()
    meet = intersection(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [g.divide_exact(f) for g in meet.generators])


def colon_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J as the intersection of I : g over the generators g of J."""
    _same_ring(ideal, other)
    if other.is_zero():
        raise ZeroIdeal("colon by the zero ideal")
    parts = ordered_map(lambda g: colon_poly(ideal, g), distinct_monic(other.generators))
    return intersect_all(parts)


def _saturate_variable(ideal: Ideal, index: int) -> Ideal:
    """I : x^oo for homogeneous I: divide a DegRevLex basis with x last by powers of x."""
    ring = ideal.ring
    name = ring.variables[index]
    moved = Ring(
        ring.field, tuple(v for v in ring.variables if v != name) + (name,), MonomialOrder()
    )
    gens = []
    for g in ideal.embed(moved).groebner_basis():
        lowest = min(e[-1] for e, _ in g.raw_terms)
        if lowest:
            g = moved.from_terms((e[:-1] + (e[-1] - lowest,), c) for e, c in g.raw_terms)
        gens.append(g.embed(ring))
    return Ideal(ring, gens)


def _saturate_variables(ideal: Ideal, exps: Exponents) -> Ideal:
    result = ideal
    for i, e in enumerate(exps):
        if e:
            result = _saturate_variable(result, i)
    return result


def _homogenize(f: Poly, target: Ring) -> Poly:
    # the homogenizing variable is the last one of ``target``
    d = f.degree()
    return target.from_terms((e + (d - sum(e),), c) for e, c in f.raw_terms)


def _dehomogenize(f: Poly, ring: Ring) -> Poly:
    zero = ring.field.zero()
    acc: Dict[Exponents, Coeff] = {}
    for e, c in f.raw_terms:
        acc[e[:-1]] = acc.get(e[:-1], zero) + c
    return ring.from_terms(acc.items())


def saturate_by_monomial(ideal: Ideal, exps: Exponents) -> Ideal:
    """I : u^oo for a monomial u with exponents ``exps``.

    A non-homogeneous I is homogenized by a fresh variable h; saturating the
    homogenized generators by h and by the variables of u, then setting h = 1,
    gives I : u^oo without leaving DegRevLex.
    """
    ring = ideal.ring
    if ideal.is_monomial():
        return ideal.monomial_ideal().saturate(exps).as_ideal()
    if ideal.is_homogeneous():
        logger.log(logging.DEBUG, f"saturating by {sum(1 for e in exps if e)} variables one at a time")
        return _saturate_variables(ideal, exps)
    hom = ring.extend([fresh_auxiliary(ring.variables)])
    lifted = Ideal(hom, [_homogenize(g, hom) for g in ideal.generators])
    saturated = _saturate_variables(lifted, tuple(exps) + (1,))
    logger.log(logging.DEBUG, f"saturated through the homogenization in {hom}")
    return Ideal(ring, distinct_monic(_dehomogenize(g, ring) for g in saturated.generators))


def rabinowitsch(ideal: Ideal, f: Poly) -> Ideal:
    """I : f^oo by eliminating t from I + (1 - t*f)."""
    ring = ideal.ring
    name = fresh_auxiliary(ring.variables)
    aux = ring.elimination_ring([name])
    t = aux.gen(name)
    gens = [g.embed(aux) for g in ideal.generators] + [1 - t * f.embed(aux)]
    return eliminate_block(Ideal(aux, gens), 1, ring)


def saturate_poly(ideal: Ideal, f: Poly) -> Ideal:
    if f.ring != ideal.ring:
        raise MixedRings(f"{f} lives in {f.ring}, the ideal in {ideal.ring}")
    if f.is_zero():
        raise ZeroDivisor("saturation by the zero polynomial")
    if f.is_constant() or ideal.is_zero():
        return ideal
    if len(f) == 1:
        return saturate_by_monomial(ideal, f.lm())
    return rabinowitsch(ideal, f)


def saturate_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J^oo as the intersection of the saturations by the generators of J."""
    _same_ring(ideal, other)
    if other.is_zero():
        raise ZeroIdeal("saturation by the zero ideal")
    parts = ordered_map(lambda g: saturate_poly(ideal, g), distinct_monic(other.generators))
    return intersect_all(parts)


def saturate_by_colon_chain(ideal: Ideal, other: Ideal, max_steps: int = 64) -> Ideal:
    """I : J : J : ... until two consecutive terms agree."""
    current = ideal
    for _ in range(max_steps):
        following = colon_ideal(current, other)
        if equal_ideals(following, current):
            return current
        current = following
    raise AlgebraError(f"colon chain did not stabilize within {max_steps} steps")


def eliminate(ideal: Ideal, names: Iterable[str]) -> Ideal:
    """I ∩ K[remaining variables], returned in the ring of the remaining variables."""
    ring = ideal.ring
    names = set(names)
    unknown = names.difference(ring.variables)
    if unknown:
        raise BadVariableSet(f"unknown variables {sorted(unknown)}")
    if not names or len(names) == ring.ngens:
        raise BadVariableSet("must eliminate a nonempty proper subset of the variables")
    dropped = [v for v in ring.variables if v in names]
    remaining = [v for v in ring.variables if v not in names]
    aux = Ring(ring.field, dropped + remaining, MonomialOrder.elimination(len(dropped)))
    order = ring.order if ring.order.kind is not OrderKind.ELIMINATION else MonomialOrder()
    target = Ring(ring.field, remaining, order)
    return eliminate_block(ideal.embed(aux), len(dropped), target)
