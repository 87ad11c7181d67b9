"""Symbolic and saturated powers, form ideals through the s-deformation, Rees
presentations, analytic spread and the finite-generation probes."""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence

import pandas as pd
from sympy import Rational

from idealpow.constants import Constants
from idealpow.errors import (
    BadVariableSet,
    InfiniteLength,
    MixedRings,
    NotAtOrigin,
    UnitIdeal,
    ZeroIdeal,
    ZeroPolynomial,
)
from idealpow.groebner import Ideal, MonomialIdeal, equal_ideals, initial_ideal
from idealpow.ideal_ops import eliminate_block, fresh_auxiliary, power, saturate_ideal, saturate_poly
from idealpow.invariants import INFINITE, hilbert_series, krull_dimension, quotient_length
from idealpow.poly import MonomialOrder, OrderKind, Poly, Ring, substitute
from idealpow.utils.logger import get_logger
from idealpow.utils.workers import ordered_map

logger = get_logger("constructions")


# result tables


@dataclass(frozen=True)
class GrowthRow:
    k: int
    length: int
    ratio: Rational


@dataclass
class GrowthTable:
    subject: str
    exponent: int
    rows: List[GrowthRow] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"k": r.k, "length": r.length, "ratio": str(r.ratio)} for r in self.rows],
            columns=["k", "length", "ratio"],
        )

    def to_tsv(self) -> str:
        if not self.rows:
            return ""
        return self.to_frame().to_csv(sep="\t", header=False, index=False)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "exponent": self.exponent,
            "rows": [
                {
                    "k": r.k,
                    "length": r.length,
                    "ratio_num": int(r.ratio.p),
                    "ratio_den": int(r.ratio.q),
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __str__(self) -> str:
        lines = [f"{self.subject}, ratio = length/k^{self.exponent}"]
        lines += [f"k={r.k} length={r.length} ratio={r.ratio}" for r in self.rows]
        return "\n".join(lines)


@dataclass(frozen=True)
class Verdict:
    k: int
    holds: bool
    witness: Optional[Poly] = None


@dataclass
class ProbeReport:
    """Per-k verdicts; a failing k carries a witness missing from the lower-degree side."""

    subject: str
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[int]:
        return next((v.k for v in self.verdicts if not v.holds), None)

    @property
    def all_pass(self) -> bool:
        return self.first_failure is None

    @property
    def summary(self) -> str:
        return "AllPass" if self.all_pass else f"FailAt({self.first_failure})"

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "k": v.k,
                    "verdict": "true" if v.holds else "false",
                    "witness": str(v.witness) if v.witness is not None else "-",
                }
                for v in self.verdicts
            ],
            columns=["k", "verdict", "witness"],
        )

    def to_tsv(self) -> str:
        if not self.verdicts:
            return ""
        return self.to_frame().to_csv(sep="\t", header=False, index=False)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "summary": self.summary,
            "rows": [
                {
                    "k": v.k,
                    "verdict": v.holds,
                    "witness": str(v.witness) if v.witness is not None else None,
                }
                for v in self.verdicts
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def __str__(self) -> str:
        lines = [f"{self.subject}: {self.summary}"]
        for v in self.verdicts:
            line = f"k={v.k} {'pass' if v.holds else 'fail'}"
            if v.witness is not None:
                line += f" witness={v.witness}"
            lines.append(line)
        return "\n".join(lines)


# powers


def _check_pair(ideal: Ideal, other: Ideal):
    if ideal.ring != other.ring:
        raise MixedRings(f"ideals live in {ideal.ring} and {other.ring}")


def symbolic_power(ideal: Ideal, other: Ideal, k: int) -> Ideal:
    """I^k : J^oo."""
    _check_pair(ideal, other)
    if k < 1:
        raise ValueError(f"symbolic powers start at k=1, got {k}")
    return saturate_ideal(power(ideal, k), other)


def saturated_power(ideal: Ideal, k: int) -> Ideal:
    return symbolic_power(ideal, Ideal.maximal(ideal.ring), k)


# leading forms and the s-deformation


def leading_form(f: Poly) -> Poly:
    """The nonzero homogeneous component of lowest degree."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading form")
    parts = f.homogeneous_components()
    return parts[min(parts)]


def sharp_ring(ring: Ring) -> Ring:
    """ring with the deformation variable appended last."""
    name = Constants.sharp_variable
    if name in ring.variables:
        raise BadVariableSet(f"{ring} already has a variable named {name}")
    order = ring.order if ring.order.kind is not OrderKind.ELIMINATION else MonomialOrder()
    return ring.extend([name], order)


def alpha(f: Poly, target: Ring) -> Poly:
    """f(x_1 s, ..., x_n s)."""
    s = target.gen(Constants.sharp_variable)
    return substitute(f, {v: target.gen(v) * s for v in f.ring.variables}, target)


def sharp_map(f: Poly, target: Optional[Ring] = None) -> Poly:
    """f_d + s f_{d+1} + s^2 f_{d+2} + ... with f_d the leading form."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no deformation")
    target = target or sharp_ring(f.ring)
    s = target.gen(Constants.sharp_variable)
    parts = f.homogeneous_components()
    d = min(parts)
    result = target.zero()
    for i, part in parts.items():
        result = result + part.embed(target) * s ** (i - d)
    return result


def _check_origin(ideal: Ideal):
    for g in ideal.generators:
        if g.constant_coefficient():
            raise NotAtOrigin(f"generator {g} does not vanish at the origin")


def sharp_ideal(ideal: Ideal) -> Ideal:
    """alpha(I) : s^oo in the ring extended by s, generated from the sharp maps of the generators."""
    _check_origin(ideal)
    target = sharp_ring(ideal.ring)
    gens = [sharp_map(g, target) for g in ideal.generators]
    extended = Ideal(target, gens)
    if ideal.is_homogeneous():
        return extended
    return saturate_poly(extended, target.gen(Constants.sharp_variable))


def form_ideal(ideal: Ideal) -> Ideal:
    """The ideal of leading forms: any generators of the deformation, at s = 0."""
    _check_origin(ideal)
    if ideal.is_homogeneous():
        return ideal
    sharp = sharp_ideal(ideal)
    s = Constants.sharp_variable
    forms = [g.evaluate_zero([s]).embed(ideal.ring) for g in sharp.generators]
    return Ideal(ideal.ring, forms)


def local_hilbert_function(ideal: Ideal, j: int) -> int:
    """dim_K R/(I + m^{j+1}), read off the form ideal degree by degree."""
    forms = form_ideal(ideal)
    monomial = initial_ideal(forms) if not forms.is_zero() else MonomialIdeal(ideal.ring)
    return sum(hilbert_series(monomial).coefficients(j + 1))


def linear_change(ideal: Ideal, images: Mapping[str, Poly]) -> Ideal:
    """Image of I under the substitution x -> images[x]; unnamed variables are fixed."""
    ring = ideal.ring
    assignment = {v: images.get(v, ring.gen(v)) for v in ring.variables}
    return Ideal(ring, [substitute(g, assignment, ring) for g in ideal.generators])


# Rees algebra and fiber cone


def _fiber_names(ring: Ring, m: int) -> List[str]:
    prefix = "y"
    while any(f"{prefix}{i}" in ring.variables for i in range(1, m + 1)):
        prefix += "y"
    return [f"{prefix}{i}" for i in range(1, m + 1)]


def rees_presentation(ideal: Ideal) -> Ideal:
    """Kernel of K[x, y_1..y_m] -> R[It], y_i -> f_i t, by eliminating t."""
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no Rees presentation")
    ring = ideal.ring
    gens = list(ideal.generators)
    names = _fiber_names(ring, len(gens))
    target = Ring(ring.field, ring.variables + tuple(names), MonomialOrder())
    t_name = fresh_auxiliary(target.variables)
    aux = target.elimination_ring([t_name])
    t = aux.gen(t_name)
    relations = [aux.gen(y) - t * f.embed(aux) for y, f in zip(names, gens)]
    kernel = eliminate_block(Ideal(aux, relations), 1, target)
    logger.log(
        logging.DEBUG, f"Rees kernel of {len(gens)} generators has {len(kernel.generators)} elements"
    )
    return kernel


def analytic_spread(ideal: Ideal) -> int:
    """Krull dimension of the fiber cone: the Rees kernel with every x set to 0."""
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no analytic spread")
    if ideal.is_unit():
        raise UnitIdeal("the unit ideal has no analytic spread")
    kernel = rees_presentation(ideal)
    ring = ideal.ring
    names = kernel.ring.variables[ring.ngens:]
    fiber = Ring(ring.field, names, MonomialOrder())
    special = [g.evaluate_zero(ring.variables) for g in kernel.generators]
    return krull_dimension(Ideal(fiber, [g.embed(fiber) for g in special if g]))


# probes


def _witness(lower: Ideal, upper: Ideal) -> Optional[Poly]:
    """Smallest element of the reduced basis of ``upper`` outside ``lower``."""
    for g in reversed(upper.groebner_basis()):
        if not lower.contains(g):
            return g
    return None


def veronese_probe(ideal: Ideal, other: Ideal, d: int, kmax: int) -> ProbeReport:
    """Does (I^d : J^oo)^k = I^{dk} : J^oo hold for k = 2..kmax?"""
    _check_pair(ideal, other)
    if d < 1 or kmax < 2:
        raise ValueError(f"need d >= 1 and kmax >= 2, got d={d}, kmax={kmax}")
    base = symbolic_power(ideal, other, d)

    def check(k: int) -> Verdict:
        lower = power(base, k)
        # I^{dk} lies in the k-th power, so both sides share the saturation
        upper = saturate_ideal(lower, other)
        holds = equal_ideals(lower, upper)
        witness = None if holds else _witness(lower, upper)
        logger.log(logging.INFO, f"veronese d={d} k={k}: {'pass' if holds else 'fail'}")
        return Verdict(k, holds, witness)

    verdicts = ordered_map(check, range(2, kmax + 1))
    return ProbeReport(f"veronese d={d} of the symbolic powers", verdicts)


def form_algebra_probe(ideal: Ideal, kmax: int) -> ProbeReport:
    """Is (I^k)* generated by the products (I^a)*(I^{k-a})* for k = 2..kmax?"""
    if kmax < 2:
        raise ValueError(f"need kmax >= 2, got {kmax}")
    _check_origin(ideal)
    degrees = range(1, kmax + 1)
    forms: Dict[int, Ideal] = dict(zip(degrees, ordered_map(lambda k: form_ideal(power(ideal, k)), degrees)))
    verdicts = []
    for k in range(2, kmax + 1):
        lower = forms[1] * forms[k - 1]
        for a in range(2, k // 2 + 1):
            lower = lower + forms[a] * forms[k - a]
        holds = equal_ideals(lower, forms[k])
        witness = None if holds else _witness(lower, forms[k])
        logger.log(logging.INFO, f"form algebra k={k}: {'pass' if holds else 'fail'}")
        verdicts.append(Verdict(k, holds, witness))
    return ProbeReport("form ideals of the powers", verdicts)


def growth_table(
    ideal: Ideal, other: Ideal, e: int, kmax: int, ks: Optional[Sequence[int]] = None
) -> GrowthTable:
    """Rows (k, length of (I^k : J^oo)/I^k, length/k^e)."""
    _check_pair(ideal, other)
    ks = list(ks) if ks is not None else list(range(1, kmax + 1))

    def row(k: int) -> GrowthRow:
        length = quotient_length(power(ideal, k), symbolic_power(ideal, other, k))
        if length == INFINITE:
            raise InfiniteLength(k)
        logger.log(logging.INFO, f"growth k={k}: length {length}")
        return GrowthRow(k, length, Rational(length, k ** e))

    return GrowthTable("length of (I^k : J^oo)/I^k", e, ordered_map(row, sorted(ks)))
