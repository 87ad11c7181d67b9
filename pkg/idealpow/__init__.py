"""Exact computations with powers of polynomial ideals."""

from idealpow.constructions import (
    GrowthTable,
    ProbeReport,
    analytic_spread,
    form_algebra_probe,
    form_ideal,
    growth_table,
    leading_form,
    rees_presentation,
    saturated_power,
    sharp_ideal,
    sharp_map,
    symbolic_power,
    veronese_probe,
)
from idealpow.field import FieldElement, FieldSpec
from idealpow.groebner import Ideal, MonomialIdeal
from idealpow.poly import MonomialOrder, Poly, Ring

__all__ = [
    "FieldElement",
    "FieldSpec",
    "GrowthTable",
    "Ideal",
    "MonomialIdeal",
    "MonomialOrder",
    "Poly",
    "ProbeReport",
    "Ring",
    "analytic_spread",
    "form_algebra_probe",
    "form_ideal",
    "growth_table",
    "leading_form",
    "rees_presentation",
    "saturated_power",
    "sharp_ideal",
    "sharp_map",
    "symbolic_power",
    "veronese_probe",
]
