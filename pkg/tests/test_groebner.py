import pytest

from idealpow.errors import MixedRings, ZeroIdeal
from idealpow.groebner import (
    Ideal,
    MonomialIdeal,
    buchberger,
    equal_ideals,
    initial_ideal,
    is_groebner,
    normal_form,
    s_polynomial,
)
from idealpow.invariants import hilbert_series, monomials_of_degree, slice_membership_oracle
from tests.support import ideal, poly, ring


def test_lex_basis_of_the_infinite_example():
    r = ring("Q[x,y] order=lex")
    gb = buchberger(ideal("(x^2, y^3 - x*y)", r)).groebner_basis()
    assert gb == (poly("x^2", r), poly("x*y - y^3", r), poly("y^5", r))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(x, y)", "(x, y)"),
        ("(x + y, x - y)", "(x, y)"),
        ("(x^2 - 1, x - 1)", "(x - 1)"),
        ("(x + 1, x)", "(1)"),
    ],
)
def test_reduced_basis(qxy, text, expected):
    gb = ideal(text, qxy).groebner_basis()
    assert gb == ideal(expected, qxy).groebner_basis()
    assert all(g.lc() == 1 for g in gb)


def test_basis_is_cached_and_valid(marc_ideal):
    assert not marc_ideal.has_groebner_basis()
    gb = marc_ideal.groebner_basis()
    assert marc_ideal.groebner_basis() is gb
    assert is_groebner(gb)


def test_s_polynomial_of_the_basis_reduces_to_zero(infinite_ideal):
    gb = infinite_ideal.groebner_basis()
    for i, f in enumerate(gb):
        for g in gb[i + 1:]:
            assert normal_form(s_polynomial(f, g), infinite_ideal).is_zero()


def test_normal_form(infinite_ideal):
    r = infinite_ideal.ring
    assert normal_form(poly("y^5", r), infinite_ideal).is_zero()
    assert not normal_form(poly("y^4", r), infinite_ideal).is_zero()
    assert normal_form(r.zero(), infinite_ideal).is_zero()
    f = poly("y^4 + x*y^2 + 7", r)
    once = normal_form(f, infinite_ideal)
    assert normal_form(once, infinite_ideal) == once


def test_normal_form_rejects_other_rings(infinite_ideal, qxyz):
    with pytest.raises(MixedRings):
        normal_form(poly("x", qxyz), infinite_ideal)


def test_initial_ideal(infinite_ideal):
    # in DegRevLex the leading terms are coprime already
    monomials = initial_ideal(infinite_ideal)
    assert monomials.generators == ((0, 3), (2, 0))
    assert initial_ideal(monomials.as_ideal()) == monomials
    lex = ring("Q[x,y] order=lex")
    assert initial_ideal(ideal("(x^2, y^3 - x*y)", lex)).generators == ((2, 0), (1, 1), (0, 5))


def test_initial_ideal_of_zero(qxy):
    with pytest.raises(ZeroIdeal):
        initial_ideal(Ideal(qxy))


def test_initial_ideal_counts_match_linear_algebra(marc_ideal):
    # same Hilbert function from the basis and from the rank of each slice
    n = marc_ideal.ring.ngens
    oracle = slice_membership_oracle(marc_ideal, 6)
    series = hilbert_series(initial_ideal(marc_ideal)).coefficients(7)
    for d in range(7):
        assert series[d] == len(monomials_of_degree(n, d)) - oracle.slice_rank(d)


def test_equal_ideals(qxy):
    assert equal_ideals(ideal("(x + y, x - y)", qxy), Ideal.maximal(qxy))
    assert not equal_ideals(ideal("(x^2, y)", qxy), Ideal.maximal(qxy))
    assert equal_ideals(Ideal(qxy), ideal("()", qxy))
    assert equal_ideals(ideal("(x + 1, y)", qxy), ideal("(x + 1, y, x*y + y^2)", qxy))


def test_membership_and_subsets(marc_ideal):
    r = marc_ideal.ring
    assert poly("x^2*y - x*y*w + y^2*z", r) in marc_ideal
    assert poly("y^4", r) not in marc_ideal
    assert marc_ideal.is_subset(Ideal.maximal(r))
    assert not Ideal.maximal(r).is_subset(marc_ideal)


def test_monomial_ideal_keeps_minimal_generators(qxy):
    m = MonomialIdeal(qxy, [(2, 0), (3, 0), (2, 1), (1, 1), (1, 1)])
    assert m.generators == ((2, 0), (1, 1))
    assert m.contains((5, 0)) and not m.contains((0, 7))
    assert m.colon((1, 0)).generators == ((1, 0), (0, 1))
    assert m.saturate((1, 0)).is_unit()
    assert m.intersection(MonomialIdeal(qxy, [(0, 1)])).generators == ((1, 1),)


def test_prime_field_basis():
    r = ring("F2[x,y]")
    # (x + y)^2 = x^2 + y^2 in characteristic two
    assert equal_ideals(ideal("(x^2 + y^2, x + y)", r), ideal("(x + y)", r))
