"""The worked examples end to end; slow, run with ``pytest -m slow``."""

import io
from math import comb
from pathlib import Path

import pytest

from idealpow.constructions import (
    analytic_spread,
    form_algebra_probe,
    form_ideal,
    growth_table,
    linear_change,
    saturated_power,
    sharp_ideal,
    veronese_probe,
)
from idealpow.groebner import Ideal, equal_ideals
from idealpow.ideal_ops import power
from idealpow.invariants import (
    generator_degrees,
    is_complete_intersection,
    local_colength,
    monomials_of_degree,
    slice_membership_oracle,
)
from utils.parsing import load_problem, parse_ideal
from utils.runners import run_command

pytestmark = pytest.mark.slow

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def load(name: str):
    problem = load_problem(PROBLEMS / f"{name}.ideal")
    return problem.ideal("I"), problem.ideal("m")


def test_marc_growth_is_quadratic():
    ideal, m = load("marc")
    table = growth_table(ideal, m, 2, 4)
    assert [row.length for row in table.rows] == [comb(k + 1, 2) for k in range(1, 5)]
    assert table.to_tsv().splitlines()[-1] == "4\t10\t5/8"


def test_marc_spread_and_generators():
    ideal, _ = load("marc")
    assert analytic_spread(ideal) == 3
    assert sorted(generator_degrees(ideal)) == [2, 2, 2]
    saturated = saturated_power(ideal, 1)
    assert equal_ideals(saturated, parse_ideal("(x^2, x*z, y*z - x*w, z^2)", ideal.ring))
    assert min(generator_degrees(saturated)) >= 2


def test_cover_growth():
    ideal, m = load("cover")
    table = growth_table(ideal, m, 3, 8, ks=[2, 4, 6, 8])
    assert [row.length for row in table.rows] == [1, 7, 22, 50]


def test_cover_symbolic_algebra_is_generated_in_degree_two():
    ideal, m = load("cover")
    assert veronese_probe(ideal, m, 2, 4).all_pass
    square = saturated_power(ideal, 2)
    for k in range(1, 4):
        assert equal_ideals(saturated_power(ideal, 2 * k), power(square, k))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_infinite_form_ideals_of_powers(k):
    ideal, _ = load("infinite")
    r = ideal.ring
    x, y = r.gens()
    gens = [x ** (2 * a) * (x * y) ** (k - a) for a in range(k + 1)]
    gens += [x ** i * y ** (4 * k - 3 * i + 1) for i in range(k)]
    forms = form_ideal(power(ideal, k))
    assert equal_ideals(forms, Ideal(r, gens))
    assert local_colength(forms) == 6 * comb(k + 1, 2)


def test_infinite_form_algebra_needs_a_generator_in_every_degree():
    ideal, _ = load("infinite")
    report = form_algebra_probe(ideal, 4)
    y = ideal.ring.gen("y")
    assert not any(v.holds for v in report.verdicts)
    assert [v.witness for v in report.verdicts] == [y ** (4 * k + 1) for k in (2, 3, 4)]


@pytest.mark.parametrize("name, summary", [("depending_q", "AllPass"), ("depending_f5", "AllPass"), ("depending_f2", "FailAt(2)")])
def test_form_algebra_depends_on_the_characteristic(name, summary):
    ideal, _ = load(name)
    assert form_algebra_probe(ideal, 3).summary == summary


def test_new_example():
    ideal, _ = load("new")
    assert form_algebra_probe(ideal, 3).summary == "FailAt(2)"
    sharp = sharp_ideal(ideal)
    s = Ideal(sharp.ring, [sharp.ring.gen("s")])
    report = veronese_probe(sharp, s, 1, 3)
    assert report.summary == "FailAt(2)"
    witness = report.verdicts[0].witness.evaluate_zero(["s"]).embed(ideal.ring)
    assert witness == ideal.ring.gen("y") ** 9


def test_new_example_sharp_growth():
    ideal, _ = load("new")
    sharp = sharp_ideal(ideal)
    s = Ideal(sharp.ring, [sharp.ring.gen("s")])
    table = growth_table(sharp, s, 3, 3)
    assert [row.length for row in table.rows] == [0, 2, 8]


@pytest.mark.parametrize("name", ["cover", "marc", "infinite", "new", "depending_q", "depending_f5", "depending_f2"])
def test_oracle_on_the_problem_files(name):
    ideal, _ = load(name)
    r = ideal.ring
    member = slice_membership_oracle(ideal, 8)
    monomials = [r.term(e) for d in range(9) for e in monomials_of_degree(r.ngens, d)]
    for f in monomials + [a - b for a, b in zip(monomials, monomials[1:])]:
        if ideal.is_homogeneous():
            assert member(f) == ideal.contains(f)
        elif member(f):
            assert ideal.contains(f)
    forms = form_ideal(ideal)
    form_member = slice_membership_oracle(forms, 8)
    for f in monomials:
        assert form_member(f) == forms.contains(f)


@pytest.mark.parametrize("name, expected", [("depending_q", True), ("depending_f5", True), ("depending_f2", False)])
def test_depending_form_ideal_is_a_complete_intersection_off_characteristic_two(name, expected):
    ideal, _ = load(name)
    assert is_complete_intersection(form_ideal(ideal)) is expected


def test_depending_in_characteristic_two_is_the_infinite_pattern():
    ideal, _ = load("depending_f2")
    r = ideal.ring
    x, y = r.gens()
    changed = linear_change(ideal, {"x": x + y})
    assert equal_ideals(changed, Ideal(r, [x ** 2, x * y + y ** 3]))
    assert equal_ideals(form_ideal(changed), Ideal(r, [x ** 2, x * y, y ** 5]))


def test_marc_growth_from_the_command_line():
    out = io.StringIO()
    argv = ["growth", "--file", str(PROBLEMS / "marc.ideal"), "--ideal", "I", "--aux", "m", "-e", "2", "--kmax", "4", "--format", "tsv"]
    assert run_command(argv, out) == 0
    rows = out.getvalue().strip().splitlines()
    assert len(rows) == 4 and rows[-1] == "4\t10\t5/8"
