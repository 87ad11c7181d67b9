import pytest
from sympy.polys.domains import QQ

from idealpow.errors import (
    ExpressionSyntaxError,
    NonPrimeCharacteristic,
    ReservedVariableName,
    UnknownIdeal,
    UnknownVariable,
)
from idealpow.groebner import Ideal, equal_ideals
from idealpow.poly import OrderKind
from utils.parsing import load_problem, parse_ideal, parse_polynomial, parse_problem, parse_ring


def test_parse_ring():
    r = parse_ring("F5[x, y,z] order=lex")
    assert r.field.characteristic == 5
    assert r.variables == ("x", "y", "z")
    assert r.order.kind is OrderKind.LEX
    assert parse_ring("Q[a]").order.kind is OrderKind.DEGREVLEX


@pytest.mark.parametrize(
    "text, error",
    [
        ("Q[x,x]", ExpressionSyntaxError),
        ("Q[x] order=deglex", ExpressionSyntaxError),
        ("R[x]", ExpressionSyntaxError),
        ("Q[]", ExpressionSyntaxError),
        ("F6[x]", NonPrimeCharacteristic),
        ("Q[x,s]", ReservedVariableName),
        ("Q[t0,x]", ReservedVariableName),
    ],
)
def test_parse_ring_errors(text, error):
    with pytest.raises(error):
        parse_ring(text)


def test_parse_polynomial(qxy):
    f = parse_polynomial("-(x + 2*y)^2 + 1/2*x*y", qxy)
    assert f.as_dict() == {(2, 0): QQ(-1), (1, 1): QQ(-7, 2), (0, 2): QQ(-4)}
    assert parse_polynomial("+x - -y", qxy) == parse_polynomial("x + y", qxy)


def test_round_trip_through_rendering(qxy):
    f = parse_polynomial("3/4*x^3*y - y^2 + 7", qxy)
    assert parse_polynomial(str(f), qxy) == f


def test_constants_in_a_prime_field():
    r = parse_ring("F5[x]")
    assert parse_polynomial("7*x + 1/2", r).as_dict() == {(1,): 2, (0,): 3}
    with pytest.raises(ExpressionSyntaxError):
        parse_polynomial("1/5", r)


@pytest.mark.parametrize(
    "text, position",
    [("x +", 3), ("x ** y", 3), ("(x + y", 6), ("x $ y", 2), ("x y", 2), ("x^0", 2), ("x^y", 2)],
)
def test_syntax_errors_carry_positions(qxy, text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_polynomial(text, qxy)
    assert info.value.position == position


def test_unknown_variable(qxy):
    with pytest.raises(UnknownVariable):
        parse_polynomial("x + z", qxy)


@pytest.mark.parametrize(
    "text, position", [("x^70000", 2), ("x^40000*x^40000", 7), ("(x^300)^300", 8)]
)
def test_exponent_overflow_is_a_syntax_error(qxy, text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_polynomial(text, qxy)
    assert info.value.position == position


def test_parse_ideal(qxy):
    assert equal_ideals(parse_ideal("maximal", qxy), Ideal.maximal(qxy))
    assert parse_ideal("()", qxy).is_zero()
    nested = parse_ideal("((x + y)*(x - y), y)", qxy)
    assert len(nested.generators) == 2
    with pytest.raises(ExpressionSyntaxError):
        parse_ideal("x, y", qxy)


PROBLEM = """
# comment line
ring Q[x,y] order=lex
I = (x^2, y^3 - x*y)   # trailing comment
m = maximal
"""


def test_parse_problem():
    problem = parse_problem(PROBLEM)
    assert problem.ring.order.kind is OrderKind.LEX
    assert set(problem.ideals) == {"I", "m"}
    assert problem.ideal("I").groebner_basis()[-1] == parse_polynomial("y^5", problem.ring)
    with pytest.raises(UnknownIdeal):
        problem.ideal("J")


@pytest.mark.parametrize(
    "text, line",
    [
        ("I = (x)\nring Q[x]", 1),
        ("ring Q[x]\nring Q[y]", 2),
        ("ring Q[x]\nI = (x)\nI = (x^2)", 3),
        ("ring Q[x]\nI (x)", 2),
        ("ring Q[x]\nI = (x +)", 2),
    ],
)
def test_problem_errors_carry_lines(text, line):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_problem(text)
    assert info.value.line == line


def test_missing_ring():
    with pytest.raises(ExpressionSyntaxError):
        parse_problem("# nothing\n")


def test_load_problem(tmp_path):
    path = tmp_path / "sample.ideal"
    path.write_text(PROBLEM)
    assert load_problem(path).ideal("m").is_subset(Ideal.maximal(load_problem(path).ring))
