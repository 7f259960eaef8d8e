import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qweyl import expr as E
from qweyl.expr import ParseError, parse_expr, print_expr
from qweyl.sampling import random_expr
from qweyl.scalars import Scalar


def test_difference_of_products(B2):
    e = parse_expr("x1*y1 - q1*y1*x1", B2)
    x1, y1, q1 = E.gen("X", 1), E.gen("Y", 1), E.Lit(Scalar.var("q1"))
    assert e == E.Sub(E.Mul(x1, y1), E.Mul(E.Mul(q1, y1), x1))


def test_index_out_of_range(B2):
    with pytest.raises(ParseError, match="generator index 3 exceeds n=2"):
        parse_expr("x3", B2)


def test_power_binds_tighter_than_product(B2):
    assert parse_expr("y1^2*x1", B2) == E.Mul(E.Pow(E.gen("Y", 1), 2), E.gen("X", 1))


def test_unary_minus_binds_tighter_than_product(B2):
    # -a*b is (-a)*b, and -a^2 is -(a^2)
    x1, y1 = E.gen("X", 1), E.gen("Y", 1)
    assert parse_expr("-x1*y1", B2) == E.Mul(E.Neg(x1), y1)
    assert parse_expr("-x1^2", B2) == E.Neg(E.Pow(x1, 2))


def test_product_not_commutative(B2):
    assert parse_expr("x1*y1", B2) != parse_expr("y1*x1", B2)


def test_scalar_subtrees_fold(B2):
    assert parse_expr("(q1 + 1)*(q1 - 1)", B2) == E.Lit(Scalar.var("q1") ** 2 - 1)
    assert parse_expr("x1/q1", B2) == E.Mul(E.gen("X", 1), E.Lit(1 / Scalar.var("q1")))


def test_syntax_errors(B2):
    with pytest.raises(ParseError) as err:
        parse_expr("x1 * * y1", B2)
    assert err.value.pos == 6
    with pytest.raises(ParseError, match="non-scalar"):
        parse_expr("y1/x1", B2)
    with pytest.raises(ParseError, match="negative exponent"):
        parse_expr("x1^-1", B2)
    with pytest.raises(ParseError):
        parse_expr("x1y1", B2)
    with pytest.raises(ParseError, match="undeclared"):
        parse_expr("t*x1", B2)
    with pytest.raises(ParseError):
        parse_expr("(x1 + y1", B2)


def test_print_examples(B2):
    assert print_expr(parse_expr("x1*y1 - q1*y1*x1", B2)) == "x1*y1 - q1*y1*x1"
    assert print_expr(parse_expr("q1^2 - 1", B2)) == "q1^2 - 1"
    assert print_expr(parse_expr("((x1*y1)) + ((y2))", B2)) == "x1*y1 + y2"
    assert print_expr(parse_expr("x1*(y1*x2)", B2)) == "x1*(y1*x2)"
    assert print_expr(parse_expr("x1 - (y1 - x2)", B2)) == "x1 - (y1 - x2)"
    assert print_expr(parse_expr("(-x1)^2 - -y1", B2)) == "(-x1)^2 - -y1"
    assert print_expr(parse_expr("(1/q1)*x1", B2)) == "1/q1*x1"
    assert print_expr(parse_expr("x1*(1/q1)", B2)) == "x1*(1/q1)"


def test_round_trip_random_depth_6(A3):
    rng = random.Random(7)
    for _ in range(300):
        e = random_expr(rng, A3, 6)
        text = print_expr(e)
        assert parse_expr(text, A3) == e, text


@given(st.integers(0, 2**32))
def test_round_trip_hypothesis(A2, seed):
    e = random_expr(random.Random(seed), A2, 6)
    assert parse_expr(print_expr(e), A2) == e
