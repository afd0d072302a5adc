import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eak.exactval import (
    AngleValue,
    ExactValue,
    angle_of_cos_ratio,
    exact_sum,
    format_rational,
    parse_rational,
    primitive_integer_vector,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=20)


def test_parse_format_round_trip():
    for text in ["3", "-7", "1/3", "-22/7", "0"]:
        assert format_rational(parse_rational(text)) == text
    assert parse_rational(" 4/6 ") == Fraction(2, 3)


def test_primitive_integer_vector():
    assert primitive_integer_vector((2, 4, 6)) == (1, 2, 3)
    assert primitive_integer_vector((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive_integer_vector((0, -5)) == (0, -1)
    with pytest.raises(ValueError):
        primitive_integer_vector((0, 0))


def test_angle_of_cos_ratio_signs():
    assert angle_of_cos_ratio(0, 5) == AngleValue(0, Fraction(0))
    assert angle_of_cos_ratio(1, 2) == AngleValue(1, Fraction(1, 2))
    assert angle_of_cos_ratio(-1, 2) == AngleValue(-1, Fraction(1, 2))
    with pytest.raises(ValueError):
        angle_of_cos_ratio(2, 1)


def test_rational_turns():
    # right angle, pi/3, pi/4, pi/6, 0, and their supplements
    assert AngleValue(0, 0).rational_turn() == Fraction(1, 4)
    assert AngleValue(1, Fraction(1, 4)).rational_turn() == Fraction(1, 6)
    assert AngleValue(1, Fraction(1, 2)).rational_turn() == Fraction(1, 8)
    assert AngleValue(1, Fraction(3, 4)).rational_turn() == Fraction(1, 12)
    assert AngleValue(-1, Fraction(1, 4)).rational_turn() == Fraction(1, 3)
    assert AngleValue(1, Fraction(1, 3)).rational_turn() is None


def test_canonicalization_folds_and_merges():
    a = AngleValue(1, Fraction(1, 3))
    # rational turns fold into the rational part
    v = ExactValue(Fraction(1, 2), ((Fraction(2), AngleValue(1, Fraction(1, 2))),))
    assert v.is_rational and v.as_rational() == Fraction(3, 4)
    # negative-cosine angles rewrite through the supplement
    w = ExactValue.angle_turn(AngleValue(-1, Fraction(1, 3)))
    assert w.rational_part == Fraction(1, 2)
    assert w.angle_terms == ((Fraction(-1), a),)
    # identical angles merge, zero coefficients drop
    z = ExactValue.angle_turn(a) - ExactValue.angle_turn(a)
    assert z == ExactValue.of(0)


def test_arithmetic_and_str():
    a = AngleValue(1, Fraction(1, 3))
    v = ExactValue(Fraction(-5, 12), ((Fraction(3), a),))
    assert str(v) == "-5/12 + 3*arccos(sqrt(1/3))/(2pi)"
    assert v * 2 - v == v
    assert (v / 3).angle_terms == ((Fraction(1), a),)
    assert -(-v) == v
    with pytest.raises(ValueError):
        v.as_rational()


def test_eval_numeric():
    a = AngleValue(1, Fraction(1, 2))  # pi/4
    assert ExactValue.angle_turn(a, 8).eval_numeric() == pytest.approx(1.0)
    v = ExactValue(Fraction(1, 3), ((Fraction(2), AngleValue(1, Fraction(1, 3))),))
    expected = 1 / 3 + 2 * math.acos(math.sqrt(1 / 3)) / (2 * math.pi)
    assert v.eval_numeric() == pytest.approx(expected, abs=1e-15)
    with pytest.raises(ValueError):
        v.eval_numeric(precision=10)


@given(rationals, rationals, rationals)
def test_rational_field_operations(a, b, c):
    va, vb = ExactValue.of(a), ExactValue.of(b)
    assert (va + vb).as_rational() == a + b
    assert (va - vb).as_rational() == a - b
    assert (va * c).as_rational() == a * c
    if c != 0:
        assert (va / c).as_rational() == a / c


@given(st.lists(rationals, max_size=6))
def test_exact_sum_matches_sum(xs):
    assert exact_sum(xs).as_rational() == sum(xs, Fraction(0))
