import itertools
import random
from fractions import Fraction

import pytest

from eak import coefficients as co
from eak import oracle
from eak.exactval import AngleValue, ExactValue
from eak.polytope import Polytope

from conftest import random_integer_polytope


def test_count_points(delta, cube, square):
    assert [oracle.count_points(delta, t) for t in (1, 2, 3)] == [4, 10, 20]
    assert oracle.count_points(delta, Fraction(1, 2)) == 1
    assert oracle.count_points(cube, 2) == 27
    assert oracle.count_points(square, Fraction(5, 2)) == 9
    with pytest.raises(ValueError):
        oracle.count_points(delta, 0)


def test_budget(delta):
    with pytest.raises(oracle.BudgetExceeded):
        oracle.count_points(delta, 1000, budget=100)


def test_solid_angle_at_loci(cube, delta):
    assert oracle.solid_angle_at(cube, (Fraction(1, 2),) * 3) == ExactValue.of(1)
    assert oracle.solid_angle_at(cube, (0, Fraction(1, 2), Fraction(1, 2))) == ExactValue.of(Fraction(1, 2))
    assert oracle.solid_angle_at(cube, (0, 0, Fraction(1, 2))) == ExactValue.of(Fraction(1, 4))
    assert oracle.solid_angle_at(cube, (0, 0, 0)) == ExactValue.of(Fraction(1, 8))
    assert oracle.solid_angle_at(cube, (2, 0, 0)) == ExactValue.of(0)
    assert oracle.solid_angle_at(cube, (2, 0, 0), t=2) == ExactValue.of(Fraction(1, 8))
    # simplex vertex at the origin is a coordinate corner
    assert oracle.solid_angle_at(delta, (0, 0, 0)) == ExactValue.of(Fraction(1, 8))
    # the three unit vertices are congruent; all four angles sum to A(1)
    apexes = [oracle.solid_angle_at(delta, v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    assert apexes[0] == apexes[1] == apexes[2]
    total = ExactValue.of(Fraction(1, 8)) + apexes[0] * 3
    assert total == oracle.solid_angle_sum(delta, 1)


def test_solid_angle_sum(delta, order, square):
    assert oracle.solid_angle_sum(delta, Fraction(1, 2)) == ExactValue.of(Fraction(1, 8))
    assert oracle.solid_angle_sum(order, 1) == ExactValue.of(Fraction(1, 6))
    assert oracle.solid_angle_sum(order, 3) == ExactValue.of(Fraction(27, 6))
    assert oracle.solid_angle_sum(square, 1) == ExactValue.of(1)
    # delta is not concrete: A(1) has surviving angle terms
    assert oracle.solid_angle_sum(delta, 1) == ExactValue(
        Fraction(-5, 12), ((Fraction(3), AngleValue(1, Fraction(1, 3))),)
    ) + Fraction(1, 6)


def test_vertex_angles_sum_to_half_excess(delta, cube):
    # Gram-style relation in d=3 at t large enough that all loci appear
    total = oracle.solid_angle_sum(cube, 1)
    assert total == ExactValue.of(1)  # 8 corners of 1/8


def test_two_dimensional_angles(square):
    tri = Polytope(2, [(0, 0), (2, 0), (0, 2)])
    assert oracle.solid_angle_at(tri, (0, 0)) == ExactValue.of(Fraction(1, 4))
    assert oracle.solid_angle_at(square, (1, 1)) == ExactValue.of(Fraction(1, 4))


def test_interpolate_coefficients():
    poly = lambda t: Fraction(2) * t**3 - t + Fraction(1, 3)
    samples = [(t, poly(Fraction(t))) for t in (1, 2, 3, 4)]
    assert oracle.interpolate_coefficients(samples, 3) == [2, 0, -1, Fraction(1, 3)]
    with pytest.raises(ValueError):
        oracle.interpolate_coefficients(samples[:3], 3)
    with pytest.raises(ValueError):
        oracle.interpolate_coefficients([(1, 0), (1, 1)], 1)


def test_interpolation_recovers_coefficients(delta):
    t = Fraction(1, 2)
    counts = [(t + j, Fraction(oracle.count_points(delta, t + j))) for j in range(4)]
    ec = oracle.interpolate_coefficients(counts, 3)
    assert ec[0] == delta.volume()
    assert ec[1] == co.coeff_e_d1(delta).eval(t).as_rational()
    assert ec[2] == co.coeff_e_d2(delta).eval(t).as_rational()
    angles = [(t + j, oracle.solid_angle_sum(delta, t + j)) for j in range(4)]
    ac = oracle.interpolate_coefficients(angles, 3)
    assert ac[1] == co.coeff_a_d1(delta).eval(t)
    assert ac[2] == co.coeff_a_d2(delta).eval(t)


def test_cross_check(delta):
    rng = random.Random(5)
    P = random_integer_polytope(rng)
    for t in (1, Fraction(3, 2)):
        assert oracle.appendixA_cross_check(P, t) == oracle.solid_angle_sum(P, t)
    assert oracle.appendixA_cross_check(delta, 2) == oracle.solid_angle_sum(delta, 2)


def test_four_dimensional_monte_carlo():
    cube4 = Polytope(4, list(itertools.product((0, 1), repeat=4)))
    total = oracle.solid_angle_sum(cube4, 1)
    assert isinstance(total, float)
    assert total == pytest.approx(1.0, abs=5e-3)
