import math
from fractions import Fraction

import pytest

from heronlattice.exact import (
    bordered_determinant,
    int_sqrt,
    lcd,
    nearest,
    primitive_reduce,
    sequential_pairs,
    simplex_content_squared,
)


def test_int_sqrt_examples():
    assert int_sqrt(0) == 0
    assert int_sqrt(5184) == 72
    assert int_sqrt(5183) is None


def test_int_sqrt_rejects_negative():
    with pytest.raises(ValueError, match="negative radicand"):
        int_sqrt(-1)


def test_int_sqrt_matches_squares_up_to_a_million():
    squares = {k * k for k in range(1001)}
    for n in range(0, 1_000_001, 7):
        root = int_sqrt(n)
        if n in squares:
            assert root is not None and root * root == n
        else:
            assert root is None
    for k in range(1001):
        assert int_sqrt(k * k) == k


def test_nearest_rounds_half_up():
    assert nearest(Fraction(1, 2)) == 1
    assert nearest(Fraction(-1, 2)) == 0
    assert nearest(Fraction(-7, 3)) == -2
    assert nearest(Fraction(3, 2)) == 2


def test_lcd_examples():
    assert lcd([0, 0]) == 1
    assert lcd([Fraction(1, 2), Fraction(1, 3)]) == 6
    assert lcd([Fraction(22620, 13), Fraction(8613, 13), Fraction(14616, 13)]) == 13


def test_primitive_reduce_examples():
    assert primitive_reduce([1, 0, 0, 0]) == (1, 0, 0, 0)
    assert primitive_reduce(
        [1, Fraction(18876, 29), Fraction(67925, 29), 0]
    ) == (29, 18876, 67925, 0)
    assert primitive_reduce([1, Fraction(1, 2), Fraction(1, 3), 0]) == (6, 3, 2, 0)


def test_primitive_reduce_normalizes_integer_vectors():
    assert primitive_reduce([-841, 962104, -1803945, 0]) == (1, -1144, 2145, 0)
    assert primitive_reduce([0, -2, 4, 0]) == (0, 1, -2, 0)
    with pytest.raises(ValueError):
        primitive_reduce([0, 0, 0, 0])


def test_primitive_reduce_is_idempotent_and_primitive():
    vectors = [(5, 28224, 31668, 0), (13, 22620, 8613, 14616), (1, -3, 0, 7)]
    for vector in vectors:
        reduced = primitive_reduce(vector)
        assert math.gcd(*reduced) == 1
        assert reduced[0] > 0
        assert primitive_reduce(reduced) == reduced


def test_sequential_pairs_order():
    assert sequential_pairs(4) == ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2))


def test_content_of_unit_right_triangle_and_pentatope():
    # squared 3-4-5 triangle: area 6
    assert simplex_content_squared([9, 16, 25]) == 36
    assert bordered_determinant([9, 16, 25]) == -576
    # unit pentatope with volume 1/24
    assert simplex_content_squared([1, 2, 3, 2, 3, 2, 1, 2, 1, 1]) == Fraction(1, 576)
