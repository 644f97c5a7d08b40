from fractions import Fraction

import pytest

from polylb.polylb_errors import PolytopeError
from polylb.rational_linalg import (
    affine_rank,
    as_point,
    centroid,
    integer_echelon,
    integer_hyperplane,
    primitive,
    segment_crossing,
    to_integer_points,
)


def test_as_point_parses_rationals():
    assert as_point([1, "3/2", Fraction(1, 3)]) == (Fraction(1), Fraction(3, 2), Fraction(1, 3))


def test_to_integer_points():
    ints, scale = to_integer_points([as_point(["1/2", "1/3"]), as_point([1, 0])])
    assert scale == 6
    assert ints == [(3, 2), (6, 0)]


def test_integer_echelon():
    rows, pivots = integer_echelon([[2, 4, 6], [1, 2, 4]], 3)
    assert pivots == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


@pytest.mark.parametrize(
    "points,rank",
    [
        ([(0, 0)], 0),
        ([(0, 0), (1, 1), (2, 2)], 1),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)], 2),
        ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 3),
    ],
)
def test_affine_rank(points, rank):
    assert affine_rank([as_point(p) for p in points]) == rank


def test_affine_rank_of_nothing():
    with pytest.raises(PolytopeError):
        affine_rank([])


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert primitive([Fraction(0), Fraction(6)]) == (0, 1)
    with pytest.raises(PolytopeError):
        primitive([Fraction(0), Fraction(0)])


def test_integer_hyperplane():
    normal, offset = integer_hyperplane([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    sign = 1 if normal[0] > 0 else -1
    assert tuple(sign * x for x in normal) == (1, 1, 1)
    assert sign * offset == 1


def test_integer_hyperplane_degenerate():
    assert integer_hyperplane([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) is None


def test_segment_crossing():
    p, q = as_point([0, 0]), as_point([2, 4])
    assert segment_crossing(p, q, [Fraction(1), Fraction(0)], Fraction(1)) == (1, 2)
    with pytest.raises(PolytopeError):
        segment_crossing(p, as_point([0, 4]), [Fraction(1), Fraction(0)], Fraction(1))


def test_centroid():
    assert centroid([as_point([0, 0]), as_point([1, 0]), as_point([0, 1])]) == (Fraction(1, 3), Fraction(1, 3))
