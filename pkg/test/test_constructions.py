from fractions import Fraction

import pytest

from polylb.polylb_constructions import (
    direct_sum,
    k_fold_pyramid,
    polar_dual,
    product,
    pyramid,
    simplex,
    truncate_face,
)
from polylb.polylb_errors import DomainError, PolytopeError
from polylb.polylb_polytope import f_vector, incidence_structure


def test_simplex():
    assert simplex(0).n_vertices == 1
    assert f_vector(simplex(4)).counts == (5, 10, 10, 5)
    with pytest.raises(DomainError):
        simplex(-1)


def test_pyramids():
    square = product(simplex(1), simplex(1))
    assert f_vector(pyramid(square)).counts == (5, 8, 5)
    assert f_vector(k_fold_pyramid(simplex(1), 2)).counts == (4, 6, 4)
    assert k_fold_pyramid(square, 0) == square
    with pytest.raises(DomainError):
        k_fold_pyramid(square, -1)


def test_product():
    assert f_vector(product(simplex(2), simplex(1))).counts == (6, 9, 5)
    assert f_vector(product(simplex(2), simplex(2))).counts == (9, 18, 15, 6)


def test_direct_sum():
    assert f_vector(direct_sum(simplex(1), simplex(1))).counts == (4, 4)
    assert f_vector(direct_sum(simplex(2), simplex(1))).counts == (5, 9, 6)
    with pytest.raises(PolytopeError):
        direct_sum(simplex(0), simplex(1))


def test_polar_dual_reverses_fvector():
    cube = product(product(simplex(1), simplex(1)), simplex(1))
    assert f_vector(polar_dual(cube)).counts == (6, 12, 8)
    prism = product(simplex(2), simplex(1))
    assert f_vector(polar_dual(prism)).counts == (5, 9, 6)


def test_truncate_vertex():
    T = simplex(3)
    P = truncate_face(T, [0])
    assert f_vector(P).counts == (6, 9, 5)
    assert P.vertices[:3] == T.vertices[1:]
    # new vertices sit halfway along the edges at the origin
    assert P.vertices[3] == (Fraction(1, 2), Fraction(0), Fraction(0))


def test_truncate_edge():
    assert f_vector(truncate_face(simplex(3), [0, 1])).counts == (6, 9, 5)


def test_truncation_threshold_does_not_change_type():
    T = simplex(3)
    reference = incidence_structure(truncate_face(T, [0]))
    for frac in (Fraction(1, 3), Fraction(2, 3)):
        assert incidence_structure(truncate_face(T, [0], frac)) == reference


@pytest.mark.parametrize("frac", [Fraction(0), Fraction(1), Fraction(3, 2)])
def test_truncation_fraction_range(frac):
    with pytest.raises(DomainError):
        truncate_face(simplex(3), [0], frac)


def test_truncation_targets():
    square = product(simplex(1), simplex(1))
    with pytest.raises(PolytopeError):
        truncate_face(square, [0, 1, 2, 3])
    with pytest.raises(PolytopeError):
        truncate_face(square, [])
    with pytest.raises(PolytopeError) as info:
        truncate_face(square, [0, 3])
    assert info.value.params["face"] == [0, 3]
