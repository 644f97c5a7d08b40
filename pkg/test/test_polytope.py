from fractions import Fraction

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from polylb.polylb_constructions import polar_dual, product, pyramid, simplex
from polylb.polylb_errors import PolytopeError
from polylb.polylb_polytope import (
    Hyperplane,
    IncidenceStructure,
    VPolytope,
    enumerate_facets,
    f_vector,
    face_lattice,
    facet_count_at,
    facet_polytope,
    incidence_structure,
    is_simple,
    is_simple_vertex,
    vertex_degree,
    vertex_figure_counts,
)


def cube(d: int = 3) -> VPolytope:
    P = simplex(1)
    for _ in range(d - 1):
        P = product(P, simplex(1))
    return P


@pytest.fixture(name="square_pyramid")
def square_pyramid_fixture() -> VPolytope:
    return pyramid(cube(2))


def test_cube_fvector():
    assert f_vector(cube()).counts == (8, 12, 6)
    assert f_vector(cube(4)).counts == (16, 32, 24, 8)


def test_facets_are_sorted_and_carry_hyperplanes():
    facets = enumerate_facets(cube())
    assert len(facets) == 6
    assert [sorted(f.vertices) for f in facets] == sorted(sorted(f.vertices) for f in facets)
    P = cube()
    for facet in facets:
        for v in range(P.n_vertices):
            value = facet.hyperplane.value(P.vertices[v])
            assert value <= facet.hyperplane.offset
            assert (value == facet.hyperplane.offset) == (v in facet.vertices)


def test_facets_have_distinct_canonical_keys(square_pyramid):
    for P in (cube(), cube(4), square_pyramid, polar_dual(cube())):
        keys = [f.hyperplane.canonical_key() for f in enumerate_facets(P)]
        assert len(set(keys)) == len(keys)
    assert Hyperplane((-1, 0), -2).canonical_key() == (1, 0, 2)
    assert Hyperplane((0, 3), 1).canonical_key() == (0, 3, 1)


def test_simplex_facets():
    for d in range(1, 6):
        assert len(enumerate_facets(simplex(d))) == d + 1


@pytest.mark.parametrize(
    "points",
    [
        [],
        [(0, 0), (0, 0), (1, 0), (0, 1)],
        [(0, 0), (1, 1), (2, 2)],
    ],
)
def test_invalid_vertex_lists(points):
    with pytest.raises(PolytopeError):
        VPolytope.from_points(points)


def test_vertex_length_checked():
    with pytest.raises(PolytopeError):
        VPolytope(2, ((Fraction(0), Fraction(0)), (Fraction(1),)))


def test_redundant_vertex_rejected():
    P = VPolytope.from_points([(0, 0), (1, 0), (0, 1), (1, 1), ("1/2", "1/2")])
    with pytest.raises(PolytopeError) as info:
        enumerate_facets(P)
    assert info.value.params == {"vertex": 4}


def test_rational_coordinates():
    P = VPolytope.from_points([(0, 0), ("1/3", 0), (0, "2/7")])
    assert f_vector(P).counts == (3, 3)


def test_square_pyramid_lattice(square_pyramid):
    lattice = face_lattice(square_pyramid)
    assert lattice.f_vector.counts == (5, 8, 5)
    assert len(lattice) == 18
    assert lattice.is_face([0, 1, 4])
    assert not lattice.is_face([0, 3])
    assert lattice.dim_of([0, 1]) == 1
    assert len(lattice.facets_containing(4)) == 4
    with pytest.raises(PolytopeError):
        lattice.faces_of_dim(3)
    with pytest.raises(PolytopeError):
        lattice.dim_of([0, 3])


def test_between(square_pyramid):
    lattice = face_lattice(square_pyramid)
    # vertex 0 and the base facet: the two base edges at 0
    middle = lattice.between([0], [0, 1, 2, 3])
    assert middle == [frozenset({0, 1}), frozenset({0, 2})]


def test_simplicity(square_pyramid):
    apex = 4
    assert facet_count_at(square_pyramid, apex) == 4
    assert vertex_degree(square_pyramid, apex) == 4
    assert not is_simple_vertex(square_pyramid, apex)
    assert all(is_simple_vertex(square_pyramid, v) for v in range(4))
    assert not is_simple(square_pyramid)
    assert is_simple(cube())
    assert not is_simple(polar_dual(cube()))


def test_vertex_index_checked(square_pyramid):
    with pytest.raises(PolytopeError):
        vertex_degree(square_pyramid, 5)


def test_vertex_figure(square_pyramid):
    assert vertex_figure_counts(cube(), 0).counts == (3, 3)
    assert vertex_figure_counts(square_pyramid, 4).counts == (4, 4)
    with pytest.raises(PolytopeError):
        vertex_figure_counts(simplex(1), 0)


def test_facet_polytope(square_pyramid):
    counts = sorted(f_vector(facet_polytope(square_pyramid, j)).counts for j in range(5))
    assert counts == [(3, 3)] * 4 + [(4, 4)]
    with pytest.raises(PolytopeError):
        facet_polytope(square_pyramid, 5)


def test_incidence_structure_equality():
    a, b = incidence_structure(cube()), incidence_structure(cube())
    assert a == b
    assert hash(a) == hash(b)
    assert a.n_vertices == 8 and a.n_facets == 6
    assert len(a.facets_of_vertex(0)) == 3
    assert len(a.vertices_of_facet(0)) == 4
    assert not a.incidence.flags.writeable


def test_incidence_structure_validation():
    with pytest.raises(PolytopeError):
        IncidenceStructure(1, np.array([[1, 0], [1, 0], [0, 1]], dtype=bool))
    with pytest.raises(PolytopeError):
        IncidenceStructure(2, np.array([[1, 0], [0, 1], [1, 1]], dtype=bool))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_diamond_property(data):
    lattice = face_lattice(cube(4))
    g = data.draw(st.integers(min_value=0, max_value=1))
    lower = data.draw(st.sampled_from(lattice.faces_of_dim(g)))
    upper = data.draw(st.sampled_from([h for h in lattice.faces_of_dim(g + 2) if lower <= h]))
    assert len(lattice.between(lower, upper)) == 2
