from fractions import Fraction

import pytest

from polylb.polylb_constructions import product, simplex
from polylb.polylb_errors import FamilySpecError, PolytopeError
from polylb.polylb_families import (
    FamilySpec,
    Variant,
    build,
    census_histogram,
    corpus,
    expected_counts,
    expected_fvector,
    facet_census_tmprod,
    oracle_facet_histogram,
    parse,
    truncation_candidates,
    truncation_sequence,
)
from polylb.polylb_isomorphism import combinatorially_equivalent
from polylb.polylb_polytope import f_vector, is_simple


@pytest.mark.parametrize(
    "text,spec",
    [
        ("J:s=3,d=6", FamilySpec(Variant.J, d=6, s=3)),
        ("j: d=6, s=3", FamilySpec(Variant.J, d=6, s=3)),
        ("B:d=5", FamilySpec(Variant.J, d=5, s=3)),
        ("pentasm:s=2,d=4", FamilySpec(Variant.J, d=4, s=2)),
        ("tmprod:d=5,a=5,m=2", FamilySpec(Variant.TMPROD, d=5, a=5, m=2)),
        ("T:d=3", FamilySpec(Variant.SIMPLEX, d=3)),
        ("M:s=2,d=4", FamilySpec(Variant.TRIPLEX, d=4, s=2)),
        ("prism:s=3", FamilySpec.prism(3)),
        ("truncation:d=4,n=2", FamilySpec(Variant.TRUNC, d=4, n=2)),
        ("SIGMA:d=4", FamilySpec(Variant.SIGMA, d=4)),
    ],
)
def test_parse(text, spec):
    assert parse(text) == spec


def test_str_is_parseable():
    for spec in corpus(4):
        assert parse(str(spec)) == spec
    assert str(FamilySpec(Variant.J, d=5, s=3)) == "J:s=3,d=5"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "nope:d=3",
        "J:s=1,d=3",
        "J:s=4,d=3",
        "J:s=3",
        "J:s=3,d=x",
        "J:s=3,d=4,d=5",
        "J:s=3,d=4,a=2",
        "B:s=2,d=5",
        "sigma:d=2",
        "tmsum:d=4,a=5,m=1",
        "tmprod:d=4,a=4,m=3",
        "trunc:d=3,n=-1",
        "simplex:d=0",
        "J:s3,d=4",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(FamilySpecError):
        parse(text)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("sigma:d=3", (7, 11, 6)),
        ("J:s=2,d=3", (7, 11, 6)),
        ("A:d=4", (10, 21, 18, 7)),
        ("J:s=3,d=4", (10, 21, 18, 7)),
        ("C:d=4", (10, 21, 18, 7)),
        ("sigma:d=4", (10, 21, 18, 7)),
        ("tmprod:d=4,a=4,m=2", (9, 18, 15, 6)),
        ("triplex:s=2,d=3", (5, 8, 5)),
        ("simplex:d=4", (5, 10, 10, 5)),
    ],
)
def test_small_fvectors(text, expected):
    assert f_vector(build(parse(text))).counts == expected


@pytest.mark.parametrize(
    "text,expected",
    [
        ("tmprod:d=5,a=5,m=2", (12, 30, 34, 21, 7)),
        ("A:d=5", (12, 32, 39, 25, 8)),
        ("J:s=3,d=5", (12, 32, 39, 25, 8)),
    ],
)
def test_five_dimensional_cases(text, expected):
    assert f_vector(build(parse(text))).counts == expected


def test_a3_is_a_cube():
    assert combinatorially_equivalent(build(parse("A:d=3")), product(product(simplex(1), simplex(1)), simplex(1)))


def test_a2_has_no_truncation_target():
    spec = FamilySpec(Variant.A, d=2)
    assert truncation_candidates(spec) == []
    with pytest.raises(PolytopeError):
        build(spec)


def test_candidates():
    assert len(truncation_candidates(parse("J:s=3,d=4"))) == 6
    assert len(truncation_candidates(parse("A:d=4"))) == 2
    assert len(truncation_candidates(parse("C:d=4"))) == 4


def test_threshold_fraction_keeps_fvector():
    spec = parse("C:d=4")
    assert f_vector(build(spec, Fraction(1, 3))) == f_vector(build(spec))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_truncation_sequence(d):
    for n in range(4):
        P = truncation_sequence(d, n)
        assert P.n_vertices == d + 1 + n * (d - 1)
        assert f_vector(P)[d - 1] == d + 1 + n
        assert is_simple(P)


def test_expected_fvector():
    assert expected_fvector(parse("J:s=3,d=5")).counts == (12, 32, 39, 25, 8)
    assert expected_fvector(parse("prism:s=3")).counts == (6, 9, 5)
    assert expected_fvector(parse("A:d=2")) is None
    assert expected_fvector(parse("sigma:d=4")) is None


def test_expected_counts():
    assert expected_counts(parse("sigma:d=5")) == (13, None)
    assert expected_counts(parse("C:d=5")) == (13, 8)
    assert expected_counts(parse("C:d=2")) == (4, 4)
    assert expected_counts(parse("trunc:d=4,n=2")) == (11, 7)
    assert expected_counts(parse("tmsum:d=4,a=3,m=1")) == (6, 7)


@pytest.mark.parametrize("d,a,m", [(5, 5, 2), (6, 4, 1), (4, 2, 1), (6, 6, 3)])
def test_facet_census(d, a, m):
    census = facet_census_tmprod(d, a, m)
    assert sum(c.multiplicity for c in census) == d + 2
    spec = FamilySpec(Variant.TMPROD, d=d, a=a, m=m)
    assert census_histogram(census) == oracle_facet_histogram(build(spec))


def test_corpus_is_deterministic():
    first = corpus(4)
    assert first == corpus(4)
    assert first[0] == FamilySpec(Variant.SIMPLEX, d=2)
    assert all(spec.d >= 3 for spec in corpus(4, 3))
