import pytest

from polylb import polylb_verifier as verifier
from polylb.polylb_arguments import SUITE_DEFAULTS, SUITE_LIMITS
from polylb.polylb_errors import DomainError
from polylb.polylb_report import CheckReport


def test_report_bookkeeping():
    report = CheckReport("demo", {"d": "2..3"})
    assert report.check(True, {"d": 2}, 1, 1)
    assert not report.expect_equal({"d": 3}, 1, 2, "mismatch")
    report.witness({"d": 2})
    other = CheckReport("demo", {})
    other.check(True, {"d": 4}, None, None)
    other.note("something odd")
    report.absorb(other)
    assert report.points_checked == 3
    assert not report.passed
    assert report.failures[0].params == {"d": 3}
    assert report.failures[0].expected == "1"
    assert report.findings == ["something odd"]
    assert report.summary() == "demo: FAIL (3 points, 1 failures, 1 equality witnesses)"


@pytest.mark.parametrize(
    "lower,upper,condition,kind",
    [
        (3, 3, True, "condition-without-strict"),
        (3, 4, False, "strict-without-condition"),
        (5, 4, True, "order"),
    ],
)
def test_strictness_failure_kinds(lower, upper, condition, kind):
    report = CheckReport("demo", {})
    verifier._strictness(report, {"k": 0}, lower, upper, condition)
    assert [f.kind for f in report.failures] == [kind]


def test_strictness_records_equalities():
    report = CheckReport("demo", {})
    verifier._strictness(report, {"k": 0}, 6, 6, False)
    verifier._strictness(report, {"k": 1}, 14, 15, True)
    assert report.passed
    assert report.equality_witnesses == [{"k": 0}]


def test_registry_covers_every_suite():
    assert list(verifier.SUITES) == list(SUITE_DEFAULTS) == list(SUITE_LIMITS)


def test_run_suite_checks_bounds():
    with pytest.raises(DomainError):
        verifier.run_suite("nope")
    with pytest.raises(DomainError) as info:
        verifier.run_suite("dichotomy", d_max=5)
    assert info.value.params == {"suite": "dichotomy", "d_max": 5}
    assert verifier.suite_bound("dichotomy", 5, clamp=True) == 9
    assert verifier.suite_bound("properties", 100, clamp=True) == 6
    assert verifier.suite_bound("existence", None) == 200


def test_existence():
    report = verifier.run_suite("existence")
    assert report.passed
    assert report.grid == {"d": "2..200"}
    assert report.points_checked == 199
    assert {"d": 5, "a": 5, "m": 2} in report.equality_witnesses
    assert not [w for w in report.equality_witnesses if w["d"] in (3, 4)]


def test_monotonicity():
    report = verifier.check_monotonicity(8)
    assert report.passed
    assert {"d": 4, "k": 0, "a": 4, "m": 1, "step": "m"} in report.equality_witnesses
    assert {"d": 4, "k": 1, "a": 4, "m": 1, "step": "m"} not in report.equality_witnesses


def test_reports_do_not_depend_on_workers():
    assert verifier.check_monotonicity(9, workers=2) == verifier.check_monotonicity(9, workers=1)


def test_monotonicity_default_grid():
    assert verifier.run_suite("monotonicity").passed


def test_tau_minimality():
    report = verifier.check_tau_minimality(20)
    assert report.passed, report.failures[:5]
    assert {"d": 5, "s": 3, "k": 1} in report.equality_witnesses
    assert {"d": 6, "s": 2, "k": 1} in report.equality_witnesses
    assert len(report.findings) == 1
    assert "2d+s-2" in report.findings[0]


def test_tau_minimality_restricted_surpluses():
    report = verifier.check_tau_minimality(12, s_set=(3,))
    assert report.passed
    assert report.grid["s"] == "3"
    assert {w["s"] for w in report.equality_witnesses if "s" in w} == {3}
    assert report == verifier.check_tau_minimality(12, s_set=(3,))


def test_dichotomy():
    report = verifier.run_suite("dichotomy")
    assert report.passed, report.failures[:5]
    assert report.points_checked > 0


def test_identities():
    report = verifier.check_identities(12)
    assert report.passed, report.failures[:5]
    # the facet-level (k = d-1) superadditivity is tight for every r
    assert len(report.findings) == 1
    assert "r outside" in report.findings[0]
    assert {"d": 4, "k": 3, "r": 3, "s": 4} in report.equality_witnesses
    assert report.grid == {"d": "2..12", "n": "1..200 (sums 1..100)"}


def test_binomial_identities_reach_the_grid_edges():
    top = verifier._binomial_identities_at(verifier.PASCAL_N_MAX)
    assert top.passed
    assert top.points_checked == 200
    edge = verifier._binomial_identities_at(verifier.BINOMIAL_SUM_N_MAX)
    assert edge.passed
    # per c: one Pascal point, one per a, one column sum
    assert edge.points_checked == 100 * (1 + 100 + 1)


def test_small_cases():
    report = verifier.check_small_cases(5)
    assert report.passed, report.failures
    assert any("(12, 33, 40, 25, 8)" in f for f in report.findings)
    assert {"family": "A:d=4"} in report.equality_witnesses


def test_barnette_truncations():
    report = verifier.check_barnette_truncations(4)
    assert report.passed, report.failures
    assert {"d": 3, "n": 2, "k": 0} in report.equality_witnesses


def test_tightness():
    report = verifier.check_tightness(5)
    assert report.passed, report.failures
    assert {"d": 5, "family": "tmprod:d=5,a=5,m=2", "k": 3} in report.equality_witnesses


def test_facet_census():
    assert verifier.check_facet_census(5).passed


def test_corpus_bounds():
    report = verifier.check_corpus_bounds(5)
    assert report.passed, report.failures
    families = {w["family"] for w in report.equality_witnesses}
    assert {"J:s=3,d=5", "A:d=5", "tmprod:d=5,a=5,m=2"} <= families


def test_formula_vs_oracle():
    report = verifier.check_formula_vs_oracle(5)
    assert report.passed, report.failures


def test_properties():
    report = verifier.check_properties(3)
    assert report.passed, report.failures[:5]


@pytest.mark.slow
def test_formula_vs_oracle_full_grid():
    assert verifier.run_suite("formula_vs_oracle", workers=2).passed


@pytest.mark.slow
def test_small_cases_full_grid():
    assert verifier.run_suite("small_cases", workers=2).passed


@pytest.mark.slow
def test_properties_d4():
    assert verifier.check_properties(4, workers=2).passed


@pytest.mark.slow
def test_tau_minimality_default_grid():
    assert verifier.run_suite("tau_minimality", workers=2).passed


@pytest.mark.slow
def test_properties_default_grid():
    report = verifier.run_suite("properties", workers=2)
    assert report.grid["d"] == "2..6"
    assert report.passed, report.failures[:5]


@pytest.mark.slow
def test_identities_default_grid():
    report = verifier.run_suite("identities", workers=2)
    assert report.grid["d"] == "2..40"
    assert report.passed, report.failures[:5]
