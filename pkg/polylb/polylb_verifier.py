"""Check suites. Each suite evaluates one claim over a parameter grid and
returns a CheckReport; grid points are independent and are merged in
parameter order, so reports do not depend on the worker count.
"""
import bisect
import logging
import math
import random
import time

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from polylb import polylb_formulas as fm
from polylb.polylb_arguments import SUITE_DEFAULTS, SUITE_LIMITS
from polylb.polylb_constructions import polar_dual, product, simplex
from polylb.polylb_errors import DomainError
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
    truncate_candidate,
    truncation_candidates,
)
from polylb.polylb_fvector import FaceCountVector
from polylb.polylb_isomorphism import combinatorially_equivalent, isomorphism_classes
from polylb.polylb_polytope import (
    f_vector,
    face_lattice,
    facet_polytope,
    incidence_structure,
    is_simple,
)
from polylb.polylb_report import CheckReport, Params
from polylb.polylb_workers import run_tasks

logger = logging.getLogger(__name__)

SSet = Optional[Tuple[int, ...]]


def _span(lo: int, hi: int) -> str:
    return f"{lo}..{hi}"


def _merge(report: CheckReport, parts: Sequence[CheckReport]) -> CheckReport:
    for part in parts:
        report.absorb(part)
    return report


def _is_composite(n: int) -> bool:
    return n >= 4 and any(n % p == 0 for p in range(2, math.isqrt(n) + 1))


def _compare_fvector(
    report: CheckReport,
    params: Params,
    expected: Sequence[int],
    actual: FaceCountVector,
    kind: str = "mismatch",
) -> None:
    exp = FaceCountVector.of(list(expected))
    if report.check(exp.counts == actual.counts, params, exp, actual, kind):
        report.witness(params)


# Closed forms against the geometry.


def _oracle_specs(d_max: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for d in range(2, d_max + 1):
        for a in range(2, d + 1):
            for m in range(1, a // 2 + 1):
                specs.append(FamilySpec(Variant.TMPROD, d=d, a=a, m=m))
                specs.append(FamilySpec(Variant.TMSUM, d=d, a=a, m=m))
        specs += [FamilySpec(Variant.TRIPLEX, d=d, s=s) for s in range(1, d + 1)]
        specs += [FamilySpec(Variant.J, d=d, s=s) for s in range(2, d + 1)]
        if d >= 3:
            specs.append(FamilySpec(Variant.A, d=d))
    return specs


def _formula_vs_oracle_at(spec: FamilySpec) -> CheckReport:
    report = CheckReport("formula_vs_oracle", {})
    expected = expected_fvector(spec)
    assert expected is not None, f"no closed form for {spec}"
    actual = f_vector(build(spec))
    report.check(expected.counts == actual.counts, {"family": str(spec)}, expected, actual)
    return report


def check_formula_vs_oracle(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("formula_vs_oracle", {"d": _span(2, d_max)})
    specs = _oracle_specs(d_max)
    logger.info("formula_vs_oracle: %d polytopes", len(specs))
    return _merge(report, run_tasks(_formula_vs_oracle_at, specs, workers))


# Monotonicity of face counts of d-polytopes with d+2 vertices.


def _strictness(report: CheckReport, params: Params, lower: int, upper: int, condition: bool) -> None:
    """lower <= upper, strict exactly when `condition` holds."""
    if lower > upper:
        report.check(False, params, f"<= {upper}", lower, "order")
        return
    strict = lower < upper
    if strict and not condition:
        report.check(False, params, f"{lower} = {upper}", f"{lower} < {upper}", "strict-without-condition")
    elif condition and not strict:
        report.check(False, params, f"{lower} < {upper}", f"{lower} = {upper}", "condition-without-strict")
    else:
        report.check(True, params, None, None)
    if not strict:
        report.witness(params)


def _monotonicity_at(d: int) -> CheckReport:
    report = CheckReport("monotonicity", {})
    for k in range(d):
        for a in range(2, d + 1):
            for m in range(1, a // 2):
                _strictness(
                    report,
                    {"d": d, "k": k, "a": a, "m": m, "step": "m"},
                    fm.pyr_sum_count(k, a, m, d),
                    fm.pyr_sum_count(k, a, m + 1, d),
                    m <= k,
                )
        for a in range(2, d):
            for m in range(1, a // 2 + 1):
                _strictness(
                    report,
                    {"d": d, "k": k, "a": a, "m": m, "step": "a"},
                    fm.pyr_sum_count(k, a, m, d),
                    fm.pyr_sum_count(k, a + 1, m, d),
                    a - m <= k,
                )
    return report


def check_monotonicity(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("monotonicity", {"d": _span(2, d_max), "k": "0..d-1"})
    return _merge(report, run_tasks(_monotonicity_at, range(2, d_max + 1), workers))


# Minimality of tau over d-polytopes with d+2 facets.


def _tau_minimality_at(args: Tuple[int, SSet]) -> Tuple[CheckReport, int, int]:
    d, s_set = args
    report = CheckReport("tau_minimality", {})
    types = fm.dplus2_facet_types(d)
    surpluses = [s for s in range(2, d - 1) if s_set is None or s in s_set]
    odd_points = strict_points = 0
    for k in range(1, d):
        # Descending vertex count; running[i] is the fewest k-faces among
        # the first i+1 types.
        entries = sorted(((f0, fm.pyr_prod_count(k, b, m, d)) for b, m, f0 in types), reverse=True)
        neg_f0 = [-f0 for f0, _ in entries]
        running: List[int] = []
        for _, value in entries:
            running.append(value if not running else min(running[-1], value))
        for s in surpluses:
            params: Params = {"d": d, "s": s, "k": k}
            a, m = fm.minimiser_type(d, s)
            tau = fm.tau(k, d, s)
            eligible = bisect.bisect_right(neg_f0, -(2 * d + s - 1))
            lowest = running[eligible - 1]
            report.check(lowest >= tau, params, f">= {tau}", lowest, "lower-bound")
            if lowest == tau:
                report.witness(params)
            if (d + s) % 2 == 0:
                at_type = fm.pyr_prod_count(k, a, m, d)
                report.check(
                    lowest == tau == at_type,
                    params,
                    tau,
                    f"minimum {lowest}, type ({a},{m}) has {at_type}",
                    "minimum",
                )
            else:
                odd_points += 1
                strict_points += lowest > tau
    for s in surpluses:
        a, m = fm.minimiser_type(d, s)
        f0 = d + 1 + m * (a - m)
        report.expect_equal({"d": d, "s": s}, d + 2 * ((d + s) // 2) - 1, f0, "minimiser-vertex-count")
    if d >= 6 and (s_set is None or 3 in s_set):
        a = (d + 3) // 2 + 1
        for b in range(a, d + 1):
            for m in range(3, b // 2 + 1):
                for k in range(d - 2):
                    base = fm.pyr_prod_count(k, a, 2, d)
                    other = fm.pyr_prod_count(k, b, m, d)
                    report.check(
                        other > base, {"d": d, "b": b, "m": m, "k": k}, f"> {base}", other, "strictly-more-faces"
                    )
    return report, odd_points, strict_points


def check_tau_minimality(d_max: int, s_set: SSet = None, workers: int = 1) -> CheckReport:
    grid = {"d": _span(4, d_max), "s": "2..d-2" if s_set is None else ",".join(map(str, s_set)), "k": "1..d-1"}
    report = CheckReport("tau_minimality", grid)
    args = [(d, s_set) for d in range(4, d_max + 1)]
    odd = strict = 0
    for part, odd_points, strict_points in run_tasks(_tau_minimality_at, args, workers):
        report.absorb(part)
        odd += odd_points
        strict += strict_points
    if odd:
        report.note(
            "when d+s is odd the type (floor((d+s)/2)+1, 2) has 2d+s-2 vertices, one short of "
            f"2d+s-1; tau stays a lower bound but is not attained at {strict} of {odd} such points"
        )
    return report


# The eta/tau dichotomy and the closing inequalities of the d+3 facet case.


def _dichotomy_at(d: int) -> CheckReport:
    report = CheckReport("dichotomy", {})
    if d >= 9:
        for k in range(1, -(-d // 3) - 1):
            gap = fm.dichotomy_gap(k, d)
            report.check(gap > 0, {"d": d, "k": k}, "eta < tau", f"tau - eta = {gap}", "eta-below-tau")
        for k in range(2 * d // 5, d):
            gap = fm.dichotomy_gap(k, d)
            report.check(gap < 0, {"d": d, "k": k}, "eta > tau", f"tau - eta = {gap}", "eta-above-tau")
    if d >= 6:
        for k in range(1, d - 2):
            value = fm.facet_2d_surplus(k, d)
            report.check(value > 0, {"d": d, "k": k}, "> 0", value, "facet-surplus-positive")
        for k in (d - 2, d - 1):
            report.expect_equal({"d": d, "k": k}, 0, fm.facet_2d_surplus(k, d), "facet-surplus-zero")
    if d >= 4:
        for k in range(1, d - 1):
            value = fm.pyramid_split_margin(k, d)
            report.check(value > 0, {"d": d, "k": k}, "> 0", value, "pyramid-split")
    if d >= 5:
        for k in range(1, d - 1):
            value = fm.double_tau_margin(k, d)
            report.check(value > 0, {"d": d, "k": k}, "> 0", value, "double-tau")
    return report


def check_dichotomy(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("dichotomy", {"d": _span(4, d_max), "k": "1..d-1"})
    report.expect_equal({"d": 9, "k": 1}, 4, fm.dichotomy_gap(1, 9), "anchor")
    return _merge(report, run_tasks(_dichotomy_at, range(4, d_max + 1), workers))


# Small cases and tightness.

SMALL_CASES: List[Tuple[str, Tuple[int, ...]]] = [
    ("sigma:d=3", (7, 11, 6)),
    ("J:s=2,d=3", (7, 11, 6)),
    ("A:d=4", (10, 21, 18, 7)),
    ("J:s=3,d=4", (10, 21, 18, 7)),
    ("C:d=4", (10, 21, 18, 7)),
    ("sigma:d=4", (10, 21, 18, 7)),
    ("tmprod:d=5,a=5,m=2", (12, 30, 34, 21, 7)),
    ("A:d=5", (12, 32, 39, 25, 8)),
    ("J:s=3,d=5", (12, 32, 39, 25, 8)),
]

# Stated without a construction this package can build.
UNVERIFIED_VALUES: List[Tuple[str, Tuple[int, ...]]] = [
    ("pyramid over J(4,0)", (12, 33, 40, 25, 8)),
]


def _oracle_fvector(spec: FamilySpec) -> FaceCountVector:
    return f_vector(build(spec))


def _tightness_at(d: int) -> CheckReport:
    report = CheckReport("tightness", {})
    eta = fm.eta_vector(2 * d + 2, d)
    for spec in (FamilySpec(Variant.J, d=d, s=3), FamilySpec(Variant.A, d=d)):
        _compare_fvector(report, {"d": d, "family": str(spec)}, eta.counts, f_vector(build(spec)), "eta-tight")
    if d % 2 == 1 and d >= 5:
        a = (d + 3) // 2 + 1
        spec = FamilySpec(Variant.TMPROD, d=d, a=a, m=2)
        fv = f_vector(build(spec))
        report.expect_equal({"d": d, "family": str(spec)}, 2 * d + 2, fv[0], "vertex-count")
        for k in range(1, d):
            params: Params = {"d": d, "family": str(spec), "k": k}
            if report.expect_equal(params, fm.tau(k, d, 3), fv[k], "tau-tight"):
                report.witness(params)
    return report


def check_tightness(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("tightness", {"d": _span(3, d_max)})
    return _merge(report, run_tasks(_tightness_at, range(3, d_max + 1), workers))


def check_small_cases(d_max: int = 7, workers: int = 1) -> CheckReport:
    report = CheckReport("small_cases", {"d": _span(3, d_max)})
    specs = [parse(text) for text, _ in SMALL_CASES]
    for (text, expected), actual in zip(SMALL_CASES, run_tasks(_oracle_fvector, specs, workers)):
        _compare_fvector(report, {"family": text}, expected, actual)

    cube = product(product(simplex(1), simplex(1)), simplex(1))
    report.check(
        combinatorially_equivalent(build(parse("A:d=3")), cube),
        {"family": "A:d=3"},
        "combinatorial cube",
        "different incidence structure",
        "not-a-cube",
    )

    for d in range(3, min(d_max, 6) + 1):
        for spec in (FamilySpec(Variant.C, d=d), FamilySpec(Variant.SIGMA, d=d)):
            P = build(spec)
            verts, facets = expected_counts(spec)
            report.expect_equal({"family": str(spec)}, verts, P.n_vertices, "vertex-count")
            if facets is not None:
                report.expect_equal({"family": str(spec)}, facets, f_vector(P)[-1], "facet-count")

    _merge(report, run_tasks(_tightness_at, range(3, d_max + 1), workers))

    for label, counts in UNVERIFIED_VALUES:
        fv = FaceCountVector.of(list(counts))
        report.note(
            f"unverified stated value: {label} with f-vector {fv}; J(s,d) is only defined for "
            f"2 <= s <= d, so no construction is checked (Euler relation holds: {fv.satisfies_euler()})"
        )
    return report


# Existence of d+2 facet d-polytopes with 2d+2 vertices.


def check_existence(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("existence", {"d": _span(2, d_max)})
    for d in range(2, d_max + 1):
        found = fm.existence_witnesses(d)
        condition = _is_composite(d + 1) and d != 3
        params: Params = {"d": d}
        if found and not condition:
            report.check(False, params, "no (a,m)", found, "solution-without-condition")
        elif condition and not found:
            report.check(False, params, "some (a,m)", "none", "condition-without-solution")
        else:
            report.check(True, params, None, None)
        for a, m in found:
            report.witness({"d": d, "a": a, "m": m})
    return report


# Truncation polytopes attain the simple-polytope bound.


def _barnette_at(args: Tuple[int, int]) -> CheckReport:
    d, n = args
    report = CheckReport("barnette_truncations", {})
    spec = FamilySpec(Variant.TRUNC, d=d, n=n) if n else FamilySpec(Variant.SIMPLEX, d=d)
    P = build(spec)
    fv = f_vector(P)
    facets = d + 1 + n
    base: Params = {"d": d, "n": n}
    report.expect_equal(base, d + 1 + n * (d - 1), fv[0], "vertex-count")
    report.expect_equal(base, facets, fv[d - 1], "facet-count")
    report.check(is_simple(P), base, "simple", "not simple", "not-simple")
    for k in range(d - 1):
        params: Params = {"d": d, "n": n, "k": k}
        if report.expect_equal(params, fm.barnette_bound(k, d, facets), fv[k], "barnette-equality"):
            report.witness(params)
    return report


def check_barnette_truncations(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("barnette_truncations", {"d": _span(2, d_max), "n": "0..3"})
    args = [(d, n) for d in range(2, d_max + 1) for n in range(4)]
    return _merge(report, run_tasks(_barnette_at, args, workers))


# Combinatorial identities behind the formulas.

# Largest n for Pascal's rule, and for the column and partial sums.
PASCAL_N_MAX = 200
BINOMIAL_SUM_N_MAX = 100


def _binomial_identities_at(n: int) -> CheckReport:
    report = CheckReport("identities", {})
    b = fm.binomial
    for c in range(1, n + 1):
        report.expect_equal({"n": n, "c": c}, b(n, c), b(n - 1, c - 1) + b(n - 1, c), "pascal")
        if n > BINOMIAL_SUM_N_MAX:
            continue
        partial = 0
        for a in range(1, n + 1):
            partial += b(n - a, c - 1)
            report.expect_equal(
                {"n": n, "c": c, "a": a}, b(n, c) - b(n - a, c), partial, "binomial-difference"
            )
        report.expect_equal({"n": n, "c": c}, b(n, c), partial, "binomial-sum")
    return report


def _identities_at(d: int) -> Tuple[CheckReport, List[Params]]:
    report = CheckReport("identities", {})
    outside: List[Params] = []
    b = fm.binomial

    for k in range(1, d):
        # prefix[r] = C(d, k) + ... + C(d+1-r, k)
        prefix = [0]
        for i in range(1, d + 1):
            prefix.append(prefix[-1] + b(d + 1 - i, k))
        for s in range(2, d + 1):
            rhs = fm.theta_raw(k, d, s)
            for r in range(2, s + 1):
                lhs = fm.theta_raw(k, d - 1, s - r + 1) + prefix[r]
                params: Params = {"d": d, "k": k, "r": r, "s": s}
                report.check(lhs >= rhs, params, f">= {rhs}", lhs, "theta-superadditivity")
                if lhs == rhs:
                    report.witness(params)
                    if r not in (2, s):
                        outside.append(params)

    for a in range(2, d + 1):
        for m in range(1, a // 2 + 1):
            for k in range(d):
                report.expect_equal(
                    {"d": d, "a": a, "m": m, "k": k},
                    fm.pyr_prod_raw(d - 1 - k, a, m, d),
                    fm.pyr_sum_raw(k, a, m, d),
                    "polar-reflection",
                )
    if d >= 3:
        for s in range(1, d):
            for k in range(1, d):
                report.expect_equal(
                    {"d": d, "s": s, "k": k},
                    fm.theta_raw(k, d, s),
                    fm.theta_raw(k, d - 1, s) + fm.theta_raw(k - 1, d - 1, s),
                    "theta-pyramid",
                )
        for k in range(1, d - 1):
            report.expect_equal(
                {"d": d, "k": k}, fm.eta(k, 3 * d - 1, d), fm.barnette_bound(k, d, d + 3), "barnette-eta"
            )
    if d >= 4:
        for k in range(1, d):
            report.expect_equal({"d": d, "k": k}, fm.tau_intro(k, d), fm.tau_raw(k, d, 3), "tau-forms")
        for k in range(2, d):
            report.expect_equal(
                {"d": d, "k": k},
                fm.eta_raw(k, d, 3),
                fm.eta_raw(k, d - 1, 3) + fm.eta_raw(k - 1, d - 1, 3),
                "eta-pyramid",
            )
    return report, outside


def check_identities(d_max: int, workers: int = 1) -> CheckReport:
    grid = {
        "d": _span(2, d_max),
        "n": f"{_span(1, PASCAL_N_MAX)} (sums {_span(1, BINOMIAL_SUM_N_MAX)})",
    }
    report = CheckReport("identities", grid)
    _merge(report, run_tasks(_binomial_identities_at, range(1, PASCAL_N_MAX + 1), workers))
    outside: List[Params] = []
    for part, found in run_tasks(_identities_at, range(2, d_max + 1), workers):
        report.absorb(part)
        outside.extend(found)
    if outside:
        sample = "; ".join(", ".join(f"{k}={v}" for k, v in p.items()) for p in outside[:5])
        report.note(
            f"theta superadditivity is tight with r outside {{2, s}} at {len(outside)} points, "
            f"e.g. {sample}"
        )
    return report


# Structural properties of every polytope in the corpus.

THRESHOLDS = (Fraction(1, 3), Fraction(2, 3))


def _properties_at(spec: FamilySpec) -> CheckReport:
    report = CheckReport("properties", {})
    d = spec.d
    P = build(spec)
    lattice = face_lattice(P)
    fv = lattice.f_vector
    base: Params = {"family": str(spec)}

    report.expect_equal(base, FaceCountVector.euler_target(d), fv.euler_characteristic(), "euler")
    report.check(
        f_vector(polar_dual(P)).counts == fv.reversed().counts,
        base,
        fv.reversed(),
        f_vector(polar_dual(P)),
        "duality",
    )

    for j in range(fv[d - 1]):
        facet = f_vector(facet_polytope(P, j))
        for k in range(d):
            params: Params = {"family": str(spec), "facet": j, "k": k}
            bound = facet.f(k) + facet.f(k - 1)
            report.check(fv[k] >= bound, params, f">= {bound}", fv[k], "facet-inequality")
            if fv[k] == bound:
                report.witness(params)

    rng = random.Random(str(spec))
    for _ in range(10):
        if d < 3:
            break
        g = rng.randrange(d - 2)
        lower = rng.choice(lattice.faces_of_dim(g))
        uppers = [h for h in lattice.faces_of_dim(g + 2) if lower <= h]
        upper = rng.choice(uppers)
        middle = lattice.between(lower, upper)
        report.expect_equal(
            {"family": str(spec), "lower": str(sorted(lower)), "upper": str(sorted(upper))},
            2,
            len(middle),
            "diamond",
        )

    v = fv[0]
    for s in range(1, min(d, v - d) + 1):
        for k in range(1, d):
            params = {"family": str(spec), "s": s, "k": k}
            theta = fm.theta(k, d + s, d)
            report.check(fv[k] >= theta, params, f">= {theta}", fv[k], "theta-bound")
            if fv[k] == theta:
                report.witness(params)

    truncated = spec.variant in (Variant.J, Variant.A, Variant.C) or (
        spec.variant is Variant.TRUNC and (spec.n or 0) > 0
    )
    if truncated:
        reference = incidence_structure(P)
        for frac in THRESHOLDS:
            other = incidence_structure(build(spec, frac))
            report.check(other == reference, {"family": str(spec), "fraction": str(frac)},
                         reference, other, "threshold-dependence")
    if spec.variant in (Variant.J, Variant.A, Variant.C):
        structures = [incidence_structure(P)] + [
            incidence_structure(truncate_candidate(spec, idx))
            for idx in range(1, len(truncation_candidates(spec)))
        ]
        same_type = set(isomorphism_classes(structures)[0])
        for idx in range(1, len(structures)):
            report.check(idx in same_type, {"family": str(spec), "choice": idx},
                         "isomorphic", "different type", "choice-dependence")
    return report


def check_properties(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("properties", {"d": _span(2, d_max)})
    for p in range(1, d_max):
        for q in range(1, d_max - p + 1):
            P = product(simplex(p), simplex(q))
            expected = f_vector(simplex(p)).product(f_vector(simplex(q)))
            report.check(
                expected.counts == f_vector(P).counts,
                {"family": f"T({p}) x T({q})"},
                expected,
                f_vector(P),
                "product-formula",
            )
    specs = corpus(d_max)
    logger.info("properties: %d corpus polytopes", len(specs))
    return _merge(report, run_tasks(_properties_at, specs, workers))


# Corpus-level form of the 2d+2 vertex bound.


def _corpus_bounds_at(spec: FamilySpec) -> CheckReport:
    report = CheckReport("corpus_bounds", {})
    d = spec.d
    fv = f_vector(build(spec))
    if fv[0] != 2 * d + 2:
        return report
    if fv[d - 1] >= d + 3:
        bound, kind = [fm.eta_raw(k, d, 3) for k in range(1, d)], "eta-bound"
    elif fv[d - 1] == d + 2 and d >= 4:
        bound, kind = [fm.tau_intro(k, d) for k in range(1, d)], "tau-bound"
    else:
        return report
    for k in range(1, d):
        params: Params = {"family": str(spec), "k": k}
        report.check(fv[k] >= bound[k - 1], params, f">= {bound[k - 1]}", fv[k], kind)
        if fv[k] == bound[k - 1]:
            report.witness(params)
    return report


def check_corpus_bounds(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("corpus_bounds", {"d": _span(3, d_max)})
    return _merge(report, run_tasks(_corpus_bounds_at, corpus(d_max, 3), workers))


# Facet classes of d+2 facet polytopes.


def _facet_census_at(spec: FamilySpec) -> CheckReport:
    report = CheckReport("facet_census", {})
    assert spec.a is not None and spec.m is not None
    census = facet_census_tmprod(spec.d, spec.a, spec.m)
    report.expect_equal({"family": str(spec)}, census_histogram(census), oracle_facet_histogram(build(spec)))
    return report


def check_facet_census(d_max: int, workers: int = 1) -> CheckReport:
    report = CheckReport("facet_census", {"d": _span(2, d_max)})
    specs = [
        FamilySpec(Variant.TMPROD, d=d, a=a, m=m)
        for d in range(2, d_max + 1)
        for a in range(2, d + 1)
        for m in range(1, a // 2 + 1)
    ]
    return _merge(report, run_tasks(_facet_census_at, specs, workers))


# Registry.


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Callable[[int, SSet, int], CheckReport]


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("formula_vs_oracle", "closed-form f-vectors match the face lattice",
              lambda d, s, w: check_formula_vs_oracle(d, w)),
        Suite("monotonicity", "d+2 vertex face counts grow with m and a, strictly exactly when stated",
              lambda d, s, w: check_monotonicity(d, w)),
        Suite("tau_minimality", "tau is the least face count among d+2 facet polytopes",
              lambda d, s, w: check_tau_minimality(d, s, w)),
        Suite("dichotomy", "eta and tau trade places as k grows",
              lambda d, s, w: check_dichotomy(d, w)),
        Suite("small_cases", "f-vectors of the small minimisers",
              lambda d, s, w: check_small_cases(d, w)),
        Suite("existence", "a 2d+2 vertex, d+2 facet polytope exists iff d+1 is composite and d != 3",
              lambda d, s, w: check_existence(d, w)),
        Suite("barnette_truncations", "truncation polytopes attain the simple-polytope bound",
              lambda d, s, w: check_barnette_truncations(d, w)),
        Suite("identities", "binomial identities and agreements between the closed forms",
              lambda d, s, w: check_identities(d, w)),
        Suite("properties", "structural properties of every corpus polytope",
              lambda d, s, w: check_properties(d, w)),
        Suite("tightness", "J(3,d), A(d) and the odd-d minimiser meet their bounds",
              lambda d, s, w: check_tightness(d, w)),
        Suite("corpus_bounds", "2d+2 vertex corpus polytopes respect the eta and tau bounds",
              lambda d, s, w: check_corpus_bounds(d, w)),
        Suite("facet_census", "facet classes of pyramids over products of simplices",
              lambda d, s, w: check_facet_census(d, w)),
    ]
}

assert list(SUITES) == list(SUITE_DEFAULTS), "suite registry and defaults disagree"


def suite_bound(name: str, d_max: Optional[int], clamp: bool = False) -> int:
    """The grid bound for a suite: the default, or d_max checked against the limits."""
    if name not in SUITES:
        raise DomainError("unknown suite", {"suite": name})
    lo, hi = SUITE_LIMITS[name]
    if d_max is None:
        return SUITE_DEFAULTS[name]
    if clamp:
        return min(max(d_max, lo), hi)
    if not lo <= d_max <= hi:
        raise DomainError(f"d_max must lie in {lo}..{hi} for {name}", {"suite": name, "d_max": d_max})
    return d_max


def run_suite(name: str, d_max: Optional[int] = None, s_set: SSet = None, workers: int = 1) -> CheckReport:
    bound = suite_bound(name, d_max)
    logger.info("running %s with d_max=%d", name, bound)
    start = time.perf_counter()
    report = SUITES[name].run(bound, s_set, workers)
    logger.info("%s (%.2fs)", report.summary(), time.perf_counter() - start)
    return report


def run_all(d_max: Optional[int] = None, s_set: SSet = None, workers: int = 1) -> List[CheckReport]:
    """Every suite once; an explicit d_max is clamped into each suite's limits."""
    reports = []
    for name in SUITES:
        bound = suite_bound(name, d_max, clamp=True)
        reports.append(run_suite(name, bound, s_set, workers))
    return reports
