"""Closed-form face-count families.

All arithmetic is exact integer arithmetic. The public evaluators take the
total vertex count where the literature does (theta_k(d+s, d),
eta_k(2d+s-1, d)) and derive the surplus s internally; the `*_raw`
variants take s directly and skip the domain checks, for use inside
inequalities that step outside the published domains.
"""
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from polylb.binomials import table
from polylb.polylb_errors import DomainError
from polylb.polylb_fvector import FaceCountVector


@dataclass(frozen=True)
class FormulaParams:
    """A parameter point; unset fields are omitted from error reports."""

    d: Optional[int] = None
    k: Optional[int] = None
    s: Optional[int] = None
    a: Optional[int] = None
    m: Optional[int] = None
    n_facets: Optional[int] = None
    v: Optional[int] = None

    def as_dict(self) -> Dict[str, int]:
        return {key: val for key, val in asdict(self).items() if val is not None}


def binomial(n: int, c: int) -> int:
    """C(n, c), zero when c > n; negative arguments are caller bugs."""
    if n < 0 or c < 0:
        raise DomainError("binomial arguments must be nonnegative", {"n": n, "c": c})
    return table.get(n, c)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _require(ok: bool, message: str, params: FormulaParams) -> None:
    if not ok:
        raise DomainError(message, params.as_dict())


# theta: d-polytopes with d+s vertices, 1 <= s <= d.


def theta_raw(k: int, d: int, s: int) -> int:
    return binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1)


def theta(k: int, v: int, d: int) -> int:
    """Minimum number of k-faces of a d-polytope with v = d+s vertices."""
    s = v - d
    params = FormulaParams(d=d, k=k, v=v, s=s)
    _require(1 <= s <= d, "theta needs 1 <= s <= d", params)
    _require(1 <= k <= d - 1, "theta needs 1 <= k <= d-1", params)
    return theta_raw(k, d, s)


# eta: J(s, d), with 2d+s-1 vertices and d+3 facets.


def eta_raw(k: int, d: int, s: int) -> int:
    return (
        binomial(d + 1, k + 1)
        + 2 * binomial(d, k + 1)
        - binomial(d + 1 - s, k + 1)
    )


def eta(k: int, v: int, d: int) -> int:
    """k-faces of J(s, d) where v = 2d+s-1."""
    s = v - 2 * d + 1
    params = FormulaParams(d=d, k=k, v=v, s=s)
    _require(2 <= s <= d, "eta needs 2 <= s <= d", params)
    _require(1 <= k <= d - 1, "eta needs 1 <= k <= d-1", params)
    return eta_raw(k, d, s)


# tau: the d+2 facet minimiser with at least 2d+s-1 vertices.


def minimiser_type(d: int, s: int) -> Tuple[int, int]:
    """(a, m) of the d+2 facet polytope with fewest k-faces and >= 2d+s-1 vertices."""
    return (d + s) // 2 + 1, 2


def tau_raw(k: int, d: int, s: int) -> int:
    a = (d + s) // 2 + 1
    return (
        binomial(d + 1, k + 1)
        + binomial(d, k + 1)
        + binomial(d - 1, k + 1)
        - binomial(d - a + 2, k + 1)
        - binomial(d - a + 1, k + 1)
    )


def tau_intro(k: int, d: int) -> int:
    """tau_k(2d+2, d) written with ceilings, as in the statement of the main bound."""
    half = _ceil_half(d + 1)
    return (
        binomial(d + 1, k + 1)
        + binomial(d, k + 1)
        + binomial(d - 1, k + 1)
        - binomial(half - 1, k + 1)
        - binomial(half - 2, k + 1)
    )


def tau(k: int, d: int, s: int) -> int:
    """Lower bound on k-faces of d-polytopes with d+2 facets and >= 2d+s-1 vertices."""
    params = FormulaParams(d=d, k=k, s=s)
    _require(d >= 4, "tau needs d >= 4", params)
    _require(2 <= s <= d - 2, "tau needs 2 <= s <= d-2", params)
    _require(1 <= k <= d - 1, "tau needs 1 <= k <= d-1", params)
    value = tau_raw(k, d, s)
    a, m = minimiser_type(d, s)
    assert value == pyr_prod_raw(k, a, m, d), (
        f"tau disagrees with the d+2 facet count at {params.as_dict()}"
    )
    if s == 3:
        assert value == tau_intro(k, d), (
            f"tau forms disagree at {params.as_dict()}"
        )
    return value


# Polytopes with d+2 facets (pyramids over products of simplices) and
# their duals with d+2 vertices.


def _check_dplus2(k: int, a: int, m: int, d: int) -> FormulaParams:
    params = FormulaParams(d=d, k=k, a=a, m=m)
    _require(2 <= a <= d, "need 2 <= a <= d", params)
    _require(1 <= m <= a // 2, "need 1 <= m <= floor(a/2)", params)
    _require(0 <= k <= d - 1, "need 0 <= k <= d-1", params)
    return params


def pyr_prod_raw(k: int, a: int, m: int, d: int) -> int:
    return (
        binomial(d + 2, k + 2)
        - binomial(d - a + m + 1, k + 2)
        - binomial(d - m + 1, k + 2)
        + binomial(d - a + 1, k + 2)
    )


def pyr_sum_raw(k: int, a: int, m: int, d: int) -> int:
    c = d - k + 1
    return (
        binomial(d + 2, c)
        - binomial(d - a + m + 1, c)
        - binomial(d - m + 1, c)
        + binomial(d - a + 1, c)
    )


def pyr_prod_count(k: int, a: int, m: int, d: int) -> int:
    """k-faces of the (d-a)-fold pyramid over T(m) x T(a-m)."""
    params = _check_dplus2(k, a, m, d)
    value = pyr_prod_raw(k, a, m, d)
    if k == 0:
        assert value == d + 1 + m * (a - m), (
            f"vertex count mismatch at {params.as_dict()}"
        )
    return value


def pyr_sum_count(k: int, a: int, m: int, d: int) -> int:
    """k-faces of the (d-a)-fold pyramid over T(m) (+) T(a-m)."""
    params = _check_dplus2(k, a, m, d)
    value = pyr_sum_raw(k, a, m, d)
    assert value == pyr_prod_raw(d - 1 - k, a, m, d), (
        f"polar reflection mismatch at {params.as_dict()}"
    )
    return value


def dplus2_facet_types(d: int) -> List[Tuple[int, int, int]]:
    """Every (a, m, f_0) of a d-polytope with d+2 facets."""
    return [
        (a, m, d + 1 + m * (a - m))
        for a in range(2, d + 1)
        for m in range(1, a // 2 + 1)
    ]


def existence_witnesses(d: int) -> List[Tuple[int, int]]:
    """All (a, m) giving a d+2 facet d-polytope with exactly 2d+2 vertices."""
    return [(a, m) for a, m, f0 in dplus2_facet_types(d) if f0 == 2 * d + 2]


# Barnette's bound for simple polytopes.


def barnette_bound(k: int, d: int, n_facets: int) -> int:
    params = FormulaParams(d=d, k=k, n_facets=n_facets)
    _require(d >= 2, "Barnette's bound needs d >= 2", params)
    _require(n_facets >= d + 1, "a d-polytope has at least d+1 facets", params)
    _require(0 <= k <= d - 2, "Barnette's bound covers 0 <= k <= d-2", params)
    if k == 0:
        return (d - 1) * n_facets - (d + 1) * (d - 2)
    return binomial(d, k + 1) * n_facets - binomial(d + 1, k + 1) * (d - 1 - k)


# Differences that decide the eta/tau dichotomy and the closing
# estimates of the d+3 facet argument.


def dichotomy_gap(k: int, d: int) -> int:
    """tau_k(2d+2, d) - eta_k(2d+2, d)"""
    return tau_intro(k, d) - eta_raw(k, d, 3)


def facet_2d_surplus(k: int, d: int) -> int:
    half = _ceil_half(d)
    return (
        binomial(d - 2, k + 1)
        - binomial(half - 1, k + 1)
        - binomial(half - 2, k + 1)
        - binomial(d - 4, k)
        - binomial(d - 5, k)
    )


def pyramid_split_margin(k: int, d: int) -> int:
    return (
        tau_raw(k, d - 1, 2)
        + eta_raw(k - 1, d - 1, 2)
        + binomial(d - 1, k)
        + binomial(d - 2, k)
        - eta_raw(k, d, 3)
    )


def double_tau_margin(k: int, d: int) -> int:
    return (
        tau_raw(k, d - 1, 2)
        + tau_raw(k - 1, d - 1, 2)
        + binomial(d - 1, k)
        + binomial(d - 2, k)
        - eta_raw(k, d, 3)
    )


# Full vectors.


def simplex_vector(d: int) -> FaceCountVector:
    return FaceCountVector.of([binomial(d + 1, k + 1) for k in range(d)])


def theta_vector(v: int, d: int) -> FaceCountVector:
    return FaceCountVector.of([v] + [theta(k, v, d) for k in range(1, d)])


def eta_vector(v: int, d: int) -> FaceCountVector:
    return FaceCountVector.of([v] + [eta(k, v, d) for k in range(1, d)])


def tau_vector(d: int, s: int) -> FaceCountVector:
    a, m = minimiser_type(d, s)
    f0 = d + 1 + m * (a - m)
    return FaceCountVector.of([f0] + [tau(k, d, s) for k in range(1, d)])


def pyr_prod_vector(a: int, m: int, d: int) -> FaceCountVector:
    return FaceCountVector.of([pyr_prod_count(k, a, m, d) for k in range(d)])


def pyr_sum_vector(a: int, m: int, d: int) -> FaceCountVector:
    return FaceCountVector.of([pyr_sum_count(k, a, m, d) for k in range(d)])
