"""Named polytope families and the face counts predicted for them.

A family string looks like `J:s=3,d=6`, `tmprod:d=5,a=5,m=2`,
`sigma:d=4` or `trunc:d=4,n=2`. Names are case-insensitive.
"""
import enum
import functools
import logging
import re

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from polylb import polylb_formulas as formulas
from polylb.polylb_constructions import (
    direct_sum,
    k_fold_pyramid,
    product,
    simplex,
    truncate_face,
)
from polylb.polylb_errors import FamilySpecError, PolytopeError, format_params
from polylb.polylb_fvector import FaceCountVector
from polylb.polylb_polytope import (
    Face,
    VPolytope,
    enumerate_facets,
    face_lattice,
    is_simple_vertex,
    vertex_degree,
)

logger = logging.getLogger(__name__)


class Variant(enum.Enum):
    SIMPLEX = "simplex"
    PRISM = "prism"
    TRIPLEX = "triplex"
    J = "J"
    A = "A"
    C = "C"
    SIGMA = "sigma"
    TMSUM = "tmsum"
    TMPROD = "tmprod"
    TRUNC = "trunc"


# Parameters each variant takes, in the order they are printed.
PARAMETERS: Dict[Variant, Tuple[str, ...]] = {
    Variant.SIMPLEX: ("d",),
    Variant.PRISM: ("s",),
    Variant.TRIPLEX: ("s", "d"),
    Variant.J: ("s", "d"),
    Variant.A: ("d",),
    Variant.C: ("d",),
    Variant.SIGMA: ("d",),
    Variant.TMSUM: ("d", "a", "m"),
    Variant.TMPROD: ("d", "a", "m"),
    Variant.TRUNC: ("d", "n"),
}

ALIASES = {
    "b": Variant.J,
    "t": Variant.SIMPLEX,
    "m": Variant.TRIPLEX,
    "pentasm": Variant.J,
    "truncation": Variant.TRUNC,
}

_TOKEN = re.compile(r"^\s*([A-Za-z]+)\s*(?::\s*(.*))?$")


@dataclass(frozen=True)
class FamilySpec:
    """A family member; `d` is always the dimension of the built polytope."""

    variant: Variant
    d: int
    s: Optional[int] = None
    a: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self) -> None:
        v, d, s, a, m, n = self.variant, self.d, self.s, self.a, self.m, self.n
        for name in PARAMETERS[v]:
            if getattr(self, name) is None:
                self._fail(f"{v.value} needs parameter {name}")
        if v is Variant.SIMPLEX and d < 1:
            self._fail("simplex needs d >= 1")
        if v is Variant.PRISM and not (s is not None and 1 <= s == d):
            self._fail("prism needs s >= 1 (and d = s)")
        if v is Variant.TRIPLEX and not (s is not None and 1 <= s <= d):
            self._fail("triplex needs 1 <= s <= d")
        if v is Variant.J and not (s is not None and 2 <= s <= d):
            self._fail("J needs 2 <= s <= d")
        if v in (Variant.A, Variant.C) and d < 2:
            self._fail(f"{v.value} needs d >= 2")
        if v is Variant.SIGMA and d < 3:
            self._fail("sigma needs d >= 3")
        if v in (Variant.TMSUM, Variant.TMPROD):
            if a is None or m is None or not (2 <= a <= d and 1 <= m <= a // 2):
                self._fail(f"{v.value} needs 2 <= a <= d and 1 <= m <= floor(a/2)")
        if v is Variant.TRUNC and not (d >= 2 and n is not None and n >= 0):
            self._fail("trunc needs d >= 2 and n >= 0")

    def _fail(self, message: str) -> None:
        raise FamilySpecError(message, {"spec": str(self)})

    @staticmethod
    def prism(s: int) -> "FamilySpec":
        return FamilySpec(Variant.PRISM, d=s, s=s)

    def params(self) -> Dict[str, int]:
        out = {}
        for name in PARAMETERS[self.variant]:
            val = getattr(self, name)
            if val is not None:
                out[name] = val
        return out

    def __str__(self) -> str:
        body = ",".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.variant.value}:{body}"


def _variant(name: str) -> Variant:
    lowered = name.lower()
    if lowered in ALIASES:
        return ALIASES[lowered]
    for v in Variant:
        if v.value.lower() == lowered:
            return v
    raise FamilySpecError("unknown family", {"family": name})


def parse(text: str) -> FamilySpec:
    """Parse a family string such as `J:s=3,d=6`. `B:d=5` means J:s=3,d=5."""
    match = _TOKEN.match(text)
    if not match:
        raise FamilySpecError("malformed family string", {"spec": text})
    name, body = match.group(1), match.group(2) or ""
    variant = _variant(name)
    values: Dict[str, int] = {}
    for item in filter(None, (p.strip() for p in body.split(","))):
        key, sep, val = item.partition("=")
        key = key.strip().lower()
        if not sep or key not in ("d", "s", "a", "m", "n"):
            raise FamilySpecError("malformed parameter", {"spec": text, "item": item})
        if key in values:
            raise FamilySpecError("repeated parameter", {"spec": text, "item": key})
        try:
            values[key] = int(val.strip())
        except ValueError:
            raise FamilySpecError("parameter is not an integer", {"spec": text, "item": item})
    if name.lower() == "b":
        if "s" in values:
            raise FamilySpecError("B fixes s = 3", {"spec": text})
        values["s"] = 3
    allowed = set(PARAMETERS[variant]) | ({"s"} if name.lower() == "b" else set())
    extra = sorted(set(values) - allowed)
    if extra:
        raise FamilySpecError("unexpected parameter", {"spec": text, "item": ",".join(extra)})
    if variant is Variant.PRISM and "s" in values:
        values["d"] = values["s"]
    if "d" not in values:
        raise FamilySpecError(f"{variant.value} needs parameter d", {"spec": text})
    return FamilySpec(variant, **values)


# Builders.


def triplex(s: int, d: int) -> VPolytope:
    """M(s, d-s): (d-s)-fold pyramid over the prism T(s-1) x T(1)."""
    return k_fold_pyramid(product(simplex(s - 1), simplex(1)), d - s)


def sigma(d: int) -> VPolytope:
    """Hull of 0, e1, e1+ek, e2, e2+ek, e1+e2, e1+e2+2ek for 3 <= k <= d."""

    def vec(entries: Dict[int, int]) -> Tuple[int, ...]:
        return tuple(entries.get(i, 0) for i in range(1, d + 1))

    ks = range(3, d + 1)
    pts = [vec({}), vec({1: 1})]
    pts += [vec({1: 1, k: 1}) for k in ks]
    pts.append(vec({2: 1}))
    pts += [vec({2: 1, k: 1}) for k in ks]
    pts.append(vec({1: 1, 2: 1}))
    pts += [vec({1: 1, 2: 1, k: 2}) for k in ks]
    return VPolytope.from_points(pts)


def truncation_base(spec: FamilySpec) -> VPolytope:
    if spec.variant is Variant.J:
        assert spec.s is not None
        return triplex(spec.s, spec.d)
    if spec.variant in (Variant.A, Variant.C):
        return triplex(2, spec.d)
    raise FamilySpecError("not a single-truncation family", {"spec": str(spec)})


def truncation_candidates(spec: FamilySpec) -> List[Face]:
    """Every face the family recipe may truncate, in canonical order."""
    base = truncation_base(spec)
    d = spec.d
    if spec.variant is Variant.J:
        return [frozenset([v]) for v in range(base.n_vertices) if is_simple_vertex(base, v)]
    if spec.variant is Variant.A:
        return [frozenset([v]) for v in range(base.n_vertices) if vertex_degree(base, v) == d + 1]
    return [
        e for e in sorted(face_lattice(base).edges(), key=sorted)
        if all(is_simple_vertex(base, v) for v in e)
    ]


def truncate_candidate(spec: FamilySpec, index: int = 0, fraction: Optional[Fraction] = None) -> VPolytope:
    candidates = truncation_candidates(spec)
    if not candidates:
        target = {
            Variant.J: "simple vertex",
            Variant.A: "vertex of degree d+1",
            Variant.C: "edge with two simple vertices",
        }[spec.variant]
        raise PolytopeError(f"no {target} to truncate", spec.params())
    return truncate_face(truncation_base(spec), candidates[index], fraction)


def truncation_sequence(d: int, n: int, fraction: Optional[Fraction] = None) -> VPolytope:
    P = simplex(d)
    for step in range(n):
        target = next((v for v in range(P.n_vertices) if is_simple_vertex(P, v)), None)
        if target is None:
            raise PolytopeError("no simple vertex left to truncate", {"d": d, "step": step})
        P = truncate_face(P, [target], fraction)
    return P


@functools.lru_cache(maxsize=256)
def build(spec: FamilySpec, fraction: Optional[Fraction] = None) -> VPolytope:
    """Exact realization of a family member.

    `fraction` places truncation thresholds; the combinatorial type does
    not depend on it.
    """
    v = spec.variant
    logger.debug("building %s", spec)
    if v is Variant.SIMPLEX:
        return simplex(spec.d)
    if v in (Variant.PRISM, Variant.TRIPLEX):
        assert spec.s is not None
        return triplex(spec.s, spec.d)
    if v in (Variant.J, Variant.A, Variant.C):
        return truncate_candidate(spec, 0, fraction)
    if v is Variant.SIGMA:
        return sigma(spec.d)
    if v in (Variant.TMSUM, Variant.TMPROD):
        assert spec.a is not None and spec.m is not None
        join = direct_sum if v is Variant.TMSUM else product
        return k_fold_pyramid(join(simplex(spec.m), simplex(spec.a - spec.m)), spec.d - spec.a)
    assert spec.n is not None
    return truncation_sequence(spec.d, spec.n, fraction)


# Predictions.


def expected_fvector(spec: FamilySpec) -> Optional[FaceCountVector]:
    """Face counts from the closed forms, or None where none is known."""
    v, d = spec.variant, spec.d
    if v is Variant.SIMPLEX:
        return formulas.simplex_vector(d)
    if v in (Variant.PRISM, Variant.TRIPLEX):
        assert spec.s is not None
        return formulas.theta_vector(d + spec.s, d)
    if v is Variant.J:
        assert spec.s is not None
        return formulas.eta_vector(2 * d + spec.s - 1, d)
    if v is Variant.A:
        return formulas.eta_vector(2 * d + 2, d) if d >= 3 else None
    if v in (Variant.TMSUM, Variant.TMPROD):
        assert spec.a is not None and spec.m is not None
        if v is Variant.TMSUM:
            return formulas.pyr_sum_vector(spec.a, spec.m, d)
        return formulas.pyr_prod_vector(spec.a, spec.m, d)
    return None


def expected_counts(spec: FamilySpec) -> Tuple[Optional[int], Optional[int]]:
    """(f_0, f_{d-1}) known for the family; None where nothing is claimed."""
    fvec = expected_fvector(spec)
    if fvec is not None:
        return fvec[0], fvec[-1]
    d = spec.d
    if spec.variant is Variant.SIGMA:
        return 3 * d - 2, None
    if spec.variant is Variant.C:
        return (4, 4) if d == 2 else (3 * d - 2, d + 3)
    if spec.variant is Variant.TRUNC:
        assert spec.n is not None
        return d + 1 + spec.n * (d - 1), d + 1 + spec.n
    return None, None


# Facet classes of the (d-a)-fold pyramid over T(m) x T(a-m).


@dataclass(frozen=True)
class FacetClass:
    description: str
    vertex_count: Optional[int]
    multiplicity: int


def facet_census_tmprod(d: int, a: int, m: int) -> List[FacetClass]:
    spec = FamilySpec(Variant.TMPROD, d=d, a=a, m=m)
    f0 = d + 1 + m * (a - m)
    apices = d - a
    census = [
        FacetClass(f"{apices}-fold pyramid over T({m - 1}) x T({a - m})", f0 - (a - m + 1), m + 1),
        FacetClass(f"{apices}-fold pyramid over T({m}) x T({a - m - 1})", f0 - (m + 1), a - m + 1),
        FacetClass("facet missing one apex", f0 - 1 if apices else None, apices),
    ]
    total = sum(c.multiplicity for c in census)
    assert total == d + 2, f"facet classes do not add up to d+2 at {format_params(spec.params())}"
    return census


def census_histogram(census: List[FacetClass]) -> Dict[int, int]:
    """Vertex count -> number of facets."""
    hist: Counter = Counter()
    for c in census:
        if c.multiplicity and c.vertex_count is not None:
            hist[c.vertex_count] += c.multiplicity
    return dict(sorted(hist.items()))


def oracle_facet_histogram(P: VPolytope) -> Dict[int, int]:
    return dict(sorted(Counter(len(f.vertices) for f in enumerate_facets(P)).items()))


def corpus(d_max: int, d_min: int = 2) -> List[FamilySpec]:
    """Every family member with d_min <= d <= d_max, in a fixed order."""
    specs: List[FamilySpec] = []
    for d in range(d_min, d_max + 1):
        specs.append(FamilySpec(Variant.SIMPLEX, d=d))
        specs += [FamilySpec(Variant.TRIPLEX, d=d, s=s) for s in range(1, d + 1)]
        specs += [FamilySpec(Variant.J, d=d, s=s) for s in range(2, d + 1)]
        if d >= 3:
            specs += [FamilySpec(Variant.A, d=d), FamilySpec(Variant.C, d=d), FamilySpec(Variant.SIGMA, d=d)]
        for a in range(2, d + 1):
            for m in range(1, a // 2 + 1):
                specs.append(FamilySpec(Variant.TMSUM, d=d, a=a, m=m))
                specs.append(FamilySpec(Variant.TMPROD, d=d, a=a, m=m))
        specs += [FamilySpec(Variant.TRUNC, d=d, n=n) for n in range(1, 4)]
    return specs
