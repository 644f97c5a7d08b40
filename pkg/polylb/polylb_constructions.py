"""Polytope constructions: simplices, pyramids, products, sums, polars, truncations.

Coordinates are small integers where possible; translations for the
direct sum and the polar use the vertex centroid, which is interior.
"""
import logging

from fractions import Fraction
from typing import Iterable, List, Optional

from polylb.polylb_errors import DomainError, PolytopeError
from polylb.polylb_polytope import VPolytope, enumerate_facets, face_lattice
from polylb.rational_linalg import Point, centroid, dot, segment_crossing, sub

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def simplex(d: int) -> VPolytope:
    """T(d): the origin and the standard basis vectors of R^d."""
    if d < 0:
        raise DomainError("simplex dimension must be nonnegative", {"d": d})
    origin = tuple(ZERO for _ in range(d))
    basis = [tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d)]
    return VPolytope(d, (origin,) + tuple(basis))


def pyramid(P: VPolytope) -> VPolytope:
    """Pyramid over P with apex e_{d+1}."""
    base = tuple(v + (ZERO,) for v in P.vertices)
    apex = tuple(ZERO for _ in range(P.ambient_dim)) + (ONE,)
    return VPolytope(P.ambient_dim + 1, base + (apex,))


def k_fold_pyramid(P: VPolytope, t: int) -> VPolytope:
    if t < 0:
        raise DomainError("pyramid count must be nonnegative", {"t": t})
    for _ in range(t):
        P = pyramid(P)
    return P


def product(P: VPolytope, Q: VPolytope) -> VPolytope:
    verts = tuple(v + w for v in P.vertices for w in Q.vertices)
    return VPolytope(P.ambient_dim + Q.ambient_dim, verts)


def direct_sum(P: VPolytope, Q: VPolytope) -> VPolytope:
    if P.ambient_dim < 1 or Q.ambient_dim < 1:
        raise PolytopeError(
            "direct sum needs positive-dimensional summands",
            {"dim_P": P.ambient_dim, "dim_Q": Q.ambient_dim},
        )
    cp, cq = centroid(P.vertices), centroid(Q.vertices)
    pad_p = tuple(ZERO for _ in range(Q.ambient_dim))
    pad_q = tuple(ZERO for _ in range(P.ambient_dim))
    verts = tuple(sub(v, cp) + pad_p for v in P.vertices)
    verts += tuple(pad_q + sub(w, cq) for w in Q.vertices)
    return VPolytope(P.ambient_dim + Q.ambient_dim, verts)


def polar_dual(P: VPolytope) -> VPolytope:
    """Polar of P about its vertex centroid; vertex j of the result is facet j of P."""
    c = centroid(P.vertices)
    verts: List[Point] = []
    for facet in enumerate_facets(P):
        normal = tuple(Fraction(x) for x in facet.hyperplane.normal)
        rhs = facet.hyperplane.offset - dot(normal, c)
        if rhs <= 0:
            raise PolytopeError("centroid is not interior", {"facet": sorted(facet.vertices)})
        verts.append(tuple(x / rhs for x in normal))
    return VPolytope(P.ambient_dim, tuple(verts))


def truncate_face(
    P: VPolytope, F: Iterable[int], fraction: Optional[Fraction] = None
) -> VPolytope:
    """Cut the face F off P.

    The cutting functional is the sum of the normals of the facets through
    F; the threshold sits `fraction` of the way from the highest vertex
    outside F up to F itself (default one half). Kept vertices come first
    in their original order, then one new vertex per edge leaving F, in
    sorted edge order.
    """
    face = frozenset(F)
    frac = Fraction(1, 2) if fraction is None else Fraction(fraction)
    params = {"face": sorted(face), "fraction": str(frac)}
    if not 0 < frac < 1:
        raise DomainError("threshold fraction must lie strictly between 0 and 1", params)
    if len(face) == P.n_vertices:
        raise PolytopeError("cannot truncate the whole polytope", params)
    lattice = face_lattice(P)
    if not face or not lattice.is_face(face):
        raise PolytopeError("not a face of the polytope", params)

    c = [ZERO] * P.ambient_dim
    for facet in enumerate_facets(P):
        if face <= facet.vertices:
            c = [x + y for x, y in zip(c, facet.hyperplane.normal)]
    hi = dot(c, P.vertices[min(face)])
    lo = max(dot(c, v) for i, v in enumerate(P.vertices) if i not in face)
    assert lo < hi, f"summed normal does not isolate the face {sorted(face)}"
    t = lo + frac * (hi - lo)
    logger.debug("truncating %s at %s: threshold %s in (%s, %s)", P, sorted(face), t, lo, hi)

    kept = tuple(v for i, v in enumerate(P.vertices) if i not in face)
    new: List[Point] = []
    for edge in sorted(lattice.edges(), key=sorted):
        inside = edge & face
        if len(inside) == 1:
            (a,) = inside
            (b,) = edge - face
            new.append(segment_crossing(P.vertices[b], P.vertices[a], c, t))
    return VPolytope(P.ambient_dim, kept + tuple(new))
