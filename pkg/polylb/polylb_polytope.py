"""V-polytopes over the rationals and their brute-force combinatorics.

Facets come from a scan of all d-subsets of the vertices; faces are the
closed vertex sets under "vertices lying on every facet that contains S".
Vertex sets are handled internally as int bitmasks.
"""
import functools
import itertools
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import numpy as np

from polylb.polylb_errors import PolytopeError
from polylb.polylb_fvector import FaceCountVector
from polylb.rational_linalg import (
    Point,
    affine_rank,
    as_point,
    dot,
    integer_hyperplane,
    primitive,
    to_integer_points,
)

logger = logging.getLogger(__name__)

Face = FrozenSet[int]


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _members(mask: int) -> Face:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class VPolytope:
    """A full-dimensional polytope given by its vertices."""

    ambient_dim: int
    vertices: Tuple[Point, ...]

    def __post_init__(self) -> None:
        params = {"ambient_dim": self.ambient_dim, "n_vertices": len(self.vertices)}
        if not self.vertices:
            raise PolytopeError("a polytope needs at least one vertex", params)
        if any(len(v) != self.ambient_dim for v in self.vertices):
            raise PolytopeError("vertex length differs from the ambient dimension", params)
        if len(set(self.vertices)) != len(self.vertices):
            raise PolytopeError("repeated vertex", params)
        if affine_rank(self.vertices) != self.ambient_dim:
            raise PolytopeError("vertices are not full-dimensional", params)

    @staticmethod
    def from_points(points: Sequence[Sequence[object]]) -> "VPolytope":
        coords = tuple(as_point(p) for p in points)
        dim = len(coords[0]) if coords else 0
        return VPolytope(dim, coords)

    @property
    def dim(self) -> int:
        return self.ambient_dim

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return f"VPolytope(dim={self.ambient_dim}, vertices={len(self.vertices)})"


@dataclass(frozen=True)
class Hyperplane:
    """The halfspace normal . x <= offset, in coprime integers."""

    normal: Tuple[int, ...]
    offset: int

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return dot([Fraction(n) for n in self.normal], x)

    def canonical_key(self) -> Tuple[int, ...]:
        """Sign-normalised (normal, offset): first nonzero entry positive."""
        entries = self.normal + (self.offset,)
        lead = next(e for e in entries if e != 0)
        return entries if lead > 0 else tuple(-e for e in entries)


@dataclass(frozen=True)
class Facet:
    hyperplane: Hyperplane
    vertices: Face


class IncidenceStructure:
    """Vertex-facet incidences as a read-only boolean matrix."""

    def __init__(self, dim: int, incidence: np.ndarray) -> None:
        self.dim = dim
        self.incidence = np.array(incidence, dtype=bool)
        self.incidence.setflags(write=False)
        self.n_vertices, self.n_facets = self.incidence.shape
        params = {"dim": dim, "n_vertices": self.n_vertices, "n_facets": self.n_facets}
        if (self.incidence.sum(axis=0) < dim).any():
            raise PolytopeError("a facet has fewer than d vertices", params)
        if (self.incidence.sum(axis=1) < dim).any():
            raise PolytopeError("a vertex lies on fewer than d facets", params)
        if np.unique(self.incidence, axis=0).shape[0] != self.n_vertices:
            raise PolytopeError("two vertices have the same facets", params)
        if np.unique(self.incidence, axis=1).shape[1] != self.n_facets:
            raise PolytopeError("two facets have the same vertices", params)

    @staticmethod
    def from_facets(dim: int, n_vertices: int, facets: Sequence[Facet]) -> "IncidenceStructure":
        matrix = np.zeros((n_vertices, len(facets)), dtype=bool)
        for j, facet in enumerate(facets):
            matrix[sorted(facet.vertices), j] = True
        return IncidenceStructure(dim, matrix)

    def facets_of_vertex(self, v: int) -> Tuple[int, ...]:
        return tuple(int(j) for j in np.flatnonzero(self.incidence[v]))

    def vertices_of_facet(self, j: int) -> Tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.incidence[:, j]))

    def row_bits(self) -> List[str]:
        return ["".join("1" if b else "0" for b in row) for row in self.incidence]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.incidence, other.incidence)

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.row_bits())))

    def __repr__(self) -> str:
        return f"IncidenceStructure(dim={self.dim}, {self.n_vertices}x{self.n_facets})"


@dataclass(frozen=True)
class FaceLattice:
    """Proper nonempty faces graded by dimension 0 .. d-1.

    Grade d-1 lists the facets in facet-enumeration order; every other
    grade is sorted by vertex indices.
    """

    dim: int
    n_vertices: int
    faces: Tuple[Tuple[Face, ...], ...]
    f_vector: FaceCountVector
    _masks: FrozenSet[int] = field(repr=False, compare=False)

    def faces_of_dim(self, k: int) -> Tuple[Face, ...]:
        if not 0 <= k < self.dim:
            raise PolytopeError("no proper faces of that dimension", {"k": k, "d": self.dim})
        return self.faces[k]

    def edges(self) -> Tuple[Face, ...]:
        return self.faces[1] if self.dim >= 2 else ()

    def facets(self) -> Tuple[Face, ...]:
        return self.faces[self.dim - 1]

    def facets_containing(self, v: int) -> Tuple[int, ...]:
        return tuple(j for j, f in enumerate(self.facets()) if v in f)

    def is_face(self, vertices: Iterable[int]) -> bool:
        return _mask(vertices) in self._masks

    def dim_of(self, face: Iterable[int]) -> int:
        target = frozenset(face)
        for k, grade in enumerate(self.faces):
            if target in grade:
                return k
        raise PolytopeError("not a face", {"face": sorted(target)})

    def between(self, lower: Iterable[int], upper: Iterable[int]) -> List[Face]:
        """Faces strictly between two faces."""
        lo, hi = _mask(lower), _mask(upper)
        return sorted(
            (_members(m) for m in self._masks if m != lo and m != hi and m & lo == lo and m & hi == m),
            key=sorted,
        )

    def __len__(self) -> int:
        return len(self._masks)


def _check_index(P: VPolytope, v: int) -> None:
    if not 0 <= v < P.n_vertices:
        raise PolytopeError("vertex index out of range", {"v": v, "n_vertices": P.n_vertices})


def _scan(P: VPolytope) -> Tuple[List[Hyperplane], List[int]]:
    d, verts = P.ambient_dim, P.vertices
    n = len(verts)
    if d < 1:
        raise PolytopeError("facets need dimension >= 1", {"d": d})
    if n < d + 1:
        raise PolytopeError("fewer than d+1 vertices", {"d": d, "n_vertices": n})
    ints, scale = to_integer_points(verts)
    planes: List[Hyperplane] = []
    masks: List[int] = []
    seen: Set[Tuple[int, ...]] = set()
    scanned = 0
    for combo in itertools.combinations(range(n), d):
        cmask = _mask(combo)
        if any(cmask & m == cmask for m in masks):
            continue
        scanned += 1
        plane = integer_hyperplane([ints[i] for i in combo])
        if plane is None:
            continue
        normal, offset = plane
        values = [sum(a * b for a, b in zip(normal, p)) for p in ints]
        above = any(x > offset for x in values)
        below = any(x < offset for x in values)
        if above and below:
            continue
        on = _mask(i for i, x in enumerate(values) if x == offset)
        sign = -1 if above else 1
        # normal . (scale x) <= offset, back in the original coordinates
        coeffs = primitive([Fraction(sign * a * scale) for a in normal] + [Fraction(sign * offset)])
        facet = Hyperplane(coeffs[:-1], coeffs[-1])
        if facet.canonical_key() in seen:
            continue
        seen.add(facet.canonical_key())
        planes.append(facet)
        masks.append(on)
    logger.debug("facet scan of %s: %d subsets tested, %d facets", P, scanned, len(masks))
    return planes, masks


def _closure(mask: int, facet_masks: Sequence[int], full: int) -> int:
    out = full
    for m in facet_masks:
        if m & mask == mask:
            out &= m
    return out


@functools.lru_cache(maxsize=512)
def enumerate_facets(P: VPolytope) -> Tuple[Facet, ...]:
    """All facets of P, each with its incident vertex set.

    Raises PolytopeError when a listed vertex is not extreme.
    """
    planes, masks = _scan(P)
    full = (1 << P.n_vertices) - 1
    for v in range(P.n_vertices):
        if _closure(1 << v, masks, full) != 1 << v:
            raise PolytopeError("redundant vertex: inside the hull of the others", {"vertex": v})
    facets = [Facet(h, _members(m)) for h, m in zip(planes, masks)]
    return tuple(sorted(facets, key=lambda f: sorted(f.vertices)))


def incidence_structure(P: VPolytope) -> IncidenceStructure:
    return IncidenceStructure.from_facets(P.ambient_dim, P.n_vertices, enumerate_facets(P))


@functools.lru_cache(maxsize=512)
def face_lattice(P: VPolytope) -> FaceLattice:
    d, n = P.ambient_dim, P.n_vertices
    facets = enumerate_facets(P)
    facet_masks = [_mask(f.vertices) for f in facets]
    full = (1 << n) - 1

    seen: Set[int] = set()
    frontier = [1 << v for v in range(n)]
    seen.update(frontier)
    while frontier:
        nxt: List[int] = []
        for g in frontier:
            for u in range(n):
                if g >> u & 1:
                    continue
                h = _closure(g | 1 << u, facet_masks, full)
                if h != full and h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt

    graded: Dict[int, List[int]] = {k: [] for k in range(d)}
    for m in seen:
        k = affine_rank([P.vertices[i] for i in _members(m)])
        graded[k].append(m)

    if sorted(graded[d - 1]) != sorted(facet_masks):
        raise PolytopeError("top grade differs from the facet scan", {"d": d})
    if d >= 2:
        for r in graded[d - 2]:
            if sum(1 for m in facet_masks if m & r == r) != 2:
                raise PolytopeError("a ridge does not lie in exactly two facets", {"d": d})

    faces: List[Tuple[Face, ...]] = []
    for k in range(d - 1):
        faces.append(tuple(sorted((_members(m) for m in graded[k]), key=sorted)))
    faces.append(tuple(f.vertices for f in facets))
    fvec = FaceCountVector.of([len(g) for g in faces], realized=True)
    logger.debug("face lattice of %s: f = %s", P, fvec)
    return FaceLattice(d, n, tuple(faces), fvec, frozenset(seen))


def f_vector(P: VPolytope) -> FaceCountVector:
    return face_lattice(P).f_vector


def facet_count_at(P: VPolytope, v: int) -> int:
    _check_index(P, v)
    return sum(1 for f in enumerate_facets(P) if v in f.vertices)


def vertex_degree(P: VPolytope, v: int) -> int:
    """Number of edges at v."""
    _check_index(P, v)
    return sum(1 for e in face_lattice(P).edges() if v in e)


def is_simple_vertex(P: VPolytope, v: int) -> bool:
    simple = facet_count_at(P, v) == P.ambient_dim
    assert simple == (vertex_degree(P, v) == P.ambient_dim), (
        f"degree and facet count disagree on simplicity at v={v} of {P}"
    )
    return simple


def is_simple(P: VPolytope) -> bool:
    return all(is_simple_vertex(P, v) for v in range(P.n_vertices))


def vertex_figure_counts(P: VPolytope, v: int) -> FaceCountVector:
    """f-vector of the vertex figure at v: entry k-1 counts k-faces through v."""
    _check_index(P, v)
    if P.ambient_dim < 2:
        raise PolytopeError("vertex figures need d >= 2", {"d": P.ambient_dim})
    lattice = face_lattice(P)
    counts = [
        sum(1 for f in lattice.faces_of_dim(k) if v in f)
        for k in range(1, P.ambient_dim)
    ]
    return FaceCountVector.of(counts, realized=True)


def facet_polytope(P: VPolytope, j: int) -> VPolytope:
    """Facet j as a (d-1)-polytope, projected along a nonzero normal coordinate."""
    facets = enumerate_facets(P)
    if not 0 <= j < len(facets):
        raise PolytopeError("facet index out of range", {"j": j, "n_facets": len(facets)})
    if P.ambient_dim < 2:
        raise PolytopeError("facets of a segment are points", {"d": P.ambient_dim})
    facet = facets[j]
    drop = next(i for i, x in enumerate(facet.hyperplane.normal) if x != 0)
    pts = [
        P.vertices[i][:drop] + P.vertices[i][drop + 1:]
        for i in sorted(facet.vertices)
    ]
    return VPolytope(P.ambient_dim - 1, tuple(pts))
