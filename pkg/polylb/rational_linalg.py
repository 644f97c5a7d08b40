"""Exact linear algebra over the rationals.

Rational points are scaled to a common integer lattice before
elimination; the elimination itself is fraction-free Gauss-Jordan with
rows kept primitive, which is much faster than Fraction arithmetic.
"""
import math

from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from polylb.polylb_errors import PolytopeError

Point = Tuple[Fraction, ...]
IntPoint = Tuple[int, ...]


def as_point(coords: Sequence[object]) -> Point:
    """Coerce ints, strings like '3/2', or Fractions to an exact point."""
    return tuple(Fraction(c) for c in coords)  # type: ignore


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*points))


def _lcm(values: Sequence[int]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def to_integer_points(points: Sequence[Point]) -> Tuple[List[IntPoint], int]:
    """Scale points by the lcm of their denominators."""
    scale = _lcm([x.denominator for p in points for x in p])
    return [tuple(int(x * scale) for x in p) for p in points], scale


def _primitive_row(row: List[int]) -> List[int]:
    g = reduce(math.gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def integer_echelon(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free reduced echelon form; returns the nonzero rows and pivot columns.

    Each pivot column is zero outside its pivot row.
    """
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        for i in range(len(m)):
            other = m[i][col]
            if i != r and other != 0:
                m[i] = _primitive_row([lead * x - other * y for x, y in zip(m[i], m[r])])
        pivots.append(col)
        r += 1
    return m[:r], pivots


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull."""
    if not points:
        raise PolytopeError("affine rank of an empty set is undefined")
    ints, _ = to_integer_points(points)
    base = ints[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in ints[1:]]
    return len(integer_echelon(diffs, len(base))[1])


def primitive(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers (same direction)."""
    lcm = _lcm([Fraction(x).denominator for x in vec])
    ints = [int(Fraction(x) * lcm) for x in vec]
    g = reduce(math.gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise PolytopeError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def integer_hyperplane(points: Sequence[IntPoint]) -> Optional[Tuple[IntPoint, int]]:
    """Primitive (normal, offset) of the hyperplane through integer points.

    Returns None unless the points span exactly a hyperplane.
    """
    base = points[0]
    dim = len(base)
    diffs = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    reduced, pivots = integer_echelon(diffs, dim)
    if len(pivots) != dim - 1:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    scale = _lcm([row[p] for row, p in zip(reduced, pivots)])
    normal = [0] * dim
    normal[free] = scale
    for row, p in zip(reduced, pivots):
        normal[p] = -row[free] * scale // row[p]
    g = reduce(math.gcd, (abs(x) for x in normal), 0)
    normal = [x // g for x in normal]
    return tuple(normal), sum(x * y for x, y in zip(normal, base))


def segment_crossing(p: Point, q: Point, c: Sequence[Fraction], t: Fraction) -> Point:
    """The point of segment pq on the hyperplane c.x = t."""
    cp = dot(c, p)
    denom = dot(c, q) - cp
    if denom == 0:
        raise PolytopeError("segment is parallel to the cutting hyperplane")
    lam = (t - cp) / denom
    return tuple(x + lam * (y - x) for x, y in zip(p, q))
