"""Exact planar primitives: coordinates, points, edges, polygons, x-intervals.

All arithmetic is exact. Coordinates are either Python ints or
fractions.Fraction values; the two interoperate freely, and integer inputs
stay integers so the common all-integer case runs on fast int arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from .errors import (
    DegenerateAllCollinear,
    DuplicateConsecutiveVertex,
    TooFewVertices,
)

Coord = Union[int, Fraction]

_NUMBER_RE = re.compile(r"-?[0-9]+(\.[0-9]+)?\Z")


def coord(value) -> Coord:
    """Build an exact coordinate from an int, Rational, or decimal text.

    Accepted text is an optionally signed integer or finite decimal such as
    "2.50"; the decimal is converted exactly, never through binary floats.
    """
    if isinstance(value, bool):
        raise ValueError("boolean is not a coordinate")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _normalize(value)
    if isinstance(value, Rational):
        return _normalize(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        if not _NUMBER_RE.match(value):
            raise ValueError(f"not an integer or finite decimal: {value!r}")
        return _normalize(Fraction(value))
    raise ValueError(f"unsupported coordinate type: {type(value).__name__}")


def _normalize(value: Fraction) -> Coord:
    return value.numerator if value.denominator == 1 else value


class Point(NamedTuple):
    x: Coord
    y: Coord


class Edge(NamedTuple):
    a: Point
    b: Point

    @property
    def is_vertical(self) -> bool:
        return self.a.x == self.b.x

    @property
    def left(self) -> Point:
        return self.a if self.a.x <= self.b.x else self.b

    @property
    def right(self) -> Point:
        return self.b if self.a.x <= self.b.x else self.a

    @property
    def min_end(self) -> Point:
        """Endpoint with smaller x (ties broken by smaller y)."""
        return min(self.a, self.b)

    @property
    def max_end(self) -> Point:
        return max(self.a, self.b)

    def reversed(self) -> "Edge":
        return Edge(self.b, self.a)


def cross(o: Point, a: Point, b: Point) -> Coord:
    """Signed cross product of (a - o) and (b - o); >0 for a left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


HALF_OPEN = "half_open"
OPEN = "open"
CLOSED = "closed"


@dataclass(frozen=True)
class XInterval:
    """Interval between the extreme x-coordinates of a point set."""

    lo: Coord
    hi: Coord
    kind: str = HALF_OPEN

    @property
    def is_empty(self) -> bool:
        if self.kind == CLOSED:
            return self.lo > self.hi
        return self.lo >= self.hi

    def __contains__(self, xi) -> bool:
        if self.kind == CLOSED:
            return self.lo <= xi <= self.hi
        if self.kind == OPEN:
            return self.lo < xi < self.hi
        return self.lo <= xi < self.hi


def x_interval(subject, kind: str = HALF_OPEN) -> XInterval:
    """X-extent interval of an edge, polygon, segment, or point iterable."""
    if kind not in (HALF_OPEN, OPEN, CLOSED):
        raise ValueError(f"unknown interval kind: {kind!r}")
    if isinstance(subject, Edge):
        xs = (subject.a.x, subject.b.x)
    elif isinstance(subject, Polygon):
        return XInterval(subject.x_min, subject.x_max, kind)
    elif hasattr(subject, "min_v") and hasattr(subject, "max_v"):
        return XInterval(subject.min_v.x, subject.max_v.x, kind)
    else:
        xs = [p.x for p in subject]
        if not xs:
            raise ValueError("empty point set has no x-interval")
    return XInterval(min(xs), max(xs), kind)


def shoelace_area(vertices: Sequence[Point]) -> Coord:
    """Unsigned area of the polygon with the given vertex cycle."""
    total = 0
    n = len(vertices)
    for i in range(n):
        p = vertices[i]
        q = vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return _div2(abs(total))


def signed_area2(vertices: Sequence[Point]) -> Coord:
    """Twice the signed area; >0 for counterclockwise vertex order."""
    total = 0
    n = len(vertices)
    for i in range(n):
        p = vertices[i]
        q = vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def _div2(value: Coord) -> Coord:
    if isinstance(value, int):
        if value % 2 == 0:
            return value // 2
        return Fraction(value, 2)
    return _normalize(value / 2)


@dataclass(frozen=True)
class Polygon:
    """Simple polygon given as a vertex cycle; build via make_polygon."""

    id: str
    vertices: Tuple[Point, ...]
    edges: Tuple[Edge, ...]
    area: Coord
    x_min: Coord
    x_max: Coord

    @property
    def x_extent(self) -> XInterval:
        return XInterval(self.x_min, self.x_max, HALF_OPEN)


def make_polygon(poly_id: str, vertices: Iterable) -> Polygon:
    """Validate a vertex cycle and build an immutable Polygon.

    Raises TooFewVertices, DuplicateConsecutiveVertex, or
    DegenerateAllCollinear for inputs that cannot bound an interior.
    Collinear consecutive vertices are permitted.
    """
    pts = []
    for v in vertices:
        if isinstance(v, Point):
            pts.append(Point(coord(v.x), coord(v.y)))
        else:
            x, y = v
            pts.append(Point(coord(x), coord(y)))
    if len(pts) < 3:
        raise TooFewVertices(f"polygon {poly_id!r}: {len(pts)} vertices")
    n = len(pts)
    for i in range(n):
        if pts[i] == pts[(i + 1) % n]:
            raise DuplicateConsecutiveVertex(
                f"polygon {poly_id!r}: vertex {i} repeats at {pts[i]}"
            )
    if all(cross(pts[0], pts[1], p) == 0 for p in pts[2:]):
        raise DegenerateAllCollinear(f"polygon {poly_id!r}: zero area")
    edges = tuple(Edge(pts[i], pts[(i + 1) % n]) for i in range(n))
    xs = [p.x for p in pts]
    return Polygon(
        id=poly_id,
        vertices=tuple(pts),
        edges=edges,
        area=shoelace_area(pts),
        x_min=min(xs),
        x_max=max(xs),
    )
