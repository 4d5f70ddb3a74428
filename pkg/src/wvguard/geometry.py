"""Exact rational planar primitives and polygon representations.

All coordinates are ``fractions.Fraction`` values, so every predicate in the
package is decided exactly; there is no floating point anywhere in the data
plane. Polygons store their outer cycle counterclockwise (positive signed
area) and holes clockwise.

Orientation conventions used throughout the package:

* The boundary stored counterclockwise means that walking the vertex list in
  index order keeps the interior on the left.
* "Clockwise" traversal (the paper-style ``bd_c`` chain) therefore walks the
  vertex list in *decreasing* index order.
* An edge ``(u, v)`` in the weak-visibility sense is the stored edge
  ``(vertices[i], vertices[i+1])``; walking clockwise from ``v`` the next
  vertex is ``u``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

Scalar = Fraction

CCW = 1
CW = -1
COLLINEAR = 0

INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


class GeometryError(ValueError):
    pass


def scalar(value: Union[int, str, Fraction]) -> Fraction:
    """Parse a rational from an int, a Fraction, or a "num/den" string.

    Decimal notation is rejected so files round-trip bit exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if "." in s or "e" in s or "E" in s:
            raise GeometryError(f"decimal notation not allowed: {value!r}")
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    raise GeometryError(f"cannot parse scalar from {value!r}")


def scalar_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"P({scalar_str(self.x)}, {scalar_str(self.y)})"


def pt(x, y) -> Point:
    return Point(scalar(x), scalar(y))


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product of (q - p, r - p): CCW, CW or COLLINEAR."""
    px, py = p
    qx, qy = q
    rx, ry = r
    # Integer fast path: generator coordinates are integers, so most
    # predicates never touch Fraction arithmetic.
    if (
        px.denominator == 1
        and py.denominator == 1
        and qx.denominator == 1
        and qy.denominator == 1
        and rx.denominator == 1
        and ry.denominator == 1
    ):
        v = (qx.numerator - px.numerator) * (ry.numerator - py.numerator) - (
            qy.numerator - py.numerator
        ) * (rx.numerator - px.numerator)
    else:
        v = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    if v > 0:
        return CCW
    if v < 0:
        return CW
    return COLLINEAR


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def dist2(a: Point, b: Point) -> Fraction:
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient(a, b, p) != COLLINEAR:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd share exactly one interior point."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Intersection of closed segments ab and cd.

    Returns None, ("point", p) or ("overlap", p, q) with p, q the overlap
    endpoints. Exact in all degenerate configurations.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 == 0 and o2 == 0:
        # collinear: project on the dominant axis
        if a.x != b.x:
            key = lambda p: p.x
        else:
            key = lambda p: p.y
        lo1, hi1 = sorted((a, b), key=key)
        lo2, hi2 = sorted((c, d), key=key)
        lo = max(key(lo1), key(lo2))
        hi = min(key(hi1), key(hi2))
        if lo > hi:
            return None
        p = a if key(a) == lo else (b if key(b) == lo else (c if key(c) == lo else d))
        q = a if key(a) == hi else (b if key(b) == hi else (c if key(c) == hi else d))
        if lo == hi:
            return ("point", p)
        return ("overlap", p, q)
    if o1 * o2 <= 0 and o3 * o4 <= 0:
        denom = cross(a, b, c) - cross(a, b, d)
        if denom == 0:
            # one segment touches the other's line at an endpoint
            for p in (c, d):
                if on_segment(a, b, p):
                    return ("point", p)
            for p in (a, b):
                if on_segment(c, d, p):
                    return ("point", p)
            return None
        # parameter of the crossing along cd: solve cross(a,b, c + t*(d-c)) = 0
        t = cross(a, b, c) / denom
        p = Point(c.x + t * (d.x - c.x), c.y + t * (d.y - c.y))
        if on_segment(a, b, p) and on_segment(c, d, p):
            return ("point", p)
        return None
    return None


class SimplePolygon:
    """A simple polygon stored as a counterclockwise vertex cycle.

    Consecutive collinear vertices are permitted (the hardness gadgets place
    vertices on shared lines); duplicate consecutive vertices are not.
    """

    __slots__ = ("pts",)

    def __init__(self, pts: Sequence[Point]):
        self.pts = tuple(pts)

    @property
    def n(self) -> int:
        return len(self.pts)

    def __len__(self) -> int:
        return len(self.pts)

    def vertex(self, i: int) -> Point:
        return self.pts[i % len(self.pts)]

    def edge(self, i: int):
        n = len(self.pts)
        return self.pts[i % n], self.pts[(i + 1) % n]

    def edges(self):
        n = len(self.pts)
        for i in range(n):
            yield i, self.pts[i], self.pts[(i + 1) % n]

    def next_ccw(self, i: int) -> int:
        return (i + 1) % len(self.pts)

    def next_cw(self, i: int) -> int:
        return (i - 1) % len(self.pts)

    def signed_area2(self) -> Fraction:
        s = Fraction(0)
        n = len(self.pts)
        for i in range(n):
            a = self.pts[i]
            b = self.pts[(i + 1) % n]
            s += a.x * b.y - b.x * a.y
        return s

    def area(self) -> Fraction:
        return self.signed_area2() / 2

    def is_ccw(self) -> bool:
        return self.signed_area2() > 0

    def is_reflex(self, i: int) -> bool:
        n = len(self.pts)
        return orient(self.pts[(i - 1) % n], self.pts[i], self.pts[(i + 1) % n]) == CW

    def is_orthogonal(self) -> bool:
        return all(a.x == b.x or a.y == b.y for _, a, b in self.edges())

    def validate(self) -> list:
        """Exact invariant checks; returns a list of violation strings."""
        out = []
        n = len(self.pts)
        if n < 3:
            return ["fewer than 3 vertices"]
        for i in range(n):
            if self.pts[i] == self.pts[(i + 1) % n]:
                out.append(f"duplicate consecutive vertex at index {i}")
        if self.signed_area2() <= 0:
            out.append("vertices not in counterclockwise order (signed area <= 0)")
        for i in range(n):
            a, b = self.edge(i)
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                c, d = self.edge(j)
                if segment_intersection(a, b, c, d) is not None:
                    out.append(f"edges {i} and {j} intersect")
        return out

    def contains(self, p: Point) -> str:
        """Exact point classification against this single cycle."""
        n = len(self.pts)
        for i in range(n):
            a, b = self.edge(i)
            if on_segment(a, b, p):
                return BOUNDARY
        inside = False
        for i in range(n):
            a, b = self.edge(i)
            if (a.y > p.y) != (b.y > p.y):
                xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
                if xint > p.x:
                    inside = not inside
        return INTERIOR if inside else EXTERIOR

    def __repr__(self) -> str:  # pragma: no cover
        return f"SimplePolygon({len(self.pts)} vertices)"


class BoundaryPoint(NamedTuple):
    """A point on the boundary: stored edge index plus parameter t in [0, 1).

    A polygon vertex i is the canonical boundary point (edge=i, t=0). Boundary
    points on hole cycles carry the cycle id (0 is the outer boundary).
    """

    cycle: int
    edge: int
    t: Fraction

    def is_vertex(self) -> bool:
        return self.t == 0

    @property
    def vertex(self) -> Optional[int]:
        return self.edge if self.t == 0 else None


def bp_vertex(i: int, cycle: int = 0) -> BoundaryPoint:
    return BoundaryPoint(cycle, i, Fraction(0))


def bp_on_edge(poly: "SimplePolygon", edge: int, p: Point, cycle: int = 0) -> BoundaryPoint:
    a, b = poly.edge(edge)
    if not on_segment(a, b, p):
        raise GeometryError("point not on the named edge")
    if b.x != a.x:
        t = (p.x - a.x) / (b.x - a.x)
    elif b.y != a.y:
        t = (p.y - a.y) / (b.y - a.y)
    else:  # pragma: no cover - degenerate edge rejected by validate
        raise GeometryError("degenerate edge")
    if t == 1:
        return BoundaryPoint(cycle, (edge + 1) % poly.n, Fraction(0))
    return BoundaryPoint(cycle, edge % poly.n, t)


def bp_point(poly: "SimplePolygon", bp: BoundaryPoint) -> Point:
    a, b = poly.edge(bp.edge)
    if bp.t == 0:
        return a
    return Point(a.x + bp.t * (b.x - a.x), a.y + bp.t * (b.y - a.y))


def bp_position(bp: BoundaryPoint) -> Fraction:
    """Position along the stored (counterclockwise) cycle, in [0, n)."""
    return bp.edge + bp.t


class PolygonWithHoles:
    __slots__ = ("outer", "holes")

    def __init__(self, outer: SimplePolygon, holes: Sequence[SimplePolygon] = ()):
        self.outer = outer
        self.holes = tuple(holes)

    def cycles(self):
        yield 0, self.outer
        for k, h in enumerate(self.holes):
            yield k + 1, h

    def cycle(self, cid: int) -> SimplePolygon:
        return self.outer if cid == 0 else self.holes[cid - 1]

    def all_edges(self):
        """Yields (cycle id, edge index, a, b) over every boundary cycle."""
        for cid, cyc in self.cycles():
            for i, a, b in cyc.edges():
                yield cid, i, a, b

    def total_vertices(self) -> int:
        return self.outer.n + sum(h.n for h in self.holes)

    def area(self) -> Fraction:
        a = self.outer.area()
        for h in self.holes:
            a -= abs(h.area())
        return a

    def validate(self) -> list:
        out = list(self.outer.validate())
        for k, h in enumerate(self.holes):
            n = len(h.pts)
            if n < 3:
                out.append(f"hole {k}: fewer than 3 vertices")
                continue
            if h.signed_area2() >= 0:
                out.append(f"hole {k}: not stored clockwise")
            for i in range(n):
                if h.pts[i] == h.pts[(i + 1) % n]:
                    out.append(f"hole {k}: duplicate consecutive vertex at {i}")
            for p in h.pts:
                if self.outer.contains(p) != INTERIOR:
                    out.append(f"hole {k}: vertex not strictly inside the outer cycle")
                    break
        # pairwise hole disjointness and self-intersections, exact but quadratic
        cycles = [c for _, c in self.cycles()]
        for ci in range(len(cycles)):
            for cj in range(ci + 1, len(cycles)):
                if ci == 0:
                    continue  # holes-inside-outer handled above
                for i, a, b in cycles[ci].edges():
                    for j, c, d in cycles[cj].edges():
                        if segment_intersection(a, b, c, d) is not None:
                            out.append(f"cycles {ci} and {cj} intersect")
                            break
                    else:
                        continue
                    break
        return out

    def point_location(self, p: Point) -> str:
        for cid, cyc in self.cycles():
            where = cyc.contains(p)
            if where == BOUNDARY:
                return BOUNDARY
            if cid == 0 and where == EXTERIOR:
                return EXTERIOR
            if cid > 0 and where == INTERIOR:
                return EXTERIOR  # strictly inside a hole
        return INTERIOR

    def __repr__(self) -> str:  # pragma: no cover
        return f"PolygonWithHoles(outer={self.outer.n}, holes={len(self.holes)})"


def as_polygon_with_holes(poly) -> PolygonWithHoles:
    if isinstance(poly, PolygonWithHoles):
        return poly
    return PolygonWithHoles(poly)


def point_location(poly, p: Point) -> str:
    return as_polygon_with_holes(poly).point_location(p)


def area(poly) -> Fraction:
    if isinstance(poly, PolygonWithHoles):
        return poly.area()
    return poly.area()


def validate(poly) -> list:
    return poly.validate()


def is_orthogonal(poly: SimplePolygon) -> bool:
    return poly.is_orthogonal()


def cw_positions(poly: SimplePolygon, start: int) -> list:
    """Vertex indices in clockwise order beginning at vertex ``start``."""
    n = poly.n
    return [(start - k) % n for k in range(n)]


def cw_rank(poly: SimplePolygon, start: int, i: int) -> int:
    """Number of clockwise steps from ``start`` to vertex ``i``."""
    return (start - i) % poly.n


def boundary_clockwise(poly: SimplePolygon, p, q) -> list:
    """The chain bd_c(p, q): p, the vertices strictly between walking
    clockwise, then q. Accepts vertex indices or BoundaryPoints; returns
    BoundaryPoints."""
    if isinstance(p, int):
        p = bp_vertex(p)
    if isinstance(q, int):
        q = bp_vertex(q)
    if p == q:
        return [p]
    n = poly.n
    out = [p]
    # walking clockwise decreases the ccw position
    pos_p = bp_position(p)
    pos_q = bp_position(q)
    span = (pos_p - pos_q) % n
    # first vertex strictly clockwise of p
    if pos_p.denominator == 1:
        i = (int(pos_p) - 1) % n
    else:
        i = int(pos_p) % n  # floor of a non-integer position
    for _ in range(n):
        d = (pos_p - i) % n
        if d >= span:
            break
        if d != 0:
            out.append(bp_vertex(i))
        i = (i - 1) % n
    out.append(q)
    return out


def boundary_counterclockwise(poly: SimplePolygon, p, q) -> list:
    """The chain bd_cc(p, q) = reversed bd_c(q, p)."""
    return list(reversed(boundary_clockwise(poly, q, p)))


def polygon_to_json(poly, weak_edge=None) -> str:
    pwh = as_polygon_with_holes(poly)
    obj = {
        "outer": [[scalar_str(p.x), scalar_str(p.y)] for p in pwh.outer.pts],
        "holes": [
            [[scalar_str(p.x), scalar_str(p.y)] for p in h.pts] for h in pwh.holes
        ],
    }
    if weak_edge is not None:
        obj["weak_edge"] = [int(weak_edge[0]), int(weak_edge[1])]
    return json.dumps(obj, indent=1)


def polygon_from_json(text: str):
    """Returns (PolygonWithHoles, weak_edge or None)."""
    obj = json.loads(text)
    outer = SimplePolygon([pt(x, y) for x, y in obj["outer"]])
    holes = [SimplePolygon([pt(x, y) for x, y in h]) for h in obj.get("holes", [])]
    weak = obj.get("weak_edge")
    if weak is not None:
        weak = (int(weak[0]), int(weak[1]))
    return PolygonWithHoles(outer, holes), weak
