"""Exact planar primitives on arbitrary-precision rational coordinates.

Every predicate is computed with `fractions.Fraction`; there is no floating
point anywhere in this module.  Derived points (crossing points, extension
and projection points) are exact rationals as well.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    CollinearTripleError,
    DegenerateOverlapError,
    DuplicatePointError,
    TiedAngleError,
)

Coord = Union[int, str, Fraction]


def _frac(v: Coord) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x: Coord, y: Coord):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of triangle pqr: +1 ccw, -1 cw, 0 collinear."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


@dataclass(frozen=True)
class Violation:
    """First general-position defect found in a point set."""

    kind: str  # "duplicate" | "collinear"
    indices: tuple

    def raise_(self):
        if self.kind == "duplicate":
            raise DuplicatePointError(*self.indices)
        raise CollinearTripleError(*self.indices)


def check_general_position(points: Sequence[Point]) -> Optional[Violation]:
    """Return the first duplicate pair or collinear triple, or None if ok."""
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if points[i] == points[j]:
                return Violation("duplicate", (i, j))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(points[i], points[j], points[k]) == 0:
                    return Violation("collinear", (i, j, k))
    return None


class PointSet:
    """An ordered set of >= 3 distinct points, optionally validated.

    Indices into `points` are the identifiers used by segments and by the
    disjointness graph.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        self.points = tuple(points)
        if len(self.points) < 3:
            raise ValueError("a point set needs at least 3 points")

    @classmethod
    def from_coords(cls, coords: Iterable[tuple]) -> "PointSet":
        return cls(Point(x, y) for x, y in coords)

    def validate(self) -> "PointSet":
        v = check_general_position(self.points)
        if v is not None:
            v.raise_()
        return self

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def index(self, p: Point) -> int:
        return self.points.index(p)

    def remove(self, idx: int):
        """Return (new PointSet, old->new index map with None at idx)."""
        pts = [p for i, p in enumerate(self.points) if i != idx]
        mapping = []
        for i in range(len(self.points)):
            if i < idx:
                mapping.append(i)
            elif i == idx:
                mapping.append(None)
            else:
                mapping.append(i - 1)
        return PointSet(pts), tuple(mapping)


def validate_general_position(ps: PointSet) -> None:
    """Raise DuplicatePointError / CollinearTripleError on the first defect."""
    v = check_general_position(ps.points)
    if v is not None:
        v.raise_()


# --- segments -------------------------------------------------------------

def seg(i: int, j: int) -> tuple:
    """Canonical unordered index pair."""
    if i == j:
        raise ValueError("segment endpoints must differ")
    return (i, j) if i < j else (j, i)


DISJOINT = "disjoint"
SHARED_ENDPOINT = "shared_endpoint"
CROSSING = "crossing"


@dataclass(frozen=True)
class Intersection:
    kind: str
    shared_index: Optional[int] = None
    point: Optional[Point] = None

    @property
    def is_disjoint(self):
        return self.kind == DISJOINT


def _cross_point(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    """Exact intersection point of lines p1p2 and p3p4 (not parallel)."""
    d1x, d1y = p2.x - p1.x, p2.y - p1.y
    d2x, d2y = p4.x - p3.x, p4.y - p3.y
    denom = d1x * d2y - d1y * d2x
    t = ((p3.x - p1.x) * d2y - (p3.y - p1.y) * d2x) / denom
    return Point(p1.x + t * d1x, p1.y + t * d1y)


def segment_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Intersection:
    """Classify the intersection of closed segments p1p2 and p3p4.

    Assumes the four points come from a general-position set: any collinear
    contact signals an unvalidated input and raises DegenerateOverlapError.
    Shared endpoints are reported by the caller (which knows the indices).
    """
    o1 = orientation(p1, p2, p3)
    o2 = orientation(p1, p2, p4)
    o3 = orientation(p3, p4, p1)
    o4 = orientation(p3, p4, p2)
    if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
        raise DegenerateOverlapError(
            "collinear segment contact: input violates general position"
        )
    if o1 != o2 and o3 != o4:
        return Intersection(CROSSING, point=_cross_point(p1, p2, p3, p4))
    return Intersection(DISJOINT)


def intersection_kind(ps: PointSet, s1: tuple, s2: tuple) -> Intersection:
    """Intersection classification for two distinct segments of a point set."""
    a, b = seg(*s1), seg(*s2)
    if a == b:
        raise ValueError("segments must be distinct")
    shared = set(a) & set(b)
    if len(shared) == 1:
        k = shared.pop()
        others = [i for i in (*a, *b) if i != k]
        if orientation(ps[k], ps[others[0]], ps[others[1]]) == 0:
            raise DegenerateOverlapError(
                f"segments {a} and {b} touch collinearly at index {k}"
            )
        return Intersection(SHARED_ENDPOINT, shared_index=k)
    return segment_intersection(ps[a[0]], ps[a[1]], ps[b[0]], ps[b[1]])


def segments_disjoint(ps: PointSet, s1: tuple, s2: tuple) -> bool:
    return intersection_kind(ps, s1, s2).kind == DISJOINT


# --- convex hull ----------------------------------------------------------

def hull_points(ps: PointSet) -> list:
    """Clockwise cycle of hull vertex indices, starting at the lexicographic
    minimum point.  General position means no three hull points are collinear.
    """
    idx = sorted(range(len(ps)), key=lambda i: (ps[i].x, ps[i].y))

    def half(indices):
        out = []
        for i in indices:
            while len(out) > 1 and orientation(ps[out[-2]], ps[out[-1]], ps[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(idx)          # ccw lower chain
    upper = half(idx[::-1])    # ccw upper chain
    ccw = lower[:-1] + upper[:-1]
    cw = [ccw[0]] + ccw[:0:-1]
    return cw


def hull_set(ps: PointSet) -> frozenset:
    return frozenset(hull_points(ps))


# --- radial order ---------------------------------------------------------

def _cw_class(x: Fraction, y: Fraction) -> int:
    # classes in clockwise order starting at the positive y-axis
    if x == 0 and y > 0:
        return 0
    if x > 0 and y > 0:
        return 1
    if x > 0 and y == 0:
        return 2
    if x > 0 and y < 0:
        return 3
    if x == 0 and y < 0:
        return 4
    if x < 0 and y < 0:
        return 5
    if x < 0 and y == 0:
        return 6
    return 7


def cw_compare(v: tuple, w: tuple) -> int:
    """Compare direction vectors by clockwise angle from the positive y-axis."""
    cv, cw_ = _cw_class(v[0], v[1]), _cw_class(w[0], w[1])
    if cv != cw_:
        return -1 if cv < cw_ else 1
    cross = v[0] * w[1] - v[1] * w[0]
    if cross < 0:
        return -1
    if cross > 0:
        return 1
    return 0


def radial_order(center: Point, pts: Sequence[Point], clockwise: bool = True) -> list:
    """Indices of `pts` sorted by angle around `center`, starting from the
    positive y-axis.  Raises TiedAngleError if two points share a ray.
    """
    vecs = []
    for i, p in enumerate(pts):
        vx, vy = p.x - center.x, p.y - center.y
        if vx == 0 and vy == 0:
            raise ValueError(f"point {i} equals the center")
        if not clockwise:
            vx = -vx
        vecs.append((vx, vy, i))

    order = sorted(vecs, key=cmp_to_key(lambda a, b: cw_compare(a[:2], b[:2])))
    for a, b in zip(order, order[1:]):
        if cw_compare(a[:2], b[:2]) == 0:
            raise TiedAngleError(
                f"points {a[2]} and {b[2]} are collinear with the center"
            )
    return [v[2] for v in order]


def wedge_cw_sort(o: Point, pts: Sequence[Point], indices: Sequence[int],
                  clockwise: bool = True) -> list:
    """Sort `indices` by angle around o within a wedge of opening < pi.

    Inside such a wedge the cross-product sign alone is a total order.
    """
    sign = -1 if clockwise else 1

    def cmp(i, j):
        vi = (pts[i].x - o.x, pts[i].y - o.y)
        vj = (pts[j].x - o.x, pts[j].y - o.y)
        cross = vi[0] * vj[1] - vi[1] * vj[0]
        if cross == 0:
            raise TiedAngleError(f"points {i} and {j} are collinear with o")
        return sign if cross < 0 else -sign

    return sorted(indices, key=cmp_to_key(cmp))


# --- separating-line test (used by `is_ordered`) ---------------------------

def open_halfplane_normal(vectors: Sequence[tuple]) -> Optional[tuple]:
    """Exact test: do all vectors fit strictly inside an open half-plane
    through the origin?  Returns a rational normal n with <n, v> > 0 for all v,
    or None.  Vectors must be nonzero.
    """
    vs = list(vectors)
    if not vs:
        return (Fraction(0), Fraction(1))

    order = sorted(vs, key=cmp_to_key(cw_compare))
    m = len(order)
    # if all vectors fit in an open half-plane, the occupied arc runs from
    # some order[i+1] around to order[i]; try each split as the extreme pair
    for i in range(m):
        u = order[(i + 1) % m]  # arc start
        w = order[i]            # arc end
        n = _dual_cone_interior(u, w)
        if n is not None and all(n[0] * v[0] + n[1] * v[1] > 0 for v in vs):
            return n
    return None


def _dual_cone_interior(u: tuple, w: tuple):
    """A rational vector strictly inside the dual cone of cone(u, w), i.e.
    with positive dot product against both, when the cone is salient."""
    uu = u[0] * u[0] + u[1] * u[1]
    ww = w[0] * w[0] + w[1] * w[1]
    uw = u[0] * w[0] + u[1] * w[1]
    cross = u[0] * w[1] - u[1] * w[0]
    if cross == 0:
        if uw > 0:
            return u  # same direction
        return None  # opposite directions: no strict separator
    # n = w*(|u|^2 - <u,w>) + u*(|w|^2 - <u,w>) has <n,u> = <n,w> =
    # |u|^2|w|^2 - <u,w>^2 > 0 by Cauchy-Schwarz (u, w independent).
    cu = ww - uw
    cw_ = uu - uw
    return (w[0] * cw_ + u[0] * cu, w[1] * cw_ + u[1] * cu)


def separating_line_through(o: Point, f: tuple, g: tuple,
                            ps: PointSet) -> Optional[tuple]:
    """Exact witness for: a line through o has segment f strictly on one side
    and segment g strictly on the other.  Returns the line direction as a
    rational vector, or None if no such line exists.

    Requires that none of the four endpoints equals o.
    """
    vecs = []
    for i in f:
        p = ps[i]
        vecs.append((p.x - o.x, p.y - o.y))
    for i in g:
        p = ps[i]
        vecs.append((o.x - p.x, o.y - p.y))
    for v in vecs:
        if v == (0, 0):
            raise ValueError("segment endpoint coincides with o")
    n = open_halfplane_normal(vecs)
    if n is None:
        return None
    # the witness line itself is perpendicular to n
    return _primitive(-n[1], n[0])


def ray_hull_exit(points: Sequence[Point], hull_cycle: Sequence[int],
                  origin: Point, direction: tuple) -> Fraction:
    """Largest parameter t >= 0 at which origin + t*direction meets the hull
    boundary; 0 when the ray never meets it (origin already outside)."""
    best = Fraction(0)
    dx, dy = Fraction(direction[0]), Fraction(direction[1])
    m = len(hull_cycle)
    for k in range(m):
        u = points[hull_cycle[k]]
        v = points[hull_cycle[(k + 1) % m]]
        ex, ey = v.x - u.x, v.y - u.y
        denom = dx * ey - dy * ex
        if denom == 0:
            continue  # ray parallel to this edge
        # origin + t*d = u + w*e
        t = ((u.x - origin.x) * ey - (u.y - origin.y) * ex) / denom
        w = ((u.x - origin.x) * dy - (u.y - origin.y) * dx) / denom
        if t > 0 and 0 <= w <= 1:
            best = max(best, t)
    return best


def _primitive(x: Fraction, y: Fraction) -> tuple:
    """Scale a rational direction to a canonical primitive integer vector."""
    x, y = Fraction(x), Fraction(y)
    from math import gcd

    den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    ix, iy = int(x * den), int(y * den)
    g = gcd(abs(ix), abs(iy))
    if g:
        ix, iy = ix // g, iy // g
    if ix < 0 or (ix == 0 and iy < 0):
        ix, iy = -ix, -iy
    return (ix, iy)
