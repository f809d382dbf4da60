"""Constructive Menger witnesses: given a, b at distance 2 in D(P), build a
verified collection of at least kappa(n) pairwise internally disjoint a-b
paths, dispatching on the three cases (both large + crossing, both large +
shared endpoint, not large).

Everything returned by this module is re-verified against exact geometry
before it escapes; a failed verification is a hard error, never a silent
degradation.  Where the source construction's explicit patch pairings
collide on edge configurations (see notes in the repository ledger), a
deterministic maximum-matching completion over ordered disjoint pairs
restores the guaranteed counts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import QuadrantCounts, delta2_formula, delta3_formula, kappa
from .errors import (
    CollectionTooSmallError,
    NotDistanceTwoError,
    PreconditionError,
    SearchExhaustedError,
    VerificationError,
)
from .frame import (
    NeighborhoodPartition,
    QuadrantFrame,
    build_frame,
    iota_set,
    partition_neighbors,
    psi,
    psi_domain,
    segments_large,
)
from .geometry import (
    CROSSING,
    DISJOINT,
    SHARED_ENDPOINT,
    Point,
    PointSet,
    hull_points,
    hull_set,
    intersection_kind,
    orientation,
    seg,
    separating_line_through,
)


# --- ordered paths ----------------------------------------------------------

def is_ordered(ps: PointSet, f: tuple, g: tuple, o: Point):
    """Does some line through o separate segment f from segment g?
    Returns (bool, witness direction or None); exact."""
    d = separating_line_through(o, seg(*f), seg(*g), ps)
    return (d is not None), d


def common_point(ps: PointSet, a: tuple, b: tuple) -> Point:
    inter = intersection_kind(ps, a, b)
    if inter.kind == CROSSING:
        return inter.point
    if inter.kind == SHARED_ENDPOINT:
        return ps[inter.shared_index]
    raise PreconditionError("a and b are disjoint; no common point")


# --- path collections -------------------------------------------------------

@dataclass
class PathCollection:
    a: tuple
    b: tuple
    n: int
    kappa_n: int
    case: str
    subcase: str
    paths: List[tuple]              # each path: tuple of segment id pairs
    ordered_witness: List[Optional[tuple]] = field(default_factory=list)
    meta: Dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.paths)


def verify_collection(ps: PointSet, a: tuple, b: tuple, paths: Sequence[tuple],
                      o: Optional[Point] = None, require_ordered: bool = True):
    """Re-verify a candidate collection: endpoints, adjacency of consecutive
    vertices, pairwise internal disjointness, and the separating-line witness
    for every length-3 path.  Returns the per-path witness list."""
    a, b = seg(*a), seg(*b)
    if o is None:
        o = common_point(ps, a, b)
    seen_internal = set()
    witnesses: List[Optional[tuple]] = []
    for path in paths:
        if len(path) < 3:
            raise VerificationError(f"path {path} has no internal vertex")
        if seg(*path[0]) != a or seg(*path[-1]) != b:
            raise VerificationError(f"path {path} does not join a to b")
        canon = [seg(*v) for v in path]
        internal = canon[1:-1]
        for v in internal:
            if v == a or v == b:
                raise VerificationError(f"path {path} revisits an endpoint")
            if v in seen_internal:
                raise VerificationError(
                    f"internal vertex {v} appears in two paths")
            seen_internal.add(v)
        if len(set(internal)) != len(internal):
            raise VerificationError(f"path {path} repeats a vertex")
        for u, v in zip(canon, canon[1:]):
            if set(u) & set(v) or not intersection_kind(ps, u, v).is_disjoint:
                raise VerificationError(
                    f"consecutive vertices {u}, {v} are not adjacent in D(P)")
        if len(canon) == 4:
            ok, direction = is_ordered(ps, canon[1], canon[2], o)
            if require_ordered and not ok:
                raise VerificationError(
                    f"length-3 path {path} is not ordered with respect to o")
            witnesses.append(direction)
        else:
            witnesses.append(None)
    return witnesses


def _disjoint(ps, e, f) -> bool:
    if set(e) & set(f):
        return False
    return intersection_kind(ps, e, f).is_disjoint


def _all_segments(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


# --- maximum ordered short-path collections ----------------------------------

def _kuhn_matching(left: List, adj: Dict) -> Dict:
    """Deterministic maximum bipartite matching; returns right->left map."""
    match_r: Dict = {}

    def try_augment(u, visited):
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_r or try_augment(match_r[v], visited):
                match_r[v] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return match_r


def max_short_collection(ps: PointSet, a: tuple, b: tuple,
                         require_ordered: bool = True,
                         forbidden: frozenset = frozenset()) -> List[tuple]:
    """Maximum collection of pairwise internally disjoint a-b paths of length
    2 or 3, with every length-3 path ordered with respect to o.

    Common neighbors always serve as length-2 paths: a length-3 pair that
    consumes a common neighbor never beats the two shorter paths it blocks,
    so the optimum is |D| plus a maximum matching between the exclusive
    neighborhoods of a and b over disjoint (and ordered) pairs.
    """
    a, b = seg(*a), seg(*b)
    o = common_point(ps, a, b)
    n = len(ps)
    A, B, D = [], [], []
    for e in _all_segments(n):
        if e in (a, b) or e in forbidden:
            continue
        da = _disjoint(ps, e, a)
        db = _disjoint(ps, e, b)
        if da and db:
            D.append(e)
        elif da:
            A.append(e)
        elif db:
            B.append(e)
    adj: Dict[tuple, List[tuple]] = {}
    for d in A:
        adj[d] = [h for h in B
                  if _disjoint(ps, d, h)
                  and (not require_ordered or is_ordered(ps, d, h, o)[0])]
    match_r = _kuhn_matching(A, adj)
    paths = [(a, e, b) for e in D]
    for h in sorted(match_r):
        paths.append((a, match_r[h], h, b))
    return sorted(paths, key=lambda p: (len(p), p))


# --- Case 1: both large, crossing -------------------------------------------

_PATCH_PLAN = {
    "7.2": (("d1", "h3"), ("d2", "h2"), ("d3", "h1")),
    "7.3": (("d1", "h1"), ("d2", "h2")),
    "7.4": (("d1", "h1"),),
    "7.5": (("d1", "h3"), ("d3", "h2")),
}


def _subcase(counts: QuadrantCounts) -> str:
    p, q, r, s = counts
    if q == 1 and r == 0:
        return "7.1"
    if q > p:
        return "7.2" if r >= 1 else "7.3"
    return "7.5" if r >= 1 else "7.4"


def _patch_segments(frame: QuadrantFrame) -> Dict[str, tuple]:
    p, q, r, s = frame.counts
    out = {
        "d1": frame.segment_of(("x-", p + 1), ("y+", s)),
        "h2": frame.segment_of(("y+", 1), ("x+", q + 1)),
    }
    if q >= 2:
        out["d2"] = frame.segment_of(("x+", 1), ("x+", q))
        out["h1"] = frame.segment_of(("x+", 2), ("x+", q + 1))
    if r >= 1:
        out["d3"] = frame.segment_of(("x+", 1), ("y-", r))
        out["h3"] = frame.segment_of(("x-", 1), ("y-", 1))
    return out


def _psi_paths(frame: QuadrantFrame, part: NeighborhoodPartition) -> List[tuple]:
    dom = psi_domain(frame, part)
    a, b = frame.a_role, frame.b_role
    paths = []
    for name in sorted(dom.blocks):
        for uv in dom.blocks[name]:
            paths.append((a, uv, psi(frame, uv), b))
    return paths


def build_case1(ps: PointSet, a: tuple, b: tuple,
                frame: Optional[QuadrantFrame] = None) -> PathCollection:
    """Lemma-8 collection: exactly delta(P; a, b) pairwise internally disjoint
    a-b paths for a large crossing pair (n >= 5, so that s >= 1)."""
    a, b = seg(*a), seg(*b)
    if frame is None:
        frame = build_frame(ps, a, b, require_distance2=False)
    if frame.contact != CROSSING:
        raise PreconditionError("case 1 needs a and b crossing at o")
    if not segments_large(ps, a, b):
        raise PreconditionError("case 1 needs both segments large")
    p, q, r, s = frame.counts
    if s < 1:
        raise PreconditionError("case 1 machinery needs a nonempty Y+ wedge")

    part = partition_neighbors(frame)
    target = part.delta2 + part.delta3
    sub = _subcase(frame.counts)
    patches = _patch_segments(frame)
    ar, br = frame.a_role, frame.b_role

    p0 = [(ar, e, br) for e in sorted(part.D)]
    p1 = _psi_paths(frame, part)
    extra: List[tuple] = []
    tstar = None
    if sub == "7.1":
        mid = frame.segment_of(("x-", 1), ("x+", 1))
        tstar = (ar, patches["d1"], mid, patches["h2"], br)
        extra = [tstar]
    else:
        for dname, hname in _PATCH_PLAN[sub]:
            extra.append((ar, patches[dname], patches[hname], br))

    paths = p0 + p1 + extra
    meta = {"counts": tuple(frame.counts), "delta2": part.delta2,
            "delta3": part.delta3, "repair": None}
    try:
        if len(paths) != target:
            raise VerificationError(
                f"case-1 collection has {len(paths)} paths, wants {target}")
        verify_collection(ps, ar, br, paths, o=frame.o)
    except VerificationError as exc:
        # Known edge configurations make the verbatim patch pairings collide
        # with psi images; rebuild the length-3 layer by ordered matching.
        paths = _case1_matching_repair(ps, frame, part, p0, tstar, target)
        meta["repair"] = f"ordered-matching ({exc})"
        verify_collection(ps, ar, br, paths, o=frame.o)

    if frame.a_role != a:
        paths = [tuple(reversed(path)) for path in paths]
    witnesses = verify_collection(ps, a, b, paths, o=frame.o)
    return PathCollection(
        a=a, b=b, n=len(ps), kappa_n=kappa(len(ps)), case="1", subcase=sub,
        paths=paths, ordered_witness=witnesses, meta=meta)


def _case1_matching_repair(ps, frame, part, p0, tstar, target):
    ar, br = frame.a_role, frame.b_role
    o = frame.o
    need3 = target - len(p0)

    def matching(forbidden):
        A = [d for d in sorted(part.A) if d not in forbidden]
        B = [h for h in sorted(part.B) if h not in forbidden]
        adj = {}
        for d in A:
            adj[d] = [h for h in B
                      if _disjoint(ps, d, h) and is_ordered(ps, d, h, o)[0]]
        match_r = _kuhn_matching(A, adj)
        return [(ar, match_r[h], h, br) for h in sorted(match_r)]

    three = matching(frozenset())
    if len(three) >= need3:
        return p0 + sorted(three[:need3])
    if tstar is not None:
        tverts = frozenset(seg(*v) for v in tstar[1:-1])
        three = matching(tverts)
        if len(three) >= need3 - 1:
            return p0 + sorted(three[:need3 - 1]) + [tstar]
    raise CollectionTooSmallError(
        "case-1 ordered matching fell short of delta(P;a,b)",
        got=len(p0) + len(three), needed=target,
        diagnostics={"counts": tuple(frame.counts)})


# --- Case 2: both large, shared endpoint -------------------------------------

def _exit_hugging_ladder(t_exit: Fraction, budget: int = 64):
    """Dyadic candidates for a ray parameter that must land just beyond the
    hull exit: t_exit * (1 + 2^-k) hugging the exit, coarser multiples as a
    backstop, deduplicated and capped at `budget` values."""
    base = t_exit if t_exit > 0 else Fraction(1)
    out = []
    for k in range(0, 24):
        out.append(base * (1 + Fraction(1, 2 ** k)))
    for k in range(1, 9):
        out.append(base * (1 + 2 ** k))
    for e in (0, 1, -1, 2, -2, 3, -3, 4):
        out.append(Fraction(2) ** e)
    seen, ladder = set(), []
    for t in out:
        if t > 0 and t not in seen:
            seen.add(t)
            ladder.append(t)
        if len(ladder) >= budget:
            break
    return ladder


def _strictly_outside_hull(ps_points, hull_cycle, cand: Point) -> bool:
    # hull_cycle is clockwise: interior has negative orientation on all edges
    for u, v in zip(hull_cycle, hull_cycle[1:] + hull_cycle[:1]):
        if orientation(ps_points[u], ps_points[v], cand) > 0:
            return True
    return False


def _collinear_with_pair(points, cand: Point) -> bool:
    m = len(points)
    for i in range(m):
        for j in range(i + 1, m):
            if orientation(points[i], points[j], cand) == 0:
                return True
    return False


@dataclass
class ExtensionScene:
    base: PointSet
    a: tuple
    b: tuple
    o_index: int
    leaf_a: int
    leaf_b: int
    prime: PointSet
    base_to_prime: tuple       # o maps to None
    prime_to_base: tuple       # o-, o+ map to None
    o_minus: int               # P' index
    o_plus: int
    a_prime: tuple
    b_prime: tuple
    t_plus: Fraction
    t_minus: Fraction

    def crosses_removed(self, path_vertex: tuple) -> bool:
        return self.o_minus in path_vertex or self.o_plus in path_vertex


def build_extension(ps: PointSet, a: tuple, b: tuple) -> ExtensionScene:
    """Enlarge a and b beyond their shared endpoint o to points o+, o- chosen
    by dyadic grid search so that P' = (P minus o) + {o-, o+} is in general
    position, keeps the old hull (minus o) plus the two new points on its
    hull, and makes a', b' a large crossing pair."""
    a, b = seg(*a), seg(*b)
    inter = intersection_kind(ps, a, b)
    if inter.kind != SHARED_ENDPOINT:
        raise PreconditionError("extension needs a shared endpoint contact")
    if not segments_large(ps, a, b):
        raise PreconditionError("extension needs both segments large")
    o_idx = inter.shared_index
    o = ps[o_idx]
    leaf_a = a[0] if a[1] == o_idx else a[1]
    leaf_b = b[0] if b[1] == o_idx else b[1]

    rest, base_to_rest = ps.remove(o_idx)
    rest_points = rest.points
    rest_hull = hull_points(rest)
    old_hull = hull_set(ps)
    keep_hull = {base_to_rest[v] for v in old_hull if v != o_idx}

    def beyond(leaf: int, t: Fraction) -> Point:
        lp = ps[leaf]
        return Point(o.x + t * (o.x - lp.x), o.y + t * (o.y - lp.y))

    from .geometry import ray_hull_exit

    def ladder_for(leaf: int):
        d = (o.x - ps[leaf].x, o.y - ps[leaf].y)
        return _exit_hugging_ladder(ray_hull_exit(rest_points, rest_hull, o, d))

    plus_ok = [t for t in ladder_for(leaf_a)
               if _strictly_outside_hull(rest_points, rest_hull, beyond(leaf_a, t))
               and not _collinear_with_pair(rest_points, beyond(leaf_a, t))]
    minus_ok = [t for t in ladder_for(leaf_b)
                if _strictly_outside_hull(rest_points, rest_hull, beyond(leaf_b, t))
                and not _collinear_with_pair(rest_points, beyond(leaf_b, t))]
    for tp in plus_ok:
        opl = beyond(leaf_a, tp)
        for tm in minus_ok:
            omn = beyond(leaf_b, tm)
            # joint collinearity: only triples using both new points are new
            if any(orientation(omn, opl, pt) == 0 for pt in rest_points):
                continue
            prime_pts = list(rest_points) + [omn, opl]
            prime = PointSet(prime_pts)
            o_minus_idx = len(prime_pts) - 2
            o_plus_idx = len(prime_pts) - 1
            new_hull = hull_set(prime)
            if o_minus_idx not in new_hull or o_plus_idx not in new_hull:
                continue
            if not keep_hull <= new_hull:
                continue
            a_prime = seg(base_to_rest[leaf_a], o_plus_idx)
            b_prime = seg(base_to_rest[leaf_b], o_minus_idx)
            base_to_prime = tuple(base_to_rest[i] if i != o_idx else None
                                  for i in range(len(ps)))
            prime_to_base = [None] * len(prime_pts)
            for i, t in enumerate(base_to_prime):
                if t is not None:
                    prime_to_base[t] = i
            return ExtensionScene(
                base=ps, a=a, b=b, o_index=o_idx, leaf_a=leaf_a, leaf_b=leaf_b,
                prime=prime, base_to_prime=base_to_prime,
                prime_to_base=tuple(prime_to_base),
                o_minus=o_minus_idx, o_plus=o_plus_idx,
                a_prime=a_prime, b_prime=b_prime, t_plus=tp, t_minus=tm)
    raise SearchExhaustedError(
        "no (t+, t-) candidate satisfied the extension conditions; "
        "archive this point set", specimen=ps)


def build_case2(ps: PointSet, a: tuple, b: tuple, _depth: int = 0) -> PathCollection:
    """Shared-endpoint case: an ordered collection of >= kappa(n) paths."""
    a, b = seg(*a), seg(*b)
    n = len(ps)
    k_n = kappa(n)
    if n <= 5:
        return _small_collection(ps, a, b, k_n, case="2", subcase="small-base")
    frame = build_frame(ps, a, b, require_distance2=False)
    if frame.contact != SHARED_ENDPOINT:
        raise PreconditionError("case 2 needs a shared endpoint")
    if not segments_large(ps, a, b):
        raise PreconditionError("case 2 needs both segments large")
    p, q, r, s = frame.counts

    if 1 <= p < q and 0 <= r < s:
        coll = _case2_recurse(ps, a, b, frame, _depth)
        subcase = "2.3"
    else:
        subcase = "2.1" if p == q else "2.2"
        coll = _case2_direct(ps, a, b, frame)
    paths, meta = coll
    if len(paths) < k_n:
        repaired = max_short_collection(ps, a, b)
        if len(repaired) > len(paths):
            paths = repaired
            meta["completion"] = True
            subcase += "+completion"
    if len(paths) < k_n and s >= 1:
        alt_paths, alt_meta = _case2_recurse(ps, a, b, frame, _depth)
        if len(alt_paths) > len(paths):
            paths, meta = alt_paths, {**meta, **alt_meta}
            subcase += "+recursion"
    if len(paths) < k_n:
        raise CollectionTooSmallError(
            "case-2 collection fell below kappa(n)",
            got=len(paths), needed=k_n, diagnostics={"counts": (p, q, r, s)})
    witnesses = verify_collection(ps, a, b, paths, o=frame.o)
    return PathCollection(a=a, b=b, n=n, kappa_n=k_n, case="2",
                          subcase=subcase, paths=paths,
                          ordered_witness=witnesses, meta=meta)


def _case2_direct(ps, a, b, frame):
    scene = build_extension(ps, a, b)
    inner = build_case1(scene.prime, scene.a_prime, scene.b_prime)
    kept = []
    for path in inner.paths:
        internal = path[1:-1]
        if any(scene.crosses_removed(v) for v in internal):
            continue
        mapped = [a]
        for v in internal:
            mapped.append(seg(scene.prime_to_base[v[0]],
                              scene.prime_to_base[v[1]]))
        mapped.append(b)
        kept.append(tuple(mapped))
    meta = {"counts": tuple(frame.counts),
            "extension": {"t_plus": str(scene.t_plus),
                          "t_minus": str(scene.t_minus)},
            "inner_subcase": inner.subcase,
            "inner_size": inner.size, "kept": len(kept)}
    return kept, meta


def _case2_recurse(ps, a, b, frame, depth):
    if depth > len(ps):
        raise PreconditionError("case-2 recursion failed to terminate")
    y = min(frame.y_plus)
    sub_ps, old2new = ps.remove(y)
    new2old = {v: i for i, v in enumerate(old2new) if v is not None}
    sub_a = seg(old2new[a[0]], old2new[a[1]])
    sub_b = seg(old2new[b[0]], old2new[b[1]])
    sub = build_case2(sub_ps, sub_a, sub_b, _depth=depth + 1)
    lifted = []
    for path in sub.paths:
        lifted.append(tuple(seg(new2old[v[0]], new2old[v[1]]) for v in path))
    fan = []
    others = sorted(set(frame.sector_points("x-")) |
                    (set(frame.y_plus) - {y}) | set(frame.sector_points("x+")))
    for z in others:
        e = seg(y, z)
        if not (_disjoint(ps, e, a) and _disjoint(ps, e, b)):
            raise VerificationError(
                f"fan segment {e} unexpectedly meets a or b")
        fan.append((a, e, b))
    meta = {"recursed_on": y, "sub_size": sub.size, "fan": len(fan)}
    return lifted + fan, meta


# --- Case 3: some segment not large ------------------------------------------

@dataclass
class ProjectionScene:
    base: PointSet
    a: tuple
    b: tuple
    leaves: tuple
    factors: Dict[int, Fraction]
    prime: PointSet            # same indexing as base

    def touches_leaf(self, v: tuple) -> bool:
        return v[0] in self.factors or v[1] in self.factors


def build_projection(ps: PointSet, a: tuple, b: tuple) -> ProjectionScene:
    """Scale every leaf of {a, b} outward along its ray from o (rational
    factors t > 1 found by grid search) so that the scaled set is in general
    position and all scaled leaves are hull vertices; the identity elsewhere.
    """
    a, b = seg(*a), seg(*b)
    inter = intersection_kind(ps, a, b)
    if inter.kind == DISJOINT:
        raise PreconditionError("projection needs a common point")
    if segments_large(ps, a, b):
        raise PreconditionError("both segments already large; use case 1 or 2")
    o = common_point(ps, a, b)
    if inter.kind == CROSSING:
        leaves = tuple(sorted({*a, *b}))
    else:
        leaves = tuple(sorted({*a, *b} - {inter.shared_index}))

    fixed = [ps[i] for i in range(len(ps)) if i not in leaves]
    hull_cycle = hull_points(ps)

    def scaled(leaf: int, t: Fraction) -> Point:
        lp = ps[leaf]
        return Point(o.x + t * (lp.x - o.x), o.y + t * (lp.y - o.y))

    from .geometry import ray_hull_exit

    candidates: Dict[int, List[Fraction]] = {}
    for leaf in leaves:
        d = (ps[leaf].x - o.x, ps[leaf].y - o.y)
        exit_t = ray_hull_exit(ps.points, hull_cycle, o, d)
        ok = [t for t in _exit_hugging_ladder(max(exit_t, Fraction(1)))
              if t > 1
              and _strictly_outside_hull(ps.points, hull_cycle, scaled(leaf, t))
              and not _collinear_with_pair(fixed, scaled(leaf, t))]
        if not ok:
            raise SearchExhaustedError(
                f"no scale candidate for leaf {leaf}", specimen=ps)
        candidates[leaf] = ok

    pos = {leaf: 0 for leaf in leaves}
    for _ in range(64 * len(leaves)):
        factors = {leaf: candidates[leaf][pos[leaf]] for leaf in leaves}
        pts = [scaled(i, factors[i]) if i in factors else ps[i]
               for i in range(len(ps))]
        from .geometry import check_general_position
        violation = check_general_position(pts)
        prime = None
        offender = None
        if violation is not None:
            offender = next((i for i in violation.indices if i in factors),
                            None)
            if offender is None:
                raise VerificationError(
                    f"projection broke fixed points: {violation}")
        else:
            prime = PointSet(pts)
            hull = hull_set(prime)
            offender = next((leaf for leaf in leaves if leaf not in hull), None)
        if offender is None:
            return ProjectionScene(base=ps, a=a, b=b, leaves=leaves,
                                   factors=factors, prime=prime)
        if pos[offender] + 1 >= len(candidates[offender]):
            raise SearchExhaustedError(
                f"scale search exhausted for leaf {offender}", specimen=ps)
        pos[offender] += 1
    raise SearchExhaustedError("projection search budget exceeded", specimen=ps)


def build_case3(ps: PointSet, a: tuple, b: tuple) -> PathCollection:
    """Pull a P'-collection back through the leaf-scaling bijection."""
    a, b = seg(*a), seg(*b)
    n = len(ps)
    k_n = kappa(n)
    scene = build_projection(ps, a, b)
    inter = intersection_kind(ps, a, b)
    if inter.kind == CROSSING:
        inner = build_case1(scene.prime, a, b)
    else:
        inner = build_case2(scene.prime, a, b)
    o = common_point(ps, a, b)

    paths: List[tuple] = []
    dropped = []
    for path in inner.paths:
        candidate = tuple(seg(*v) for v in path)
        if not any(scene.touches_leaf(v) for v in candidate[1:-1]):
            paths.append(candidate)
            continue
        # pulled-back path: same index pairs read in the original set
        try:
            verify_collection(ps, a, b, [candidate], o=o)
        except VerificationError as exc:
            dropped.append((candidate, str(exc)))
            continue
        paths.append(candidate)

    meta = {"leaves": scene.leaves,
            "factors": {k: str(v) for k, v in sorted(scene.factors.items())},
            "inner_case": inner.case, "inner_subcase": inner.subcase,
            "inner_size": inner.size, "dropped": dropped}
    subcase = f"3({inner.case}.{inner.subcase})"
    if len(paths) < k_n:
        repaired = max_short_collection(ps, a, b)
        if len(repaired) > len(paths):
            paths = repaired
            subcase += "+completion"
    if len(paths) < k_n:
        raise CollectionTooSmallError(
            "case-3 collection fell below kappa(n)", got=len(paths),
            needed=k_n, diagnostics=meta)
    witnesses = verify_collection(ps, a, b, paths, o=o)
    return PathCollection(a=a, b=b, n=n, kappa_n=k_n, case="3",
                          subcase=subcase, paths=paths,
                          ordered_witness=witnesses, meta=meta)


# --- small-n and dispatch -----------------------------------------------------

def _small_collection(ps, a, b, k_n, case="small", subcase="n<=5"):
    paths = max_short_collection(ps, a, b)
    if len(paths) < k_n:
        from .graph import build_graph, max_disjoint_paths
        g = build_graph(ps)
        va, vb = g.vertex(a), g.vertex(b)
        _, wit = max_disjoint_paths(g, va, vb)
        o = common_point(ps, a, b)
        chosen = list(paths)
        used = {seg(*v) for p in chosen for v in p[1:-1]}
        for w in wit:
            segs = tuple(g.segment(v) for v in w)
            internal = segs[1:-1]
            if not internal or any(v in used for v in internal):
                continue
            if len(segs) == 4 and not is_ordered(ps, segs[1], segs[2], o)[0]:
                continue
            chosen.append(segs)
            used.update(internal)
        paths = chosen
    if len(paths) < k_n:
        raise CollectionTooSmallError("small-n collection fell short",
                                      got=len(paths), needed=k_n)
    witnesses = verify_collection(ps, a, b, paths)
    return PathCollection(a=seg(*a), b=seg(*b), n=len(ps), kappa_n=k_n,
                          case=case, subcase=subcase, paths=paths,
                          ordered_witness=witnesses, meta={})


def construct_menger_paths(ps: PointSet, a: tuple, b: tuple) -> PathCollection:
    """Dispatch on contact and largeness; returns a verified collection of at
    least kappa(n) pairwise internally disjoint a-b paths (for d(a,b) = 2)."""
    a, b = seg(*a), seg(*b)
    inter = intersection_kind(ps, a, b)  # raises on identical segments
    if inter.kind == DISJOINT:
        from .errors import DisjointSegmentsError
        raise DisjointSegmentsError(
            "a and b are adjacent in D(P): distance 1, not 2", distance=1)
    n = len(ps)
    k_n = kappa(n)
    if not _has_common_neighbor(ps, a, b):
        raise NotDistanceTwoError(
            "a and b share a point but have no common neighbor", distance=None)
    if n <= 5:
        coll = _small_collection(ps, a, b, k_n)
    elif segments_large(ps, a, b):
        if inter.kind == CROSSING:
            coll = build_case1(ps, a, b)
        else:
            coll = build_case2(ps, a, b)
    else:
        coll = build_case3(ps, a, b)
    if coll.size < k_n:
        raise CollectionTooSmallError(
            "constructed collection below kappa(n)",
            got=coll.size, needed=k_n)
    return coll


def _has_common_neighbor(ps, a, b) -> bool:
    for e in _all_segments(len(ps)):
        if e in (a, b):
            continue
        if _disjoint(ps, e, a) and _disjoint(ps, e, b):
            return True
    return False


# --- certificates -------------------------------------------------------------

def collection_to_json(coll: PathCollection) -> str:
    data = {
        "a": list(coll.a),
        "b": list(coll.b),
        "kappa_n": coll.kappa_n,
        "paths": [[list(v) for v in path] for path in coll.paths],
        "ordered_witness": [list(w) if w is not None else None
                            for w in coll.ordered_witness],
        "case": coll.case,
        "subcase": coll.subcase,
    }
    return json.dumps(data)
