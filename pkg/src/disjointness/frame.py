"""The (a, b, o)-centered quadrant frame and the neighbor partition.

The two lines spanned by a and b cut the plane into four wedges.  The paper
rotates/reflects the point set to normalize which wedge is which; here the
coordinates stay fixed and the wedge roles are permuted symbolically instead:
there are eight dihedral relabelings (four choices of the Y+ wedge times two
traversal senses), each of which forces which input segment plays the "a"
role.  Exact arithmetic throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import QuadrantCounts, delta2_formula, size_A_formula, size_B_formula
from .errors import (
    DisjointSegmentsError,
    NotDistanceTwoError,
    NotInDomainError,
    PreconditionError,
    VerificationError,
)
from .geometry import (
    CROSSING,
    DISJOINT,
    SHARED_ENDPOINT,
    Point,
    PointSet,
    hull_set,
    intersection_kind,
    seg,
    wedge_cw_sort,
)

Label = Tuple[str, int]  # ("x-", 1-based index) etc.


@dataclass(frozen=True)
class _Ray:
    vec: tuple          # direction from o, exact
    segment: str        # "a" or "b" (input naming)
    point: Optional[int]  # endpoint index on this ray; None for an extension ray


@dataclass(frozen=True)
class QuadrantFrame:
    ps: PointSet
    a: tuple
    b: tuple
    contact: str                 # CROSSING or SHARED_ENDPOINT
    o: Point
    o_index: Optional[int]       # the shared endpoint, if any
    a_role: tuple                # input segment playing the paper's a
    b_role: tuple
    sense: int                   # +1: frame-cw == actual-cw, -1: mirrored
    relabel_index: int
    counts: QuadrantCounts
    # label arrays; positions are 1-based in the paper, 0-based here:
    # x_minus[0] = x-_1 ... x_minus[p] = x-_{p+1}; None marks the virtual
    # extension slot of a shared-endpoint frame.
    x_minus: tuple
    x_plus: tuple
    y_minus: tuple               # y-_1 .. y-_r
    y_plus: tuple                # y+_1 .. y+_s
    leaves: tuple                # leaf point indices of {a, b}

    def resolve(self, label: Label) -> Label:
        """Map sentinel labels to the segment-endpoint labels they denote."""
        fam, i = label
        p, q, r, s = self.counts
        if fam == "y-":
            if i == 0:
                return ("x+", 1)
            if i == r + 1:
                return ("x-", 1)
        elif fam == "y+":
            if i == 0:
                return ("x-", p + 1)
            if i == s + 1:
                return ("x+", q + 1)
        return label

    def point_of(self, label: Label) -> int:
        fam, i = self.resolve(label)
        arr = {"x-": self.x_minus, "x+": self.x_plus,
               "y-": self.y_minus, "y+": self.y_plus}[fam]
        idx = arr[i - 1]
        if idx is None:
            raise PreconditionError(f"label {fam}{i} is a virtual extension slot")
        return idx

    def label_of(self, point: int) -> Label:
        for fam, arr in (("x-", self.x_minus), ("x+", self.x_plus),
                         ("y-", self.y_minus), ("y+", self.y_plus)):
            if point in arr:
                return (fam, arr.index(point) + 1)
        raise KeyError(f"point {point} carries no frame label")

    def segment_of(self, l1: Label, l2: Label) -> tuple:
        return seg(self.point_of(l1), self.point_of(l2))

    def sector_points(self, fam: str) -> tuple:
        if fam == "x-":
            return tuple(self.x_minus[1:-1])
        if fam == "x+":
            return tuple(self.x_plus[1:-1])
        return self.y_minus if fam == "y-" else self.y_plus


def _leaves(ps: PointSet, a: tuple, b: tuple, inter) -> tuple:
    if inter.kind == CROSSING:
        return tuple(sorted({*a, *b}))
    o = inter.shared_index
    return tuple(sorted({*a, *b} - {o}))


def segments_large(ps: PointSet, a: tuple, b: tuple) -> bool:
    """True iff every leaf of {a, b} lies on the convex hull of P."""
    inter = intersection_kind(ps, a, b)
    if inter.kind == DISJOINT:
        raise PreconditionError("a and b are disjoint; no common point o")
    hull = hull_set(ps)
    return all(v in hull for v in _leaves(ps, a, b, inter))


def _cross(u: tuple, v: tuple):
    return u[0] * v[1] - u[1] * v[0]


def _in_wedge(u: tuple, w: tuple, z: tuple, sense: int) -> bool:
    """Is direction z strictly between rays u and w, traversing u->w in
    frame-cw order (sense +1 = actual cw)?  Wedge opening < pi."""
    if sense == 1:
        return _cross(u, z) < 0 and _cross(z, w) < 0
    return _cross(u, z) > 0 and _cross(z, w) > 0


def _candidate_frames(ps: PointSet, a: tuple, b: tuple) -> List[QuadrantFrame]:
    """All structurally valid dihedral relabelings, unfiltered."""
    a, b = seg(*a), seg(*b)
    inter = intersection_kind(ps, a, b)
    if inter.kind == DISJOINT:
        raise DisjointSegmentsError(
            "a and b are disjoint (adjacent in D(P), distance 1)")
    contact = inter.kind
    if contact == CROSSING:
        o = inter.point
        o_index = None
        rays = [
            _Ray((ps[i].x - o.x, ps[i].y - o.y), name, i)
            for name, segm in (("a", a), ("b", b)) for i in segm
        ]
    else:
        o_index = inter.shared_index
        o = ps[o_index]
        leaf_a = a[0] if a[1] == o_index else a[1]
        leaf_b = b[0] if b[1] == o_index else b[1]
        va = (ps[leaf_a].x - o.x, ps[leaf_a].y - o.y)
        vb = (ps[leaf_b].x - o.x, ps[leaf_b].y - o.y)
        rays = [
            _Ray(va, "a", leaf_a), _Ray((-va[0], -va[1]), "a", None),
            _Ray(vb, "b", leaf_b), _Ray((-vb[0], -vb[1]), "b", None),
        ]

    from functools import cmp_to_key
    from .geometry import cw_compare

    cw_rays = sorted(rays, key=cmp_to_key(lambda r1, r2: cw_compare(r1.vec, r2.vec)))
    # rays of the two lines must alternate around o
    assert all(cw_rays[i].segment != cw_rays[(i + 1) % 4].segment for i in range(4))

    endpoint_ids = {*a, *b}
    free = [i for i in range(len(ps)) if i not in endpoint_ids]
    leaves = _leaves(ps, a, b, inter)

    frames = []
    for k in range(4):
        for sense in (1, -1):
            ring = cw_rays if sense == 1 else [cw_rays[0]] + cw_rays[:0:-1]
            rk = [ring[(k + t) % 4] for t in range(4)]
            # rk[0] bounds Y+ before, rk[1] after (= x+_{q+1} ray, on the
            # a-role line), rk[2] = x+_1 ray, rk[3] = x-_1 ray.
            if rk[1].segment != rk[3].segment:
                continue  # cannot happen; alternation makes them opposite rays
            if contact == SHARED_ENDPOINT:
                # leaf rays must carry x-_1 and x+_1 (the paper's Figure-4 shape)
                if rk[2].point is None or rk[3].point is None:
                    continue
            a_role = a if rk[1].segment == "a" else b
            b_role = b if a_role == a else a

            sectors = {"y+": [], "x+": [], "y-": [], "x-": []}
            order = ["y+", "x+", "y-", "x-"]
            for idx in free:
                z = (ps[idx].x - o.x, ps[idx].y - o.y)
                placed = False
                for t, fam in enumerate(order):
                    if _in_wedge(rk[t].vec, rk[(t + 1) % 4].vec, z, sense):
                        sectors[fam].append(idx)
                        placed = True
                        break
                if not placed:
                    raise VerificationError(
                        f"point {idx} sits on a frame ray; input unvalidated?")

            cw = sense == 1
            y_plus = tuple(wedge_cw_sort(o, ps.points, sectors["y+"], cw))
            x_plus_mid = tuple(wedge_cw_sort(o, ps.points, sectors["x+"], cw))
            y_minus = tuple(wedge_cw_sort(o, ps.points, sectors["y-"], cw))
            x_minus_mid = tuple(wedge_cw_sort(o, ps.points, sectors["x-"], cw))

            # frame-cw within X+ runs x+_q .. x+_2, so ascending labels are
            # the reverse; X- runs x-_2 .. x-_p in frame-cw order already.
            x_minus = (rk[3].point,) + x_minus_mid + (rk[0].point,)
            x_plus = (rk[2].point,) + x_plus_mid[::-1] + (rk[1].point,)
            counts = QuadrantCounts(
                p=len(x_minus_mid) + 1, q=len(x_plus_mid) + 1,
                r=len(y_minus), s=len(y_plus),
            )
            frames.append(QuadrantFrame(
                ps=ps, a=a, b=b, contact=contact, o=o, o_index=o_index,
                a_role=seg(*a_role), b_role=seg(*b_role), sense=sense,
                relabel_index=2 * k + (0 if sense == 1 else 1),
                counts=counts, x_minus=x_minus, x_plus=x_plus,
                y_minus=y_minus, y_plus=y_plus, leaves=leaves,
            ))
    return frames


def _rank_key(f: QuadrantFrame):
    p, q, r, s = f.counts
    return (-s, -q, -r, -p, f.relabel_index)


def enumerate_frames(ps, a, b, mode: str = "paper") -> List[QuadrantFrame]:
    """Valid frames under the requested normalization, best-ranked first.

    mode "paper":   |Y+| maximal among the four wedges and q >= p (Remark-9
                    normalization for crossing contact; q >= p for shared).
    mode "relaxed": s >= max(r, 1) and q >= p (everything the Case-1
                    machinery actually needs; used on derived scenes).
    """
    cands = _candidate_frames(ps, a, b)
    out = []
    for f in cands:
        p, q, r, s = f.counts
        if q < p:
            continue
        if f.contact == CROSSING:
            if mode == "paper":
                if s < max(r, q - 1, p - 1):
                    continue
            elif s < max(r, 1):
                continue
        out.append(f)
    out.sort(key=_rank_key)
    return out


def build_frame(ps: PointSet, a: tuple, b: tuple, mode: str = "paper",
                require_distance2: bool = False) -> QuadrantFrame:
    """The normalized quadrant frame for a pair with a common point o.

    The frame itself only needs a common point (DisjointSegmentsError when
    there is none); pass require_distance2=True to also insist on a common
    neighbor in D(P), reporting NotDistanceTwoError otherwise.
    """
    frames = enumerate_frames(ps, a, b, mode=mode)
    if not frames:
        raise PreconditionError("no valid frame relabeling; unnormalizable input")
    frame = frames[0]
    if require_distance2 and not _has_common_neighbor(ps, seg(*a), seg(*b)):
        raise NotDistanceTwoError(
            "a and b share a point but have no common neighbor (distance > 2)")
    return frame


def _has_common_neighbor(ps, a, b) -> bool:
    n = len(ps)
    ends = {*a, *b}
    for i in range(n):
        for j in range(i + 1, n):
            if i in ends or j in ends:
                continue
            e = (i, j)
            if intersection_kind(ps, e, a).is_disjoint and \
               intersection_kind(ps, e, b).is_disjoint:
                return True
    return False


# --- neighbor partition -----------------------------------------------------

@dataclass(frozen=True)
class NeighborhoodPartition:
    A: tuple   # meet b, avoid a
    B: tuple   # meet a, avoid b
    D: tuple   # avoid both (common neighbors)

    @property
    def delta2(self) -> int:
        return len(self.D)

    @property
    def delta3(self) -> int:
        return min(len(self.A), len(self.B))

    @property
    def delta_ab(self) -> int:
        return self.delta2 + self.delta3


def partition_neighbors(frame: QuadrantFrame,
                        cross_check: Optional[bool] = None) -> NeighborhoodPartition:
    """Compute A, B, D geometrically; for Case-1 frames the result is also
    checked against the paper's six-subset characterization and the closed
    forms for |A|, |B|, |D|."""
    ps, a, b = frame.ps, frame.a_role, frame.b_role
    A, B, D = [], [], []
    n = len(ps)
    for i in range(n):
        for j in range(i + 1, n):
            e = (i, j)
            if e == a or e == b:
                continue
            da = intersection_kind(ps, e, a).is_disjoint if not set(e) & set(a) \
                else False
            db = intersection_kind(ps, e, b).is_disjoint if not set(e) & set(b) \
                else False
            if da and db:
                D.append(e)
            elif da:
                A.append(e)  # adjacent to a only
            elif db:
                B.append(e)  # adjacent to b only
    part = NeighborhoodPartition(tuple(A), tuple(B), tuple(D))
    if cross_check is None:
        cross_check = frame.contact == CROSSING and segments_large(ps, a, b)
    if cross_check:
        _check_case1_partition(frame, part)
    return part


def _label_products(frame, fams1, fams2):
    pts1 = frame.sector_points(fams1) if isinstance(fams1, str) \
        else tuple(frame.point_of(l) for l in fams1)
    pts2 = frame.sector_points(fams2) if isinstance(fams2, str) \
        else tuple(frame.point_of(l) for l in fams2)
    return {seg(u, v) for u in pts1 for v in pts2 if u != v}


def _check_case1_partition(frame: QuadrantFrame, part: NeighborhoodPartition):
    p, q, r, s = frame.counts
    A_pred = set()
    A_pred |= _label_products(frame, "x+", [("x+", 1)])
    A_pred |= _label_products(frame, "x+", "y-")
    A_pred |= _label_products(frame, [("x+", 1)], "y-")
    A_pred |= _label_products(frame, "x-", [("x-", p + 1)])
    A_pred |= _label_products(frame, "x-", "y+")
    A_pred |= _label_products(frame, [("x-", p + 1)], "y+")
    B_pred = set()
    B_pred |= _label_products(frame, "y+", [("x+", q + 1)])
    B_pred |= _label_products(frame, "y+", "x+")
    B_pred |= _label_products(frame, [("x+", q + 1)], "x+")
    B_pred |= _label_products(frame, "y-", [("x-", 1)])
    B_pred |= _label_products(frame, "y-", "x-")
    B_pred |= _label_products(frame, [("x-", 1)], "x-")
    D_pred = set()
    for fam in ("x-", "x+", "y-", "y+"):
        pts = frame.sector_points(fam)
        D_pred |= {seg(u, v) for i, u in enumerate(pts) for v in pts[i + 1:]}

    if set(part.A) != A_pred or set(part.B) != B_pred or set(part.D) != D_pred:
        raise VerificationError(
            "six-subset characterization mismatch: "
            f"A {sorted(set(part.A) ^ A_pred)}, "
            f"B {sorted(set(part.B) ^ B_pred)}, "
            f"D {sorted(set(part.D) ^ D_pred)}")
    if len(part.A) != size_A_formula(frame.counts) or \
       len(part.B) != size_B_formula(frame.counts) or \
       len(part.D) != delta2_formula(frame.counts):
        raise VerificationError("closed-form |A|/|B|/|D| mismatch")


# --- the pairing map psi ----------------------------------------------------

@dataclass(frozen=True)
class PsiDomain:
    """The partition of A' = A minus the exclusion set into the eight blocks,
    with the exclusion set itself."""

    blocks: Dict[str, tuple] = field(default_factory=dict)
    iota: tuple = ()


def iota_set(frame: QuadrantFrame) -> tuple:
    """Exclusion set: x-_{p+1} y+_s, plus x+_1 y-_r when Y- is nonempty, plus
    x+_1 x+_q when q > p (when q = p that segment already belongs to block A1
    and is mapped by psi; excluding it would break the count)."""
    p, q, r, s = frame.counts
    if s < 1:
        raise PreconditionError("iota needs s >= 1")
    out = [frame.segment_of(("x-", p + 1), ("y+", s))]
    if r >= 1:
        out.append(frame.segment_of(("x+", 1), ("y-", r)))
    if q > p:
        out.append(frame.segment_of(("x+", 1), ("x+", q)))
    return tuple(out)


def _block_of(frame: QuadrantFrame, uv: tuple) -> Optional[Tuple[str, Label, Label]]:
    """Identify the psi block of uv; returns (name, key-label, other-label)."""
    p, q, r, s = frame.counts
    try:
        l1, l2 = frame.label_of(uv[0]), frame.label_of(uv[1])
    except KeyError:
        return None
    labels = {l1, l2}

    def take(fam, pred):
        for l in labels:
            if l[0] == fam and pred(l[1]):
                other = (labels - {l}).pop()
                return l, other
        return None

    # A1: X+_p x {x+_1}
    if ("x+", 1) in labels:
        hit = take("x+", lambda j: 2 <= j <= p)
        if hit:
            return ("A1", hit[0], hit[1])
    # A2: X+_p x Y-
    hit = take("x+", lambda j: 2 <= j <= p)
    if hit and hit[1][0] == "y-":
        return ("A2", hit[0], hit[1])
    # A3: {x+_1} x Y-_{r-1}
    if ("x+", 1) in labels:
        hit = take("y-", lambda i: 1 <= i <= r - 1)
        if hit:
            return ("A3", hit[0], hit[1])
    # A4: X- x {x-_{p+1}}
    if ("x-", p + 1) in labels:
        hit = take("x-", lambda j: 2 <= j <= p)
        if hit:
            return ("A4", hit[0], hit[1])
    # A5: X- x Y+
    hit = take("x-", lambda j: 2 <= j <= p)
    if hit and hit[1][0] == "y+":
        return ("A5", hit[0], hit[1])
    # A6: {x-_{p+1}} x Y+_{s-1}
    if ("x-", p + 1) in labels:
        hit = take("y+", lambda i: 1 <= i <= s - 1)
        if hit:
            return ("A6", hit[0], hit[1])
    # A7: (X+ \ X+_p) x Y-
    hit = take("x+", lambda j: p + 1 <= j <= q)
    if hit and hit[1][0] == "y-":
        return ("A7", hit[0], hit[1])
    # A8: (X+_{q-1} \ X+_p) x {x+_1}
    if ("x+", 1) in labels:
        hit = take("x+", lambda j: p + 1 <= j <= q - 1)
        if hit:
            return ("A8", hit[0], hit[1])
    return None


def psi(frame: QuadrantFrame, uv: tuple) -> tuple:
    """The paper's injective pairing from A' into B (all eight branches,
    sentinel labels resolved)."""
    uv = seg(*uv)
    if uv in iota_set(frame):
        raise NotInDomainError(f"{uv} lies in the exclusion set")
    blk = _block_of(frame, uv)
    if blk is None:
        raise NotInDomainError(f"{uv} is not in A'")
    name, key, other = blk
    p, q, r, s = frame.counts
    if name == "A1":
        j = key[1]
        return frame.segment_of(("y-", 1), ("x-", j))
    if name == "A2":
        j, i = key[1], other[1]
        return frame.segment_of(("y-", i + 1), ("x-", j))
    if name == "A3":
        i = key[1]
        return frame.segment_of(("y-", i + 1), ("x-", 1))
    if name == "A4":
        j = key[1]
        return frame.segment_of(("y+", 1), ("x+", j))
    if name == "A5":
        j, i = key[1], other[1]
        return frame.segment_of(("y+", i + 1), ("x+", j))
    if name == "A6":
        i = key[1]
        return frame.segment_of(("y+", i + 1), ("x+", p + 1))
    if name == "A7":
        j, i = key[1], other[1]
        return frame.segment_of(("y+", s - i + 1), ("x+", j + 1))
    j = key[1]  # A8
    return frame.segment_of(("x+", j + 1), ("x+", q + 1))


def psi_domain(frame: QuadrantFrame,
               part: Optional[NeighborhoodPartition] = None) -> PsiDomain:
    """Block decomposition of A' for a Case-1 frame."""
    if part is None:
        part = partition_neighbors(frame)
    iota = iota_set(frame)
    blocks: Dict[str, list] = {f"A{i}": [] for i in range(1, 9)}
    for uv in part.A:
        if uv in iota:
            continue
        blk = _block_of(frame, uv)
        if blk is None:
            raise VerificationError(f"A-element {uv} matches no psi block")
        blocks[blk[0]].append(uv)
    return PsiDomain(
        blocks={k: tuple(sorted(v)) for k, v in blocks.items()}, iota=iota)


def expected_block_sizes(counts: QuadrantCounts) -> Dict[str, int]:
    """|A_i| per the paper's image-size display."""
    p, q, r, s = counts
    return {
        "A1": p - 1,
        "A2": r * (p - 1),
        "A3": max(0, r - 1),
        "A4": p - 1,
        "A5": s * (p - 1),
        "A6": max(0, s - 1),
        "A7": r * (q - p),
        "A8": max(0, q - p - 1),
    }
