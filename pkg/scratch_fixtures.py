"""Scratch: exercise build_case1 across quadrant-count families."""
import itertools
import disjointness as dj
from disjointness import PointSet, seg


def make_crossing(p, q, r, s, consecutive=False):
    """Large crossing pair with sector counts |X-| = p-1 (left), |X+| = q-1
    (right), |Y-| = r (bottom), |Y+| = s (top).  Lines y = x/8 and y = -x/8.
    consecutive=True keeps Y+ points inside the leaf quadrilateral."""
    pts = [(-64, -8), (64, 8), (64, -8), (-64, 8)]  # a = 0-1, b = 2-3
    ys = [0, 1, -1, 2, -2, 3, -3]
    ys2 = [0, -1, 1, -2, 2, -3, 3]
    for k in range(q - 1):   # right sector
        pts.append((40 + 4 * k + k * k, ys[k]))
    for k in range(p - 1):   # left sector
        pts.append((-40 - 4 * k - k * k, ys2[k]))
    for k in range(s):       # top sector
        if consecutive:
            x = 2 * k - s
            pts.append((x, 7 - (x * x + 3) // 4))
        else:
            pts.append((2 * k - s, 20 + 3 * k + k * k))
    for k in range(r):       # bottom sector
        pts.append((2 * k - r + 1, -20 - 3 * k - k * k))
    ps = PointSet.from_coords(pts).validate()
    return ps, (0, 1), (2, 3)


def run(p, q, r, s, consecutive=False):
    ps, a, b = make_crossing(p, q, r, s, consecutive)
    f = dj.build_frame(ps, a, b)
    part = dj.partition_neighbors(f)
    coll = dj.build_case1(ps, a, b)
    g = dj.build_graph(ps)
    eta = dj.max_disjoint_paths(g, g.vertex(a), g.vertex(b), value_only=True)[0]
    ok = coll.size == part.delta_ab == eta
    print(f"req=({p},{q},{r},{s}) norm={tuple(f.counts)} sub={coll.subcase} "
          f"size={coll.size} delta={part.delta_ab} eta={eta} "
          f"repair={coll.meta.get('repair') is not None} {'OK' if ok else 'MISMATCH'}")
    assert ok


if __name__ == "__main__":
    combos = [
        (1, 1, 0, 2), (1, 1, 0, 3), (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 2, 2),
        (1, 2, 0, 1), (1, 2, 0, 2), (1, 2, 1, 1), (1, 2, 1, 2), (1, 2, 2, 2),
        (1, 3, 0, 2), (1, 3, 1, 1), (1, 3, 2, 2), (2, 2, 0, 1), (2, 2, 0, 2),
        (2, 2, 1, 1), (2, 2, 1, 2), (2, 2, 2, 2), (2, 3, 0, 2), (2, 3, 1, 2),
        (2, 3, 2, 2), (3, 3, 0, 2), (3, 3, 1, 3), (2, 4, 1, 1), (1, 4, 3, 3),
    ]
    for c in combos:
        run(*c)
    print("--- consecutive 7.1 family ---")
    for s in (2, 3, 4):
        run(1, 1, 0, s, consecutive=True)


def make_shared(p, q, r, s):
    """Large shared-endpoint pair: o at origin, leaves down-left/down-right.
    Lines y = x and y = -x; sector counts: left p-1, right q-1, bottom r,
    top s."""
    pts = [(0, 0), (-64, -64), (64, -64)]  # o = 0, a = 0-1, b = 0-2
    ys = [0, 1, -1, 2, -2, 3, -3]
    ys2 = [1, 2, -2, 3, -1, 4, -4]
    for k in range(q - 1):   # right sector: x > |y|
        pts.append((40 + 4 * k + k * k, ys[k]))
    for k in range(p - 1):   # left sector
        pts.append((-40 - 4 * k - k * k, ys2[k]))
    for k in range(s):       # top sector: y > |x|
        pts.append((2 * k - s, 20 + 3 * k + k * k))
    for k in range(r):       # bottom sector: y < -|x|, above hull edge y=-64
        pts.append((2 * k - r + 5, -20 - 3 * k - k * k))
    ps = PointSet.from_coords(pts).validate()
    return ps, (0, 1), (0, 2)


def run_shared(p, q, r, s):
    ps, a, b = make_shared(p, q, r, s)
    n = len(ps)
    f = dj.build_frame(ps, a, b)
    coll = dj.build_case2(ps, a, b)
    g = dj.build_graph(ps)
    eta = dj.max_disjoint_paths(g, g.vertex(a), g.vertex(b), value_only=True)[0]
    kn = dj.kappa(n)
    ok = kn <= coll.size <= eta
    print(f"req=({p},{q},{r},{s}) n={n} norm={tuple(f.counts)} "
          f"sub={coll.subcase} size={coll.size} kappa={kn} eta={eta} "
          f"{'OK' if ok else 'FAIL'}")
    assert ok
