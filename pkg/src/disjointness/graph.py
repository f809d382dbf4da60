"""The disjointness graph D(P) and exact graph oracles.

Vertices are the C(n,2) closed segments with endpoints in P; two vertices are
adjacent iff the segments are disjoint.  Adjacency is stored as bitset rows
(Python integers), which keeps the pair sweeps cheap at desk scale.

`max_disjoint_paths` is Menger's quantity eta(a, b): unit-capacity max-flow on
the vertex-split digraph, with an explicit witness decomposition.
"""
from __future__ import annotations

import json
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NoDistanceTwoPairError
from .geometry import PointSet, intersection_kind, seg


class BitGraph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency."""

    def __init__(self, n: int):
        self.n = n
        self.rows = [0] * n

    def add_edge(self, u: int, v: int):
        if u == v:
            raise ValueError("no self-loops")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def adjacent(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int):
        row = self.rows[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def edges(self):
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    yield (u, v)
                row >>= 1
                v += 1

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


class DisjointnessGraph(BitGraph):
    """D(P) plus the segment/vertex dictionaries."""

    def __init__(self, ps: PointSet):
        self.point_set = ps
        n = len(ps)
        self.n_points = n
        self.segments: List[tuple] = [
            (i, j) for i in range(n) for j in range(i + 1, n)
        ]
        self.vertex_of: Dict[tuple, int] = {
            s: k for k, s in enumerate(self.segments)
        }
        super().__init__(len(self.segments))

    def vertex(self, s: tuple) -> int:
        return self.vertex_of[seg(*s)]

    def segment(self, v: int) -> tuple:
        return self.segments[v]


def build_graph(ps: PointSet) -> DisjointnessGraph:
    """Enumerate all segment pairs and record adjacency = disjointness."""
    g = DisjointnessGraph(ps)
    m = len(g.segments)
    for u in range(m):
        su = g.segments[u]
        for v in range(u + 1, m):
            sv = g.segments[v]
            if set(su) & set(sv):
                continue  # shared endpoint: never adjacent
            if intersection_kind(ps, su, sv).is_disjoint:
                g.add_edge(u, v)
    return g


def degree_stats(g: BitGraph) -> Tuple[int, int, Dict[int, int]]:
    """(min degree, max degree, degree histogram)."""
    degs = [g.degree(v) for v in range(g.n)]
    hist: Dict[int, int] = {}
    for d in degs:
        hist[d] = hist.get(d, 0) + 1
    return min(degs), max(degs), dict(sorted(hist.items()))


def bfs_distances(g: BitGraph, src: int) -> List[Optional[int]]:
    dist: List[Optional[int]] = [None] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for v in g.neighbors(u):
            if dist[v] is None:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def distance(g: BitGraph, u: int, v: int) -> Optional[int]:
    """Shortest path length, or None if unreachable."""
    if u == v:
        raise ValueError("distance is defined for distinct vertices")
    return bfs_distances(g, u)[v]


def is_connected(g: BitGraph) -> bool:
    if g.n == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def is_complete(g: BitGraph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: List[List[int]] = [[] for _ in range(n)]
        self.to: List[int] = []
        self.cap: List[int] = []

    def add_edge(self, u: int, v: int, c: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: Optional[int] = None) -> int:
        flow = 0
        INF = limit if limit is not None else 1 << 60
        while flow < INF:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for eid in self.head[u]:
                    if self.cap[eid] > 0 and level[self.to[eid]] < 0:
                        level[self.to[eid]] = level[u] + 1
                        q.append(self.to[eid])
            if level[t] < 0:
                break
            it = [0] * self.n

            def augment() -> int:
                # iterative unit-style DFS along the level graph
                stack = [s]
                trail: List[int] = []  # edge ids along the current path
                while stack:
                    u = stack[-1]
                    if u == t:
                        pushed = min(self.cap[eid] for eid in trail)
                        for eid in trail:
                            self.cap[eid] -= pushed
                            self.cap[eid ^ 1] += pushed
                        return pushed
                    advanced = False
                    while it[u] < len(self.head[u]):
                        eid = self.head[u][it[u]]
                        v = self.to[eid]
                        if self.cap[eid] > 0 and level[v] == level[u] + 1:
                            stack.append(v)
                            trail.append(eid)
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        level[u] = -1  # dead end
                        stack.pop()
                        if trail:
                            trail.pop()
                return 0

            while flow < INF:
                pushed = augment()
                if not pushed:
                    break
                flow += pushed
        return flow


def _split_network(g: BitGraph, a: int, b: int):
    """Unit-capacity vertex-split digraph, direct a-b edge excluded.

    Node ids: in(v) = 2v, out(v) = 2v+1.  Source out(a), sink in(b).
    """
    net = _Dinic(2 * g.n)
    for v in range(g.n):
        if v != a and v != b:
            net.add_edge(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        if {u, v} == {a, b}:
            continue
        net.add_edge(2 * u + 1, 2 * v, 1)
        net.add_edge(2 * v + 1, 2 * u, 1)
    return net


def max_disjoint_paths(g: BitGraph, a: int, b: int,
                       value_only: bool = False):
    """eta(a, b): the maximum number of pairwise internally disjoint a-b
    paths, with a witness decomposition into such paths.

    For adjacent a, b the direct edge counts as one path (internally empty).
    Returns (count, paths) where each path is a vertex list from a to b;
    paths is None when value_only is set.
    """
    if a == b:
        raise ValueError("need distinct endpoints")
    direct = 1 if g.adjacent(a, b) else 0
    net = _split_network(g, a, b)
    s, t = 2 * a + 1, 2 * b
    flow = net.max_flow(s, t)
    count = flow + direct
    if value_only:
        return count, None

    paths = [[a, b]] if direct else []
    # walk saturated edges from the source; each internal vertex has split
    # capacity 1, so greedy edge-consuming walks recover vertex-disjoint paths
    used = [False] * len(net.to)

    def out_edge(u: int) -> Optional[int]:
        for eid in net.head[u]:
            if eid % 2 == 0 and not used[eid] and net.cap[eid] == 0:
                # forward edge fully saturated
                return eid
        return None

    for _ in range(flow):
        path = [a]
        node = s
        while node != t:
            eid = out_edge(node)
            assert eid is not None, "flow decomposition failed"
            used[eid] = True
            node = net.to[eid]
            if node % 2 == 0 and node != t:
                path.append(node // 2)
            elif node == t:
                path.append(b)
            node = node + 1 if node % 2 == 0 and node != t else node
        paths.append(path)
    return count, paths


def vertex_connectivity(g: BitGraph) -> int:
    """Exact kappa(G): 0 when disconnected, |V|-1 when complete, otherwise a
    minimum over the standard pivot family of max_disjoint_paths values."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if is_complete(g):
        return g.n - 1
    pivot = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.n - 1
    nbrs = sorted(g.neighbors(pivot))
    nbr_set = set(nbrs)
    for w in range(g.n):
        if w != pivot and w not in nbr_set:
            best = min(best, max_disjoint_paths(g, pivot, w, value_only=True)[0])
    for i, u in enumerate(nbrs):
        for w in nbrs[i + 1:]:
            if not g.adjacent(u, w):
                best = min(best, max_disjoint_paths(g, u, w, value_only=True)[0])
    return best


def connectivity_via_distance2(g: BitGraph) -> int:
    """kappa(G) computed as the minimum of eta over pairs at distance exactly
    2 (the restricted Menger criterion).  Connected non-complete graphs only.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    best = None
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if dist[v] == 2:
                val = max_disjoint_paths(g, u, v, value_only=True)[0]
                best = val if best is None else min(best, val)
    if best is None:
        raise NoDistanceTwoPairError("no pair at distance 2 (complete graph?)")
    return best


def graph_to_json(g: DisjointnessGraph) -> str:
    data = {
        "n": g.n_points,
        "vertices": [list(s) for s in g.segments],
        "edges": sorted([list(e) for e in g.edges()]),
    }
    return json.dumps(data)
