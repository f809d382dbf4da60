"""Reproducible point-set families: convex position, double chain, random.

Seeding uses Python's `random.Random` (Mersenne Twister).  Cross-language
ports should rely on the shipped test vectors rather than PRNG equality.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import RejectionBudgetError
from .geometry import Point, PointSet, check_general_position, orientation

_JITTER_ATTEMPTS = 64


def gen_convex(n: int, seed: int) -> PointSet:
    """n integer points in convex position, labeled clockwise.

    Points are placed on a large circle at seeded distinct angles and rounded
    to integers; collinear roundings are repaired by re-drawing the angles.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(seed)
    radius = max(64, 4 * n * n)
    for _ in range(_JITTER_ATTEMPTS):
        pts = _convex_attempt(n, rng, radius)
        if pts is not None:
            return PointSet(pts)
        radius *= 2
    raise RejectionBudgetError("could not build a convex set; widen the radius")


def _convex_attempt(n, rng, radius):
    # distinct angle cells keep the clockwise order stable under rounding
    import math

    offsets = sorted(rng.uniform(0.05, 0.95) for _ in range(n))
    pts = []
    for k in range(n):
        theta = 2 * math.pi * (k + offsets[k]) / n
        # clockwise labeling: angle decreases as the index grows
        x = int(round(radius * math.cos(-theta)))
        y = int(round(radius * math.sin(-theta)))
        pts.append(Point(x, y))
    if check_general_position(pts) is not None:
        return None
    if not _strictly_convex_cw(pts):
        return None
    return pts


def _strictly_convex_cw(pts) -> bool:
    n = len(pts)
    for i in range(n):
        if orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) != -1:
            return False
    return True


def gen_double_chain(n: int, seed: int) -> PointSet:
    """The classical double chain: an upper and a lower convex chain that
    mutually avoid each other; ceil(n/2) points up, floor(n/2) down."""
    if n < 4:
        raise ValueError("need n >= 4")
    rng = random.Random(seed)
    k_up = (n + 1) // 2
    k_down = n // 2
    big = n * n + 1
    scale = 8  # curvature dominates the seeded jitter below
    for _ in range(_JITTER_ATTEMPTS):
        pts = []
        for i in range(k_up):
            x = i - (k_up - 1) / Fraction(2)
            pts.append(Point(Fraction(4 * x), Fraction(big) + scale * x * x
                             + rng.randrange(0, 3)))
        for i in range(k_down):
            x = i - (k_down - 1) / Fraction(2)
            pts.append(Point(Fraction(4 * x) + 1, -Fraction(big) - scale * x * x
                             - rng.randrange(0, 3)))
        if check_general_position(pts) is None:
            return PointSet(pts)
    raise RejectionBudgetError("double chain jitter failed repeatedly")


def gen_random(n: int, seed: int, bound: int | None = None) -> PointSet:
    """Rejection-sample n integer points in [0, bound]^2 in general position.

    Deterministic per (n, seed, bound).  Each point is redrawn until it is
    neither a duplicate nor collinear with an existing pair.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if bound is None:
        bound = max(n * n, 100)
    if bound < n * n:
        raise ValueError("bound must be at least n^2")
    rng = random.Random(seed)
    pts: list[Point] = []
    budget = 1000 * n
    while len(pts) < n:
        if budget <= 0:
            raise RejectionBudgetError(
                f"rejection budget exceeded for n={n}, bound={bound}"
            )
        budget -= 1
        cand = Point(rng.randrange(0, bound + 1), rng.randrange(0, bound + 1))
        if any(cand == p for p in pts):
            continue
        ok = True
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if orientation(pts[i], pts[j], cand) == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            pts.append(cand)
    return PointSet(pts)


FAMILIES = {
    "convex": lambda n, seed, bound=None: gen_convex(n, seed),
    "double_chain": lambda n, seed, bound=None: gen_double_chain(n, seed),
    "random_uniform": gen_random,
}


def generate(family: str, n: int, seed: int, bound: int | None = None) -> PointSet:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; have {sorted(FAMILIES)}")
    return FAMILIES[family](n, seed, bound)
