"""Closed-form quantities: the connectivity bound kappa(n), its difference
formula, and the quadrant counting formulas for |D|, |A| and the length-3
path maximum."""
from __future__ import annotations

from dataclasses import dataclass


def choose2(m: int) -> int:
    """Binomial(m, 2) with the convention C(m,2) = 0 for m < 2."""
    return m * (m - 1) // 2 if m >= 2 else 0


def kappa(n: int) -> int:
    """C(floor((n-2)/2), 2) + C(ceil((n-2)/2), 2); the connectivity bound."""
    if n < 3:
        raise ValueError("kappa is defined for n >= 3")
    lo = (n - 2) // 2
    hi = n - 2 - lo
    return choose2(lo) + choose2(hi)


def kappa_difference(n: int) -> int:
    """kappa(n) - kappa(n-1) in closed form: (n-3)/2 odd n, (n-4)/2 even n."""
    if n < 4:
        raise ValueError("kappa_difference is defined for n >= 4")
    return (n - 3) // 2 if n % 2 == 1 else (n - 4) // 2


@dataclass(frozen=True)
class QuadrantCounts:
    """Sector point counts around o: |X^-| = p-1, |X^+| = q-1, |Y^-| = r,
    |Y^+| = s."""

    p: int
    q: int
    r: int
    s: int

    def __iter__(self):
        return iter((self.p, self.q, self.r, self.s))

    @property
    def n_crossing(self) -> int:
        return self.p + self.q + self.r + self.s + 2

    @property
    def n_shared(self) -> int:
        return self.p + self.q + self.r + self.s + 1

    def is_case1_normalized(self) -> bool:
        return self.s >= self.r >= 0 and self.q >= self.p >= 1

    def is_case2_normalized(self) -> bool:
        return self.r >= 0 and self.s >= 0 and self.q >= self.p >= 1


def delta2_formula(c: QuadrantCounts) -> int:
    """|D| = C(q-1,2) + C(p-1,2) + C(r,2) + C(s,2)."""
    return choose2(c.q - 1) + choose2(c.p - 1) + choose2(c.r) + choose2(c.s)


def delta3_formula(c: QuadrantCounts) -> int:
    """min(|A|, |B|) = |A| = p(s+1) + q(r+1) - 2 under Case-1 normalization."""
    return c.p * (c.s + 1) + c.q * (c.r + 1) - 2


def size_A_formula(c: QuadrantCounts) -> int:
    return c.p * (c.s + 1) + c.q * (c.r + 1) - 2


def size_B_formula(c: QuadrantCounts) -> int:
    return c.p * (c.r + 1) + c.q * (c.s + 1) - 2


def eta3_formula(c: QuadrantCounts) -> int:
    """Maximum number of pairwise internally disjoint length-3 a-b paths in
    G minus D: delta3 - 1 when q = 1 and r = 0, else delta3.  Needs s >= 1."""
    if c.s < 1:
        raise ValueError("eta3 needs s >= 1")
    d3 = delta3_formula(c)
    if c.q == 1 and c.r == 0:
        return d3 - 1
    return d3


def balanced_split_is_minimum(n: int) -> bool:
    """Check that C(n1,2)+C(n2,2) over n1+n2 = n-2 is minimized by the
    balanced split; exhaustive."""
    target = kappa(n)
    return all(choose2(n1) + choose2(n - 2 - n1) >= target for n1 in range(n - 1))
