"""Combinatorics of the min-set fan, its skeletons and their block
refinements.

A cone is described combinatorially: ``min_set`` lists the coordinates where
the minimum is attained; for a maximal cone of a refinement, ``middle`` and
``top`` split the remaining coordinates into a block strictly above the
minimum and a block strictly above everything in the middle.  All geometry
reduces to min-set and ordering patterns of the coordinates, so no polyhedral
machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable


@dataclass(frozen=True)
class ConeId:
    """Combinatorial descriptor of a cone (1-based coordinate indices)."""

    n: int
    min_set: frozenset
    middle: frozenset = frozenset()
    top: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "min_set", frozenset(self.min_set))
        object.__setattr__(self, "middle", frozenset(self.middle))
        object.__setattr__(self, "top", frozenset(self.top))
        allv = set(range(1, self.n + 1))
        if not self.min_set or not self.min_set <= allv:
            raise ValueError("min_set must be a nonempty subset of 1..n")
        if not (self.middle <= allv and self.top <= allv):
            raise ValueError("middle/top must be subsets of 1..n")
        if self.min_set & self.middle or self.min_set & self.top or self.middle & self.top:
            raise ValueError("min_set, middle and top must be pairwise disjoint")
        if (self.middle or self.top) and (
            self.min_set | self.middle | self.top != allv
        ):
            raise ValueError("refinement cones must partition all coordinates")

    def is_refinement(self) -> bool:
        return bool(self.middle or self.top)

    def to_json(self) -> dict:
        return {
            "min": sorted(self.min_set),
            "middle": sorted(self.middle),
            "top": sorted(self.top),
        }


def cone_dim(c: ConeId) -> int:
    """Dimension of the cone: the common minimum plus one free value per
    coordinate outside the min-set."""
    dim = c.n - len(c.min_set) + 1
    if c.is_refinement():
        if len(c.middle) + len(c.top) != dim - 1:
            raise ValueError("inconsistent refinement partition")
    return dim


def maximal_cones(n: int, m: int) -> list:
    """All maximal cones of the m-skeleton: min-sets of size n-m+1."""
    if not 0 < m <= n:
        raise ValueError("need 0 < m <= n")
    size = n - m + 1
    return [ConeId(n, frozenset(a)) for a in combinations(range(1, n + 1), size)]


def refinement_maximal_cones(n: int, m: int, t: int) -> list:
    """All maximal cones of the t-refinement of the m-skeleton."""
    if not (0 < t < m - 1 < n - 1):
        raise ValueError("need 0 < t < m-1 < n-1")
    out = []
    for a in combinations(range(1, n + 1), n - m + 1):
        rest = [i for i in range(1, n + 1) if i not in a]
        for top in combinations(rest, t):
            middle = frozenset(rest) - frozenset(top)
            out.append(ConeId(n, frozenset(a), middle, frozenset(top)))
    assert len(out) == comb(n, n - m + 1) * comb(m - 1, t)
    return out


def adjacent_pairs(n: int, m: int, t: int) -> list:
    """Unordered pairs of refinement cones sharing the same min-set but
    splitting middle/top differently."""
    groups: dict = {}
    for c in refinement_maximal_cones(n, m, t):
        groups.setdefault(c.min_set, []).append(c)
    out = []
    for a in sorted(groups, key=sorted):
        cones = groups[a]
        out.extend((cones[i], cones[j]) for i in range(len(cones)) for j in range(i + 1, len(cones)))
    return out


def _ladder(count: int, gap: int) -> list:
    """Smallest integer ladder 1, gap*1+1, gap*(gap+1)+1, ... with each value
    strictly exceeding gap times its predecessor."""
    vals = []
    v = 1
    for _ in range(count):
        vals.append(v)
        v = gap * v + 1
    return vals


def interior_point(c: ConeId, c_gap: int = 1) -> tuple:
    """A deterministic interior point: zero on the min-set, then the smallest
    integer ladder with the given gap factor across middle then top."""
    if c_gap < 1:
        raise ValueError("gap factor must be at least 1")
    blocks = _blocks(c)
    free = [i for b in blocks for i in b]
    vals = _ladder(len(free), c_gap)
    w = [0] * c.n
    for i, v in zip(free, vals):
        w[i - 1] = v
    return tuple(w)


def _blocks(c: ConeId) -> list:
    if c.is_refinement():
        return [sorted(c.middle), sorted(c.top)]
    rest = sorted(set(range(1, c.n + 1)) - c.min_set)
    return [rest] if rest else []


def interior_points(c: ConeId, c_gap: int, count: int) -> list:
    """``count`` distinct interior points of the open cone.

    The ladder values and the gap vary with the sample index, and the
    assignment of ladder rungs is permuted within each block; relative order
    inside a block is unconstrained in the open cone, so every assignment
    stays interior.  Sampling both block orderings is what lets constancy
    probes detect a cone that the sampled tropical fan actually splits.
    """
    if count < 1:
        raise ValueError("need at least one point")
    blocks = _blocks(c)
    block_perms = [list(permutations(b)) for b in blocks]
    out = []
    for q in range(count):
        arrangement = []
        idx = q
        for perms in block_perms:
            arrangement.extend(perms[idx % len(perms)])
            idx //= len(perms)
        vals = _ladder(len(arrangement), c_gap + q)
        w = [0] * c.n
        for i, v in zip(arrangement, vals):
            w[i - 1] = v
        out.append(tuple(w))
    return out


def locate(w: Iterable, m: int, t: int | None = None) -> ConeId | None:
    """The relatively open cone of the m-skeleton (or of its t-refinement)
    containing ``w``, or None when the minimum is attained fewer than n-m+1
    times.

    With ``t`` given, a maximal refinement cone is returned only when the
    strict block pattern holds; otherwise the point lies on the refinement's
    internal boundary and the plain min-set cone containing it is returned.
    """
    w = tuple(w)
    n = len(w)
    mn = min(w)
    a = frozenset(i + 1 for i, x in enumerate(w) if x == mn)
    if len(a) < n - m + 1:
        return None
    if t is None or len(a) > n - m + 1:
        return ConeId(n, a)
    if not 0 < t < m - 1:
        raise ValueError("need 0 < t < m-1 for a refinement lookup")
    rest = sorted((x for x in range(1, n + 1) if x not in a), key=lambda i: w[i - 1])
    middle, top = rest[: m - 1 - t], rest[m - 1 - t:]
    if w[middle[-1] - 1] < w[top[0] - 1]:
        return ConeId(n, a, frozenset(middle), frozenset(top))
    return ConeId(n, a)
