import random
from itertools import permutations
from math import comb

import pytest

from gentrop.fans import (
    ConeId,
    adjacent_pairs,
    cone_dim,
    interior_point,
    interior_points,
    locate,
    maximal_cones,
    refinement_maximal_cones,
)


def test_cone_dim_examples():
    assert cone_dim(ConeId(5, frozenset(range(1, 6)))) == 1
    assert cone_dim(ConeId(5, {1, 2})) == 4
    assert cone_dim(ConeId(5, {1, 2, 3})) == 3
    refinement = ConeId(5, {1, 2}, {3, 4}, {5})
    assert cone_dim(refinement) == 4
    with pytest.raises(ValueError):
        cone_dim(ConeId(5, {1, 2}, {3}, {5}))


def test_cone_id_validation():
    with pytest.raises(ValueError):
        ConeId(3, set())
    with pytest.raises(ValueError):
        ConeId(3, {1}, {1}, {2})
    with pytest.raises(ValueError):
        ConeId(3, {1, 4})


def test_maximal_cone_counts():
    assert len(maximal_cones(5, 4)) == comb(5, 2) == 10
    assert len(maximal_cones(3, 3)) == 3
    assert len(maximal_cones(2, 1)) == 1
    for n in range(2, 7):
        for m in range(1, n + 1):
            assert len(maximal_cones(n, m)) == comb(n, n - m + 1)


def test_refinement_counts_against_bruteforce():
    assert len(refinement_maximal_cones(5, 4, 1)) == 30
    assert len(refinement_maximal_cones(5, 3, 1)) == comb(5, 3) * comb(2, 1) == 20
    with pytest.raises(ValueError):
        refinement_maximal_cones(5, 4, 3)  # t = m-1 is degenerate
    for n in range(3, 7):
        for m in range(2, n):
            for t in range(1, m - 1):
                want = {
                    (frozenset(p[: n - m + 1]), frozenset(p[n - t:]))
                    for p in permutations(range(1, n + 1))
                }
                got = {
                    (c.min_set, c.top) for c in refinement_maximal_cones(n, m, t)
                }
                assert got == want
                assert len(refinement_maximal_cones(n, m, t)) == comb(
                    n, n - m + 1
                ) * comb(m - 1, t)


def test_adjacent_pairs():
    pairs = adjacent_pairs(5, 4, 1)
    by_a = {}
    for a, b in pairs:
        assert a.min_set == b.min_set
        assert (a.middle, a.top) != (b.middle, b.top)
        by_a.setdefault(a.min_set, []).append((a, b))
    # three refinement cones over each min-set pair into three pairs
    assert all(len(v) == 3 for v in by_a.values())
    assert len(adjacent_pairs(5, 3, 1)) == comb(5, 3) * 1
    with pytest.raises(ValueError):
        adjacent_pairs(5, 4, 3)


def test_interior_point_examples():
    c = ConeId(5, {1, 2, 3}, {4}, {5})
    assert interior_point(c, 3) == (0, 0, 0, 1, 4)
    diag = ConeId(4, frozenset(range(1, 5)))
    assert interior_point(diag) == (0, 0, 0, 0)
    assert interior_point(ConeId(3, {1, 2}), 1) == (0, 0, 1)


def test_interior_point_gap_condition():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 6)
        m = rng.randint(2, n)
        gap = rng.randint(1, 5)
        cones = maximal_cones(n, m)
        c = cones[rng.randrange(len(cones))]
        w = interior_point(c, gap)
        vals = sorted(v for v in w if v > 0)
        prev = None
        for v in vals:
            if prev is not None:
                assert gap * prev < v
            prev = v


def test_locate_examples():
    assert locate((0, 0, 1, 2, 3), 4) == ConeId(5, {1, 2})
    got = locate((0, 0, 1, 2, 3), 4, 1)
    assert got == ConeId(5, {1, 2}, {3, 4}, {5})
    assert locate((0, 1, 2, 3, 4), 4) is None
    assert locate((0, 0, 0, 0, 0), 4) == ConeId(5, frozenset(range(1, 6)))


def test_locate_boundary_of_refinement():
    # top tie: not in any maximal open refinement cone
    got = locate((0, 0, 1, 1, 1), 4, 1)
    assert got == ConeId(5, {1, 2})
    assert not got.is_refinement()


def test_locate_interior_point_roundtrip():
    for n in range(2, 7):
        for m in range(1, n + 1):
            for c in maximal_cones(n, m):
                for gap in (1, 3):
                    assert locate(interior_point(c, gap), m) == c
        for m in range(2, n):
            for t in range(1, m - 1):
                for c in refinement_maximal_cones(n, m, t):
                    assert locate(interior_point(c, 2), m, t) == c


def test_interior_points_vary_and_stay_interior():
    c = ConeId(5, {1, 2}, {3, 4}, {5})
    pts = interior_points(c, 2, 4)
    assert len(set(pts)) == 4
    for w in pts:
        assert locate(w, 4, 1) == c
    # middle orderings must both occur so splits can be detected
    orders = {tuple(sorted({3, 4}, key=lambda i: w[i - 1])) for w in pts}
    assert orders == {(3, 4), (4, 3)}


def test_point_in_exactly_one_open_cone():
    rng = random.Random(11)
    n = 5
    for _ in range(200):
        w = tuple(rng.randint(-3, 3) for _ in range(n))
        for m in range(1, n + 1):
            hits = []
            for size in range(n - m + 1, n + 1):
                mn = min(w)
                a = frozenset(i + 1 for i, x in enumerate(w) if x == mn)
                if len(a) == size:
                    hits.append(a)
            members = 1 if len(frozenset(i + 1 for i, x in enumerate(w) if x == min(w))) >= n - m + 1 else 0
            assert len(hits) == members
            got = locate(w, m)
            assert (got is not None) == bool(members)


def test_skeleton_faces_are_faces_of_maximal_cones():
    # every lower-dimensional min-set cone extends to a maximal one by
    # enlarging the min-set
    n, m = 5, 3
    maximal = {c.min_set for c in maximal_cones(n, m)}
    for size in range(n - m + 1, n + 1):
        from itertools import combinations

        for a in combinations(range(1, n + 1), size):
            assert any(set(b) <= set(a) for b in maximal)
