"""Randomized genericity: coordinate transformations, generic initial ideals,
tropical membership, fan-structure probes, Cohen-Macaulay classification and
depth recovery.

Genericity is certified probabilistically: a fixed number of independently
drawn coordinate changes must agree on the computed value.  Disagreement
triggers bound escalation (twice, by a factor of 100) and then a
``GenericityFailure``.  Explicit transform injection (including the identity)
is available as a testing hook for reproducing non-generic behaviour.

Fan-structure statements (constancy of initial ideals on cone interiors,
failures across adjacent cones) are established by finite sampling and are
reported as sampled evidence; depth, dimension, multiplicity and witness
inequalities are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .fans import ConeId, interior_point, interior_points, maximal_cones
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Ideal,
    buchberger,
    contains_monomial,
    initial_ideal,
)
from .invariants import (
    MonomialIdeal,
    depth,
    dimension,
    is_strongly_stable,
    monomial_ideal_of,
)
from .poly import GREVLEX, OrderSpec, Polynomial, initial_form, normalize_weight

CM = "CM"
ALMOST_CM = "almostCM"
NEITHER = "neither"
DEPTH_ZERO = "depthZero"


class GenericityFailure(RuntimeError):
    """Independent coordinate changes disagreed, or evidence contradicted a
    classification, after all escalations."""


@dataclass(frozen=True)
class Transform:
    """An invertible linear coordinate change with exact integer entries.

    Acts on polynomials by substituting each variable with the linear form
    given by the corresponding matrix column: x_i maps to sum_j m[j][i] x_j.
    """

    matrix: tuple
    seed: int = 0
    bound: int = 0

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> "Transform":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class GenericityPolicy:
    """Sampling policy: ``samples`` independent transforms with entries in
    [-bound, bound] must agree.  ``transforms`` injects explicit transforms
    instead (testing hook; disables sampling and escalation)."""

    samples: int = 2
    bound: int = 1000
    seed: int = 0
    transforms: tuple | None = None

    def __post_init__(self):
        if self.transforms is not None:
            object.__setattr__(self, "transforms", tuple(self.transforms))
        elif self.samples < 2:
            raise ValueError("agreement requires at least two samples")
        if self.transforms is None and self.bound < 1:
            raise ValueError("bound must be at least 1")


def identity_policy(n: int) -> GenericityPolicy:
    """Policy evaluating everything through the identity transform."""
    return GenericityPolicy(transforms=(Transform.identity(n),))


def _det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def random_transform(
    n: int, policy: GenericityPolicy, index: int, rng: random.Random | None = None
) -> Transform:
    """Deterministic invertible transform number ``index`` under the policy.

    Entries are i.i.d. uniform integers in [-bound, bound]; singular draws are
    resampled (at most 100 attempts).  ``rng`` overrides the seeded stream for
    adversarial tests.
    """
    if policy.bound < 1:
        raise ValueError("bound must be at least 1")
    if rng is None:
        rng = random.Random(f"{policy.seed}:{policy.bound}:{index}")
    for _ in range(100):
        rows = tuple(
            tuple(rng.randint(-policy.bound, policy.bound) for _ in range(n))
            for _ in range(n)
        )
        if _det_int(rows) != 0:
            return Transform(rows, policy.seed, policy.bound)
    raise RuntimeError("could not draw an invertible transform in 100 attempts")


_APPLY_CACHE: dict = {}


def apply_transform(I: Ideal, g: Transform) -> Ideal:
    """The ideal generated by the images of the generators under g."""
    if g.n != I.n:
        raise ValueError("transform size does not match the ambient ring")
    cache_key = (I.key(), g.matrix)
    hit = _APPLY_CACHE.get(cache_key)
    if hit is not None:
        return hit
    n = I.n
    lin = []
    for i in range(n):
        e = [0] * n
        terms = []
        for j in range(n):
            if g.matrix[j][i]:
                ee = e.copy()
                ee[j] = 1
                terms.append((tuple(ee), Fraction(g.matrix[j][i])))
        lin.append(Polynomial(n, terms))
    powers: dict = {}

    def power(i: int, k: int) -> Polynomial:
        p = powers.get((i, k))
        if p is None:
            p = lin[i] ** k
            powers[(i, k)] = p
        return p

    gens = []
    for f in I.generators:
        acc = Polynomial.zero(n)
        for exps, c in f.terms:
            t = Polynomial.constant(n, c)
            for i, ei in enumerate(exps):
                if ei:
                    t = t * power(i, ei)
            acc = acc + t
        gens.append(acc)
    out = Ideal(n, gens)
    _APPLY_CACHE[cache_key] = out
    return out


def _policy_transforms(n: int, policy: GenericityPolicy) -> list:
    if policy.transforms is not None:
        return list(policy.transforms)
    return [random_transform(n, policy, i) for i in range(policy.samples)]


def _agreed(
    I: Ideal,
    policy: GenericityPolicy,
    compute: Callable,
    what: str,
    valid: Callable | None = None,
):
    """Evaluate ``compute`` on each transformed ideal and demand agreement,
    escalating the entry bound twice before giving up.

    ``valid`` vets the agreed value: transforms can agree while all being
    non-generic (small entry bounds), so a failed validity check escalates
    exactly like disagreement does."""
    reason = "independent transforms disagree"
    for escalation in range(3):
        pol = policy if escalation == 0 else replace(policy, bound=policy.bound * 100**escalation)
        values = [compute(apply_transform(I, g)) for g in _policy_transforms(I.n, pol)]
        if all(v == values[0] for v in values[1:]):
            if valid is None or valid(values[0]):
                return values[0]
            reason = "agreed value failed the genericity validity check"
        if policy.transforms is not None:
            break
    raise GenericityFailure(f"{what}: {reason}")


def _variable_priority(order: OrderSpec, n: int) -> tuple:
    """Variables sorted most significant first under the order (1-based)."""
    key = order.key_function(n)

    def unit(i: int) -> tuple:
        e = [0] * n
        e[i - 1] = 1
        return tuple(e)

    return tuple(sorted(range(1, n + 1), key=lambda i: key(unit(i)), reverse=True))


def gin(
    I: Ideal,
    order: OrderSpec = GREVLEX,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> MonomialIdeal:
    """The generic initial ideal: the common leading-monomial ideal of the
    transformed ideal across agreeing transforms.  The result must be
    strongly stable for the order's variable priority; a violation is
    treated as a genericity failure."""
    cache_key = (order, policy)
    hit = I.gin_cache.get(cache_key)
    if hit is not None:
        return hit
    if order.weight is not None:
        order = order.refine(normalize_weight(order.weight, I.n))
    priority = _variable_priority(order, I.n)

    def compute(gI: Ideal) -> MonomialIdeal:
        return monomial_ideal_of(gI, order, degree_cap)

    def stable(M: MonomialIdeal) -> bool:
        return is_strongly_stable(M, priority)

    M = _agreed(I, policy, compute, "generic initial ideal", valid=stable)
    I.gin_cache[cache_key] = M
    return M


def tropical_member(
    I: Ideal,
    w,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> bool:
    """Whether w lies in the tropical variety of the generic transform of I:
    the weighted initial ideal contains no monomial."""
    m = dimension(I, degree_cap)
    if m == 0:
        raise ValueError("zero-dimensional ideals have empty tropical variety")
    wn = normalize_weight(w, I.n)

    def compute(gI: Ideal) -> bool:
        # cheap certificate: a single-term initial form of a basis element
        # already exhibits a monomial inside the weighted initial ideal
        for g in buchberger(gI, GREVLEX, degree_cap):
            if initial_form(wn, g).is_monomial():
                return False
        J = initial_ideal(gI, wn, GREVLEX, degree_cap)
        return not contains_monomial(J, degree_cap)

    return _agreed(I, policy, compute, "tropical membership")


def _gap_degree(I: Ideal, policy: GenericityPolicy, degree_cap: int) -> int:
    return gin(I, GREVLEX, policy, degree_cap).max_degree()


def cone_constancy(
    I: Ideal,
    cone: ConeId,
    samples: int = 3,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> bool:
    """Sampled evidence that the open cone lies inside a single cone of the
    generic tropical fan: the weighted initial ideals at ``samples`` interior
    points (varying ladder values and within-block arrangements) coincide."""
    if samples < 2:
        raise ValueError("constancy needs at least two interior points")
    gap = _gap_degree(I, policy, degree_cap) + 1
    pts = interior_points(cone, gap, samples)

    def compute(gI: Ideal) -> bool:
        first = initial_ideal(gI, pts[0], GREVLEX, degree_cap).generators
        return all(
            initial_ideal(gI, w, GREVLEX, degree_cap).generators == first
            for w in pts[1:]
        )

    return _agreed(I, policy, compute, "cone constancy")


def adjacent_distinct(
    I: Ideal,
    c1: ConeId,
    c2: ConeId,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> bool:
    """Exact witness that two cones carry different weighted initial ideals,
    evaluated at their canonical interior points."""
    gap = _gap_degree(I, policy, degree_cap) + 1
    w1 = interior_point(c1, gap)
    w2 = interior_point(c2, gap)

    def compute(gI: Ideal) -> bool:
        a = initial_ideal(gI, w1, GREVLEX, degree_cap).generators
        b = initial_ideal(gI, w2, GREVLEX, degree_cap).generators
        return a != b

    return _agreed(I, policy, compute, "adjacent cone separation")


def _swap_coords(w: Sequence, a: int, b: int) -> tuple:
    out = list(w)
    out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
    return tuple(out)


def separating_witness(
    I: Ideal,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> tuple:
    """Two weight vectors in one maximal skeleton cone whose initial ideals
    are compared exactly; returns (w, v, distinct).

    The construction swaps the two ladder rungs around the depth position,
    so for 0 < depth < dim-1 the initial ideals provably differ, while for
    Cohen-Macaulay and almost-Cohen-Macaulay ideals the analogous pair (the
    first two rungs above the minimum) yields equal initial ideals.
    """
    n = I.n
    m = dimension(I, degree_cap)
    t = depth(I, policy)
    if t == 0:
        raise ValueError("witness construction requires positive depth")
    if m < 3:
        raise ValueError("witness construction requires dimension at least 3")
    p = n - t if t < m - 1 else n - m + 2
    perm = list(range(1, n + 1))
    perm[p - 1], perm[p] = perm[p], perm[p - 1]
    swapped = OrderSpec("grevlex", tuple(perm))
    c = max(
        gin(I, GREVLEX, policy, degree_cap).max_degree(),
        gin(I, swapped, policy, degree_cap).max_degree(),
    )
    base_cone = ConeId(n, frozenset(range(1, n - m + 2)))
    w = interior_point(base_cone, c + 1)
    v = _swap_coords(w, p, p + 1)

    def compute(gI: Ideal) -> bool:
        a = initial_ideal(gI, w, GREVLEX, degree_cap).generators
        b = initial_ideal(gI, v, GREVLEX, degree_cap).generators
        return a != b

    distinct = _agreed(I, policy, compute, "separating witness")
    return w, v, distinct


@dataclass(frozen=True)
class ProbeResult:
    """One verification probe: what was tested, where, and with which kind of
    evidence (exact inequality versus sampled constancy)."""

    kind: str
    cone: ConeId | None
    result: bool
    evidence: str
    detail: str = ""


@dataclass(frozen=True)
class ClassifyResult:
    label: str
    probes: tuple


def classify_cm(
    I: Ideal,
    policy: GenericityPolicy = GenericityPolicy(),
    points: int = 3,
    cross_validate: bool = True,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> ClassifyResult:
    """Depth-based Cohen-Macaulay classification, cross-validated against the
    fan structure: CM/almost-CM ideals must show constant initial ideals on
    every maximal skeleton cone, and intermediate depth must produce a
    separating witness."""
    m = dimension(I, degree_cap)
    if m == 0:
        raise ValueError("classification requires positive dimension")
    t = depth(I, policy)
    if t == m:
        label = CM
    elif t == m - 1:
        label = ALMOST_CM
    elif t == 0:
        label = DEPTH_ZERO
    else:
        label = NEITHER
    probes = []
    if cross_validate and label in (CM, ALMOST_CM):
        for cone in maximal_cones(I.n, m):
            ok = cone_constancy(I, cone, points, policy, degree_cap)
            probes.append(
                ProbeResult("cone_constancy", cone, ok, "sampled")
            )
            if not ok:
                raise GenericityFailure(
                    f"{label} classification contradicted by split cone {cone.to_json()}"
                )
    elif cross_validate and label == NEITHER:
        w, v, distinct = separating_witness(I, policy, degree_cap)
        probes.append(
            ProbeResult(
                "separating_witness",
                None,
                distinct,
                "exact",
                f"w={list(w)} v={list(v)}",
            )
        )
        if not distinct:
            raise GenericityFailure(
                "intermediate depth but no separating witness found"
            )
    return ClassifyResult(label, tuple(probes))


def ray_constancy(
    I: Ideal,
    w,
    directions: Iterable[int],
    policy: GenericityPolicy = GenericityPolicy(),
    c_gap: int | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> bool:
    """Whether pushing w far along each coordinate direction in ``directions``
    (1-based) leaves the weighted initial ideal unchanged.

    The probe moves the coordinate strictly beyond c times the current
    maximum, the threshold above which staying in the same fan cone is
    equivalent to genuine ray containment."""
    w = tuple(Fraction(x) for x in w)
    if c_gap is None:
        c_gap = _gap_degree(I, policy, degree_cap)
    mx = max(w)
    target = c_gap * mx + 1
    moved = []
    for j in sorted(set(directions)):
        if not 1 <= j <= I.n:
            raise ValueError(f"direction {j} out of range")
        w2 = list(w)
        w2[j - 1] = max(target, w[j - 1] + 1)
        moved.append(tuple(w2))

    def compute(gI: Ideal) -> bool:
        base = initial_ideal(gI, w, GREVLEX, degree_cap).generators
        return all(
            initial_ideal(gI, w2, GREVLEX, degree_cap).generators == base
            for w2 in moved
        )

    return _agreed(I, policy, compute, "ray constancy")


def recover_depth(
    I: Ideal,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> int:
    """Recover the depth from the fan structure alone: the least t for which
    the top t coordinate rays stay inside the cone of the ladder point while
    the ray in direction n-t leaves it.  Valid for 0 < depth < dim-1."""
    n = I.n
    m = dimension(I, degree_cap)
    c0 = gin(I, GREVLEX, policy, degree_cap).max_degree()
    base_cone = ConeId(n, frozenset(range(1, n - m + 2)))
    for t in range(1, m - 1):
        p = n - t
        perm = tuple(list(range(1, p)) + list(range(p + 1, n + 1)) + [p])
        moved_last = OrderSpec("grevlex", perm)
        ct = max(c0, gin(I, moved_last, policy, degree_cap).max_degree())
        w = interior_point(base_cone, ct + 1)
        stays = ray_constancy(I, w, range(n - t + 1, n + 1), policy, ct, degree_cap)
        leaves = not ray_constancy(I, w, [p], policy, ct, degree_cap)
        if stays and leaves:
            return t
    raise ValueError(
        "depth recovery applies only to ideals with 0 < depth < dim-1"
    )
