"""Intrinsic multiplicities of maximal tropical cones, Newton polytopes and
lattice lengths.

The multiplicity of a cone is computed as the multiplicity of the saturation
of its weighted initial ideal by the product of all variables.  This equals
the sum of localization lengths over the monomial-free top-dimensional
minimal primes whenever those primes are linear, which holds generically;
the report records that assumption via the monomial-freeness check rather
than verifying linearity (no primary decomposition here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .fans import ConeId, interior_point
from .generic import GenericityPolicy, _agreed, _gap_degree
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Ideal,
    initial_ideal,
    is_unit_ideal,
    saturate,
)
from .invariants import dimension, multiplicity
from .poly import GREVLEX, Polynomial, initial_form


@dataclass(frozen=True)
class MultiplicityReport:
    """Per-cone multiplicity evidence.

    ``matches`` certifies the multiplicity theorem at this cone: the
    saturation kept the dimension, the top-dimensional primes are
    monomial-free, and the saturated multiplicity equals the ideal's."""

    cone: ConeId
    dim_initial: int
    dim_saturated: int
    topdim_monomial_free: bool
    m_saturated: int
    m_ideal: int

    @property
    def matches(self) -> bool:
        return (
            self.dim_saturated == self.dim_initial
            and self.topdim_monomial_free
            and self.m_saturated == self.m_ideal
        )


def topdim_monomial_free(J: Ideal, m: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Whether no top-dimensional minimal prime of J contains a monomial.

    A top-dimensional prime containing a monomial contains a variable, so it
    exists iff cutting with some coordinate hyperplane keeps dimension m."""
    for k in range(1, J.n + 1):
        Jk = Ideal(J.n, list(J.generators) + [Polynomial.variable(J.n, k)], graded=J.graded)
        if is_unit_ideal(Jk, degree_cap):
            continue
        if dimension(Jk, degree_cap) >= m:
            return False
    return True


def intrinsic_multiplicity(
    I: Ideal,
    cone: ConeId,
    policy: GenericityPolicy = GenericityPolicy(),
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> MultiplicityReport:
    """Multiplicity evidence for one maximal cone of the sampled generic
    tropical fan, computed at the cone's canonical interior point."""
    m = dimension(I, degree_cap)
    m_ideal = multiplicity(I, degree_cap)
    gap = _gap_degree(I, policy, degree_cap) + 1
    w = interior_point(cone, gap)
    product = Polynomial.monomial(I.n, (1,) * I.n)

    def compute(gI: Ideal) -> tuple:
        J = initial_ideal(gI, w, GREVLEX, degree_cap)
        dim_initial = dimension(J, degree_cap)
        free = topdim_monomial_free(J, m, degree_cap)
        J_sat = saturate(J, product, degree_cap)
        if is_unit_ideal(J_sat, degree_cap):
            return (dim_initial, -1, free, 0)
        return (
            dim_initial,
            dimension(J_sat, degree_cap),
            free,
            multiplicity(J_sat, degree_cap),
        )

    dim_initial, dim_saturated, free, m_sat = _agreed(
        I, policy, compute, "intrinsic multiplicity"
    )
    return MultiplicityReport(cone, dim_initial, dim_saturated, free, m_sat, m_ideal)


def hypersurface_mc(factors: Sequence, w, of: Polynomial | None = None) -> int:
    """Cone multiplicity of a principal ideal from a supplied irreducible
    factorization of the weighted initial form: the sum of exponents over the
    factors that are not single monomials.

    ``factors`` lists (polynomial, exponent) pairs.  Their product must be a
    weighted initial form (all terms of minimal weight); when ``of`` is given
    the product must additionally equal the initial form of ``of`` up to a
    scalar.  Factorization itself is out of scope for this package.
    """
    if not factors:
        raise ValueError("empty factorization")
    n = factors[0][0].n
    product = Polynomial.one(n)
    for f, e in factors:
        if not f or e < 1:
            raise ValueError("factors must be nonzero with positive exponents")
        product = product * f**e
    if initial_form(w, product) != product:
        raise ValueError("factor product is not a weighted initial form")
    if of is not None:
        target = initial_form(w, of)
        ratio = target.terms[0][1] / product.terms[0][1]
        if product * ratio != target:
            raise ValueError("factors do not multiply to the initial form")
    return sum(e for f, e in factors if not f.is_monomial())


@dataclass(frozen=True)
class NewtonPolytope:
    """Convex-hull vertices of the exponent set of a polynomial."""

    n: int
    vertices: tuple


def _in_convex_hull(point, points) -> bool:
    """Exact rational feasibility of point = convex combination of points,
    by a phase-one simplex with Bland's rule."""
    k = len(points)
    if k == 0:
        return False
    d = len(point)
    rows = []
    rhs = []
    for r in range(d):
        rows.append([Fraction(p[r]) for p in points])
        rhs.append(Fraction(point[r]))
    rows.append([Fraction(1)] * k)
    rhs.append(Fraction(1))
    m = d + 1
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # tableau with artificial basis; minimize the sum of artificials
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]] for i in range(m)]
    ncols = k + m
    basis = [k + i for i in range(m)]
    z = [Fraction(0)] * ncols
    for j in range(ncols):
        cost = Fraction(1) if j >= k else Fraction(0)
        z[j] = cost - sum(tab[i][j] for i in range(m))
    while True:
        enter = next((j for j in range(ncols) if z[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise AssertionError("phase-one simplex cannot be unbounded")
        _, row = best
        piv = tab[row][enter]
        tab[row] = [x / piv for x in tab[row]]
        for i in range(m):
            if i != row and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[row])]
        f = z[enter]
        if f:
            z = [a - f * b for a, b in zip(z, tab[row][:-1])]
        basis[row] = enter
    value = sum(tab[i][-1] for i in range(m) if basis[i] >= k)
    return value == 0


def newton_polytope(f: Polynomial) -> NewtonPolytope:
    """Extreme points of the exponent set of f (exact, dimensions up to 8)."""
    if not f:
        raise ValueError("Newton polytope of the zero polynomial")
    if f.n > 8:
        raise ValueError("Newton polytopes are supported for at most 8 variables")
    pts = sorted({e for e, _ in f.terms})
    verts = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not _in_convex_hull(p, others):
            verts.append(p)
    return NewtonPolytope(f.n, tuple(verts))


def edge_lattice_length(a: Iterable, b: Iterable) -> int:
    """Number of lattice points on the segment [a, b] minus one: the gcd of
    the absolute coordinate differences."""
    a = tuple(a)
    b = tuple(b)
    if a == b:
        raise ValueError("segment endpoints coincide")
    g = 0
    for x, y in zip(a, b):
        g = gcd(g, abs(x - y))
    return g
