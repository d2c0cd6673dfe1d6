"""Algebraic invariants: Krull dimension, Hilbert series, multiplicity,
strongly stable ideals and depth read off from generic initial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .groebner import DEFAULT_DEGREE_CAP, Ideal, leading_ideal
from .poly import GREVLEX, OrderSpec, Polynomial, grevlex_key


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal by its unique minimal generating set."""

    n: int
    generators: tuple

    def contains_unit(self) -> bool:
        return any(sum(e) == 0 for e in self.generators)

    def max_degree(self) -> int:
        return max(sum(e) for e in self.generators)

    def member(self, exps) -> bool:
        """Monomial membership: divisibility by some minimal generator."""
        e = tuple(exps)
        return any(all(a <= b for a, b in zip(g, e)) for g in self.generators)

    def polynomials(self) -> list:
        return [Polynomial.monomial(self.n, e) for e in self.generators]

    def __str__(self):
        gens = ", ".join(str(p) for p in self.polynomials())
        return f"({gens})"


def minimalize(n: int, gens: Iterable) -> MonomialIdeal:
    """Keep only the divisibility-minimal exponent vectors."""
    uniq = sorted({tuple(g) for g in gens}, key=grevlex_key)
    if not uniq:
        raise ValueError("empty generator list")
    kept = []
    for e in uniq:
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return MonomialIdeal(n, tuple(kept))


def monomial_ideal_of(
    I: Ideal, order: OrderSpec = GREVLEX, degree_cap: int = DEFAULT_DEGREE_CAP
) -> MonomialIdeal:
    """The leading-monomial ideal of I as a MonomialIdeal."""
    lead = leading_ideal(I, order, degree_cap)
    return minimalize(I.n, [g.terms[0][0] for g in lead.generators])


def monomial_dimension(M: MonomialIdeal) -> int:
    """Krull dimension of S/M: n minus the least number of variables meeting
    the support of every minimal generator."""
    if M.contains_unit():
        raise ValueError("dimension of the zero ring is undefined")
    supports = [frozenset(i for i, e in enumerate(g) if e > 0) for g in M.generators]
    pool = sorted(set().union(*supports))
    for size in range(len(pool) + 1):
        for cover in combinations(pool, size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return M.n - size
    raise AssertionError("unreachable: the full support always covers")


def dimension(I: Ideal, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Krull dimension of the coordinate ring S/I."""
    M = monomial_ideal_of(I, GREVLEX, degree_cap)
    return monomial_dimension(M)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator Q (fully cancelled), dimension d and
    multiplicity Q(1) of S/M, where the series is Q(t) / (1-t)^d."""

    numerator: tuple
    dim: int
    multiplicity: int


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _poly_add_shifted(a: Sequence[int], b: Sequence[int], shift: int) -> tuple:
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _is_pure_power(e) -> bool:
    return sum(1 for x in e if x > 0) == 1


def _pivot_variable(gens, rule: str) -> int:
    mixed = [g for g in gens if not _is_pure_power(g)]
    counts = {}
    for g in mixed:
        for i, e in enumerate(g):
            if e > 0:
                counts[i] = counts.get(i, 0) + 1
    if rule == "frequent":
        return min(counts, key=lambda i: (-counts[i], i))
    if rule == "first":
        return min(counts)
    raise ValueError(f"unknown pivot rule {rule!r}")


def _numerator(gens: frozenset, n: int, rule: str, memo: dict) -> tuple:
    """Numerator of the Hilbert series of S/(gens) over (1-t)^n.

    Splits on a pivot variable p: monomials outside the ideal either avoid p
    (quotient by the ideal plus (p)) or are p times a monomial outside the
    colon ideal, shifting degrees by one.
    """
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if not gens:
        result = (1,)
    elif any(sum(e) == 0 for e in gens):
        result = (0,)
    elif all(_is_pure_power(e) for e in gens):
        result = (1,)
        for e in gens:
            d = sum(e)
            factor = [0] * (d + 1)
            factor[0], factor[d] = 1, -1
            result = _poly_mul(result, factor)
    else:
        p = _pivot_variable(gens, rule)
        plus = [e for e in gens if e[p] == 0]
        unit = tuple(1 if i == p else 0 for i in range(n))
        plus.append(unit)
        colon = [tuple(x - 1 if i == p and x > 0 else x for i, x in enumerate(e)) for e in gens]
        plus_min = frozenset(minimalize(n, plus).generators)
        colon_min = frozenset(minimalize(n, colon).generators)
        a = _numerator(plus_min, n, rule, memo)
        b = _numerator(colon_min, n, rule, memo)
        result = _poly_add_shifted(a, b, 1)
    memo[gens] = result
    return result


def _divide_one_minus_t(coeffs: Sequence[int]):
    """Return coeffs / (1-t) if divisible, else None."""
    acc = 0
    out = []
    for c in coeffs:
        acc += c
        out.append(acc)
    if acc != 0:
        return None
    out.pop()
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (0,)


def hilbert(M: MonomialIdeal, pivot_rule: str = "frequent") -> HilbertData:
    """Hilbert series data of S/M for a proper nonzero monomial ideal."""
    if M.contains_unit():
        raise ValueError("Hilbert series of the zero ring is not supported")
    memo: dict = {}
    q = _numerator(frozenset(M.generators), M.n, pivot_rule, memo)
    d = M.n
    while True:
        nxt = _divide_one_minus_t(q)
        if nxt is None:
            break
        q = nxt
        d -= 1
    mult = sum(q)
    assert d == monomial_dimension(M), "Hilbert dimension disagrees with cover bound"
    assert mult > 0, "multiplicity must be positive"
    return HilbertData(tuple(q), d, mult)


def multiplicity(I: Ideal, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Multiplicity of S/I: the fully cancelled Hilbert numerator at t=1,
    computed from the grevlex leading-monomial ideal."""
    return hilbert(monomial_ideal_of(I, GREVLEX, degree_cap)).multiplicity


def is_strongly_stable(M: MonomialIdeal, perm=None) -> bool:
    """Closure under Borel exchange moves x_j * u / x_k for j before k in the
    variable ordering (1-based ``perm``, identity by default)."""
    order = tuple(perm) if perm is not None else tuple(range(1, M.n + 1))
    if sorted(order) != list(range(1, M.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    pos = [i - 1 for i in order]
    for g in M.generators:
        for kk in range(len(pos)):
            k = pos[kk]
            if g[k] == 0:
                continue
            for jj in range(kk):
                j = pos[jj]
                moved = list(g)
                moved[k] -= 1
                moved[j] += 1
                if not M.member(moved):
                    return False
    return True


def depth_of_stable(M: MonomialIdeal, perm=None) -> int:
    """Depth of S/M for M strongly stable: n minus the largest variable
    position (in the stability ordering) dividing a minimal generator."""
    order = tuple(perm) if perm is not None else tuple(range(1, M.n + 1))
    if not is_strongly_stable(M, order):
        raise ValueError("ideal is not strongly stable for this ordering")
    last = 0
    for g in M.generators:
        for rank, var in enumerate(order, start=1):
            if g[var - 1] > 0:
                last = max(last, rank)
    return M.n - last


def depth(I: Ideal, policy) -> int:
    """Depth of S/I via the generic initial ideal for the graded reverse
    lexicographic order, where the two agree."""
    from .generic import gin

    g = gin(I, GREVLEX, policy)
    return depth_of_stable(g)


def certify_maximal_gdepth(I: Ideal) -> bool:
    """True when all generic initial ideals of I provably share its depth:
    the certificate implemented here is that I is itself a strongly stable
    monomial ideal.  False means unknown, not a refutation."""
    exps = []
    for g in I.generators:
        if not g.is_monomial():
            return False
        exps.append(g.terms[0][0])
    return is_strongly_stable(minimalize(I.n, exps))


def gdepth_family_bound(I: Ideal, policy, perms=None) -> int:
    """Upper bound for the generic depth: the minimum depth of the generic
    initial ideals over a finite family of permuted grevlex orders (all n!
    permutations by default, limited to n <= 6).  The true generic depth
    minimizes over all term orders, so this is only a family bound."""
    from .generic import gin

    if perms is None:
        if I.n > 6:
            raise ValueError("full permutation family is limited to n <= 6")
        perms = permutations(range(1, I.n + 1))
    best = None
    for perm in perms:
        order = OrderSpec("grevlex", tuple(perm))
        g = gin(I, order, policy)
        d = depth_of_stable(g, tuple(perm))
        best = d if best is None else min(best, d)
    if best is None:
        raise ValueError("empty order family")
    return best
