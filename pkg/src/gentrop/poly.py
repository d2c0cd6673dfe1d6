"""Exact multivariate polynomials over the rationals and weighted term orders.

Polynomials are immutable. Terms are stored in a fixed canonical order
(graded reverse lexicographic on the identity permutation, leading term
first), which makes printing and hashing deterministic.

Weighted orders follow the minimal-weight-first convention: when an order
carries a weight vector, a term of *smaller* weight ranks *higher*, so the
leading term of the refined order is always one of the weight-minimal terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, NamedTuple

Exponents = tuple
Weights = tuple

LESS, EQUAL, GREATER = -1, 0, 1


class ParseError(ValueError):
    """Polynomial or ideal-file text that does not match the grammar."""


def grevlex_key(exps: Exponents) -> tuple:
    """Sort key for grevlex on the identity permutation (bigger key = higher rank)."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class OrderSpec:
    """A term order: lex or grevlex on a variable permutation, optionally
    refined by a weight vector.

    ``perm`` lists 1-based variable indices, most significant first; ``None``
    means the identity (x1 > x2 > ... > xn).  With a weight refinement,
    comparison is by weight first (smaller weight ranks higher), ties broken
    by the base order.
    """

    base: str = "grevlex"
    perm: tuple | None = None
    weight: Weights | None = None

    def __post_init__(self):
        if self.base not in ("lex", "grevlex"):
            raise ValueError(f"unknown base order {self.base!r}")
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))
        if self.weight is not None:
            object.__setattr__(
                self, "weight", tuple(Fraction(w) for w in self.weight)
            )

    def refine(self, w: Weights) -> "OrderSpec":
        """The same base order refined by weight vector ``w``."""
        return OrderSpec(self.base, self.perm, tuple(w))

    def positions(self, n: int) -> tuple:
        """0-based variable positions in decreasing significance."""
        if self.perm is None:
            return tuple(range(n))
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        return tuple(i - 1 for i in self.perm)

    def key_function(self, n: int) -> Callable[[Exponents], tuple]:
        """Key such that key(a) > key(b) iff monomial a outranks monomial b."""
        pos = self.positions(n)
        if self.base == "lex":
            def base_key(e, _pos=pos):
                return tuple(e[i] for i in _pos)
        else:
            rev = tuple(reversed(pos))
            def base_key(e, _rev=rev):
                return (sum(e), tuple(-e[i] for i in _rev))
        if self.weight is None:
            return base_key
        w = self.weight
        if len(w) != n:
            raise ValueError("weight length does not match variable count")
        def key(e, _w=w, _bk=base_key):
            return (-sum(wi * ei for wi, ei in zip(_w, e)), _bk(e))
        return key


GREVLEX = OrderSpec()
LEX = OrderSpec(base="lex")


def weight(w: Weights, exps: Exponents) -> Fraction:
    """Weight of the monomial x^exps: the dot product w . exps."""
    if len(w) != len(exps):
        raise ValueError("weight/exponent length mismatch")
    return sum((Fraction(wi) * ei for wi, ei in zip(w, exps)), Fraction(0))


def compare(order: OrderSpec, a: Exponents, b: Exponents) -> int:
    """Three-way comparison of monomials: GREATER means a outranks b."""
    if len(a) != len(b):
        raise ValueError("exponent length mismatch")
    ka = order.key_function(len(a))
    x, y = ka(a), ka(b)
    if x == y:
        return EQUAL
    return GREATER if x > y else LESS


def normalize_weight(w: Weights, n: int) -> tuple:
    """Shift ``w`` so its minimum is 0 and scale to coprime integers.

    For graded ideals this changes neither weighted initial forms nor the
    refined order on monomials of equal degree, and it keeps all comparisons
    in exact integer arithmetic with nonnegative weights.
    """
    if len(w) != n:
        raise ValueError("weight length does not match variable count")
    fr = [Fraction(x) for x in w]
    mn = min(fr)
    fr = [x - mn for x in fr]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


class Term(NamedTuple):
    coefficient: Fraction
    exponents: Exponents


class Polynomial:
    """Immutable polynomial in n variables with Fraction coefficients.

    ``terms`` is a tuple of (exponents, coefficient) pairs with no zero
    coefficients and no repeated exponent vectors, sorted canonically
    (grevlex, leading first).  The zero polynomial has an empty term tuple.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Iterable = ()):
        if n < 1:
            raise ValueError("need at least one variable")
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            e = tuple(exps)
            if len(e) != n or any(x < 0 or not isinstance(x, int) for x in e):
                raise ValueError(f"bad exponent vector {e!r} for n={n}")
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if e in acc:
                acc[e] += c
            else:
                acc[e] = c
        self.n = n
        self.terms = tuple(
            sorted(
                ((e, c) for e, c in acc.items() if c != 0),
                key=lambda t: grevlex_key(t[0]),
                reverse=True,
            )
        )
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, [((0,) * n, Fraction(c))])

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, [(tuple(e), Fraction(1))])

    @classmethod
    def monomial(cls, n: int, exps: Exponents, coeff=1) -> "Polynomial":
        return cls(n, [(tuple(exps), Fraction(coeff))])

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        """Exactly one term."""
        return len(self.terms) == 1

    @property
    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) == 1

    def coefficient(self, exps: Exponents) -> Fraction:
        e = tuple(exps)
        for ee, c in self.terms:
            if ee == e:
                return c
        return Fraction(0)

    def monic(self, order: OrderSpec = GREVLEX) -> "Polynomial":
        """Divide by the leading coefficient with respect to ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        lc = leading_term(order, self).coefficient
        if lc == 1:
            return self
        return Polynomial(self.n, [(e, c / lc) for e, c in self.terms])

    # -- arithmetic -----------------------------------------------------

    def _acc(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        acc = self._acc()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return Polynomial(self.n, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")
        acc = self._acc()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) - c
        return Polynomial(self.n, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, [(e, -c) for e, c in self.terms])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.n != other.n:
                raise ValueError("ambient variable counts differ")
            acc: dict = {}
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    ee = tuple(a + b for a, b in zip(e1, e2))
                    acc[ee] = acc.get(ee, Fraction(0)) + c1 * c2
            return Polynomial(self.n, acc)
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.n, [(e, c * other) for e, c in self.terms])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- identity -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.terms))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {format_polynomial(self)!r})"


def scale(c, f: Polynomial) -> Polynomial:
    """c * f for a rational scalar c."""
    return f * Fraction(c)


def initial_form(w: Weights, f: Polynomial) -> Polynomial:
    """The sum of the terms of f whose w-weight is minimal."""
    if not f.terms:
        raise ValueError("initial form of the zero polynomial")
    wts = [(weight(w, e), e, c) for e, c in f.terms]
    mn = min(x[0] for x in wts)
    return Polynomial(f.n, [(e, c) for x, e, c in wts if x == mn])


def leading_term(order: OrderSpec, f: Polynomial) -> Term:
    """The unique term of f that outranks all others under ``order``."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    key = order.key_function(f.n)
    e, c = max(f.terms, key=lambda t: key(t[0]))
    return Term(c, e)


# -- text format ---------------------------------------------------------

_COEFF_RE = re.compile(r"^(\d+)(?:/(\d+))?$")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse the term syntax ``[coeff*]x<i>[^e][*x<j>[^e]]...`` joined by +/-.

    Coefficients are integers or a/b rationals; variables are x1..xn.
    """
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ParseError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ParseError(f"cannot tokenize {text!r}")
    acc: dict = {}
    for chunk in chunks:
        sign = 1
        body = chunk
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * n
        saw_factor = False
        for factor in body.split("*"):
            m = _COEFF_RE.match(factor)
            if m and not saw_factor:
                num = int(m.group(1))
                den = int(m.group(2)) if m.group(2) else 1
                if den == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                coeff *= Fraction(num, den)
                saw_factor = True
                continue
            m = _VAR_RE.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise ParseError(f"variable x{i} out of range 1..{n}")
            e = int(m.group(2)) if m.group(2) else 1
            exps[i - 1] += e
            saw_factor = True
        if not saw_factor:
            raise ParseError(f"empty term in {text!r}")
        e = tuple(exps)
        acc[e] = acc.get(e, Fraction(0)) + coeff
    return Polynomial(n, acc)


def _format_term(e: Exponents, c: Fraction) -> str:
    factors = [
        f"x{i + 1}^{v}" if v > 1 else f"x{i + 1}"
        for i, v in enumerate(e)
        if v > 0
    ]
    if not factors:
        return str(abs(c))
    if abs(c) == 1:
        return "*".join(factors)
    return str(abs(c)) + "*" + "*".join(factors)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form; ``parse_polynomial`` round-trips it."""
    if not f.terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(f.terms):
        body = _format_term(e, c)
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
