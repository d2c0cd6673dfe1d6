import random
from fractions import Fraction
from itertools import product

import pytest

from gentrop.poly import (
    EQUAL,
    GREATER,
    GREVLEX,
    OrderSpec,
    ParseError,
    Polynomial,
    compare,
    format_polynomial,
    initial_form,
    leading_term,
    normalize_weight,
    parse_polynomial,
    weight,
)

from cases import P


def test_weight_examples():
    assert weight((0, 0, 1), (1, 0, 1)) == 1
    assert weight((0, 0, 0, 0), (3, 1, 0, 2)) == 0
    assert weight((1, 2, 3), (1, 2, 0)) == 5
    with pytest.raises(ValueError):
        weight((1, 2), (1, 2, 3))


def test_compare_grevlex_examples():
    # x2^2 vs x1*x3: rightmost difference decides
    assert compare(GREVLEX, (0, 2, 0), (1, 0, 1)) == GREATER
    assert compare(GREVLEX, (1, 1), (1, 1)) == EQUAL
    # weight refinement: smaller weight ranks higher
    refined = GREVLEX.refine((0, 0, 1))
    assert compare(refined, (0, 1, 0), (0, 0, 1)) == GREATER


def test_compare_is_strict_total_and_multiplicative():
    rng = random.Random(1)
    orders = [
        GREVLEX,
        OrderSpec("lex"),
        OrderSpec("grevlex", (2, 3, 1)),
        GREVLEX.refine((1, 0, 2)),
    ]
    for order in orders:
        for _ in range(200):
            a = tuple(rng.randint(0, 4) for _ in range(3))
            b = tuple(rng.randint(0, 4) for _ in range(3))
            c = tuple(rng.randint(0, 4) for _ in range(3))
            ab = compare(order, a, b)
            assert ab == -compare(order, b, a)
            if a == b:
                assert ab == EQUAL
            else:
                assert ab != EQUAL
            if ab == GREATER and compare(order, b, c) == GREATER:
                assert compare(order, a, c) == GREATER
            shift = tuple(x + y for x, y in zip(a, c))
            shift2 = tuple(x + y for x, y in zip(b, c))
            assert compare(order, shift, shift2) == ab


def test_initial_form_examples():
    f = P("x1 + x2 + x3", 3)
    assert initial_form((0, 0, 1), f) == P("x1 + x2", 3)
    assert initial_form((0, 0, 0), f) == f
    g = P("x1^2 + x1*x2", 4)
    assert initial_form((0, 0, 1, 1), g) == g
    with pytest.raises(ValueError):
        initial_form((0, 0, 0), Polynomial.zero(3))


def test_initial_form_scaling_and_shift_invariance():
    rng = random.Random(3)
    mons = [e for e in product(range(4), repeat=3) if sum(e) == 3]
    for _ in range(50):
        f = Polynomial(3, {e: rng.randint(-3, 3) for e in rng.sample(mons, 4)})
        if not f:
            continue
        w = tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))
        lam = Fraction(rng.randint(1, 5))
        c = Fraction(rng.randint(-4, 4))
        w2 = tuple(lam * x + c for x in w)
        assert initial_form(w, f) == initial_form(w2, f)


def test_leading_term_examples():
    f = P("x1 + x2", 2)
    assert leading_term(GREVLEX, f).exponents == (1, 0)
    refined = GREVLEX.refine((1, 0))
    assert leading_term(refined, f).exponents == (0, 1)
    g = P("5*x1^2", 2)
    assert leading_term(GREVLEX, g) == (Fraction(5), (2, 0))


def test_leading_term_lies_in_initial_form():
    rng = random.Random(5)
    mons = [e for e in product(range(4), repeat=3) if sum(e) == 3]
    for _ in range(50):
        f = Polynomial(3, {e: rng.randint(-3, 3) for e in rng.sample(mons, 5)})
        if not f:
            continue
        w = tuple(rng.randint(0, 3) for _ in range(3))
        lt = leading_term(GREVLEX.refine(w), f)
        assert lt.exponents in {e for e, _ in initial_form(w, f).terms}


def test_arithmetic_examples():
    f, g = P("x1 + x2", 2), P("x1 - x2", 2)
    assert f * g == P("x1^2 - x2^2", 2)
    assert f + (-1) * f == Polynomial.zero(2)
    assert f**2 == P("x1^2 + 2*x1*x2 + x2^2", 2)


def test_ring_axioms_random():
    rng = random.Random(7)
    mons = [e for e in product(range(3), repeat=2)]

    def rand_poly():
        return Polynomial(2, {e: rng.randint(-3, 3) for e in rng.sample(mons, 3)})

    for _ in range(60):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_normalize_weight():
    assert normalize_weight((Fraction(1, 2), Fraction(3, 2), Fraction(1, 2)), 3) == (0, 1, 0)
    assert normalize_weight((-1, 0, 1), 3) == (0, 1, 2)
    assert normalize_weight((2, 2), 2) == (0, 0)


def test_parse_and_format_roundtrip():
    texts = [
        "2*x1^2*x3 - 1/3*x2^3",
        "x1 + x2 + x3",
        "-x1^4",
        "5",
        "x1*x1*x2",
    ]
    for t in texts:
        f = parse_polynomial(t, 3)
        assert parse_polynomial(format_polynomial(f), 3) == f


def test_parse_roundtrip_random():
    rng = random.Random(11)
    mons = [e for e in product(range(4), repeat=3)]
    for _ in range(50):
        f = Polynomial(
            3,
            {
                e: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for e in rng.sample(mons, 5)
            },
        )
        assert parse_polynomial(format_polynomial(f), 3) == f


def test_parse_errors():
    for bad in ["", "x0", "x4", "x1^", "1//2", "y1", "x1**2", "2x1"]:
        with pytest.raises(ParseError):
            parse_polynomial(bad, 3)


def test_polynomial_invariants():
    f = P("x1 + x1 + x2 - x2", 2)
    assert f == P("2*x1", 2)
    assert Polynomial(2, {(1, 0): Fraction(0)}).is_zero()
    assert P("x1^2 + x2^2", 2).is_homogeneous()
    assert not P("x1^2 + x2", 2).is_homogeneous()
    assert P("x1*x2", 2).degree == 2
    assert Polynomial.zero(2).degree is None


def test_order_spec_validation():
    with pytest.raises(ValueError):
        OrderSpec("weird")
    with pytest.raises(ValueError):
        OrderSpec("grevlex", (1, 1, 2)).key_function(3)
    with pytest.raises(ValueError):
        compare(GREVLEX, (1, 0), (1, 0, 0))
