import random
from fractions import Fraction

import pytest
import sympy as sp

from superbialg.scalars import H, Scalar, htrunc, param, parse_exact, rational


def test_rational_parsing():
    assert rational("3/4") == sp.Rational(3, 4)
    assert rational(-2) == sp.Integer(-2)
    assert rational(Fraction(5, 10)) == sp.Rational(1, 2)
    with pytest.raises(TypeError):
        rational(0.5)


def test_addition_and_product_are_exact():
    a = Scalar("1/3") + Scalar("1/6")
    assert a == Scalar("1/2")
    b = Scalar("1/7") * Scalar("7/3")
    assert b == Scalar("1/3")
    c = Scalar(sp.I) * Scalar(sp.I)
    assert c == Scalar(-1)


def test_inverse_round_trips():
    x = Scalar(sp.Rational(3, 5) + 2 * sp.I)
    assert x * x.inverse() == Scalar(1)
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()


def test_series_truncation_never_exceeds_order():
    a = Scalar(1 + H + H**2, order=3)
    b = Scalar(1 - H, order=3)
    prod = a * b
    assert sp.degree(prod.expr, H) <= 3
    # order of a product is the finer of the two truncations
    c = Scalar(H, order=5) * Scalar(H, order=2)
    assert c.order == 2


def test_plain_scalars_embed_losslessly():
    plain = Scalar("2/3")
    series = Scalar(1 + H, order=4)
    mixed = plain + series
    assert mixed.order == 4
    assert mixed == Scalar(sp.Rational(5, 3) + H, order=4)


def test_series_inverse():
    s = Scalar(1 + H, order=6)
    assert s * s.inverse() == Scalar(1, order=6)
    with pytest.raises(ZeroDivisionError):
        Scalar(H, order=4).inverse()


def test_htrunc():
    e = sp.expand((1 + H) ** 5)
    t = htrunc(e, 2)
    assert t == 1 + 5 * H + 10 * H**2


def test_parameters_are_shared_symbols():
    assert param("p") is param("p")
    assert parse_exact("p/2 + i").has(param("p"))


def test_ring_axioms_on_random_triples():
    rng = random.Random(7)

    def rand_scalar():
        num = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        im = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        expr = rational(num) + sp.I * rational(im)
        if rng.random() < 0.5:
            return Scalar(expr + rational(Fraction(rng.randint(-2, 2))) * H, order=4)
        return Scalar(expr)

    for _ in range(60):
        a, b, c = rand_scalar(), rand_scalar(), rand_scalar()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
