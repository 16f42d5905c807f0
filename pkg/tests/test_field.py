from fractions import Fraction

import pytest
from hypothesis import given, settings

from quartic_thue import I, ONE, ZERO, DivisionByZero, GaussRat, ZeroInput, gq_fourth_roots, gq_sqrt

from .strategies import gaussrats, nonzero_gaussrats


def test_examples():
    assert (1 + I) * (1 - I) == 2
    assert I.inv() == -I
    a = GaussRat(Fraction(1, 2), Fraction(3, 4))
    assert a + a.conj() == 1


def test_canonical_form():
    z = GaussRat(Fraction(4, -6), Fraction(0, 5))
    assert (z.re.numerator, z.re.denominator) == (-2, 3)
    assert z.im == 0 and z.is_real()
    assert GaussRat(1, 0) == 1 and hash(GaussRat(1, 0)) == hash(1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        GaussRat(0.5)
    with pytest.raises(TypeError):
        I + 0.5


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


@pytest.mark.parametrize(
    "x, root",
    [
        (GaussRat(0, 2), GaussRat(1, 1)),
        (GaussRat(Fraction(9, 4)), GaussRat(Fraction(3, 2))),
        (GaussRat(-4), GaussRat(0, 2)),
        (GaussRat(-3, 4), GaussRat(1, 2)),
        (ZERO, ZERO),
    ],
)
def test_sqrt_examples(x, root):
    assert gq_sqrt(x) == root


@pytest.mark.parametrize("x", [GaussRat(3), GaussRat(2), GaussRat(0, 1), GaussRat(1, 1)])
def test_sqrt_absent(x):
    assert gq_sqrt(x) is None


def test_fourth_root_examples():
    assert gq_fourth_roots(GaussRat(1)) == (ONE, I, -ONE, -I)
    assert set(gq_fourth_roots(GaussRat(-4))) == {
        GaussRat(1, 1),
        GaussRat(-1, 1),
        GaussRat(-1, -1),
        GaussRat(1, -1),
    }
    assert gq_fourth_roots(GaussRat(3)) == ()
    with pytest.raises(ZeroInput):
        gq_fourth_roots(ZERO)


def test_formatting():
    cases = {
        GaussRat(1, 2): "1+2i",
        GaussRat(Fraction(3, 4)): "3/4",
        GaussRat(0, -1): "-i",
        GaussRat(Fraction(1, 2), Fraction(-3, 4)): "1/2-3/4i",
        ZERO: "0",
    }
    for z, text in cases.items():
        assert str(z) == text


@given(gaussrats, gaussrats, gaussrats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO
    if a:
        assert a * a.inv() == ONE
        assert (b / a) * a == b
    assert (a * b).conj() == a.conj() * b.conj()


@settings(max_examples=200)
@given(gaussrats)
def test_sqrt_of_square(z):
    r = gq_sqrt(z * z)
    assert r is not None and r * r == z * z
    assert r.re > 0 or (r.re == 0 and r.im >= 0)


@settings(max_examples=200)
@given(nonzero_gaussrats)
def test_fourth_roots_of_fourth_power(z):
    roots = gq_fourth_roots(z**4)
    assert z in roots
    assert len(set(roots)) == 4
    assert all(r**4 == z**4 for r in roots)
