from fractions import Fraction

import pytest
from hypothesis import given

from harmonic_kernels import ExactScalar

from conftest import scalars


def test_lowest_terms_positive_denominator():
    c = ExactScalar(Fraction(2, 4), Fraction(3, -9))
    assert c.re == Fraction(1, 2) and c.re.denominator == 2
    assert c.im == Fraction(-1, 3) and c.im.denominator == 3


def test_basic_arithmetic():
    i = ExactScalar(0, 1)
    assert i * i == ExactScalar(-1)
    assert (ExactScalar(1, 2) * ExactScalar(3, -1)) == ExactScalar(5, 5)
    assert ExactScalar(1) - 1 == ExactScalar(0)
    assert not ExactScalar(0)
    assert ExactScalar(Fraction(1, 3)).is_real


def test_division_and_conjugate():
    a = ExactScalar(1, 2)
    b = ExactScalar(3, -4)
    assert (a / b) * b == a
    assert a.conjugate() == ExactScalar(1, -2)
    with pytest.raises(ZeroDivisionError):
        a / ExactScalar(0)


def test_immutable_and_hashable():
    a = ExactScalar(1, 2)
    with pytest.raises(AttributeError):
        a.re = Fraction(5)
    assert hash(ExactScalar(1, 2)) == hash(ExactScalar(1, 2))


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(scalars(), scalars())
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
