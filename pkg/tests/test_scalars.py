import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieweyl import I, ONE, ZERO, Scalar

rationals = st.fractions(max_denominator=50)
scalars = st.builds(lambda a, b: Scalar(a, b), rationals, rationals)


def test_parse_forms():
    assert Scalar.parse("3/4") == Scalar(3) / Scalar(4)
    assert Scalar.parse("-2") == Scalar(-2)
    assert Scalar.parse("1/2+1/3i") == Scalar(1, 0) / 2 + I / 3
    assert Scalar.parse("1/2-1/3i") == Scalar(1, 0) / 2 - I / 3
    assert Scalar.parse("i") == I
    assert Scalar.parse("-i") == -I
    assert Scalar.parse("2i") == I * 2
    assert Scalar.parse("−1/2") == Scalar(-1) / 2  # unicode minus


@pytest.mark.parametrize("bad", ["", "x", "1/2+", "1//2", "1/0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Scalar.parse(bad)


@given(scalars)
def test_str_roundtrip(s):
    assert Scalar.parse(str(s)) == s


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a


@given(scalars)
def test_inverse(a):
    assert a - a == ZERO
    if a:
        assert a / a == ONE
        assert a * (ONE / a) == ONE


def test_complex_arithmetic():
    assert I * I == Scalar(-1)
    assert (ONE + I) * (ONE - I) == Scalar(2)
    assert (ONE + I).conjugate() == ONE - I
    assert ONE / I == -I


def test_immutability_and_hash():
    s = Scalar(1, 2)
    with pytest.raises(AttributeError):
        s.re = 5
    assert hash(Scalar(1, 2)) == hash(Scalar(1, 2))


def test_pow():
    assert (I + 1) ** 2 == I * 2
    assert Scalar(2) ** -2 == Scalar(1) / 4
    assert Scalar(7) ** 0 == ONE
