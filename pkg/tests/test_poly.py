import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieweyl import Polynomial, Scalar, parse_polynomial

N = 3


@st.composite
def polys(draw, n=N, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_degree)) for _ in range(n))
        coeff = Scalar(draw(st.fractions(max_denominator=9)))
        terms[exps] = coeff
    return Polynomial(n, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + Polynomial.zero(N) == f
    assert f * Polynomial.one(N) == f


@given(polys())
def test_homogeneous_decomposition(f):
    total = Polynomial.zero(N)
    for d in range(f.degree() + 1):
        part = f.homogeneous_part(d)
        for exps, _ in part.terms.items():
            assert sum(exps) == d
        total = total + part
    assert total == f


@given(polys())
def test_partial_commutes(f):
    assert f.partial(0).partial(1) == f.partial(1).partial(0)


def test_partial_leibniz():
    x = Polynomial.variable(N, 0)
    y = Polynomial.variable(N, 1)
    f = x * x * y
    assert f.partial(0) == x * y * Polynomial.constant(N, 2)
    assert f.partial(1) == x * x
    assert f.partial(2).is_zero()


def test_parse():
    f = parse_polynomial("x1*x2 + 1/2*x2 - 3", 2)
    x1 = Polynomial.variable(2, 0)
    x2 = Polynomial.variable(2, 1)
    expected = x1 * x2 + x2.scale(Scalar(1) / 2) - Polynomial.constant(2, 3)
    assert f == expected
    # power notation and unicode dot/minus
    assert parse_polynomial("x1^2", 2) == x1 * x1
    assert parse_polynomial("x1·x2 − x2", 2) == x1 * x2 - x2


def test_parse_rejects():
    with pytest.raises(ValueError):
        parse_polynomial("x5", 2)
    with pytest.raises(ValueError):
        parse_polynomial("x1 +* x2", 2)


@given(polys())
def test_str_roundtrip(f):
    assert parse_polynomial(str(f), N) == f


@given(polys())
def test_json_roundtrip(f):
    assert Polynomial.from_json(N, f.to_json()) == f
