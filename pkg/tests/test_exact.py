from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heavenly import catalog
from heavenly.errors import DomainError
from heavenly.exact import Poly, RatComplex, exact_sqrt

frac = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
ratc = st.builds(RatComplex, frac, frac)


@given(ratc, ratc, ratc)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    if b:
        assert (a / b) * b == a


@given(ratc)
def test_conjugate_and_complex(a):
    assert complex(a.conjugate()) == complex(a).conjugate()
    assert (a * a.conjugate()).im == 0


def test_python_complex_literal_is_exact():
    z = RatComplex(Fraction(1, 3)) * 1j
    assert isinstance(z, RatComplex)
    assert z == RatComplex(0, Fraction(1, 3))


def test_exact_sqrt_of_perfect_square():
    assert exact_sqrt(RatComplex(Fraction(9, 4))) == RatComplex(Fraction(3, 2))
    with pytest.raises(DomainError):
        exact_sqrt(RatComplex(2))
    assert abs(complex(catalog.sqrt(RatComplex(2))) ** 2 - 2) < 1e-15


@given(st.lists(ratc, min_size=3, max_size=3))
def test_poly_evaluation_is_a_homomorphism(vals):
    x, y = Poly.var("x"), Poly.var("y")
    p = (x + y) ** 2 - x * x - 2 * x * y
    env = {"x": vals[0], "y": vals[1]}
    assert p.evaluate(env) == vals[1] * vals[1]
    q = x * vals[2] - 1
    assert (p * q).evaluate(env) == p.evaluate(env) * q.evaluate(env)


def test_poly_zero_and_symbols():
    x = Poly.var("x")
    assert (x - x).is_zero()
    assert (x * Poly.var("b")).symbols == ["b", "x"]
    with pytest.raises(KeyError):
        x.evaluate({})
