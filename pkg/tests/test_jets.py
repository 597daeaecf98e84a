import numpy as np
import pytest
from hypothesis import given, strategies as st

from heavenly.errors import DomainError
from heavenly.jets import (Jet4, LinearForm, ScalarFn, fd_hessian, jet_add, jet_compose_scalar,
                           jet_linform, jet_mul, jet_scale, parse_fn)

LIBRARY = [ScalarFn("exp", 0.7), ScalarFn("sin", 1.3), ScalarFn("cos", 0.4 - 0.2j),
           ScalarFn("cosh", 0.9), ScalarFn("poly", coeffs=(1, -2, 0.5, 0, 0.3, 0, -0.1)),
           ScalarFn("square", amp=1.5), ScalarFn("exp", 1j, amp=2 - 1j)]

cplx = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)
point4 = st.lists(cplx, min_size=4, max_size=4).map(np.array)


def random_jet(rng, batch=()):
    z = lambda *s: rng.normal(size=s) + 1j * rng.normal(size=s)
    return Jet4(z(*batch), z(*batch, 4), z(*batch, 4, 4))


def test_linform_projection():
    j = jet_linform(LinearForm((1, 0, 0, 0), 0), (5, 0, 0, 0))
    assert j.val == 5
    assert np.array_equal(j.grad, [1, 0, 0, 0])
    assert not j.hess.any()


def test_linform_offset_at_origin():
    j = jet_linform(LinearForm((2, 1, 1, -4), 1), np.zeros(4))
    assert j.val == 1
    assert np.array_equal(j.grad, [2, 1, 1, -4])


def test_linform_complex_coefficients():
    j = jet_linform(LinearForm((1 + 1j, 1 - 1j, 2j, -2j), 0), (1, 1, 0, 0))
    assert j.val == 2


@given(point4, point4, cplx)
def test_linform_evaluation_is_exact(c, x, b):
    form = LinearForm(tuple(c), b)
    assert jet_linform(form, x).val == form(x)


def test_compose_exp_at_zero():
    c = np.array([1, 2, 3, 4], dtype=complex)
    j = jet_compose_scalar(ScalarFn("exp"), Jet4(0, c, np.zeros((4, 4))))
    assert j.val == 1
    assert np.array_equal(j.grad, c)
    assert np.array_equal(j.hess, np.outer(c, c))


def test_compose_square():
    c = np.array([1, -1, 2j, 0.5])
    s = 0.3 + 0.2j
    j = jet_compose_scalar(ScalarFn("square"), Jet4(s, c, np.zeros((4, 4))))
    assert np.isclose(j.val, s * s)
    assert np.allclose(j.grad, 2 * s * c)
    assert np.allclose(j.hess, 2 * np.outer(c, c))


def test_compose_sin_matches_fd():
    form = LinearForm((1, 0, 0, 0), 0)
    x = np.array([np.pi / 2, 0, 0, 0], dtype=complex)
    j = jet_compose_scalar(ScalarFn("sin"), jet_linform(form, x))
    assert np.isclose(j.val, 1)
    fd = fd_hessian(lambda p: np.sin(p[..., 0]), x)
    assert np.allclose(j.grad, fd.grad, rtol=1e-6, atol=1e-6)
    assert np.allclose(j.hess, fd.hess, rtol=1e-6, atol=1e-6)


def test_mul_of_coordinates():
    x = np.array([0.3, -1, 2, 0.5j])
    j = jet_mul(jet_linform(LinearForm((1, 0, 0, 0)), x), jet_linform(LinearForm((0, 0, 1, 0)), x))
    expected = np.zeros((4, 4))
    expected[0, 2] = expected[2, 0] = 1
    assert np.array_equal(j.hess, expected)


def test_identities(rng):
    J = random_jet(rng)
    zero = Jet4.constant(0)
    same = jet_add(J, zero)
    assert np.array_equal(same.hess, J.hess) and same.val == J.val
    one = jet_mul(J, 1)
    assert np.array_equal(one.hess, J.hess) and np.array_equal(one.grad, J.grad)


def test_fd_exp_cross_derivative():
    fd = fd_hessian(lambda p: np.exp(p[..., 0] + p[..., 1]), np.zeros(4))
    assert abs(fd.hess[0, 1] - 1) < 1e-6


def test_fd_constant():
    fd = fd_hessian(lambda p: np.full(p.shape[:-1], 3.0 + 1j), np.zeros(4))
    assert np.allclose(fd.grad, 0, atol=1e-10)
    assert np.allclose(fd.hess, 0, atol=1e-6)


def test_fd_quadratic():
    fd = fd_hessian(lambda p: p[..., 0] ** 2, np.zeros(4))
    assert abs(fd.hess[0, 0] - 2) < 1e-8


@pytest.mark.parametrize("g", LIBRARY, ids=lambda g: g.describe())
def test_library_agrees_with_fd(g, rng):
    # composite form with a nonzero Hessian in the inner jet too: g(s) * (x0 + x3)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    form = LinearForm(tuple(c / 2), 0.1)
    f = lambda p: g(form(p)) * (p[..., 0] + p[..., 3])
    for _ in range(100):
        x = rng.uniform(-1, 1, 4) * np.exp(2j * np.pi * rng.uniform(size=4)) / 2
        inner = jet_compose_scalar(g, jet_linform(form, x))
        j = jet_mul(inner, jet_linform(LinearForm((1, 0, 0, 1)), x))
        fd = fd_hessian(f, x)
        for a, b in ((j.grad, fd.grad), (j.hess, fd.hess)):
            assert np.all(np.abs(a - b) <= 1e-5 * np.maximum(1, np.abs(a)))


@given(st.integers(0, 2 ** 32 - 1))
def test_hessian_symmetric_after_operations(seed):
    rng = np.random.default_rng(seed)
    a, b = random_jet(rng, (3,)), random_jet(rng, (3,))
    g = LIBRARY[seed % len(LIBRARY)]
    inner = Jet4(a.val / (1 + np.abs(a.val)), a.grad, a.hess)
    for j in (jet_add(a, b), jet_mul(a, b), jet_scale(a, 2 - 1j), jet_compose_scalar(g, inner)):
        assert np.array_equal(j.hess, np.swapaxes(j.hess, -1, -2))


@given(st.integers(0, 2 ** 32 - 1))
def test_add_and_mul_commute(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (random_jet(rng) for _ in range(3))
    for x, y in ((jet_add(a, b), jet_add(b, a)), (jet_mul(a, b), jet_mul(b, a)),
                 (jet_add(jet_add(a, b), c), jet_add(a, jet_add(b, c)))):
        assert np.allclose(x.val, y.val, rtol=1e-12, atol=0)
        assert np.allclose(x.grad, y.grad, rtol=1e-12, atol=1e-15)
        assert np.allclose(x.hess, y.hess, rtol=1e-12, atol=1e-15)


def test_batched_compose_matches_pointwise(rng):
    form = LinearForm((1, 2j, -1, 0.5), 0.2)
    pts = rng.normal(size=(5, 4)) + 1j * rng.normal(size=(5, 4))
    batched = jet_compose_scalar(ScalarFn("cos", 0.3), jet_linform(form, pts))
    for i in range(5):
        single = jet_compose_scalar(ScalarFn("cos", 0.3), jet_linform(form, pts[i]))
        assert np.allclose(batched[i].hess, single.hess)


def test_conjugate_function():
    g = ScalarFn("exp", 1 + 2j, amp=3j)
    s = 0.4 - 0.7j
    assert np.isclose(g.conjugate()(s), np.conj(g(np.conj(s))))


def test_non_finite_raises():
    with pytest.raises(DomainError):
        ScalarFn("exp", 1000).derivs(10.0)


def test_parse_roundtrip():
    for text in ("exp", "sin:0.5", "cosh:2*0.3", "poly:1,0,2", "square", "exp:1i"):
        g = parse_fn(text)
        assert parse_fn(g.describe()) == g
    with pytest.raises(ValueError):
        parse_fn("log")
