import pytest
from hypothesis import given
from hypothesis.strategies import builds, integers

from paley_zn.gaussian import I, I_POWERS, ONE, ZERO, GaussianInt

small = integers(min_value=-10**6, max_value=10**6)
gaussians = builds(GaussianInt, small, small)


@given(gaussians, gaussians, gaussians)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(gaussians, gaussians)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * a.conjugate() == GaussianInt(a.norm())


@given(gaussians, integers(min_value=0, max_value=12))
def test_pow_matches_repeated_product(a, e):
    expected = ONE
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected


def test_integer_coercion():
    assert 3 + GaussianInt(1, 2) == GaussianInt(4, 2)
    assert 1 - I == GaussianInt(1, -1)
    assert 5 * GaussianInt(1, 2) == GaussianInt(5, 10)
    assert int(GaussianInt(-6)) == -6
    with pytest.raises(ValueError):
        int(GaussianInt(1, 1))
    with pytest.raises(ValueError):
        I ** -1


def test_powers_of_i():
    assert I_POWERS == (ONE, I, -ONE, -I)
    assert I ** 4 == ONE
    assert I * I == -ONE


@pytest.mark.parametrize("z, text", [
    (GaussianInt(1, 2), "1+2i"),
    (GaussianInt(-3, 2), "-3+2i"),
    (GaussianInt(5, -10), "5-10i"),
    (GaussianInt(0, 0), "0+0i"),
    (GaussianInt(-1, -1), "-1-1i"),
])
def test_str(z, text):
    assert str(z) == text
