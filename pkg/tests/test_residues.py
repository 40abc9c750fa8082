import pytest
from hypothesis import given
from hypothesis.strategies import integers
from sympy import factorint, n_order, totient

from paley_zn.errors import InvalidModulus, NotAdmissible, NotOneMod4
from paley_zn.residues import (
    Modulus,
    PrimePowerModulus,
    check_binomial_divisibility,
    euler_phi,
    factorize,
    has_unit_root_of_minus_one,
    inadmissibility_reason,
    is_admissible,
    is_cyclic_unit_group,
    is_square_unit,
    mod_pow,
    multiplicative_order,
    primitive_root,
    sqrt_of_minus_one,
    square_roots_of_one,
    unit_squares,
)


@given(integers(min_value=1, max_value=10**7))
def test_factorize_matches_sympy(n):
    assert dict(factorize(n)) == factorint(n)


@given(integers(min_value=1, max_value=10**6))
def test_factorization_multiplies_back(n):
    product = 1
    primes = []
    for p, e in factorize(n):
        assert e >= 1
        primes.append(p)
        product *= p ** e
    assert product == n
    assert primes == sorted(set(primes))


@given(integers(min_value=1, max_value=10**6))
def test_euler_phi_matches_sympy(n):
    assert euler_phi(n) == totient(n)


def test_admissibility_matches_exhaustive_search():
    for n in range(3, 2001):
        assert is_admissible(n) == has_unit_root_of_minus_one(n), n


@pytest.mark.parametrize("n, expected", [
    (1, False), (2, False), (3, False), (4, False), (5, True), (10, True),
    (13, True), (20, False), (21, False), (25, True), (50, True), (65, True), (130, True),
])
def test_is_admissible(n, expected):
    assert is_admissible(n) is expected


@pytest.mark.parametrize("n, reason", [
    (1, "excluded (n must be >= 3)"),
    (2, "excluded (n must be >= 3)"),
    (12, "inadmissible (4 divides n)"),
    (21, "inadmissible (prime 3 = 3 mod 4)"),
    (65, None),
])
def test_inadmissibility_reason(n, reason):
    assert inadmissibility_reason(n) == reason


@pytest.mark.parametrize("n, x", [(5, 2), (10, 3), (25, 7), (65, 8)])
def test_sqrt_of_minus_one_is_smallest(n, x):
    assert sqrt_of_minus_one(n) == x


def test_sqrt_of_minus_one_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        sqrt_of_minus_one(21)


def test_unit_squares():
    assert unit_squares(5) == {1, 4}
    assert unit_squares(13) == {1, 3, 4, 9, 10, 12}
    assert unit_squares(25) == {1, 4, 6, 9, 11, 14, 16, 19, 21, 24}
    assert is_square_unit(24, 25)
    assert not is_square_unit(2, 25)
    assert not is_square_unit(5, 25)


@pytest.mark.parametrize("n", [5, 10, 25, 26, 65, 130, 169, 325])
def test_square_count_and_roots_of_one(n):
    m = Modulus.of(n)
    assert len(square_roots_of_one(n)) == 2 ** m.k
    assert len(unit_squares(n)) == m.phi // 2 ** m.k


@pytest.mark.parametrize("n, cyclic", [
    (4, True), (8, False), (10, True), (25, True), (50, True), (65, False), (130, False),
])
def test_is_cyclic_unit_group(n, cyclic):
    assert is_cyclic_unit_group(n) is cyclic


def test_modulus_fields():
    m = Modulus.of(650)
    assert m.factors == ((2, 1), (5, 2), (13, 1))
    assert (m.s, m.k) == (1, 2)
    assert m.factor_string() == "2 * 5^2 * 13"
    assert m.admissible
    assert m.certificate() ** 2 % 650 == 649
    assert m.to_dict()['factors'] == [[2, 1], [5, 2], [13, 1]]


def test_modulus_rejects_small_n():
    with pytest.raises(InvalidModulus):
        Modulus.of(2)


def test_require_admissible():
    with pytest.raises(NotAdmissible):
        Modulus.of(21).require_admissible()
    assert Modulus.of(26).require_admissible().n == 26


def test_prime_power_modulus_validation():
    with pytest.raises(NotOneMod4):
        PrimePowerModulus(7, 1)
    with pytest.raises(InvalidModulus):
        PrimePowerModulus(9, 1)
    with pytest.raises(InvalidModulus):
        PrimePowerModulus(5, 0)
    assert PrimePowerModulus.from_n(169) == PrimePowerModulus(13, 2)
    with pytest.raises(InvalidModulus):
        PrimePowerModulus.from_n(65)


def test_prime_power_modulus_properties():
    m = PrimePowerModulus(5, 3)
    assert (m.n, m.phi) == (125, 100)
    assert str(m) == "5^3"
    assert str(PrimePowerModulus(13, 1)) == "13"
    assert m.is_unit(7) and not m.is_unit(10)


@pytest.mark.parametrize("p, alpha, g", [(5, 1, 2), (5, 2, 2), (13, 1, 2), (13, 2, 2), (17, 1, 3)])
def test_primitive_root_is_smallest_generator(p, alpha, g):
    m = PrimePowerModulus(p, alpha)
    assert primitive_root(m) == g
    assert n_order(g, m.n) == m.phi
    assert all(n_order(h, m.n) < m.phi for h in range(2, g) if h % p)


@given(integers(min_value=1, max_value=500), integers(min_value=3, max_value=500))
def test_multiplicative_order_matches_sympy(a, n):
    from math import gcd
    if gcd(a, n) == 1:
        assert multiplicative_order(a, n) == n_order(a, n)


@pytest.mark.parametrize("p", [5, 13, 17, 29])
@pytest.mark.parametrize("alpha", [1, 2, 3, 4])
def test_binomial_divisibility(p, alpha):
    assert check_binomial_divisibility(p, alpha)


@pytest.mark.parametrize("base, exp, n, expected", [
    (2, 10, 1000, 24), (-3, 5, 7, 2), (5, 0, 13, 1), (12, 6, 13, 1),
])
def test_mod_pow(base, exp, n, expected):
    assert mod_pow(base, exp, n) == expected
