# paley_zn/residues.py
"""
Exact modular arithmetic on Z_n: factorization, the unit group, unit squares
and the admissibility test for the Paley-type graph G_n.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.ntheory import isprime

from paley_zn.errors import InvalidModulus, NotAdmissible, NotOneMod4

logger = logging.getLogger(__name__)


def factorize(n):
    """
    Factor n by trial division.

    Args:
        n (int): Positive integer

    Returns:
        list: (prime, exponent) pairs in increasing prime order, [] for n == 1
    """
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def euler_phi(n):
    """Euler's totient of n, from its factorization."""
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mod_pow(base, exp, n):
    """base**exp mod n, always in [0, n)."""
    return pow(base, exp, n)


def is_admissible(n):
    """
    True iff n >= 3 and n = 2^s * prod p_i^a_i with s in {0, 1} and every odd
    p_i congruent to 1 mod 4. These are exactly the n where -1 is a unit
    square, i.e. where G_n is defined.
    """
    if n < 3:
        return False
    for p, e in factorize(n):
        if p == 2:
            if e > 1:
                return False
        elif p % 4 != 1:
            return False
    return True


def inadmissibility_reason(n):
    """Short human-readable reason why n is rejected, or None if admissible."""
    if n < 3:
        return "excluded (n must be >= 3)"
    for p, e in factorize(n):
        if p == 2 and e > 1:
            return "inadmissible (4 divides n)"
        if p != 2 and p % 4 != 1:
            return f"inadmissible (prime {p} = 3 mod 4)"
    return None


def has_unit_root_of_minus_one(n):
    """Exhaustive search for a unit x with x^2 = -1 (mod n); n >= 3."""
    target = n - 1
    return any(x * x % n == target for x in range(1, n) if math.gcd(x, n) == 1)


def sqrt_of_minus_one(n):
    """
    Smallest unit x with x^2 = -1 (mod n).

    Raises:
        NotAdmissible: If no such x exists
    """
    if n >= 3:
        target = n - 1
        for x in range(1, n):
            if x * x % n == target:
                return x
    raise NotAdmissible(f"-1 is not a unit square modulo {n}")


@lru_cache(maxsize=256)
def unit_squares(n):
    """The set R = { x^2 mod n : gcd(x, n) = 1 } as a frozenset."""
    return frozenset(x * x % n for x in range(1, n) if math.gcd(x, n) == 1)


def is_square_unit(a, n):
    """True iff a is the square of a unit modulo n."""
    return a % n in unit_squares(n)


def square_roots_of_one(n):
    """All x in [0, n) with x^2 = 1 (mod n)."""
    return [x for x in range(n) if x * x % n == 1 % n]


def is_cyclic_unit_group(n):
    """True iff Z_n^* is cyclic, i.e. n in {1, 2, 4, p^a, 2p^a} for odd p."""
    if n in (1, 2, 4):
        return True
    factors = factorize(n)
    if factors and factors[0] == (2, 1):
        factors = factors[1:]
    return len(factors) == 1 and factors[0][0] != 2


def prime_power_split(n):
    """Return (p, alpha) if n = p^alpha for a prime p, otherwise None."""
    factors = factorize(n)
    if len(factors) == 1:
        return factors[0]
    return None


def multiplicative_order(a, n):
    """Order of the unit a in Z_n^*."""
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    phi = euler_phi(n)
    order = phi
    for q, _ in factorize(phi):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def check_binomial_divisibility(p, alpha):
    """
    True iff binom(p^(alpha-1)(p-1)/2, i) * p^i = 0 (mod p^alpha) for every
    1 <= i <= alpha - 1. Exact big-integer binomials.
    """
    n = p ** alpha
    half_phi = p ** (alpha - 1) * (p - 1) // 2
    return all(math.comb(half_phi, i) * p ** i % n == 0 for i in range(1, alpha))


@dataclass(frozen=True)
class Modulus:
    """
    A validated modulus n >= 3 with its factorization.

    s is the exponent of 2 in n and k the number of distinct odd primes.
    """

    n: int
    factors: tuple = field(compare=False)
    s: int = field(compare=False)
    k: int = field(compare=False)

    @classmethod
    def of(cls, n):
        if n < 3:
            raise InvalidModulus(f"n must be >= 3, got {n}")
        factors = tuple(factorize(n))
        s = next((e for p, e in factors if p == 2), 0)
        k = sum(1 for p, _ in factors if p != 2)
        return cls(n, factors, s, k)

    @property
    def admissible(self):
        return is_admissible(self.n)

    @property
    def phi(self):
        return euler_phi(self.n)

    def certificate(self):
        """The smallest unit x with x^2 = -1, the constructive admissibility proof."""
        return sqrt_of_minus_one(self.n)

    def require_admissible(self):
        if not self.admissible:
            raise NotAdmissible(inadmissibility_reason(self.n))
        return self

    def factor_string(self):
        """Factorization as text, e.g. '5^2 * 13'."""
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def to_dict(self):
        return {
            'n': self.n,
            'factors': [list(pe) for pe in self.factors],
            's': self.s,
            'k': self.k,
        }


@dataclass(frozen=True)
class PrimePowerModulus:
    """
    n = p^alpha for a prime p = 1 (mod 4), with phi(n) and the smallest
    primitive root g.
    """

    p: int
    alpha: int

    def __post_init__(self):
        if self.alpha < 1:
            raise InvalidModulus(f"alpha must be positive, got {self.alpha}")
        if not isprime(self.p):
            raise InvalidModulus(f"{self.p} is not prime")
        if self.p % 4 != 1:
            raise NotOneMod4(f"{self.p} is not 1 mod 4")

    @classmethod
    def from_n(cls, n):
        """Build from n = p^alpha, or raise InvalidModulus."""
        split = prime_power_split(n) if n > 1 else None
        if split is None:
            raise InvalidModulus(f"{n} is not a prime power")
        return cls(*split)

    @property
    def n(self):
        return self.p ** self.alpha

    @property
    def phi(self):
        return self.p ** (self.alpha - 1) * (self.p - 1)

    @property
    def g(self):
        return primitive_root(self)

    def is_unit(self, x):
        return x % self.p != 0

    def __str__(self):
        if self.alpha == 1:
            return str(self.p)
        return f"{self.p}^{self.alpha}"


@lru_cache(maxsize=64)
def primitive_root(m):
    """
    Smallest positive generator of Z_{p^alpha}^*.

    A unit g generates iff g^(phi/q) != 1 for every prime q dividing phi.
    """
    n, phi = m.n, m.phi
    cofactors = [phi // q for q, _ in factorize(phi)]
    for g in range(2, n):
        if g % m.p == 0:
            continue
        if all(pow(g, c, n) != 1 for c in cofactors):
            logger.debug("primitive root mod %s is %d", m, g)
            return g
    # p = 1 mod 4 means n >= 5, so a generator always exists
    raise InvalidModulus(f"no primitive root modulo {n}")
