# paley_zn/characters.py
"""
Dirichlet characters modulo p^alpha (trivial, quadratic and quartic), the
Jacobi symbol, Jacobi sums, and direct evaluators for the character-sum
lemmas behind the clique counts.

Every lemma evaluator returns the directly enumerated value and raises
IdentityViolation if it disagrees with the closed form.
"""
import logging
import math
from functools import lru_cache

from paley_zn.errors import (
    IdentityViolation,
    MappingFailure,
    ModulusMismatch,
    NonUnitShift,
    NotAdmissible,
    TooLarge,
)
from paley_zn.gaussian import I_POWERS, ZERO, GaussianInt
from paley_zn.residues import (
    euler_phi,
    is_admissible,
    is_cyclic_unit_group,
    mod_pow,
    primitive_root,
    unit_squares,
)
from paley_zn.settings import TABLE_LIMIT

logger = logging.getLogger(__name__)

# Marks a zero value in a quarter-turn table
NONUNIT = -1


class Character:
    """
    A Dirichlet character mod p^alpha with values in {0, 1, i, -1, -i}.

    Values are stored as quarter turns: entry q in 0..3 means i^q, NONUNIT
    means 0. Products of characters add quarter turns mod 4.
    """

    def __init__(self, modulus, order, quarter_turns):
        self.modulus = modulus
        self.order = order
        self.turns = tuple(quarter_turns)
        if len(self.turns) != modulus.n:
            raise ValueError("character table must cover every residue")
        self._signs = None

    @property
    def n(self):
        return self.modulus.n

    def __call__(self, x):
        q = self.turns[x % self.n]
        return ZERO if q == NONUNIT else I_POWERS[q]

    @property
    def table(self):
        """Map unit residue -> GaussianInt value."""
        return {x: I_POWERS[q] for x, q in enumerate(self.turns) if q != NONUNIT}

    @property
    def signs(self):
        """Integer table of a real character: entries in {-1, 0, 1}."""
        if self._signs is None:
            if any(q in (1, 3) for q in self.turns):
                raise ValueError(f"character of order {self.order} is not real")
            self._signs = tuple(0 if q == NONUNIT else 1 - q for q in self.turns)
        return self._signs

    def sign(self, x):
        return self.signs[x % self.n]

    def conjugate(self):
        turns = (q if q == NONUNIT else (-q) % 4 for q in self.turns)
        return Character(self.modulus, self.order, turns)

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        _require_same_modulus(self, other)
        turns = []
        for a, b in zip(self.turns, other.turns):
            turns.append(NONUNIT if NONUNIT in (a, b) else (a + b) % 4)
        return Character(self.modulus, _order_of(turns), turns)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.modulus == other.modulus and self.turns == other.turns

    def __hash__(self):
        return hash((self.modulus, self.turns))

    def __repr__(self):
        return f"Character(mod {self.modulus}, order {self.order})"


def _order_of(turns):
    live = [q for q in turns if q != NONUNIT]
    if all(q == 0 for q in live):
        return 1
    if all(q in (0, 2) for q in live):
        return 2
    return 4


def _require_same_modulus(a, b):
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"characters mod {a.modulus} and mod {b.modulus}")


def _check_table_size(m):
    if m.n > TABLE_LIMIT:
        raise TooLarge(f"modulus {m.n} exceeds the table limit {TABLE_LIMIT}")


@lru_cache(maxsize=64)
def trivial_char(m):
    """epsilon mod p^alpha: 1 on units, 0 elsewhere."""
    _check_table_size(m)
    return Character(m, 1, (0 if m.is_unit(x) else NONUNIT for x in range(m.n)))


@lru_cache(maxsize=64)
def quadratic_char(m):
    """
    The unique order-2 character chi mod p^alpha, by Euler's criterion.

    Raises:
        MappingFailure: If a^(phi/2) mod n is neither 1 nor n - 1 for a unit
        IdentityViolation: If the result disagrees with square membership
    """
    _check_table_size(m)
    n, half = m.n, m.phi // 2
    squares = unit_squares(n)
    turns = []
    for a in range(n):
        if not m.is_unit(a):
            turns.append(NONUNIT)
            continue
        r = mod_pow(a, half, n)
        if r == 1:
            q = 0
        elif r == n - 1:
            q = 2
        else:
            raise MappingFailure(f"{a}^{half} = {r} (mod {n})")
        if (q == 0) != (a in squares):
            raise IdentityViolation(f"Euler criterion disagrees with squares at {a} mod {n}")
        turns.append(q)
    return Character(m, 2, turns)


@lru_cache(maxsize=64)
def quartic_char(m):
    """
    The order-4 character psi with psi(g^t) = i^t, g the smallest primitive root.

    The discrete log table is filled by one sweep g^0, g^1, ..., g^(phi-1).
    """
    _check_table_size(m)
    n, g = m.n, primitive_root(m)
    turns = [NONUNIT] * n
    x = 1
    for t in range(m.phi):
        turns[x] = t % 4
        x = x * g % n
    logger.debug("quartic character mod %s tabulated with g=%d", m, g)
    return Character(m, 4, turns)


def jacobi_symbol(a, n):
    """
    The Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity.

    Returns:
        int: -1, 0 or 1
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi_sum(psi, chi):
    """
    J(psi, chi) = sum over x mod p^alpha of psi(x) chi(1 - x), exactly.

    Raises:
        ModulusMismatch: If the characters live on different moduli
    """
    _require_same_modulus(psi, chi)
    n = psi.n
    # counts[q] = number of terms equal to i^q
    counts = [0, 0, 0, 0]
    for x in range(n):
        a, b = psi.turns[x], chi.turns[(1 - x) % n]
        if a != NONUNIT and b != NONUNIT:
            counts[(a + b) % 4] += 1
    return GaussianInt(counts[0] - counts[2], counts[1] - counts[3])


def jacobi_sum_K(m):
    """J(psi, chi)^2 + conj(J(psi, chi))^2 as a rational integer."""
    j = jacobi_sum(quartic_char(m), quadratic_char(m))
    k = j * j + j.conjugate() * j.conjugate()
    return int(k)


def character_sum(char):
    """Sum of char(x) over all residues; zero for every non-trivial character."""
    total = ZERO
    for x in range(char.n):
        total = total + char(x)
    return total


def is_periodic_mod_p(char):
    """True iff char(x) = char(x + p k) for every x and k."""
    p, n = char.modulus.p, char.n
    return all(char.turns[x] == char.turns[x % p] for x in range(n))


def is_multiplicative(char):
    """Exhaustive check of char(ab) = char(a) char(b) over all residue pairs."""
    n, turns = char.n, char.turns
    for a in range(n):
        ta = turns[a]
        for b in range(a, n):
            tb, tab = turns[b], turns[a * b % n]
            if NONUNIT in (ta, tb):
                if tab != NONUNIT:
                    return False
            elif tab != (ta + tb) % 4:
                return False
    return True


def _require_unit(m, a):
    if a % m.p == 0:
        raise NonUnitShift(f"{a} is divisible by {m.p}")


def _violation(what, direct, closed):
    raise IdentityViolation(f"{what}: direct {direct} != closed form {closed}")


def sum_chi_x2_minus_a(m, a):
    """
    Direct value of sum over units x of chi(x^2 - a).

    The closed form is -(1 + chi(a)) p^(alpha-1).

    Raises:
        NonUnitShift: If p divides a
    """
    _require_unit(m, a)
    chi = quadratic_char(m).signs
    n = m.n
    direct = sum(chi[(x * x - a) % n] for x in range(n) if m.is_unit(x))
    closed = -(1 + chi[a % n]) * m.p ** (m.alpha - 1)
    if direct != closed:
        _violation(f"sum chi(x^2 - {a}) mod {m}", direct, closed)
    return direct


def count_chi_one_minus_x2(m):
    """
    Direct count of x mod p^alpha with p not dividing x or 1 - x^2 and
    chi(1 - x^2) = 1. The closed form is p^(alpha-1)(p-5)/2.
    """
    chi = quadratic_char(m).signs
    n, p = m.n, m.p
    direct = sum(1 for x in range(n) if x % p and chi[(1 - x * x) % n] == 1)
    closed = p ** (m.alpha - 1) * (p - 5) // 2
    if direct != closed:
        _violation(f"#{{chi(1 - x^2) = 1}} mod {m}", direct, closed)
    return direct


def side_counts_one_minus_x2(m):
    """
    Counts used in the chi(1 - x^2) lemma: units x with p | x^2 - 1, and units
    with p not dividing 1 - x^2. Closed forms 2 p^(alpha-1) and p^(alpha-1)(p-3).

    Returns:
        tuple: (count with p | x^2 - 1, count with p not dividing 1 - x^2)
    """
    n, p = m.n, m.p
    units = [x for x in range(n) if x % p]
    on_one = sum(1 for x in units if (x * x - 1) % p == 0)
    off_one = len(units) - on_one
    base = p ** (m.alpha - 1)
    if (on_one, off_one) != (2 * base, base * (p - 3)):
        _violation(f"unit split of 1 - x^2 mod {m}", (on_one, off_one), (2 * base, base * (p - 3)))
    return on_one, off_one


def shifted_pair_closed_form(m, a, b):
    """The four-case closed form of sum over x of chi((x - a)(x - b))."""
    p, base = m.p, m.p ** (m.alpha - 1)
    a_unit, b_unit = a % p != 0, b % p != 0
    if not a_unit and not b_unit:
        return base * (p - 1)
    if a_unit != b_unit:
        return -base
    # both units: p | 1 - b a^-1 iff a = b (mod p)
    if (1 - b * pow(a, -1, m.n)) % p == 0:
        return base * (p - 1)
    return -base


def sum_chi_shifted_pair(m, a, b):
    """Direct value of sum over x mod p^alpha of chi((x - a)(x - b))."""
    chi = quadratic_char(m).signs
    n = m.n
    direct = sum(chi[(x - a) * (x - b) % n] for x in range(n))
    closed = shifted_pair_closed_form(m, a, b)
    if direct != closed:
        _violation(f"sum chi((x - {a})(x - {b})) mod {m}", direct, closed)
    return direct


def lemma_K_double_sum(m):
    """
    K = sum over units x, y of chi((1 - x)(1 - y)(y - x) x y), by direct
    double enumeration. Must equal J(psi, chi)^2 + conj(J(psi, chi))^2.
    """
    chi = quadratic_char(m).signs
    n, p = m.n, m.p
    units = [x for x in range(n) if x % p]
    direct = 0
    for x in units:
        ax = (1 - x) * x % n
        if chi[ax] == 0:
            continue
        for y in units:
            direct += chi[ax * (1 - y) * (y - x) * y % n]
    closed = jacobi_sum_K(m)
    if direct != closed:
        _violation(f"K double sum mod {m}", direct, closed)
    logger.debug("K(%s) = %d", m, direct)
    return direct


def degree_by_character_sum(m, a):
    """deg(a) in G_{p^alpha} as sum over b with a - b a unit of (1 + chi(a - b))/2."""
    chi = quadratic_char(m).signs
    n = m.n
    twice = sum(1 + chi[(a - b) % n] for b in range(n) if (a - b) % m.p)
    direct = twice // 2
    if direct != m.phi // 2:
        _violation(f"degree of {a} in G_{m.n}", direct, m.phi // 2)
    return direct


def chi2_candidate(a, n):
    """a^(phi(n)/2) mod n, the Euler-criterion candidate for a quadratic character."""
    return mod_pow(a, euler_phi(n) // 2, n)


def chi2_is_trivial(n):
    """True iff a^(phi(n)/2) = 1 (mod n) for every unit a."""
    half = euler_phi(n) // 2
    return all(pow(a, half, n) == 1 for a in range(1, n) if math.gcd(a, n) == 1)


def chi3_value(a, n):
    """+1 if the unit a is a square mod n, -1 if not, 0 for non-units."""
    if math.gcd(a, n) != 1:
        return 0
    return 1 if a % n in unit_squares(n) else -1


def find_jacobi_mismatch(n):
    """
    Units a with (a/n) = 1 that are not squares mod n.

    These exist for every admissible n with two or more odd prime factors, so
    the Jacobi symbol cannot serve as the quadratic character there.
    """
    if n % 2 == 0:
        n_odd = n // 2
    else:
        n_odd = n
    squares = unit_squares(n)
    return [a for a in range(1, n)
            if math.gcd(a, n) == 1 and jacobi_symbol(a, n_odd) == 1 and a not in squares]


def find_nonsquare_triple(n):
    """
    First pair (a, b) of units with a, b and ab all non-squares mod n, or None.

    Such a pair exists iff Z_n^* is not cyclic, in which case square
    membership is not multiplicative.
    """
    squares = unit_squares(n)
    non_squares = [a for a in range(1, n) if math.gcd(a, n) == 1 and a not in squares]
    for a in non_squares:
        for b in non_squares:
            if a * b % n not in squares:
                return a, b
    return None


def quadratic_char_on(n):
    """
    chi2 on a cyclic admissible modulus as a dict unit -> +-1.

    Raises:
        NotAdmissible: If n is not admissible or Z_n^* is not cyclic
    """
    if not is_admissible(n) or not is_cyclic_unit_group(n):
        raise NotAdmissible(f"no unique quadratic character modulo {n}")
    values = {}
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        r = chi2_candidate(a, n)
        if r not in (1, n - 1):
            raise MappingFailure(f"{a}^(phi/2) = {r} (mod {n})")
        values[a] = 1 if r == 1 else -1
    return values
