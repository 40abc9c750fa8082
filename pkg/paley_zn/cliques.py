# paley_zn/cliques.py
"""
Clique census of G_{p^alpha}: brute-force triangle and K4 oracles, the closed
forms for K3 and K4, the alpha = 1 reduction through p = a^2 + b^2, and the
full ledger of intermediate counts behind the K4 formula.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from paley_zn.characters import jacobi_sum_K, quadratic_char
from paley_zn.errors import IdentityViolation, TooLarge
from paley_zn.graph import build_graph, iter_bits
from paley_zn.residues import PrimePowerModulus, is_admissible, prime_power_split, unit_squares
from paley_zn.settings import TRACE_GUARD

logger = logging.getLogger(__name__)


def _exact_div(numerator, d, what):
    q, r = divmod(numerator, d)
    if r:
        raise IdentityViolation(f"{what}: {numerator} is not divisible by {d}")
    return q


# Brute-force oracles

def _triangle_chunk(adj, start, stop):
    total = 0
    for u in range(start, stop):
        row = adj[u]
        for v in iter_bits(row >> (u + 1) << (u + 1)):
            total += (row & adj[v]).bit_count()
    return total


def _k4_chunk(adj, start, stop):
    total = 0
    for u in range(start, stop):
        row = adj[u]
        for v in iter_bits(row >> (u + 1) << (u + 1)):
            common = row & adj[v]
            twice = 0
            for w in iter_bits(common):
                twice += (adj[w] & common).bit_count()
            total += twice // 2
    return total


def _chunks(n, parts):
    step = -(-n // parts)
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)]


def _sum_over_vertices(chunk_fn, g, workers):
    """Sum chunk_fn over contiguous vertex ranges, in worker processes if asked."""
    if workers <= 1 or g.n < 2 * workers:
        return chunk_fn(g.adj, 0, g.n)
    ranges = _chunks(g.n, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(chunk_fn, g.adj, lo, hi) for lo, hi in ranges]
        return sum(f.result() for f in futures)


def count_triangles_brute(g, workers=1):
    """
    Count triangles: for every edge u < v add |N(u) & N(v)|, then divide by 3.

    Args:
        g (Graph): Any graph
        workers (int): Worker processes; the total does not depend on it

    Returns:
        int: Number of 3-cliques
    """
    total = _sum_over_vertices(_triangle_chunk, g, workers)
    count = _exact_div(total, 3, "triangle incidences")
    logger.debug("brute K3 on %d vertices: %d", g.n, count)
    return count


def count_k4_brute(g, workers=1):
    """
    Count 4-cliques: for every edge add the number of edges inside the common
    neighborhood of its ends. Each K4 is seen once from each of its 6 edges.
    """
    total = _sum_over_vertices(_k4_chunk, g, workers)
    count = _exact_div(total, 6, "K4 incidences")
    logger.debug("brute K4 on %d vertices: %d", g.n, count)
    return count


# Closed forms

def k3_formula(p, alpha):
    """K3(G_{p^alpha}) = p^(3 alpha - 2)(p - 1)(p - 5)/48."""
    PrimePowerModulus(p, alpha)
    return _exact_div(p ** (3 * alpha - 2) * (p - 1) * (p - 5), 48, f"K3 formula at {p}^{alpha}")


def k4_formula(p, alpha):
    """
    K4(G_{p^alpha}) = p^(2 alpha - 1)(p - 1)[p^(2 alpha - 2)((p - 9)^2 - 2p) + K]/1536
    with K = J(psi, chi)^2 + conj(J(psi, chi))^2.
    """
    m = PrimePowerModulus(p, alpha)
    K = jacobi_sum_K(m)
    numerator = p ** (2 * alpha - 1) * (p - 1) * (p ** (2 * alpha - 2) * ((p - 9) ** 2 - 2 * p) + K)
    count = _exact_div(numerator, 1536, f"K4 formula at {m}")
    if count < 0:
        raise IdentityViolation(f"K4 formula at {m} is negative: {count}")
    return count


def two_squares(p):
    """
    The representation p = a^2 + b^2 with a even and a, b >= 0.

    Raises:
        NotOneMod4: If p is not a prime congruent to 1 mod 4
    """
    PrimePowerModulus(p, 1)
    for a in range(0, math.isqrt(p) + 1, 2):
        b = math.isqrt(p - a * a)
        if a * a + b * b == p:
            return a, b
    raise IdentityViolation(f"no sum-of-two-squares representation of {p}")


def evans_k4(p):
    """K4(G(p)) = p(p - 1)((p - 9)^2 - 4a^2)/1536 where p = a^2 + b^2, a even."""
    a, _ = two_squares(p)
    return _exact_div(p * (p - 1) * ((p - 9) ** 2 - 4 * a * a), 1536, f"Evans form at {p}")


def clique_formula(n, order):
    """
    Closed-form K_order(G_n), or None when n is not an odd prime power
    (no formula is known there).
    """
    split = prime_power_split(n) if n > 2 else None
    if split is None or split[0] == 2 or not is_admissible(n):
        return None
    p, alpha = split
    if order == 3:
        return k3_formula(p, alpha)
    if order == 4:
        return k4_formula(p, alpha)
    raise ValueError(f"order must be 3 or 4, got {order}")


# The K4 ledger

@dataclass(frozen=True)
class Theorem2Trace:
    """
    Every intermediate count behind the K4 formula for G_{p^alpha}.

    beta[i] counts the pairs (x, y) with p not dividing x, y, 1 - x^2, 1 - y^2,
    x^2 - y^2, split by the signs of chi(1 - x^2), chi(1 - y^2), chi(x^2 - y^2):
    beta1 is (+, +, +), beta2 (+, +, -), ..., beta8 (-, -, -).
    """

    p: int
    alpha: int
    A: int
    B: int
    beta: tuple
    S: int
    S0: int
    I: int
    Jsum: int
    K: int
    f: int
    k4: int

    @property
    def scale(self):
        return self.p ** (2 * self.alpha - 2)

    def relations(self):
        """(name, lhs, rhs) for every identity the ledger must satisfy."""
        b1, b2, b3, b4, b5, b6, b7, b8 = self.beta
        p, A, B, c = self.p, self.A, self.B, self.scale
        return [
            ("beta1+beta2=A", b1 + b2, A),
            ("beta1+beta3=A", b1 + b3, A),
            ("beta3+beta4=B", b3 + b4, B),
            ("beta1+beta5=A", b1 + b5, A),
            ("beta2+beta6=B", b2 + b6, B),
            ("beta5+beta7=B", b5 + b7, B),
            ("beta7+beta8=B", b7 + b8, B),
            ("A closed form", A, c * ((p - 5) // 2) * ((p - 9) // 2)),
            ("B closed form", B, c * ((p - 5) // 2) * ((p - 1) // 2)),
            ("S0 sign sum", b1 - b2 - b3 + b4 - b5 + b6 + b7 - b8, self.S0),
            ("S0=S+4p^(2a-2)", self.S0, self.S + 4 * c),
            ("I=2p^(2a-2)", self.I, 2 * c),
            ("J=2p^(2a-2)", self.Jsum, 2 * c),
            ("S=-4p^(2a-2)+I+2J+K", self.S, -4 * c + self.I + 2 * self.Jsum + self.K),
            ("64f from S0", 64 * self.f, self.S0 - c * (p - 5) * (15 - p)),
            ("64f from K", 64 * self.f, c * (p * p - 20 * p + 81) + self.K),
            ("f=beta1/8", 8 * self.f, b1),
            ("24k4=p^(2a-1)(p-1)f", 24 * self.k4, p ** (2 * self.alpha - 1) * (p - 1) * self.f),
        ]

    def violations(self):
        return [name for name, lhs, rhs in self.relations() if lhs != rhs]

    def to_dict(self):
        data = asdict(self)
        data['beta'] = list(self.beta)
        return data


def _guard(m):
    if m.n > TRACE_GUARD:
        raise TooLarge(f"{m.n} exceeds the enumeration guard {TRACE_GUARD}")


def _s_sums(m):
    """Direct (S, S0, beta) by enumeration of all pairs (x, y) mod p^alpha."""
    n, p = m.n, m.p
    chi = quadratic_char(m).signs
    sq = [x * x % n for x in range(n)]
    one_minus = [chi[(1 - s) % n] for s in sq]

    S = 0
    beta = [0] * 8
    for x in range(n):
        cx = one_minus[x]
        if cx == 0:
            continue
        for y in range(n):
            cy = one_minus[y]
            if cy == 0:
                continue
            cxy = chi[(sq[x] - sq[y]) % n]
            S += cx * cy * cxy
            if cxy and x % p and y % p:
                beta[(cx < 0) * 4 + (cy < 0) * 2 + (cxy < 0)] += 1
    S0 = sum(sign * b for sign, b in zip((1, -1, -1, 1, -1, 1, 1, -1), beta))
    return S, S0, beta


def _ijk_sums(m):
    """Direct (I, J, K) over pairs of units."""
    n, p = m.n, m.p
    chi = quadratic_char(m).signs
    units = [x for x in range(n) if x % p]
    I = J = K = 0
    for x in units:
        ax = (1 - x) % n
        if chi[ax] == 0:
            continue
        for y in units:
            base = chi[ax * (1 - y) * (y - x) % n]
            if base == 0:
                continue
            cx, cy = chi[x], chi[y]
            I += base
            J += base * cx
            K += base * cx * cy
    return I, J, K


def lemma_S_pair(m):
    """
    Direct (S, S0) for the modulus m, checked against S0 = S + 4p^(2 alpha - 2)
    and S = 2p^(2 alpha - 2) + K.

    Raises:
        TooLarge: If p^alpha exceeds the enumeration guard
    """
    _guard(m)
    S, S0, _ = _s_sums(m)
    c = m.p ** (2 * m.alpha - 2)
    if S0 != S + 4 * c:
        raise IdentityViolation(f"S0 = {S0} but S + 4p^(2a-2) = {S + 4 * c} at {m}")
    K = jacobi_sum_K(m)
    if S != 2 * c + K:
        raise IdentityViolation(f"S = {S} but 2p^(2a-2) + K = {2 * c + K} at {m}")
    return S, S0


def theorem2_trace(p, alpha):
    """
    Build the K4 ledger for G_{p^alpha} by direct enumeration and check every
    relation in it.

    Returns:
        Theorem2Trace: The ledger

    Raises:
        TooLarge: If p^alpha exceeds the enumeration guard
        IdentityViolation: If any relation fails
    """
    m = PrimePowerModulus(p, alpha)
    _guard(m)
    S, S0, beta = _s_sums(m)
    I, J, K = _ijk_sums(m)
    if K != jacobi_sum_K(m):
        raise IdentityViolation(f"K double sum {K} != J^2 + conj(J)^2 at {m}")
    f = _exact_div(beta[0], 8, f"beta1 at {m}")
    k4 = _exact_div(p ** (2 * alpha - 1) * (p - 1) * f, 24, f"k4 from f at {m}")
    trace = Theorem2Trace(
        p=p,
        alpha=alpha,
        A=beta[0] + beta[1],
        B=beta[2] + beta[3],
        beta=tuple(beta),
        S=S,
        S0=S0,
        I=I,
        Jsum=J,
        K=K,
        f=f,
        k4=k4,
    )
    failed = trace.violations()
    if failed:
        raise IdentityViolation(f"trace at {m} violates: {', '.join(failed)}")
    logger.info("trace %s: f=%d k4=%d", m, f, k4)
    return trace


# The subgraph H induced on the neighborhood of 0

def square_subgraph(g):
    """The subgraph of G_n induced by unit_squares(n), relabelled in increasing order."""
    return g.induced(sorted(unit_squares(g.n)))


def triangle_edge_sum(m):
    """
    Number of x with x and x - 1 both unit squares (common neighbors of 0 and 1),
    by enumeration and by sum of (1 + chi(x))(1 + chi(1 - x))/4. Closed form
    p^(alpha-1)(p - 5)/4.
    """
    n, p = m.n, m.p
    squares = unit_squares(n)
    direct = sum(1 for x in squares if (x - 1) % n in squares)
    chi = quadratic_char(m).signs
    quadruple = sum((1 + chi[x]) * (1 + chi[(1 - x) % n])
                    for x in range(n) if x % p and (x - 1) % p)
    by_characters = _exact_div(quadruple, 4, f"edge character sum at {m}")
    closed = _exact_div(p ** (m.alpha - 1) * (p - 5), 4, f"edge closed form at {m}")
    if not direct == by_characters == closed:
        raise IdentityViolation(
            f"common neighbors of 0 and 1 at {m}: {direct}, {by_characters}, {closed}")
    return direct


def k3_via_edge_sum(m):
    """K3(G_{p^alpha}) = p^alpha phi(p^alpha)/12 times triangle_edge_sum."""
    return _exact_div(m.n * m.phi * triangle_edge_sum(m), 12, f"K3 via edge sum at {m}")


def k3_of_square_subgraph(m, workers=1):
    """Brute-force triangle count of the subgraph induced by the unit squares."""
    return count_triangles_brute(square_subgraph(build_graph(m.n)), workers)


def k4_via_square_subgraph(m, workers=1):
    """K4(G_{p^alpha}) = p^alpha K3(H)/4, H the square subgraph."""
    return _exact_div(m.n * k3_of_square_subgraph(m, workers), 4, f"K4 via H at {m}")
