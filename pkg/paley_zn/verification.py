# paley_zn/verification.py
"""
The `verify` sweep: runs every identity and oracle comparison over a bounded
parameter range and collects the outcomes in a VerificationReport.
"""
import json
import logging
import random
from dataclasses import dataclass, field

from sympy import isprime, primerange

from paley_zn import characters as chars
from paley_zn import cliques
from paley_zn.errors import PaleyError
from paley_zn.gaussian import ZERO
from paley_zn.graph import (
    affine_automorphism_check,
    build_graph,
    decomposition_report,
    degree_profile,
    is_complete,
    is_connected,
    is_cycle,
    regular_degree,
    self_complementary_edge_test,
    spanning_cycle_check,
)
from paley_zn.residues import (
    Modulus,
    PrimePowerModulus,
    check_binomial_divisibility,
    has_unit_root_of_minus_one,
    is_admissible,
    is_cyclic_unit_group,
    multiplicative_order,
    primitive_root,
    sqrt_of_minus_one,
    square_roots_of_one,
    unit_squares,
)
from paley_zn.settings import (
    ADMISSIBILITY_BRUTE_LIMIT,
    AFFINE_SAMPLES,
    SHIFTED_PAIR_SAMPLES,
    TRACE_GUARD,
    SweepSettings,
)

logger = logging.getLogger(__name__)

HOLDS = "holds"


def plain_value(value):
    """JSON-friendly form of a check value."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [plain_value(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    params: dict
    passed: bool
    expected: object
    actual: object

    def sort_key(self):
        return (self.name, tuple(sorted(self.params.items())))

    def params_text(self):
        return ",".join(f"{k}={v}" for k, v in self.params.items())

    def to_dict(self):
        return {
            'name': self.name,
            'params': dict(self.params),
            'pass': self.passed,
            'expected': plain_value(self.expected),
            'actual': plain_value(self.actual),
        }


@dataclass
class VerificationReport:
    """
    Outcome of one sweep. Checks are kept in canonical order (by name, then
    parameters) so the same sweep always renders identically.
    """

    checks: list = field(default_factory=list)

    def add(self, name, params, expected, actual):
        check = Check(name, dict(params), expected == actual, expected, actual)
        self.checks.append(check)
        if not check.passed:
            logger.warning("check %s(%s) failed: expected %s, got %s",
                           name, check.params_text(), expected, actual)
        return check

    def attempt(self, name, params, expected, compute):
        """
        Record compute() against expected. A PaleyError raised by compute is
        recorded as a failed check carrying the error message.
        """
        try:
            actual = compute()
        except PaleyError as e:
            actual = f"{type(e).__name__}: {e}"
        return self.add(name, params, expected, actual)

    def identity(self, name, params, run):
        """Record that run() completes without an IdentityViolation."""
        def compute():
            run()
            return HOLDS
        return self.attempt(name, params, HOLDS, compute)

    def sorted_checks(self):
        return sorted(self.checks, key=Check.sort_key)

    @property
    def passed_count(self):
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed_count(self):
        return len(self.checks) - self.passed_count

    @property
    def all_passed(self):
        return self.failed_count == 0

    def summary(self):
        return {'pass': self.passed_count, 'fail': self.failed_count}

    def to_dict(self):
        return {
            'checks': [c.to_dict() for c in self.sorted_checks()],
            'summary': self.summary(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        """Plain table, one check per line, then a summary line."""
        lines = []
        for c in self.sorted_checks():
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}({c.params_text()})"
            if not c.passed:
                line += f"  expected {plain_value(c.expected)}, got {plain_value(c.actual)}"
            lines.append(line)
        lines.append(f"{self.passed_count} passed, {self.failed_count} failed")
        return "\n".join(lines) + "\n"


# Suites

def check_admissibility(report, n):
    if n <= ADMISSIBILITY_BRUTE_LIMIT:
        report.add("admissible", {'n': n}, has_unit_root_of_minus_one(n), is_admissible(n))
    if is_admissible(n):
        x = sqrt_of_minus_one(n)
        report.add("sqrt-of-minus-one", {'n': n}, n - 1, x * x % n)


def check_structure(report, n):
    """Structural properties of G_n for one admissible n."""
    params = {'n': n}
    m = Modulus.of(n)
    g = build_graph(n)
    d = regular_degree(n)
    report.add("regular", params, [d, d], list(degree_profile(g)))
    report.add("connected", params, True, is_connected(g))
    report.add("spanning-cycle", params, True, spanning_cycle_check(g))
    report.add("complete", params, False, is_complete(g))
    report.add("cycle", params, n in (5, 10), is_cycle(g))
    report.add("self-complementary-edge-count", params, isprime(n), self_complementary_edge_test(n))
    report.add("square-roots-of-one", params, 2 ** m.k, len(square_roots_of_one(n)))
    report.add("unit-square-count", params, m.phi // 2 ** m.k, len(unit_squares(n)))
    if is_cyclic_unit_group(n):
        chi2 = chars.quadratic_char_on(n)
        report.add("chi2-equals-chi3", params, True,
                   all(v == chars.chi3_value(a, n) for a, v in chi2.items()))
    else:
        report.add("chi2-trivial", params, True, chars.chi2_is_trivial(n))


def check_pathologies(report, n=65):
    """Square membership is not the Jacobi symbol, nor multiplicative, mod n."""
    params = {'n': n}
    report.add("jacobi-square-mismatch", params, True, bool(chars.find_jacobi_mismatch(n)))
    report.add("nonsquare-triple", params, True, chars.find_nonsquare_triple(n) is not None)


def check_characters(report, m, rng):
    params = {'p': m.p, 'alpha': m.alpha}
    n, p = m.n, m.p
    g = primitive_root(m)
    report.add("primitive-root-order", params, m.phi, multiplicative_order(g, n))
    report.add("binomial-divisibility", params, True, check_binomial_divisibility(p, m.alpha))

    chi = report_char(report, "quadratic-character", params, chars.quadratic_char, m)
    psi = report_char(report, "quartic-character", params, chars.quartic_char, m)
    if chi is None or psi is None:
        return
    for label, c in (("chi", chi), ("psi", psi)):
        report.add(f"{label}-periodic-mod-p", params, True, chars.is_periodic_mod_p(c))
        report.add(f"{label}-multiplicative", params, True, chars.is_multiplicative(c))
        report.add(f"{label}-sum-zero", params, ZERO, chars.character_sum(c))
    report.add("psi-squared-is-chi", params, True, psi * psi == chi)

    report.identity("sum-chi-x2-minus-a", params,
                    lambda: [chars.sum_chi_x2_minus_a(m, a) for a in range(1, n) if a % p])
    report.identity("count-chi-one-minus-x2", params, lambda: chars.count_chi_one_minus_x2(m))
    report.identity("one-minus-x2-side-counts", params, lambda: chars.side_counts_one_minus_x2(m))
    report.identity("degree-by-character-sum", params,
                    lambda: [chars.degree_by_character_sum(m, a) for a in range(n)])

    pairs = shifted_pair_cases(m, rng)
    report.identity("sum-chi-shifted-pair", params,
                    lambda: [chars.sum_chi_shifted_pair(m, a, b) for a, b in pairs])
    if n <= TRACE_GUARD:
        report.identity("K-double-sum", params, lambda: chars.lemma_K_double_sum(m))
        report.identity("S-pair", params, lambda: cliques.lemma_S_pair(m))


def report_char(report, name, params, build, m):
    try:
        c = build(m)
    except PaleyError as e:
        report.add(name, params, HOLDS, f"{type(e).__name__}: {e}")
        return None
    report.add(name, params, HOLDS, HOLDS)
    return c


def shifted_pair_cases(m, rng, samples=SHIFTED_PAIR_SAMPLES):
    """Random (a, b) plus the boundary cases p | a, p | b and a = b (mod p)."""
    n, p = m.n, m.p
    cases = [(0, 0), (0, 1), (1, 0), (p, 2 * p % n), (1, 1), (1, (1 + p) % n), (2, (2 + p) % n)]
    cases.extend((rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    return cases


def check_jacobi(report, m, base):
    """Norm of J at alpha = 1, lifting to higher alpha. base is J(psi, chi) mod p."""
    params = {'p': m.p, 'alpha': m.alpha}
    j = chars.jacobi_sum(chars.quartic_char(m), chars.quadratic_char(m))
    if m.alpha == 1:
        report.add("jacobi-norm", params, m.p, j.norm())
        return
    lift = base * m.p ** (m.alpha - 1)
    # psi mod p^alpha restricts to psi or its conjugate mod p
    report.add("jacobi-lifting", params, True, j in (lift, lift.conjugate()))
    report.add("K-lifting", params, m.p ** (2 * m.alpha - 2) * int(base * base + base.conjugate() ** 2),
               chars.jacobi_sum_K(m))


def check_graph_of_prime_power(report, m, rng):
    params = {'p': m.p, 'alpha': m.alpha}
    g = build_graph(m.n)
    squares = sorted(unit_squares(m.n))
    samples = [(rng.choice(squares), rng.randrange(m.n)) for _ in range(AFFINE_SAMPLES)]
    report.attempt("affine-automorphisms", params, True,
                   lambda: all(affine_automorphism_check(g, a, b) for a, b in samples))
    decomposition = decomposition_report(m.p, m.alpha)
    report.add("decomposition-blocks", params, True, decomposition.blocks_isomorphic)
    report.add("decomposition-stars", params, True, decomposition.star_structure_verified)
    report.add("decomposition-intra-edges", params,
               decomposition.expected_intra_edges, decomposition.intra_block_edges)
    report.add("decomposition-inter-edges", params,
               decomposition.expected_inter_edges, decomposition.inter_block_edges)


def check_cliques(report, m, settings):
    params = {'p': m.p, 'alpha': m.alpha}
    p, alpha, n = m.p, m.alpha, m.n
    g = build_graph(n)
    k3 = cliques.k3_formula(p, alpha)
    report.add("k3-brute", params, k3, cliques.count_triangles_brute(g, settings.workers))
    report.attempt("k3-edge-sum", params, k3, lambda: cliques.k3_via_edge_sum(m))

    k4 = cliques.k4_formula(p, alpha)
    if n <= settings.k4_brute_limit:
        report.add("k4-brute", params, k4, cliques.count_k4_brute(g, settings.workers))
        report.attempt("k4-square-subgraph", params, k4,
                       lambda: cliques.k4_via_square_subgraph(m, settings.workers))
    if alpha == 1:
        report.add("k4-evans", params, k4, cliques.evans_k4(p))
    if n <= TRACE_GUARD:
        report.attempt("k4-trace", params, k4, lambda: cliques.theorem2_trace(p, alpha).k4)


def run_verification(settings=None):
    """
    Run the full sweep.

    Admissibility is checked for 3 <= n <= max_n. Structural checks run on
    every admissible n <= max_n. Prime-power suites run for primes
    p = 1 (mod 4) up to max_prime and each alpha in settings.alphas with
    p^alpha <= max_n.

    Returns:
        VerificationReport: The outcome of every check
    """
    settings = settings or SweepSettings()
    report = VerificationReport()
    rng = random.Random(settings.seed)

    for n in range(3, settings.max_n + 1):
        check_admissibility(report, n)
        if is_admissible(n):
            check_structure(report, n)
    logger.info("structural sweep to %d done", settings.max_n)

    if settings.max_n >= 65:
        check_pathologies(report, 65)

    primes = [p for p in primerange(5, settings.max_prime + 1) if p % 4 == 1]
    bases = {}
    for p, alpha in settings.prime_powers(primes):
        if p ** alpha > settings.max_n:
            continue
        m = PrimePowerModulus(p, alpha)
        logger.info("checking %s", m)
        check_characters(report, m, rng)
        if p not in bases:
            mp = PrimePowerModulus(p, 1)
            bases[p] = chars.jacobi_sum(chars.quartic_char(mp), chars.quadratic_char(mp))
        check_jacobi(report, m, bases[p])
        check_graph_of_prime_power(report, m, rng)
        check_cliques(report, m, settings)

    logger.info("verification: %d passed, %d failed", report.passed_count, report.failed_count)
    return report
