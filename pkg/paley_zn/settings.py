# paley_zn/settings.py
"""Default bounds and knobs. There are no environment variables."""

from dataclasses import dataclass

# Largest p^alpha accepted by the O(n^2) trace and lemma enumerations.
TRACE_GUARD = 2000

# Characters are tabulated up front for moduli up to this size.
TABLE_LIMIT = 10**6

# verify sweep defaults
DEFAULT_MAX_N = 500
DEFAULT_MAX_PRIME = 41
DEFAULT_ALPHAS = (1, 2)
ADMISSIBILITY_BRUTE_LIMIT = 2000

# Random samples drawn for the affine and shifted-pair checks. Seeded so the
# verification report is reproducible.
RANDOM_SEED = 20211
AFFINE_SAMPLES = 100
SHIFTED_PAIR_SAMPLES = 200

EXACT_FORMATS = ("edge-list", "dot", "json")
IMAGE_FORMATS = ("png", "pdf")
EXPORT_FORMATS = EXACT_FORMATS + IMAGE_FORMATS

# Exit codes of the command-line front end.
EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass(frozen=True)
class SweepSettings:
    """Bounds for one `verify` run."""

    max_n: int = DEFAULT_MAX_N
    max_prime: int = DEFAULT_MAX_PRIME
    alphas: tuple = DEFAULT_ALPHAS
    workers: int = 1
    seed: int = RANDOM_SEED
    # K4 is brute-forced only up to this many vertices
    k4_brute_limit: int = 900

    def prime_powers(self, primes):
        """Return (p, alpha) for every listed prime and alpha, smallest n first."""
        pairs = [(p, a) for p in primes for a in self.alphas]
        return sorted(pairs, key=lambda pa: (pa[0] ** pa[1], pa))
