# paley_zn/graph.py
"""
The Paley-type graph G_n on Z_n and its structural property checkers.

Adjacency rows are Python ints used as n-bit sets: bit v of row u is set iff
u ~ v. G_n is circulant, so every row is a rotation of the row of vertex 0.
"""
import logging
from collections import deque
from dataclasses import dataclass

from paley_zn.errors import NotAdmissible, NotASquare
from paley_zn.residues import (
    Modulus,
    PrimePowerModulus,
    inadmissibility_reason,
    is_admissible,
    unit_squares,
)

logger = logging.getLogger(__name__)


def iter_bits(mask):
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def rotate(mask, shift, n):
    """Rotate an n-bit mask left by shift positions (bit v moves to v + shift mod n)."""
    shift %= n
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


class Graph:
    """
    An immutable simple undirected graph on vertices 0..n-1.

    Not picklable; worker processes receive (n, adj) instead.

    Attributes:
        n (int): Number of vertices
        adj (tuple): Adjacency rows as int bitsets
        edge_count (int): Number of edges
    """

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n, adj):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        for u, row in enumerate(adj):
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            if row >> n:
                raise ValueError(f"row {u} has bits beyond vertex {n - 1}")
        # Every edge sits in two rows
        total = sum(row.bit_count() for row in adj)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "edge_count", total // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from (u, v) pairs; duplicates collapse, loops are rejected."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            # Store both directions
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def complete(cls, n):
        full = (1 << n) - 1
        return cls(n, (full ^ (1 << u) for u in range(n)))

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u):
        return list(iter_bits(self.adj[u]))

    def degree(self, u):
        return self.adj[u].bit_count()

    def edges(self):
        """Yield every edge once as (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def is_symmetric(self):
        return all(self.adj[v] >> u & 1 for u in range(self.n) for v in iter_bits(self.adj[u]))

    def induced(self, vertices):
        """
        Induced subgraph on the given vertices, relabelled 0..len-1 in the
        order given.
        """
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        # Keep only neighbors that are in the vertex list
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self.adj[v]):
                i = index.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(vertices), rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def difference_mask(n):
    """Bitset of unit_squares(n): row 0 of G_n."""
    mask = 0
    for d in unit_squares(n):
        mask |= 1 << d
    return mask


def build_graph(n):
    """
    Build G_n: u ~ v iff u - v is the square of a unit mod n.

    Raises:
        NotAdmissible: If -1 is not a unit square mod n (the relation would
            not be symmetric)
    """
    if not is_admissible(n):
        raise NotAdmissible(inadmissibility_reason(n))
    # Row u is the base mask rotated by u
    base = difference_mask(n)
    g = Graph(n, (rotate(base, u, n) for u in range(n)))
    logger.debug("built G_%d: degree %d, %d edges", n, base.bit_count(), g.edge_count)
    return g


def regular_degree(n):
    """phi(n) / 2^k, the degree of every vertex of G_n."""
    m = Modulus.of(n)
    return m.phi // 2 ** m.k


def degree_profile(g):
    """Return (min_degree, max_degree)."""
    degrees = [row.bit_count() for row in g.adj]
    return min(degrees), max(degrees)


def is_connected(g):
    """Breadth-first reachability from vertex 0 covers every vertex."""
    # Bit v of seen marks vertex v as reached
    seen = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        fresh = g.adj[u] & ~seen
        seen |= fresh
        queue.extend(iter_bits(fresh))
    return seen.bit_count() == g.n


def self_complementary_edge_test(n):
    """
    True iff G_n has n(n-1)/4 edges, the edge count a self-complementary graph
    must have. For admissible n this holds iff n is prime.
    """
    if not is_admissible(n):
        raise NotAdmissible(inadmissibility_reason(n))
    edges = n * len(unit_squares(n)) // 2
    return 4 * edges == n * (n - 1)


def is_complete(g):
    return g.edge_count == g.n * (g.n - 1) // 2


def is_cycle(g):
    """True iff g is connected and 2-regular."""
    return g.n >= 3 and degree_profile(g) == (2, 2) and is_connected(g)


def affine_automorphism_check(g, a, b):
    """
    Check exhaustively that x -> a x + b (mod n) preserves edges and non-edges.

    The map is a bijection for a unit a, so comparing each mapped neighborhood
    with the neighborhood of the image covers every pair.

    Raises:
        NotASquare: If a is not a unit square mod n
    """
    n = g.n
    if a % n not in unit_squares(n):
        raise NotASquare(f"{a} is not a unit square modulo {n}")
    # Map the neighborhood of u and compare with the neighborhood of its image
    for u in range(n):
        image = 0
        for v in iter_bits(g.adj[u]):
            image |= 1 << ((a * v + b) % n)
        if image != g.adj[(a * u + b) % n]:
            return False
    return True


def spanning_cycle_check(g):
    """True iff every (x, x + 1 mod n) is an edge, i.e. 0-1-...-(n-1)-0 spans g."""
    return all(g.has_edge(x, (x + 1) % g.n) for x in range(g.n))


@dataclass(frozen=True)
class DecompositionReport:
    """Audit of G_{p^alpha} as p^(alpha-1) copies of G(p) joined by stars."""

    p: int
    alpha: int
    block_count: int
    intra_block_edges: int
    inter_block_edges: int
    blocks_isomorphic: bool
    star_structure_verified: bool
    expected_intra_edges: int
    expected_inter_edges: int

    @property
    def edge_count(self):
        return self.intra_block_edges + self.inter_block_edges

    @property
    def intra_matches(self):
        return self.intra_block_edges == self.expected_intra_edges

    @property
    def inter_matches(self):
        return self.inter_block_edges == self.expected_inter_edges

    @property
    def passed(self):
        return (self.blocks_isomorphic and self.star_structure_verified
                and self.intra_matches and self.inter_matches)

    def to_dict(self):
        return {
            'p': self.p,
            'alpha': self.alpha,
            'block_count': self.block_count,
            'intra_block_edges': self.intra_block_edges,
            'inter_block_edges': self.inter_block_edges,
            'blocks_isomorphic': self.blocks_isomorphic,
            'star_structure_verified': self.star_structure_verified,
        }


def decomposition_report(p, alpha):
    """
    Audit the block structure of G_{p^alpha}.

    Block k is {kp, ..., kp + p - 1}. Checks that i -> kp + i embeds G(p) onto
    every block, that the intra- and inter-block edge totals match their closed
    forms, and that every vertex sees exactly (p - 1)/2 neighbors in each
    other block.

    Returns:
        DecompositionReport: The audit
    """
    m = PrimePowerModulus(p, alpha)
    g = build_graph(m.n)
    base = build_graph(p)
    block_count = p ** (alpha - 1)
    block = (1 << p) - 1
    half = (p - 1) // 2

    # Slice each row into its p-bit blocks
    intra_twice = 0
    isomorphic = True
    stars = True
    for u, row in enumerate(g.adj):
        k, i = divmod(u, p)
        inside = row >> (k * p) & block
        intra_twice += inside.bit_count()
        if inside != base.adj[i]:
            isomorphic = False
        # Every other block holds exactly half of its p residues as neighbors
        for other in range(block_count):
            if other != k and (row >> (other * p) & block).bit_count() != half:
                stars = False

    # Each intra-block edge was seen from both ends
    intra = intra_twice // 2
    report = DecompositionReport(
        p=p,
        alpha=alpha,
        block_count=block_count,
        intra_block_edges=intra,
        inter_block_edges=g.edge_count - intra,
        blocks_isomorphic=isomorphic,
        star_structure_verified=stars,
        expected_intra_edges=block_count * p * (p - 1) // 4,
        expected_inter_edges=(p * (p - 1) // 2) * (block_count * (block_count - 1) // 2),
    )
    logger.info("decomposition of G_%s: %s", m, "ok" if report.passed else "FAILED")
    return report
