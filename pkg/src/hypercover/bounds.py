"""Closed-form lower bounds plus the derandomized independent-set machinery.

The closed forms relate the total vertex count of any cover (sum of block
orders) and the block count of any cover to the independence, chromatic and
matching numbers of the covered hypergraph. The derandomizer realizes the
probabilistic argument behind the order bound: deleting one part per block
leaves an independent set, and choosing deletions by conditional expectation
guarantees at least ceil(sum_i (1 - 1/r)^{a_i}) survivors, a_i being the
number of blocks containing vertex i.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Cover, Hypergraph, induced_subhypergraph, multiplicity_profile


def ks_order_lower_bound(n: int, alpha: float, r: int) -> float:
    """n * log2(n/alpha) / log2(1 + 1/(r-1)): no cover has total order below this.

    Exact form of the survivor argument: deleting one random part per block
    leaves an independent set of expected size sum (1-1/r)^{a_i}, which Jensen
    pushes to n (1-1/r)^{b/n} <= alpha for total order b. The popular
    simplification to (r-1) n log(n/alpha) is only sound for the natural
    logarithm; in base 2 (which the r = 2 tight case n log2 n forces) it
    overstates the bound for r >= 3, so the exact form is used.
    """
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if not 1 <= alpha <= n:
        raise ValueError("need 1 <= alpha <= n")
    if alpha == n:
        return 0.0
    return n * math.log2(n / alpha) / math.log2(1 + 1 / (r - 1))


def ks_chromatic_lower_bound(k: int, r: int) -> float:
    """Order lower bound in terms of the chromatic number k, large k.

    Both proof cases are explicit; the guaranteed bound is their minimum:
      (r-1)^2 k (log k - loglog k - logloglog k)
      (r-1)^2 k (log k - loglog k - 1) - 2r(r-1)^2 k
    """
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if k < 17:
        raise ValueError("k must be at least 17 so that logloglog k > 0")
    lg = math.log2(k)
    lglg = math.log2(lg)
    lglglg = math.log2(lglg)
    c = (r - 1) ** 2 * k
    case_one = c * (lg - lglg - lglglg)
    case_two = c * (lg - lglg - 1) - 2 * r * c
    return min(case_one, case_two)


def matching_cover_lower_bound(nu: int, edge_count: int, r: int) -> float:
    """nu^(1 + 1/(r-1)) / |E|^(1/(r-1)): no cover has fewer blocks."""
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if nu < 1 or edge_count < nu:
        raise ValueError("need 1 <= nu <= edge_count")
    e = 1.0 / (r - 1)
    return nu ** (1 + e) / edge_count**e


def independent_matchings_lower_bound(k: int, m: int, edge_count: int, r: int) -> float:
    """k^(1/(r-1)) * m^(1 + 1/(r-1)) / |E|^(1/(r-1)) given k independent m-matchings."""
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    if edge_count < k * m:
        raise ValueError("edge count below k * m is impossible")
    e = 1.0 / (r - 1)
    return k**e * m ** (1 + e) / edge_count**e


def sum_of_orders(c: Cover) -> int:
    """Total number of vertices over all blocks of the cover."""
    return sum(b.order() for b in c.blocks)


def cover_incidence(n: int, c: Cover) -> list[int]:
    """a_i = number of blocks containing vertex i; sums to sum_of_orders."""
    counts = [0] * n
    for b in c.blocks:
        for v in b.support():
            counts[v] += 1
    return counts


def expected_survivors(incidence, r: int) -> float:
    """sum_i (1 - 1/r)^{a_i}: expected survivors of random part deletions."""
    beta = 1.0 - 1.0 / r
    return sum(beta**a for a in incidence)


def survivor_guarantee(incidence, r: int) -> int:
    """ceil(sum_i (1 - 1/r)^{a_i}), exact via rational arithmetic.

    The ceiling of a float sum would misround cases like 3 * (2/3) = 2.
    """
    beta = Fraction(r - 1, r)
    return math.ceil(sum(beta**a for a in incidence))


@dataclass(frozen=True)
class ExtractionResult:
    vertices: frozenset
    guarantee: int
    expectations: tuple  # conditional expectation before each step and at the end


def derandomized_extraction(h: Hypergraph, c: Cover) -> ExtractionResult:
    """Delete one part per block, chosen by the method of conditional expectations.

    Requires every edge of h to be covered at least once (blocks may cover
    non-edges of h; independence of the survivors only needs every edge hit).
    Processes blocks in cover order; at each block the deleted part is the one
    maximizing the conditional expectation of the survivor count, ties going
    to the lowest-indexed part. The final expectation equals the survivor
    count exactly and never drops below the initial one, so the survivor set
    is independent and has size >= ceil(sum (1 - 1/r)^{a_i}).
    """
    profile = multiplicity_profile(h, c)
    for e in sorted(profile.multiplicity):
        if profile.multiplicity[e] == 0:
            raise ValueError(f"cover misses edge {e}; the guarantee is void")
    beta = 1.0 - 1.0 / h.r
    incidence = cover_incidence(h.n, c)
    guarantee = survivor_guarantee(incidence, h.r)
    remaining = list(incidence)
    survivors = set(range(h.n))
    expectations = [expected_survivors(remaining, h.r)]
    for b in c.blocks:
        for v in b.support():
            remaining[v] -= 1
        weight = {v: beta ** remaining[v] for v in b.support() if v in survivors}
        total = sum(beta ** remaining[v] for v in survivors)
        best_part, best_value = None, -math.inf
        for p in b.parts:
            value = total - sum(weight.get(v, 0.0) for v in p)
            if value > best_value:
                best_part, best_value = p, value
        survivors -= best_part
        expectations.append(sum(beta ** remaining[v] for v in survivors))
    return ExtractionResult(frozenset(survivors), guarantee, tuple(expectations))


def extract_independent_set(h: Hypergraph, c: Cover) -> frozenset:
    """Survivor set of the derandomized part-deletion process."""
    return derandomized_extraction(h, c).vertices


@dataclass(frozen=True)
class PeelResult:
    colors: tuple  # color of each vertex
    survivor_sizes: tuple  # independent-set sizes in extraction order


def peel_coloring(h: Hypergraph, cover_provider) -> PeelResult:
    """Properly color h by repeatedly extracting independent sets.

    `cover_provider` must return a Cover of any induced subhypergraph it is
    handed (vertices relabeled 0..n'-1). Each extracted set gets a fresh
    color; extraction always keeps at least one vertex, so this terminates.
    """
    colors = [-1] * h.n
    alive = list(range(h.n))
    sizes = []
    color = 0
    while alive:
        sub, old_ids = induced_subhypergraph(h, alive)
        survivors = extract_independent_set(sub, cover_provider(sub))
        if not survivors:
            raise RuntimeError("extraction returned no vertices")
        sizes.append(len(survivors))
        for v in survivors:
            colors[old_ids[v]] = color
        alive = [old_ids[v] for v in range(sub.n) if v not in survivors]
        color += 1
    return PeelResult(tuple(colors), tuple(sizes))


def greedy_color(h: Hypergraph, order) -> list[int]:
    """Color vertices in the given order with the smallest color that does not
    complete a monochromatic edge among already-colored vertices."""
    order = list(order)
    if sorted(order) != list(range(h.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    by_vertex: dict[int, list] = {v: [] for v in range(h.n)}
    for e in h.edges:
        for v in e:
            by_vertex[v].append(e)
    colors = [-1] * h.n
    for v in order:
        blocked = set()
        for e in by_vertex[v]:
            rest = [colors[u] for u in e if u != v]
            if all(cu >= 0 for cu in rest) and len(set(rest)) == 1:
                blocked.add(rest[0])
        c = 0
        while c in blocked:
            c += 1
        colors[v] = c
    return colors


def is_proper_coloring(h: Hypergraph, colors) -> bool:
    """No edge monochromatic: every edge sees at least two colors."""
    return all(len(set(colors[v] for v in e)) >= 2 for e in h.edges)
