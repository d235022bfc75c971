"""Brute-force exact values at desk scale: minimum covers and partitions,
minimum total block order, independence, matching and chromatic numbers.

Every search either returns a proven exact value or an explicit "unknown"
outcome carrying the proven lower bracket; a wrong number is never emitted.
Candidate blocks are restricted to those whose implied edges lie inside the
target hypergraph, which covers-with-foreign-coverage never satisfy anyway.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .core import (
    Cover,
    Hypergraph,
    MultiplicityList,
    RPartiteBlock,
    check_guard,
)

ENUMERATION_GUARD = 16_500  # assignments (r+1)^n: n <= 8 at r = 2, n <= 7 at r = 3


@dataclass(frozen=True)
class SearchBudget:
    max_blocks: int = 16
    max_candidates: int = 200_000
    max_seconds: float = 120.0

    def __post_init__(self):
        if self.max_blocks < 0 or self.max_candidates < 1 or self.max_seconds <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Either an exact optimum or a proven bracket "unknown, >= lower"."""

    status: str  # "exact" | "unknown"
    lower: int
    value: int | None = None
    witness: Cover | None = None

    def __post_init__(self):
        if self.status not in ("exact", "unknown"):
            raise ValueError("status must be 'exact' or 'unknown'")
        if (self.status == "exact") != (self.value is not None):
            raise ValueError("exact outcomes carry a value, unknown ones do not")

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"


class _OutOfTime(Exception):
    pass


class _Deadline:
    def __init__(self, seconds: float):
        self.t_end = time.monotonic() + seconds
        self.calls = 0

    def check(self):
        self.calls += 1
        if self.calls % 256 == 0 and time.monotonic() > self.t_end:
            raise _OutOfTime


def enumerate_blocks(h: Hypergraph, within_edges: bool = True) -> list[RPartiteBlock]:
    """All complete r-partite blocks on subsets of the vertices, deduplicated
    up to part reordering; with within_edges, only blocks whose implied edges
    are edges of h."""
    r, n = h.r, h.n
    check_guard("enumerate_blocks assignments", (r + 1) ** n, ENUMERATION_GUARD)
    seen = set()
    out = []
    for assign in itertools.product(range(r + 1), repeat=n):
        parts = [tuple(v for v in range(n) if assign[v] == p + 1) for p in range(r)]
        if any(not p for p in parts):
            continue
        key = tuple(sorted(parts))
        if key in seen:
            continue
        seen.add(key)
        if within_edges:
            if any(tuple(sorted(c)) not in h.edges
                   for c in itertools.product(*parts)):
                continue
        out.append(RPartiteBlock(tuple(map(frozenset, key))))
    out.sort(key=lambda b: tuple(tuple(sorted(p)) for p in b.parts))
    return out


def _locally_maximal(blocks, h: Hypergraph) -> list[RPartiteBlock]:
    """Blocks no single vertex can extend while staying inside h's edges.

    For covers with unbounded admissible multiplicity, any block may be grown
    to such a block without hurting validity, so restricting the search to
    them preserves the minimum.
    """
    out = []
    for b in blocks:
        support = b.support()
        extendable = False
        for v in range(h.n):
            if v in support:
                continue
            for i in range(b.r):
                parts = [set(p) for p in b.parts]
                parts[i].add(v)
                if all(tuple(sorted(c)) in h.edges
                       for c in itertools.product(*parts)):
                    extendable = True
                    break
            if extendable:
                break
        if not extendable:
            out.append(b)
    return out


def _prepare(h, candidates):
    edge_list = h.sorted_edges()
    index = {e: i for i, e in enumerate(edge_list)}
    block_edges = []
    cover_by_edge = [[] for _ in edge_list]
    for bi, b in enumerate(candidates):
        try:
            eids = sorted(index[e] for e in b.implied_edges())
        except KeyError as exc:
            raise ValueError(f"candidate block covers non-edge {exc.args[0]}") from None
        block_edges.append(eids)
        for ei in eids:
            cover_by_edge[ei].append(bi)
    return edge_list, block_edges, cover_by_edge


def min_cover_size(
    h: Hypergraph,
    lst: MultiplicityList,
    budget: SearchBudget | None = None,
    candidates: list[RPartiteBlock] | None = None,
) -> SearchOutcome:
    """Smallest number of blocks giving every edge a multiplicity in `lst`.

    Iterative deepening on the block count; blocks may repeat (a multiset
    cover). With the unbounded list the search runs over locally maximal
    blocks only, which preserves the minimum.
    """
    budget = budget or SearchBudget()
    if candidates is None:
        candidates = enumerate_blocks(h)
        if lst.allowed is None:
            candidates = _locally_maximal(candidates, h)
    check_guard("min_cover_size candidates", len(candidates), budget.max_candidates)
    if not h.edges:
        return SearchOutcome("exact", 0, 0, Cover(h.r, ()))
    edge_list, block_edges, cover_by_edge = _prepare(h, candidates)
    m = len(edge_list)
    deadline = _Deadline(budget.max_seconds)
    chosen: list[int] = []

    if lst.allowed is None:
        full = (1 << m) - 1
        block_masks = [sum(1 << ei for ei in eids) for eids in block_edges]

        def dfs_any(mask: int, left: int, failed: set) -> bool:
            deadline.check()
            if mask == full:
                return True
            if left == 0:
                return False
            key = (mask, left)
            if key in failed:
                return False
            d = (~mask & -~mask).bit_length() - 1
            for bi in cover_by_edge[d]:
                chosen.append(bi)
                if dfs_any(mask | block_masks[bi], left - 1, failed):
                    return True
                chosen.pop()
            failed.add(key)
            return False

        search = lambda t: dfs_any(0, t, set())
    else:
        maxl = max(lst.allowed)

        def dfs_list(counts: tuple, left: int, failed: set) -> bool:
            deadline.check()
            d = -1
            for i in range(m):
                if counts[i] not in lst:
                    d = i
                    break
            if d == -1:
                return True
            if left == 0:
                return False
            key = (counts, left)
            if key in failed:
                return False
            for bi in cover_by_edge[d]:
                nxt = list(counts)
                overshoot = False
                for ei in block_edges[bi]:
                    nxt[ei] += 1
                    if nxt[ei] > maxl:
                        overshoot = True
                        break
                if overshoot:
                    continue
                chosen.append(bi)
                if dfs_list(tuple(nxt), left - 1, failed):
                    return True
                chosen.pop()
            failed.add(key)
            return False

        search = lambda t: dfs_list((0,) * m, t, set())

    for t in range(0, budget.max_blocks + 1):
        chosen.clear()
        try:
            found = search(t)
        except _OutOfTime:
            return SearchOutcome("unknown", t)
        if found:
            witness = Cover(h.r, tuple(candidates[bi] for bi in chosen))
            return SearchOutcome("exact", t, t, witness)
    return SearchOutcome("unknown", budget.max_blocks + 1)


def min_partition_size(h: Hypergraph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Smallest number of blocks covering every edge exactly once."""
    return min_cover_size(h, MultiplicityList.of(1), budget)


def min_sum_of_orders(h: Hypergraph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Minimum total block order over all covers (every edge hit at least once)."""
    budget = budget or SearchBudget()
    check_guard("min_sum_of_orders vertices", h.n, 5)
    if not h.edges:
        return SearchOutcome("exact", 0, 0, Cover(h.r, ()))
    candidates = enumerate_blocks(h)
    edge_list, block_edges, cover_by_edge = _prepare(h, candidates)
    m = len(edge_list)
    full = (1 << m) - 1
    block_masks = [sum(1 << ei for ei in eids) for eids in block_edges]
    orders = [b.order() for b in candidates]
    for ei in range(m):
        cover_by_edge[ei].sort(key=lambda bi: orders[bi])
    deadline = _Deadline(budget.max_seconds)

    best = h.r * m + 1  # the singleton-block cover costs r per edge
    best_blocks: list[int] | None = None
    chosen: list[int] = []

    def dfs(mask: int, cost: int):
        nonlocal best, best_blocks
        deadline.check()
        if cost >= best:
            return
        if mask == full:
            best = cost
            best_blocks = list(chosen)
            return
        d = (~mask & -~mask).bit_length() - 1
        for bi in cover_by_edge[d]:
            if cost + orders[bi] >= best:
                break
            chosen.append(bi)
            dfs(mask | block_masks[bi], cost + orders[bi])
            chosen.pop()

    try:
        dfs(0, 0)
    except _OutOfTime:
        return SearchOutcome("unknown", 0)
    witness = Cover(h.r, tuple(candidates[bi] for bi in best_blocks))
    return SearchOutcome("exact", best, best, witness)


def independence_number(h: Hypergraph) -> int:
    """Largest vertex set containing no edge of h entirely."""
    check_guard("independence_number vertices", h.n, 20)
    n = h.n
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for e in h.edges:
        mask = sum(1 << v for v in e)
        by_vertex[max(e)].append(mask)
    best = 0

    def rec(i: int, chosen: int, count: int):
        nonlocal best
        if count + (n - i) <= best:
            return
        if i == n:
            best = count
            return
        bit = 1 << i
        grown = chosen | bit
        if all(em & ~grown for em in by_vertex[i]):
            rec(i + 1, grown, count + 1)
        rec(i + 1, chosen, count)

    rec(0, 0, 0)
    return best


def matching_number(h: Hypergraph) -> int:
    """Largest set of pairwise disjoint edges."""
    edges = h.sorted_edges()
    emasks = [sum(1 << v for v in e) for e in edges]
    support = 0
    for em in emasks:
        support |= em
    greedy, used = 0, 0
    for em in emasks:
        if not em & used:
            used |= em
            greedy += 1
    trivial_cap = bin(support).count("1") // h.r
    if greedy == trivial_cap:
        return greedy
    check_guard("matching_number edges", len(edges), 30)
    best = greedy

    def rec(i: int, used: int, count: int):
        nonlocal best
        if count > best:
            best = count
        if i == len(edges):
            return
        room = bin(support & ~used).count("1") // h.r
        if count + room <= best:
            return
        if not emasks[i] & used:
            rec(i + 1, used | emasks[i], count + 1)
        rec(i + 1, used, count)

    rec(0, 0, 0)
    return best


def chromatic_number(h: Hypergraph) -> int:
    """Fewest colors so that no edge is monochromatic."""
    check_guard("chromatic_number vertices", h.n, 12)
    if h.n == 0:
        return 0
    if not h.edges:
        return 1
    n = h.n
    by_max: list[list[tuple]] = [[] for _ in range(n)]
    for e in h.edges:
        by_max[max(e)].append(e)
    colors = [-1] * n

    def feasible(k: int) -> bool:
        def bt(v: int, used: int) -> bool:
            if v == n:
                return True
            for c in range(min(used + 1, k)):
                ok = True
                for e in by_max[v]:
                    rest = [colors[u] for u in e if u != v]
                    if all(cu == c for cu in rest):
                        ok = False
                        break
                if ok:
                    colors[v] = c
                    if bt(v + 1, max(used, c + 1)):
                        return True
                    colors[v] = -1
            return False

        return bt(0, 0)

    for k in range(2, n + 1):
        if feasible(k):
            return k
    return n
