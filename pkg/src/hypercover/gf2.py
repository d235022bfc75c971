"""GF(2) linear algebra for partition-size rank certificates.

Matrices are bit-packed: each row is a Python int with bit j = column j.
Rank over the two-element field is the certificate engine; the certified
inequality is  (number of blocks in a partition) >= rank / C(r, r/2)  for the
adjacency matrix of an even-uniformity hypergraph, whose rows and columns are
indexed by r/2-subsets of the vertices in colexicographic order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import check_guard
from .cube import cube_graph

MATRIX_ROW_GUARD = 20_000


@dataclass(frozen=True)
class GF2Matrix:
    """A rows x cols binary matrix, one packed int per row."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        data = tuple(int(x) for x in self.data)
        if len(data) != self.rows:
            raise ValueError("data length must equal the row count")
        if any(x < 0 or x >> self.cols for x in data):
            raise ValueError("row bits outside the column range")
        object.__setattr__(self, "data", data)

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def transpose(self) -> "GF2Matrix":
        cols = []
        for j in range(self.cols):
            col = 0
            for i in range(self.rows):
                col |= ((self.data[i] >> j) & 1) << i
            cols.append(col)
        return GF2Matrix(self.cols, self.rows, tuple(cols))


def gf2_rank(matrix: GF2Matrix) -> int:
    """Rank over GF(2) by Gaussian elimination on packed rows."""
    pivots: list[int] = []  # rows in echelon form, highest set bit is pivot
    for row in matrix.data:
        for p in pivots:
            if (row >> (p.bit_length() - 1)) & 1:
                row ^= p
        if row:
            pivots.append(row)
            pivots.sort(key=int.bit_length, reverse=True)
    return len(pivots)


@dataclass(frozen=True)
class SubsetIndex:
    """Colexicographic bijection between k-subsets of 0..n-1 and 0..C(n,k)-1."""

    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError("need 0 <= k <= n")

    @property
    def size(self) -> int:
        return math.comb(self.n, self.k)

    def rank(self, subset) -> int:
        s = sorted(subset)
        if len(s) != self.k or len(set(s)) != self.k:
            raise ValueError(f"expected {self.k} distinct elements")
        if s and (s[0] < 0 or s[-1] >= self.n):
            raise ValueError("element outside the ground set")
        return sum(math.comb(c, i + 1) for i, c in enumerate(s))

    def unrank(self, index: int) -> tuple:
        if not 0 <= index < self.size:
            raise ValueError("index out of range")
        out = [0] * self.k
        k, r = self.k, index
        n = self.n
        while k > 0:
            n -= 1
            c = math.comb(n, k)
            if r >= c:
                r -= c
                k -= 1
                out[k] = n
        return tuple(out)

    def subsets(self):
        """All k-subsets in colexicographic order."""
        for i in range(self.size):
            yield self.unrank(i)


def disjointness_matrix(n: int, k: int) -> GF2Matrix:
    """The C(n,k) x C(n,k) matrix with entry 1 iff the two k-subsets are disjoint."""
    idx = SubsetIndex(n, k)
    check_guard("disjointness_matrix rows", idx.size, MATRIX_ROW_GUARD)
    masks = [sum(1 << v for v in s) for s in idx.subsets()]
    data = tuple(
        sum(1 << j for j, mb in enumerate(masks) if not ma & mb)
        for ma in masks
    )
    return GF2Matrix(idx.size, idx.size, data)


def disjointness_matrix_upto(n: int, k: int) -> GF2Matrix:
    """Disjointness matrix over all subsets of size at most k.

    The at-most-k matrix has full GF(2) rank for every n and k. The
    exact-size matrix above is only guaranteed full rank at n = 2k (where it
    is a permutation matrix), which is the case the adjacency certificates
    rest on.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    masks = []
    for size in range(k + 1):
        idx = SubsetIndex(n, size)
        masks.extend(sum(1 << v for v in s) for s in idx.subsets())
    check_guard("disjointness_matrix_upto rows", len(masks), MATRIX_ROW_GUARD)
    data = tuple(
        sum(1 << j for j, mb in enumerate(masks) if not ma & mb)
        for ma in masks
    )
    return GF2Matrix(len(masks), len(masks), data)


def adjacency_cube_matrix(r: int, m: int) -> GF2Matrix:
    """Adjacency matrix of the dimension-m cube hypergraph on r/2-subsets.

    Entry (e1, e2) is 1 iff e1 and e2 are disjoint and e1 u e2 is an edge,
    i.e. some coordinate of the union shows all r fixed values. Even r >= 4
    only; rows and columns follow the colexicographic subset order.
    """
    if r % 2 or r < 4:
        raise ValueError("even uniformity r >= 4 required")
    cg = cube_graph(r, m)
    n = cg.hypergraph.n
    idx = SubsetIndex(n, r // 2)
    check_guard("adjacency_cube_matrix rows", idx.size, MATRIX_ROW_GUARD)
    digit_rows = [cg.decode(v) for v in range(n)]
    subsets = list(idx.subsets())
    masks = [sum(1 << v for v in s) for s in subsets]
    edges = cg.hypergraph.edges
    data = []
    for i, s in enumerate(subsets):
        row = 0
        for j, t in enumerate(subsets):
            if masks[i] & masks[j]:
                continue
            if tuple(sorted(s + t)) in edges:
                row |= 1 << j
        data.append(row)
    return GF2Matrix(idx.size, idx.size, tuple(data))


def partition_lower_bound(r: int, m: int) -> int:
    """Least number of blocks any partition of the dimension-m cube needs.

    ceil(([C(r, r/2) + 1]^m - 1) / C(r, r/2)) for even r; odd r >= 3 inherits
    the bound of uniformity r - 1.
    """
    if r < 3 or m < 1:
        raise ValueError("need r >= 3 and m >= 1")
    k = r if r % 2 == 0 else r - 1
    c = math.comb(k, k // 2)
    return -(-((c + 1) ** m - 1) // c)


def rank_bound_from_cover(d: int, r: int) -> int:
    """Largest adjacency rank a d-block partition permits: d * C(r, r/2)."""
    if r % 2 or r < 2:
        raise ValueError("even uniformity r >= 2 required")
    if d < 0:
        raise ValueError("block count must be non-negative")
    return d * math.comb(r, r // 2)


# --- text dump: first line "rows cols", then one hex row per line -----------


def matrix_to_text(matrix: GF2Matrix) -> str:
    width = max(1, -(-matrix.cols // 4))
    lines = [f"{matrix.rows} {matrix.cols}"]
    lines.extend(format(row, f"0{width}x") for row in matrix.data)
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> GF2Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    rows, cols = (int(x) for x in lines[0].split())
    data = tuple(int(ln, 16) for ln in lines[1 : rows + 1])
    return GF2Matrix(rows, cols, data)
