"""Cube hypergraphs over the label alphabet {0..r-1, *} and their partitions.

The vertex set of the cube hypergraph of dimension m is {0..r-1, *}^m; an
r-set of vertices is an edge when some coordinate shows all r fixed values.
A partition of its edge set into complete r-partite blocks is built by a
dimension-by-dimension recursion whose engine is a symbolic partition of one
coordinate: label blocks over {0..r-1, *} that tile every r-tuple except the
r! all-distinct fixed ones.

Labels are integers; the star label is encoded as r itself (so the alphabet
is range(r + 1) and the order 0 < 1 < ... < r-1 < * is the numeric order).
Vertex ids are the base-(r+1) value of the label tuple, first coordinate most
significant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import Cover, Hypergraph, RPartiteBlock, check_guard

CUBE_EDGE_GUARD = 10**7


def floor_e_minus_one_factorial(r: int) -> int:
    """floor((e-1) * r!), computed exactly as the integer sum of r!/k!.

    Python integers are unbounded, so the exact sum can never overflow.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    fact = math.factorial(r)
    return sum(fact // math.factorial(k) for k in range(1, r + 1))


def block_count_by_recurrence(r: int) -> int:
    """The same count via n_r = r * n_{r-1} + 1 with n_1 = 1."""
    if r < 1:
        raise ValueError("r must be at least 1")
    n = 1
    for k in range(2, r + 1):
        n = k * n + 1
    return n


def check_gamma_closed_form(r: int, rel_tol: float = 1e-6) -> bool:
    """Check e * Gamma(r+1, 1) - r! against the exact integer count.

    Gamma(s+1, 1) is built iteratively from Gamma(1, 1) = 1/e via
    Gamma(s+1, 1) = s * Gamma(s, 1) + 1/e.
    """
    if not 1 <= r <= 12:
        raise ValueError("supported range is 1 <= r <= 12")
    g = math.exp(-1.0)  # Gamma(1, 1)
    for s in range(1, r + 1):
        g = s * g + math.exp(-1.0)
    value = math.e * g - math.factorial(r)
    exact = floor_e_minus_one_factorial(r)
    return abs(value - exact) <= rel_tol * exact


@dataclass(frozen=True)
class LabelBlock:
    """One symbolic block: label sets S_1..S_r over the alphabet {0..r-1, r=*}.

    Its implied tuples are S_1 x S_2 x ... x S_r.
    """

    r: int
    classes: tuple

    def __post_init__(self):
        classes = tuple(frozenset(int(x) for x in s) for s in self.classes)
        if len(classes) != self.r:
            raise ValueError(f"expected {self.r} label classes")
        for s in classes:
            if not s:
                raise ValueError("label classes must be non-empty")
            if any(not 0 <= x <= self.r for x in s):
                raise ValueError(f"labels must lie in 0..{self.r}")
        object.__setattr__(self, "classes", classes)

    @property
    def star(self) -> int:
        return self.r

    def tuple_count(self) -> int:
        return math.prod(len(s) for s in self.classes)

    def tuples(self):
        yield from itertools.product(*(sorted(s) for s in self.classes))

    def sort_key(self):
        return tuple(tuple(sorted(s)) for s in self.classes)


def label_partition(r: int, rmax: int = 7) -> list[LabelBlock]:
    """The block-count-minimal symbolic partition of one cube coordinate.

    Tiles {0..r-1, *}^r minus the r! all-distinct fixed tuples with exactly
    floor((e-1) r!) blocks. Each block is determined by scanning a tuple left
    to right until a value repeats or a star appears: a prefix of distinct
    fixed singletons, then the prefix values plus star, then full classes.
    The all-star-first block absorbs tuples starting with *.

    Emitted sorted by the per-class label lists, which groups blocks by their
    first-class label with star last.
    """
    if not 2 <= r <= rmax:
        raise ValueError(f"supported range is 2 <= r <= {rmax}")
    star = r
    full = frozenset(range(r + 1))
    blocks = [LabelBlock(r, (frozenset({star}),) + (full,) * (r - 1))]
    for j in range(2, r + 1):
        for prefix in itertools.permutations(range(r), j - 1):
            saturated = frozenset(prefix) | {star}
            classes = tuple(frozenset({v}) for v in prefix)
            classes += (saturated,) + (full,) * (r - j)
            blocks.append(LabelBlock(r, classes))
    blocks.sort(key=LabelBlock.sort_key)
    return blocks


def label_table(blocks: list[LabelBlock]) -> str:
    """Render label blocks as per-class columns, one stanza per block."""
    if not blocks:
        return ""
    r = blocks[0].r

    def cell(x: int, j: int) -> str:
        return ("*" if x == r else str(x)) + f"a{j + 1}"

    columns = [[[cell(x, j) for x in sorted(b.classes[j])] for j in range(r)]
               for b in blocks]
    widths = [max(len(c) for cols in columns for c in cols[j]) for j in range(r)]
    stanzas = []
    for cols in columns:
        height = max(len(col) for col in cols)
        lines = []
        for row in range(height):
            cells = [(col[row] if row < len(col) else "").ljust(widths[j])
                     for j, col in enumerate(cols)]
            lines.append("  ".join(cells).rstrip())
        stanzas.append("\n".join(lines))
    return "\n\n".join(stanzas) + "\n"


@dataclass(frozen=True)
class CubeGraph:
    """The cube hypergraph together with its tuple/id correspondence."""

    r: int
    m: int
    hypergraph: Hypergraph

    @property
    def base(self) -> int:
        return self.r + 1

    def encode(self, labels) -> int:
        v = 0
        for x in labels:
            if not 0 <= x <= self.r:
                raise ValueError(f"label {x} outside 0..{self.r}")
            v = v * self.base + x
        return v

    def decode(self, v: int) -> tuple:
        digits = []
        for _ in range(self.m):
            digits.append(v % self.base)
            v //= self.base
        return tuple(reversed(digits))


def _tuple_is_edge(digit_rows, combo, r: int, m: int) -> bool:
    for j in range(m):
        vals = set(digit_rows[v][j] for v in combo)
        if len(vals) == r and r not in vals:
            return True
    return False


def cube_graph(r: int, m: int) -> CubeGraph:
    """Enumerate the cube hypergraph of uniformity r and dimension m."""
    if r < 2:
        raise ValueError("uniformity must be at least 2")
    if m < 1:
        raise ValueError("dimension must be at least 1")
    n = (r + 1) ** m
    check_guard("cube_graph enumerated candidate edges", math.comb(n, r),
                CUBE_EDGE_GUARD)
    probe = CubeGraph(r, m, Hypergraph(r, n))
    digit_rows = [probe.decode(v) for v in range(n)]
    edges = frozenset(
        combo for combo in itertools.combinations(range(n), r)
        if _tuple_is_edge(digit_rows, combo, r, m)
    )
    return CubeGraph(r, m, Hypergraph(r, n, edges))


def pinto_upper_bound(r: int, m: int) -> int:
    """(B^m - 1) / (B - 1) with B = floor((e-1) r!); exact integer."""
    if r < 2 or m < 1:
        raise ValueError("need r >= 2 and m >= 1")
    b = floor_e_minus_one_factorial(r)
    num = b**m - 1
    assert num % (b - 1) == 0
    return num // (b - 1)


def pi_partition(r: int, m: int) -> Cover:
    """Partition the dimension-m cube hypergraph into complete r-partite blocks.

    Dimension 1 is the single block of the r fixed singleton vertices. Each
    further dimension prepends a coordinate: one block W pairs the vertex
    classes of fixed first coordinates, and every block of the previous
    dimension spawns one concrete block per symbolic label block. The result
    has (B^m - 1)/(B - 1) blocks, B = floor((e-1) r!).
    """
    if r < 2 or m < 1:
        raise ValueError("need r >= 2 and m >= 1")
    check_guard("pi_partition enumerated candidate edges",
                math.comb((r + 1) ** m, r), CUBE_EDGE_GUARD)
    labels = label_partition(r, rmax=max(7, r)) if m > 1 else []
    base = r + 1
    blocks = [tuple(frozenset({i}) for i in range(r))]
    size = base
    for _ in range(m - 1):
        grown = [tuple(frozenset(i * size + t for t in range(size))
                       for i in range(r))]
        for parent in blocks:
            for lab in labels:
                grown.append(tuple(
                    frozenset(x * size + v for x in lab.classes[j] for v in parent[j])
                    for j in range(r)
                ))
        blocks = grown
        size *= base
    return Cover(r, tuple(RPartiteBlock(parts) for parts in blocks))
