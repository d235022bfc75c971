"""Explicit covering constructions on grids, plus the two classical baselines.

hex_cover     {2,3}-multicover of K_n from a hexagonal grid, n = 3m^2-3m+1
grid3_cover   {1,2,3,4}-multicover of the complete 3-uniform K_{m^2}^3 from a
              square grid (rows, columns, diagonals, counter-diagonals)
star_partition  the n-1 star bicliques partitioning K_n
log_cover       the ceil(log2 n) bit-split bicliques covering K_n
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cover, Hypergraph, RPartiteBlock, complete_hypergraph


@dataclass(frozen=True)
class HexCoord:
    """Cube coordinates on the hexagonal grid: x + y + z = 0."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x + self.y + self.z != 0:
            raise ValueError("hex cube coordinates must sum to 0")


def hex_coordinates(m: int) -> list[HexCoord]:
    """All cells of the side-m hexagon, sorted by (x, y); 3m^2 - 3m + 1 cells."""
    if m < 1:
        raise ValueError("side length must be at least 1")
    lim = m - 1
    out = []
    for x in range(-lim, lim + 1):
        for y in range(-lim, lim + 1):
            z = -x - y
            if -lim <= z <= lim:
                out.append(HexCoord(x, y, z))
    return out


def hex_cover(m: int) -> tuple[Hypergraph, Cover]:
    """Cover K_n (n = 3m^2-3m+1) so every edge has multiplicity 2 or 3.

    Vertices sit on a hexagonal grid; for each of the three line directions
    and each line except the last, one biclique pairs the line against the
    union of all later lines. Two cells share at most one line, so an edge is
    covered once per direction in which its cells differ: 2 or 3 times.
    """
    coords = hex_coordinates(m)
    ids = {c: i for i, c in enumerate(coords)}
    h = complete_hypergraph(len(coords), 2)
    blocks = []
    for axis in range(3):
        key = lambda c, a=axis: (c.x, c.y, c.z)[a]
        values = sorted(set(key(c) for c in coords))
        for i, val in enumerate(values[:-1]):
            line = frozenset(ids[c] for c in coords if key(c) == val)
            rest = frozenset(ids[c] for c in coords if key(c) > val)
            if line and rest:
                blocks.append(RPartiteBlock((line, rest)))
    return h, Cover(2, tuple(blocks))


@dataclass(frozen=True)
class GridCoord:
    """A cell of the m x m square grid, rows and columns numbered from 1."""

    row: int
    col: int


def grid_vertex_id(c: GridCoord, m: int) -> int:
    if not (1 <= c.row <= m and 1 <= c.col <= m):
        raise ValueError(f"{c} outside the {m}x{m} grid")
    return (c.row - 1) * m + (c.col - 1)


def grid_coord(v: int, m: int) -> GridCoord:
    if not 0 <= v < m * m:
        raise ValueError(f"vertex {v} outside 0..{m * m - 1}")
    return GridCoord(v // m + 1, v % m + 1)


def grid3_cover(m: int) -> tuple[Hypergraph, Cover]:
    """Cover K_{m^2}^3 so every triple has multiplicity between 1 and 4.

    Four block families, one per line direction of the square grid (rows,
    columns, diagonals, counter-diagonals). The block for line i in a family
    has parts (line i, union of later lines, union of earlier lines), so a
    family covers a triple at most once: when the triple's three lines in
    that direction are distinct. 6m - 10 blocks for m >= 3; 2 for m = 2.
    """
    if m < 2:
        raise ValueError("grid side must be at least 2")
    h = complete_hypergraph(m * m, 3)
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, m + 1)]
    vid = {rc: grid_vertex_id(GridCoord(*rc), m) for rc in cells}

    families = [
        (lambda rc: rc[0], range(1, m + 1), range(2, m)),            # rows
        (lambda rc: rc[1], range(1, m + 1), range(2, m)),            # columns
        (lambda rc: rc[0] - rc[1] + m, range(1, 2 * m), range(2, 2 * m - 1)),
        (lambda rc: rc[0] + rc[1] - 1, range(1, 2 * m), range(2, 2 * m - 1)),
    ]
    blocks = []
    for key, _all_lines, middle in families:
        for i in middle:
            line = frozenset(vid[rc] for rc in cells if key(rc) == i)
            later = frozenset(vid[rc] for rc in cells if key(rc) > i)
            earlier = frozenset(vid[rc] for rc in cells if key(rc) < i)
            blocks.append(RPartiteBlock((line, later, earlier)))
    return h, Cover(3, tuple(blocks))


def star_partition(n: int) -> tuple[Hypergraph, Cover]:
    """Partition K_n into the n-1 stars ({i}, {i+1..n-1})."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    blocks = tuple(
        RPartiteBlock((frozenset({i}), frozenset(range(i + 1, n))))
        for i in range(n - 1)
    )
    return complete_hypergraph(n, 2), Cover(2, blocks)


def log_cover(n: int) -> tuple[Hypergraph, Cover]:
    """Cover K_n with ceil(log2 n) bicliques, one per bit position.

    Block i splits vertices on bit i, so edge {u, v} is covered exactly
    Hamming(u, v) times. Blocks with an empty side are skipped.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    bits = max(1, (n - 1).bit_length())
    blocks = []
    for i in range(bits):
        zeros = frozenset(v for v in range(n) if not (v >> i) & 1)
        ones = frozenset(v for v in range(n) if (v >> i) & 1)
        if zeros and ones:
            blocks.append(RPartiteBlock((zeros, ones)))
    return complete_hypergraph(n, 2), Cover(2, tuple(blocks))
