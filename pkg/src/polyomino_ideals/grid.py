"""Polyomino geometry: cells, vertices, edge intervals, inner intervals, leaves.

A cell is the unit square with lower left corner (i, j); i counts columns and
j counts rows.  A polyomino is a finite, edge-connected set of cells,
translation-normalized so that min i = min j = 0.  Everything here is
immutable and every function is pure, so values can be shared freely.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import CellNotInPolyominoError, EmptyInputError, NotConnectedError

Point = tuple[int, int]

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIRECTIONS = (HORIZONTAL, VERTICAL)


def point_key(p: Point) -> tuple[int, int]:
    """Row-major ordering key: by row j, then column i."""
    return (p[1], p[0])


def point_leq(a: Point, b: Point) -> bool:
    """Componentwise partial order on grid points."""
    return a[0] <= b[0] and a[1] <= b[1]


def cell_vertices(cell: Point) -> tuple[Point, Point, Point, Point]:
    i, j = cell
    return ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))


def cell_edges(cell: Point) -> tuple[tuple[Point, Point], ...]:
    """The four edges of a cell as vertex pairs, in canonical order
    (bottom, left, right, top)."""
    i, j = cell
    return (
        ((i, j), (i + 1, j)),
        ((i, j), (i, j + 1)),
        ((i + 1, j), (i + 1, j + 1)),
        ((i, j + 1), (i + 1, j + 1)),
    )


def cell_neighbors(cell: Point) -> tuple[Point, Point, Point, Point]:
    i, j = cell
    return ((i, j - 1), (i - 1, j), (i + 1, j), (i, j + 1))


def connected_components(cells: Iterable[Point]) -> list[set[Point]]:
    """Edge-connected components of a cell set (flood fill)."""
    remaining = set(cells)
    comps = []
    while remaining:
        seed = min(remaining, key=point_key)
        remaining.remove(seed)
        comp = {seed}
        frontier = [seed]
        while frontier:
            c = frontier.pop()
            for nb in cell_neighbors(c):
                if nb in remaining:
                    remaining.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        comps.append(comp)
    return comps


class EdgeInterval(NamedTuple):
    """A maximal run of collinear unit edges; length counts unit edges."""

    start: Point
    end: Point
    direction: str

    @property
    def num_edges(self) -> int:
        return (self.end[0] - self.start[0]) + (self.end[1] - self.start[1])

    def vertices(self) -> tuple[Point, ...]:
        i, j = self.start
        if self.direction == HORIZONTAL:
            return tuple((x, j) for x in range(i, self.end[0] + 1))
        return tuple((i, y) for y in range(j, self.end[1] + 1))


class CellInterval(NamedTuple):
    """A run of consecutive cells; length counts cells."""

    start: Point
    end: Point
    direction: str

    @property
    def num_cells(self) -> int:
        return (self.end[0] - self.start[0]) + (self.end[1] - self.start[1]) + 1

    def cells(self) -> tuple[Point, ...]:
        i, j = self.start
        if self.direction == HORIZONTAL:
            return tuple((x, j) for x in range(i, self.end[0] + 1))
        return tuple((i, y) for y in range(j, self.end[1] + 1))


class Leaf(NamedTuple):
    cell: Point
    free_edge: tuple[Point, Point]
    free_vertices: tuple[Point, Point]


class Polyomino:
    """Immutable edge-connected set of unit cells.

    Construction validates connectivity and, unless ``normalize=False`` is
    passed (used internally when working with sub-polyominoes in the ambient
    coordinates of a parent), translates the cells so min i = min j = 0.
    """

    def __init__(self, cells: Iterable[Point], normalize: bool = True):
        cellset = {(int(i), int(j)) for i, j in cells}
        if not cellset:
            raise EmptyInputError("a polyomino needs at least one cell")
        if normalize:
            mini = min(i for i, _ in cellset)
            minj = min(j for _, j in cellset)
            if mini or minj:
                cellset = {(i - mini, j - minj) for i, j in cellset}
        comps = connected_components(cellset)
        if len(comps) > 1:
            raise NotConnectedError(comps)
        self.cells: frozenset[Point] = frozenset(cellset)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Polyomino({sorted(self.cells, key=point_key)})"

    @cached_property
    def cells_sorted(self) -> tuple[Point, ...]:
        return tuple(sorted(self.cells, key=point_key))

    @cached_property
    def vertices(self) -> tuple[Point, ...]:
        vs = {v for c in self.cells for v in cell_vertices(c)}
        return tuple(sorted(vs, key=point_key))

    @cached_property
    def vertex_index(self) -> dict[Point, int]:
        """Canonical row-major variable numbering of V(P)."""
        return {v: k for k, v in enumerate(self.vertices)}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_cells(self) -> dict[Point, tuple[Point, ...]]:
        """For each vertex, the cells of the polyomino containing it."""
        out: dict[Point, list[Point]] = {}
        for c in self.cells_sorted:
            for v in cell_vertices(c):
                out.setdefault(v, []).append(c)
        return {v: tuple(cs) for v, cs in out.items()}

    @cached_property
    def _interval_through(self) -> dict[tuple[Point, str], EdgeInterval]:
        table = {}
        for direction in DIRECTIONS:
            for iv in maximal_edge_intervals(self, direction):
                for v in iv.vertices():
                    table[(v, direction)] = iv
        return table


def polyomino_from_cells(cells: Iterable[Point]) -> Polyomino:
    """Build a normalized polyomino from a set of lower left corners."""
    return Polyomino(cells)


def _merge_runs(values: list[int]) -> list[tuple[int, int]]:
    """Merge a sorted list of ints into inclusive runs."""
    runs = []
    start = prev = values[0]
    for x in values[1:]:
        if x == prev + 1:
            prev = x
        else:
            runs.append((start, prev))
            start = prev = x
    runs.append((start, prev))
    return runs


def maximal_edge_intervals(P: Polyomino, direction: str) -> list[EdgeInterval]:
    """Inclusion-maximal runs of unit edges of P in the given direction.

    Every direction-d edge of every cell lies in exactly one returned
    interval.  A unit edge in row j from (i, j) to (i+1, j) is keyed by i;
    vertical edges symmetrically by j.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    lines: dict[int, set[int]] = {}
    for (i, j) in P.cells:
        if direction == HORIZONTAL:
            lines.setdefault(j, set()).add(i)
            lines.setdefault(j + 1, set()).add(i)
        else:
            lines.setdefault(i, set()).add(j)
            lines.setdefault(i + 1, set()).add(j)
    out = []
    for line, starts in lines.items():
        for a, b in _merge_runs(sorted(starts)):
            if direction == HORIZONTAL:
                out.append(EdgeInterval((a, line), (b + 1, line), direction))
            else:
                out.append(EdgeInterval((line, a), (line, b + 1), direction))
    out.sort(key=lambda iv: point_key(iv.start))
    return out


def edge_interval_through(P: Polyomino, v: Point, direction: str) -> EdgeInterval:
    """The maximal edge interval of the given direction containing vertex v."""
    try:
        return P._interval_through[(v, direction)]
    except KeyError:
        raise ValueError(f"{v} is not a vertex of the polyomino") from None


def inner_intervals(P: Polyomino) -> list[tuple[Point, Point]]:
    """All intervals [(i,j),(k,l)], i<k and j<l, whose cells all lie in P.

    Unit cells are included.  Sorted canonically by lower left then upper
    right corner.
    """
    cells = P.cells
    maxi = max(i for i, _ in cells) + 1
    maxj = max(j for _, j in cells) + 1
    out = []
    for j in range(maxj):
        for l in range(j + 1, maxj + 1):
            for i in range(maxi):
                for k in range(i + 1, maxi + 1):
                    if all(
                        (r, s) in cells
                        for s in range(j, l)
                        for r in range(i, k)
                    ):
                        out.append(((i, j), (k, l)))
    out.sort(key=lambda iv: (point_key(iv[0]), point_key(iv[1])))
    return out


def cell_degree(P: Polyomino, cell: Point) -> int:
    """Number of cells of P sharing a full edge with the given cell."""
    if cell not in P.cells:
        raise CellNotInPolyominoError(f"{cell} is not a cell of the polyomino")
    return sum(1 for nb in cell_neighbors(cell) if nb in P.cells)


def free_edge(P: Polyomino, cell: Point) -> tuple[Point, Point] | None:
    """First edge of the cell (canonical order) whose two vertices belong to
    no other cell of P, or None."""
    vc = P.vertex_cells
    for a, b in cell_edges(cell):
        if len(vc[a]) == 1 and len(vc[b]) == 1:
            return (a, b)
    return None


def leaves(P: Polyomino) -> list[Leaf]:
    """Cells owning an edge whose two vertices touch no other cell.

    The witnessing edge and its two free vertices are reported; for the one
    cell polyomino every edge qualifies and the canonically smallest one
    (the bottom edge) is reported.
    """
    out = []
    for c in P.cells_sorted:
        e = free_edge(P, c)
        if e is not None:
            out.append(Leaf(c, e, e))
    return out


def maximal_cell_interval(P: Polyomino, cell: Point, direction: str) -> CellInterval:
    """Longest run of consecutive cells of P through the cell, in direction."""
    if cell not in P.cells:
        raise CellNotInPolyominoError(f"{cell} is not a cell of the polyomino")
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    di, dj = (1, 0) if direction == HORIZONTAL else (0, 1)
    lo = cell
    while (lo[0] - di, lo[1] - dj) in P.cells:
        lo = (lo[0] - di, lo[1] - dj)
    hi = cell
    while (hi[0] + di, hi[1] + dj) in P.cells:
        hi = (hi[0] + di, hi[1] + dj)
    return CellInterval(lo, hi, direction)
