"""Structural predicates: convexity, simplicity, tree-likeness, leaf census.

A leaf is a cell with an edge whose two vertices belong to no other cell.  A
leaf is good when, for at least one of its free vertices, the maximal edge
interval through that vertex (taken in the direction of the leaf's maximal
cell interval) spans exactly as many unit edges as that cell interval has
cells.  The one cell polyomino is declared a good leaf so that recursions
over leaves terminate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BoundExceededError, NotALeafError
from .grid import (
    HORIZONTAL,
    VERTICAL,
    CellInterval,
    Point,
    Polyomino,
    cell_neighbors,
    connected_components,
    edge_interval_through,
    free_edge,
    leaves,
    maximal_cell_interval,
    point_key,
)

GOOD = "good"
BAD = "bad"


class SimpleReport(NamedTuple):
    simple: bool
    hole: Point | None


class TreeLikeReport(NamedTuple):
    tree_like: bool
    stuck: frozenset | None


@dataclass(frozen=True)
class LeafCensus:
    """Degree histogram plus good/bad classification of the leaves.

    n0 is nonzero only for the one cell polyomino, which is counted as a good
    leaf by convention (so n1 = len(good) + len(bad) holds whenever the
    polyomino has at least two cells).  blocking_cells maps each bad leaf to
    the far end cell of its maximal cell interval.
    """

    n0: int
    n1: int
    n2: int
    n3: int
    n4: int
    good_leaves: tuple[Point, ...]
    bad_leaves: tuple[Point, ...]
    blocking_cells: dict[Point, Point] = field(default_factory=dict)


def is_row_convex(P: Polyomino) -> bool:
    """True iff the cells of every row form one contiguous run."""
    rows: dict[int, list[int]] = {}
    for i, j in P.cells:
        rows.setdefault(j, []).append(i)
    return all(max(v) - min(v) + 1 == len(v) for v in rows.values())


def is_column_convex(P: Polyomino) -> bool:
    """True iff the cells of every column form one contiguous run."""
    cols: dict[int, list[int]] = {}
    for i, j in P.cells:
        cols.setdefault(i, []).append(j)
    return all(max(v) - min(v) + 1 == len(v) for v in cols.values())


def is_simple(P: Polyomino) -> SimpleReport:
    """Flood fill over the complement inside a one cell padded bounding box.

    The polyomino is simple when every box cell outside P escapes to the
    padding ring through cells outside P.  When it is not, the canonically
    smallest trapped cell is returned as a witness.
    """
    maxi = max(i for i, _ in P.cells)
    maxj = max(j for _, j in P.cells)
    seen = set()
    frontier = []
    for i in range(-1, maxi + 2):
        for j in (-1, maxj + 1):
            frontier.append((i, j))
    for j in range(0, maxj + 1):
        for i in (-1, maxi + 1):
            frontier.append((i, j))
    seen.update(frontier)
    while frontier:
        c = frontier.pop()
        for nb in cell_neighbors(c):
            i, j = nb
            if -1 <= i <= maxi + 1 and -1 <= j <= maxj + 1:
                if nb not in seen and nb not in P.cells:
                    seen.add(nb)
                    frontier.append(nb)
    holes = [
        (i, j)
        for j in range(maxj + 1)
        for i in range(maxi + 1)
        if (i, j) not in P.cells and (i, j) not in seen
    ]
    if holes:
        return SimpleReport(False, min(holes, key=point_key))
    return SimpleReport(True, None)


def _peel(P: Polyomino, rng: random.Random | None) -> TreeLikeReport:
    cells = set(P.cells)
    while len(cells) > 1:
        sub = Polyomino(cells, normalize=False)
        ls = [leaf.cell for leaf in leaves(sub)]
        if not ls:
            return TreeLikeReport(False, frozenset(cells))
        if rng is None:
            cells.remove(min(ls, key=point_key))
        else:
            cells.remove(rng.choice(sorted(ls, key=point_key)))
    return TreeLikeReport(True, None)


def _exhaustive(P: Polyomino, bound: int) -> TreeLikeReport:
    if len(P) > bound:
        raise BoundExceededError(
            f"exhaustive mode supports at most {bound} cells, got {len(P)}"
        )
    cells = P.cells_sorted
    n = len(cells)
    for mask in range(1, 1 << n):
        subset = {cells[k] for k in range(n) if mask >> k & 1}
        if len(subset) < 2:
            continue  # a single cell is trivially a leaf of itself
        if len(connected_components(subset)) > 1:
            continue
        sub = Polyomino(subset, normalize=False)
        if not leaves(sub):
            return TreeLikeReport(False, frozenset(subset))
    return TreeLikeReport(True, None)


def is_tree_like(
    P: Polyomino,
    mode: str = "peel",
    bound: int = 10,
    rng: random.Random | None = None,
) -> TreeLikeReport:
    """Decide whether every subpolyomino has a leaf.

    peel mode repeatedly removes a leaf (canonically smallest, or chosen by
    rng when given; any order certifies the same answer because leafness is
    monotone under cell removal) and succeeds iff a single cell remains.
    exhaustive mode checks every connected subset directly and is capped at
    ``bound`` cells.
    """
    if mode == "peel":
        return _peel(P, rng)
    if mode == "exhaustive":
        return _exhaustive(P, bound)
    raise ValueError(f"unknown mode {mode!r}")


def leaf_interval(P: Polyomino, cell: Point) -> CellInterval:
    """Maximal cell interval of a leaf, taken toward its unique neighbor.

    For the one cell polyomino the direction perpendicular to the reported
    free edge is used (both candidate intervals are single cells anyway).
    """
    e = free_edge(P, cell)
    if e is None:
        raise NotALeafError(f"{cell} is not a leaf")
    if len(P) == 1:
        a, b = e
        direction = VERTICAL if a[1] == b[1] else HORIZONTAL
        return maximal_cell_interval(P, cell, direction)
    neighbor = next(nb for nb in cell_neighbors(cell) if nb in P.cells)
    direction = HORIZONTAL if neighbor[1] == cell[1] else VERTICAL
    return maximal_cell_interval(P, cell, direction)


def classify_leaf(P: Polyomino, cell: Point) -> str:
    """Return "good" or "bad" for a leaf cell.

    Good means: for at least one free vertex, the maximal edge interval
    through it in the direction of the leaf's cell interval has as many unit
    edges as the cell interval has cells.
    """
    e = free_edge(P, cell)
    if e is None:
        raise NotALeafError(f"{cell} is not a leaf")
    if len(P) == 1:
        return GOOD
    interval = leaf_interval(P, cell)
    for v in e:
        if edge_interval_through(P, v, interval.direction).num_edges == interval.num_cells:
            return GOOD
    return BAD


def leaf_census(P: Polyomino) -> LeafCensus:
    """Degree histogram, good/bad leaf lists and bad-leaf blocking cells."""
    counts = [0, 0, 0, 0, 0]
    for c in P.cells:
        counts[sum(1 for nb in cell_neighbors(c) if nb in P.cells)] += 1
    good, bad = [], []
    blocking: dict[Point, Point] = {}
    for leaf in leaves(P):
        if classify_leaf(P, leaf.cell) == GOOD:
            good.append(leaf.cell)
        else:
            bad.append(leaf.cell)
            iv = leaf_interval(P, leaf.cell)
            blocking[leaf.cell] = iv.end if iv.start == leaf.cell else iv.start
    return LeafCensus(
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        counts[4],
        tuple(sorted(good, key=point_key)),
        tuple(sorted(bad, key=point_key)),
        blocking,
    )


def connection_graph(P: Polyomino) -> list[tuple[int, int]]:
    """Edges between edge-sharing cells, on canonical cell indices."""
    index = {c: k for k, c in enumerate(P.cells_sorted)}
    out = []
    for c in P.cells_sorted:
        for nb in cell_neighbors(c):
            if nb in index and index[c] < index[nb]:
                out.append((index[c], index[nb]))
    return sorted(out)
