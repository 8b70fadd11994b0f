"""Shared fixtures: the P1..P6 polyominoes, exhaustive small enumeration,
seeded class generators and independent brute-force oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from polyomino_ideals import (
    Polyomino,
    cell_neighbors,
    cell_vertices,
    is_tree_like,
    polyomino_from_cells,
)

# ---------------------------------------------------------------------------
# fixtures


@pytest.fixture(scope="session")
def P1():
    return polyomino_from_cells({(0, 0)})


@pytest.fixture(scope="session")
def P2():
    return polyomino_from_cells({(0, 0), (1, 0)})


@pytest.fixture(scope="session")
def P3():
    return polyomino_from_cells({(0, 0), (1, 0), (0, 1)})


@pytest.fixture(scope="session")
def P4():
    return polyomino_from_cells({(0, 0), (1, 0), (0, 1), (1, 1)})


@pytest.fixture(scope="session")
def P5():
    """3x3 frame with a hole at (1, 1)."""
    return polyomino_from_cells(
        {(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)}
    )


@pytest.fixture(scope="session")
def P6():
    """Staple: tree-like with one bad leaf at (0, 1)."""
    return polyomino_from_cells({(0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2)})


@pytest.fixture(scope="session")
def fixtures(P1, P2, P3, P4, P5, P6):
    return {"P1": P1, "P2": P2, "P3": P3, "P4": P4, "P5": P5, "P6": P6}


# ---------------------------------------------------------------------------
# exhaustive enumeration up to translation

FIXED_POLYOMINO_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19, 5: 63, 6: 216, 7: 760}


def enumerate_cellsets(max_cells: int) -> list[set[frozenset]]:
    """levels[n] = all n-cell polyominoes up to translation, as frozensets."""
    levels: list[set[frozenset]] = [set() for _ in range(max_cells + 1)]
    levels[1] = {frozenset({(0, 0)})}
    for n in range(1, max_cells):
        for p in levels[n]:
            boundary = {nb for cell in p for nb in cell_neighbors(cell)} - p
            for c in boundary:
                q = set(p)
                q.add(c)
                mini = min(i for i, _ in q)
                minj = min(j for _, j in q)
                levels[n + 1].add(frozenset((i - mini, j - minj) for i, j in q))
    return levels


@pytest.fixture(scope="session")
def small_polyominoes():
    """All polyominoes with at most 7 cells, up to translation."""
    levels = enumerate_cellsets(7)
    for n, count in FIXED_POLYOMINO_COUNTS.items():
        assert len(levels[n]) == count, f"enumeration oracle broke at n={n}"
    return [Polyomino(p) for n in range(1, 8) for p in sorted(levels[n], key=sorted)]


# ---------------------------------------------------------------------------
# seeded random generators


def grow_polyomino(n: int, rng: random.Random) -> Polyomino:
    cells = {(0, 0)}
    while len(cells) < n:
        boundary = sorted(
            {nb for c in cells for nb in cell_neighbors(c)} - cells,
            key=lambda p: (p[1], p[0]),
        )
        cells.add(rng.choice(boundary))
    return polyomino_from_cells(cells)


def random_tree_like(max_cells: int, rng: random.Random) -> Polyomino:
    while True:
        P = grow_polyomino(rng.randint(1, max_cells), rng)
        if is_tree_like(P).tree_like:
            return P


def random_row_convex(max_cells: int, rng: random.Random) -> Polyomino:
    n = rng.randint(1, max_cells)
    widths = []
    remaining = n
    while remaining:
        take = rng.randint(1, remaining)
        widths.append(take)
        remaining -= take
    cells = set()
    prev = None
    for j, width in enumerate(widths):
        if prev is None:
            start = 0
        else:
            start = rng.randint(prev[0] - width + 1, prev[1])
        cells.update((start + k, j) for k in range(width))
        prev = (start, start + width - 1)
    return polyomino_from_cells(cells)


def random_column_convex(max_cells: int, rng: random.Random) -> Polyomino:
    P = random_row_convex(max_cells, rng)
    return polyomino_from_cells({(j, i) for i, j in P.cells})


# ---------------------------------------------------------------------------
# independent oracles


def vertex_count_inclusion_exclusion(P: Polyomino) -> int:
    """|V(P)| by inclusion-exclusion over the cells' vertex sets."""
    cells = sorted(P.cells)
    total = 0
    for r in range(1, len(cells) + 1):
        for comb in combinations(cells, r):
            inter = set(cell_vertices(comb[0]))
            for c in comb[1:]:
                inter &= set(cell_vertices(c))
            total += (-1) ** (r + 1) * len(inter)
    return total


def rational_rank(matrix) -> int:
    """Rank by plain Gaussian elimination over Fraction."""
    M = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = 1 / M[rank][c]
        M[rank] = [x * inv for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def brute_quotient_dimension(monomials, nvars: int) -> int:
    """Max size of a variable subset containing no generator support,
    by brute force over all subsets."""
    supports = [frozenset(v for v, e in enumerate(m) if e) for m in monomials]
    best = 0
    for mask in range(1 << nvars):
        subset = {v for v in range(nvars) if mask >> v & 1}
        if all(not s <= subset for s in supports):
            best = max(best, len(subset))
    return best


def random_admissible_labeling(P, basis, rng: random.Random) -> dict:
    """Nonzero integer combination of admissible kernel basis vectors."""
    n = P.num_vertices
    while True:
        vec = [0] * n
        for row in basis.vectors:
            c = rng.randint(-3, 3)
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        if any(vec):
            return {P.vertices[k]: v for k, v in enumerate(vec) if v}
