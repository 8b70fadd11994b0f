"""Polyomino ideals: inner minors, labelings, lattices, balanced and prime.

The ideal of a polyomino is generated by one pure-difference binomial per
inner interval.  Integer labelings of the vertices that sum to zero on every
maximal edge interval ("admissible" labelings) are exactly the integer kernel
of the interval incidence matrix; the ideal generated by all their binomials
is the lattice ideal of that kernel, computed here by saturating the finitely
many basis binomials.  A polyomino is balanced when the two ideals agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBalancedError, ZeroLabelingError
from .grid import (
    DIRECTIONS,
    Point,
    Polyomino,
    inner_intervals,
    maximal_edge_intervals,
)
from .groebner import (
    buchberger,
    ideal_equal,
    initial_ideal,
    is_squarefree,
    normal_form,
    quotient_dimension,
    s_polynomial,
    saturate,
)
from .intlinalg import LatticeBasis, kernel_basis
from .orders import canonical_order
from .polynomials import IdealGens, Polynomial, is_pure_difference

Labeling = dict  # Point -> int


def inner_minor(P: Polyomino, interval: tuple[Point, Point]) -> Polynomial:
    """The 2-minor of an inner interval: diagonal minus antidiagonal."""
    (i, j), (k, l) = interval
    idx = P.vertex_index
    n = P.num_vertices
    diag = [0] * n
    diag[idx[(i, j)]] += 1
    diag[idx[(k, l)]] += 1
    anti = [0] * n
    anti[idx[(i, l)]] += 1
    anti[idx[(k, j)]] += 1
    return Polynomial({tuple(diag): 1, tuple(anti): -1})


def inner_minors(P: Polyomino) -> IdealGens:
    """Generators of the polyomino ideal, one per inner interval."""
    return IdealGens(
        tuple(inner_minor(P, iv) for iv in inner_intervals(P)),
        P.num_vertices,
    )


def cell_vector(P: Polyomino, cell: Point) -> tuple[int, ...]:
    """The vector e_ll + e_ur - e_lr - e_ul of a cell, in vertex coordinates."""
    i, j = cell
    idx = P.vertex_index
    v = [0] * P.num_vertices
    v[idx[(i, j)]] = 1
    v[idx[(i + 1, j + 1)]] = 1
    v[idx[(i + 1, j)]] = -1
    v[idx[(i, j + 1)]] = -1
    return tuple(v)


def cell_lattice_basis(P: Polyomino) -> LatticeBasis:
    """One vector per cell, in canonical cell order."""
    return LatticeBasis(
        tuple(cell_vector(P, c) for c in P.cells_sorted),
        P.num_vertices,
    )


def admissible_matrix(P: Polyomino) -> list[list[int]]:
    """0/1 incidence of maximal edge intervals (rows) versus vertices."""
    idx = P.vertex_index
    rows = []
    for direction in DIRECTIONS:
        for iv in maximal_edge_intervals(P, direction):
            row = [0] * P.num_vertices
            for v in iv.vertices():
                row[idx[v]] = 1
            rows.append(row)
    return rows


def labeling_vector(P: Polyomino, labeling: Labeling) -> list[int]:
    """Dense vector of a labeling; the support must lie inside V(P)."""
    idx = P.vertex_index
    vec = [0] * P.num_vertices
    for pt, value in labeling.items():
        if pt not in idx:
            raise ValueError(f"labeling supported outside the vertex set: {pt}")
        vec[idx[pt]] = int(value)
    return vec


def vector_labeling(P: Polyomino, vec) -> Labeling:
    return {P.vertices[k]: int(v) for k, v in enumerate(vec) if v}


def is_admissible(P: Polyomino, labeling: Labeling) -> bool:
    """True iff the labeling sums to zero on every maximal edge interval."""
    vec = labeling_vector(P, labeling)
    return all(
        sum(r * x for r, x in zip(row, vec)) == 0
        for row in admissible_matrix(P)
    )


def vector_binomial(vec) -> Polynomial:
    """x^(positive part) - x^(negative part) of an integer vector."""
    if not any(vec):
        raise ZeroLabelingError("the zero labeling has no binomial")
    pos = tuple(x if x > 0 else 0 for x in vec)
    neg = tuple(-x if x < 0 else 0 for x in vec)
    return Polynomial({pos: 1, neg: -1})


def labeling_binomial(P: Polyomino, labeling: Labeling) -> Polynomial:
    """The pure-difference binomial of a nonzero labeling."""
    return vector_binomial(labeling_vector(P, labeling))


def binomial_to_labeling(P: Polyomino, f: Polynomial) -> Labeling:
    """Recover the labeling of a pure-difference binomial with coprime terms."""
    if not is_pure_difference(f):
        raise ValueError("not a pure-difference binomial")
    (m1, c1), (m2, c2) = f.terms.items()
    pos, neg = (m1, m2) if c1 == 1 else (m2, m1)
    if any(a and b for a, b in zip(pos, neg)):
        raise ValueError("binomial terms are not coprime")
    return vector_labeling(P, [a - b for a, b in zip(pos, neg)])


def admissible_lattice(P: Polyomino) -> LatticeBasis:
    """Saturated integer kernel of the admissible constraint matrix."""
    return kernel_basis(admissible_matrix(P), ncols=P.num_vertices)


def lattice_ideal(P: Polyomino, basis: LatticeBasis,
                  step_limit: int | None = None) -> IdealGens:
    """Generators of the full lattice ideal of the given basis.

    Computed as the saturation of the basis binomials by all variables, which
    yields the whole lattice ideal for any lattice basis.
    """
    if basis.ambient != P.num_vertices:
        raise ValueError("basis ambient dimension does not match V(P)")
    gens = IdealGens(
        tuple(vector_binomial(v) for v in basis.vectors),
        P.num_vertices,
    )
    return saturate(gens, range(P.num_vertices), step_limit)


@dataclass(frozen=True)
class BalancedReport:
    """Verdict of the ideal equality test, with a witness either way.

    When the admissible kernel rank differs from the cell count the heights
    of the two ideals already differ, and (adm_rank, ncells) is the witness.
    Otherwise the reduced bases are compared: shared_gb certifies equality,
    and offending is a generator of the labeling ideal outside the minor
    ideal when they differ.
    """

    balanced: bool
    adm_rank: int
    ncells: int
    offending: Polynomial | None = None
    shared_gb: tuple[Polynomial, ...] | None = None


def is_balanced(P: Polyomino, step_limit: int | None = None) -> BalancedReport:
    """Decide whether every admissible labeling's binomial lies in the
    polyomino ideal."""
    adm = admissible_lattice(P)
    ncells = len(P)
    if adm.rank != ncells:
        return BalancedReport(False, adm.rank, ncells)
    order = canonical_order(P.num_vertices)
    gb_minors = buchberger(inner_minors(P), order, step_limit)
    gb_labelings = buchberger(lattice_ideal(P, adm, step_limit), order, step_limit)
    if gb_minors == gb_labelings:
        return BalancedReport(True, adm.rank, ncells, shared_gb=tuple(gb_minors))
    offending = next(
        g for g in gb_labelings if normal_form(g, gb_minors, order)
    )
    return BalancedReport(False, adm.rank, ncells, offending=offending)


def is_prime(P: Polyomino, step_limit: int | None = None) -> bool:
    """Primality of the polyomino ideal.

    The exponent vectors of the inner minors span exactly the cell lattice,
    so saturating by all variables lands on its lattice ideal, which is prime
    because the lattice is saturated; conversely a prime binomial ideal free
    of variables equals its saturation.  Hence primality reduces to the
    fixed-point test below.
    """
    gens = inner_minors(P)
    sat = saturate(gens, range(P.num_vertices), step_limit)
    return ideal_equal(gens, sat, step_limit)


def dimension(P: Polyomino, gb=None, step_limit: int | None = None) -> int:
    """Krull dimension of the coordinate ring, via the initial ideal."""
    order = canonical_order(P.num_vertices)
    if gb is None:
        gb = buchberger(inner_minors(P), order, step_limit)
    return quotient_dimension(initial_ideal(gb, order), P.num_vertices)


@dataclass(frozen=True)
class OrderOutcome:
    order: str
    spairs_reduce: bool
    gb_within_candidates: bool
    initial_squarefree: bool
    gb_size: int

    @property
    def passed(self) -> bool:
        return self.spairs_reduce and self.gb_within_candidates and self.initial_squarefree


@dataclass(frozen=True)
class UniversalGBReport:
    candidates: int
    outcomes: tuple[OrderOutcome, ...]

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)


def universal_gb_check(P: Polyomino, orders,
                       step_limit: int | None = None) -> UniversalGBReport:
    """Check that the primitive cycle binomials form a universal Groebner
    basis of the polyomino ideal over the sampled orders.

    Per order: (a) every S-pair of the candidate set reduces to zero against
    it, (b) the reduced basis of the minor ideal consists of candidates up to
    sign, (c) the initial ideal is squarefree.  Requires a balanced
    polyomino.
    """
    from .cycles import cycle_binomial, enumerate_cycles, max_cycle_vertices

    if not orders:
        raise ValueError("need at least one order")
    if not is_balanced(P, step_limit).balanced:
        raise NotBalancedError("the polyomino is not balanced")
    cycles = enumerate_cycles(P, max_vertices=max_cycle_vertices(P), primitive_only=True)
    candidates = [cycle_binomial(P, c) for c in cycles]
    signed = {f.key() for f in candidates} | {(-f).key() for f in candidates}
    gens = inner_minors(P)
    outcomes = []
    for order in orders:
        ok_s = True
        for i in range(len(candidates)):
            for j in range(i + 1, len(candidates)):
                s = s_polynomial(candidates[i], candidates[j], order)
                if normal_form(s, candidates, order):
                    ok_s = False
                    break
            if not ok_s:
                break
        gb = buchberger(gens, order, step_limit)
        ok_gb = all(g.key() in signed for g in gb)
        ok_sq = is_squarefree(initial_ideal(gb, order))
        outcomes.append(
            OrderOutcome(order.spec_string(), ok_s, ok_gb, ok_sq, len(gb))
        )
    return UniversalGBReport(len(candidates), tuple(outcomes))
