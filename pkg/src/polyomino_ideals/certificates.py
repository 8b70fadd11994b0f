"""Constructive membership certificates for tree-like polyominoes.

For a tree-like polyomino every admissible labeling's binomial lies in the
ideal of inner minors, and the proof is effective: pick a good leaf, peel one
unit off the labels across an inner minor supported on the leaf's cell
interval, and recurse.  The certificate lists (multiplier, inner minor) pairs
whose products sum exactly to the labeling's binomial.
"""

from __future__ import annotations

from .classify import GOOD, classify_leaf, is_tree_like, leaf_interval
from .errors import NotAdmissibleError, NotTreeLikeError
from .grid import (
    HORIZONTAL,
    Polyomino,
    edge_interval_through,
    leaves,
    point_key,
)
from .ideals import inner_minor, is_admissible, labeling_binomial, labeling_vector
from .polynomials import Polynomial, mono_gcd

Certificate = list[tuple[Polynomial, Polynomial]]


def expand_certificate(cert: Certificate) -> Polynomial:
    """Sum of multiplier * minor over the certificate, exact arithmetic."""
    total = Polynomial.zero()
    for multiplier, minor in cert:
        total = total + multiplier * minor
    return total


def _positive_monomial(P: Polyomino, values: dict) -> tuple:
    vec = [0] * P.num_vertices
    idx = P.vertex_index
    for pt, v in values.items():
        if v > 0:
            vec[idx[pt]] = v
    return tuple(vec)


def _certify(P: Polyomino, sub: Polyomino, values: dict) -> Certificate:
    """Certificate for the labeling's binomial over sub, in P's variables.

    values must be admissible on sub and supported on V(sub); sub shares
    coordinates with P (no renormalization), so minors of sub are minors
    of P.
    """
    values = {pt: v for pt, v in values.items() if v}
    if not values:
        return []

    good = [lf for lf in leaves(sub) if classify_leaf(sub, lf.cell) == GOOD]
    if not good:
        raise RuntimeError("tree-like polyomino without a good leaf")
    leaf = min(good, key=lambda lf: point_key(lf.cell))
    interval = leaf_interval(sub, leaf.cell)
    witnesses = [
        v
        for v in leaf.free_vertices
        if edge_interval_through(sub, v, interval.direction).num_edges
        == interval.num_cells
    ]
    a2 = min(witnesses, key=point_key)
    a1 = next(v for v in leaf.free_vertices if v != a2)

    if values.get(a1, 0) == 0:
        # both free labels vanish; drop the leaf cell and recurse
        smaller = Polyomino(sub.cells - {leaf.cell}, normalize=False)
        kept = set(smaller.vertices)
        return _certify(P, smaller, {pt: v for pt, v in values.items() if pt in kept})

    if values[a1] < 0:
        flipped = _certify(P, sub, {pt: -v for pt, v in values.items()})
        return [(-m, g) for m, g in flipped]

    # inductive step: values[a1] > 0, values[a2] < 0; find an opposite sign
    # inside the matching interval through a2 and cancel across an inner minor
    span = edge_interval_through(sub, a2, interval.direction)
    c = min(
        (w for w in span.vertices() if values.get(w, 0) > 0),
        key=point_key,
    )
    if interval.direction == HORIZONTAL:
        d = (c[0], a1[1])
    else:
        d = (a1[0], c[1])
    corners = (a1, a2, c, d)
    ll = min(corners)
    ur = max(corners)
    minor = inner_minor(P, (ll, ur))
    sign = 1 if {a1, c} == {ll, ur} else -1

    idx = P.vertex_index
    shift = list(_positive_monomial(P, values))
    shift[idx[a1]] -= 1
    shift[idx[c]] -= 1
    multiplier = Polynomial.monomial(tuple(shift), sign)

    beta = dict(values)
    for pt, dv in ((a1, -1), (c, -1), (a2, 1), (d, 1)):
        beta[pt] = beta.get(pt, 0) + dv

    remainder = labeling_binomial(P, values) - multiplier * minor
    if not remainder:
        return [(multiplier, minor)]
    m1, m2 = remainder.terms
    cofactor = mono_gcd(m1, m2)
    rest = _certify(P, sub, beta)
    return [(multiplier, minor)] + [(m.term_mul(cofactor), g) for m, g in rest]


def balanced_certificate_treelike(P: Polyomino, labeling: dict) -> Certificate:
    """Express the labeling's binomial as an explicit combination of inner
    minors; only valid for tree-like polyominoes."""
    if not is_tree_like(P).tree_like:
        raise NotTreeLikeError("certificates require a tree-like polyomino")
    if not is_admissible(P, labeling):
        raise NotAdmissibleError("labeling does not sum to zero on all intervals")
    vec = labeling_vector(P, labeling)
    values = {P.vertices[k]: v for k, v in enumerate(vec) if v}
    return _certify(P, P, values)
