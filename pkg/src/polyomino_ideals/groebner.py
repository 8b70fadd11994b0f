"""Buchberger's algorithm, normal forms, saturation and initial ideals.

The pair queue uses the normal selection strategy (smallest lcm first) with
the coprime and chain criteria for pruning, so runs are deterministic and the
returned basis is the unique reduced Groebner basis (monic, auto-reduced,
sorted ascending by leading monomial).  The number of S-pairs processed per
run is capped; the cap comes from POLYIDEAL_GB_STEP_LIMIT when set.
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction

from .errors import StepLimitExceededError
from .orders import EliminationOrder, canonical_order
from .polynomials import (
    IdealGens,
    Monomial,
    Polynomial,
    mono_div,
    mono_divides,
    mono_is_squarefree,
    mono_lcm,
    mono_mul,
    mono_one,
)

DEFAULT_STEP_LIMIT = 10**6
STEP_LIMIT_ENV = "POLYIDEAL_GB_STEP_LIMIT"


def _resolve_step_limit(step_limit):
    if step_limit is not None:
        return step_limit
    raw = os.environ.get(STEP_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_STEP_LIMIT


def _coeff_quotient(c, lc):
    """Exact c / lc staying in int when possible."""
    if lc == 1:
        return c
    if lc == -1:
        return -c
    return Fraction(c) / lc


def normal_form(f: Polynomial, basis, order) -> Polynomial:
    """Remainder of f under full division by the listed polynomials.

    Deterministic: always reduces the currently largest term, by the first
    listed divisor whose leading monomial divides it.  No term of the result
    is divisible by any leading monomial of the basis.
    """
    if not basis:
        return f
    lts = [(g.leading(order), g) for g in basis]
    key = order.key
    work = dict(f.terms)
    out: dict = {}
    while work:
        t = max(work, key=key)
        c = work[t]
        for (lm, lc), g in lts:
            if mono_divides(lm, t):
                factor = _coeff_quotient(c, lc)
                for mg, cg in g.terms.items():
                    m2 = mono_mul(mono_div(t, lm), mg)
                    v = work.get(m2, 0) - factor * cg
                    if v:
                        work[m2] = v
                    else:
                        work.pop(m2, None)
                break
        else:
            out[t] = c
            del work[t]
    return Polynomial(out)


def normal_form_with_quotients(f: Polynomial, basis, order):
    """Like normal_form but also returns quotients q with f = sum(q*g) + r."""
    lts = [(g.leading(order), g) for g in basis]
    key = order.key
    work = dict(f.terms)
    out: dict = {}
    quotients = [Polynomial.zero() for _ in basis]
    while work:
        t = max(work, key=key)
        c = work[t]
        for idx, ((lm, lc), g) in enumerate(lts):
            if mono_divides(lm, t):
                factor = _coeff_quotient(c, lc)
                shift = mono_div(t, lm)
                quotients[idx] = quotients[idx] + Polynomial.monomial(shift, factor)
                for mg, cg in g.terms.items():
                    m2 = mono_mul(shift, mg)
                    v = work.get(m2, 0) - factor * cg
                    if v:
                        work[m2] = v
                    else:
                        work.pop(m2, None)
                break
        else:
            out[t] = c
            del work[t]
    return Polynomial(out), quotients


def s_polynomial(f: Polynomial, g: Polynomial, order) -> Polynomial:
    lmf, lcf = f.leading(order)
    lmg, lcg = g.leading(order)
    l = mono_lcm(lmf, lmg)
    a = f.term_mul(mono_div(l, lmf), _coeff_quotient(1, lcf))
    b = g.term_mul(mono_div(l, lmg), _coeff_quotient(1, lcg))
    return a - b


def reduce_groebner_basis(basis, order) -> list[Polynomial]:
    """Minimalize and tail-reduce a Groebner basis; monic, sorted ascending."""
    key = order.key
    monic = sorted((g.monic(order) for g in basis if g), key=lambda g: key(g.leading(order)[0]))
    kept: list[Polynomial] = []
    for g in monic:
        lm = g.leading(order)[0]
        if not any(mono_divides(h.leading(order)[0], lm) for h in kept):
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            r = normal_form(kept[idx], others, order).monic(order)
            if r != kept[idx]:
                kept[idx] = r
                changed = True
    kept.sort(key=lambda g: key(g.leading(order)[0]))
    return kept


def buchberger(gens, order, step_limit: int | None = None) -> list[Polynomial]:
    """Unique reduced Groebner basis of the given generators."""
    if isinstance(gens, IdealGens):
        polys = list(gens.generators)
    else:
        polys = list(gens)
    limit = _resolve_step_limit(step_limit)
    basis = [g.monic(order) for g in polys if g]
    lms = [g.leading(order)[0] for g in basis]
    key = order.key

    heap: list = []
    pending: set = set()
    counter = 0

    def push(i: int, j: int):
        nonlocal counter
        heapq.heappush(heap, (key(mono_lcm(lms[i], lms[j])), counter, i, j))
        pending.add((i, j))
        counter += 1

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    steps = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        steps += 1
        if steps > limit:
            raise StepLimitExceededError(
                f"Buchberger exceeded {limit} S-pair reductions"
            )
        l = mono_lcm(lms[i], lms[j])
        if l == mono_mul(lms[i], lms[j]):
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(lms[k], l):
                continue
            pik = (i, k) if i < k else (k, i)
            pjk = (j, k) if j < k else (k, j)
            if pik not in pending and pjk not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            r = r.monic(order)
            basis.append(r)
            lms.append(r.leading(order)[0])
            new = len(basis) - 1
            for i2 in range(new):
                push(i2, new)
    return reduce_groebner_basis(basis, order)


def initial_ideal(gb, order) -> list[Monomial]:
    """Leading monomials of a Groebner basis."""
    return [g.leading(order)[0] for g in gb]


def is_squarefree(monomials) -> bool:
    return all(mono_is_squarefree(m) for m in monomials)


def ideal_equal(F: IdealGens, G: IdealGens, step_limit: int | None = None) -> bool:
    """Ideal equality via reduced Groebner bases under the canonical order."""
    if F.nvars != G.nvars:
        raise ValueError("ideals live in different variable counts")
    order = canonical_order(F.nvars)
    return buchberger(F, order, step_limit) == buchberger(G, order, step_limit)


def saturate(F: IdealGens, variables, step_limit: int | None = None) -> IdealGens:
    """Saturation of F by the product of the given variables.

    One fresh variable w is adjoined together with w*prod(x_v) - 1; a
    Groebner basis under an elimination order (w greatest, then the canonical
    order on the original block) is computed and intersected with the
    original variables.
    """
    n = F.nvars
    vs = sorted(set(variables))
    if any(v < 0 or v >= n for v in vs):
        raise ValueError("variable index out of range")
    ext = [
        Polynomial({m + (0,): c for m, c in g.terms.items()})
        for g in F.generators
    ]
    prod = [0] * (n + 1)
    for v in vs:
        prod[v] = 1
    prod[n] = 1
    ext.append(Polynomial({tuple(prod): 1, mono_one(n + 1): -1}))
    order = EliminationOrder(canonical_order(n), n)
    gb = buchberger(ext, order, step_limit)
    kept = [
        Polynomial({m[:n]: c for m, c in g.terms.items()})
        for g in gb
        if all(m[n] == 0 for m in g.terms)
    ]
    return IdealGens(tuple(kept), n)


def quotient_dimension(initial_gens, nvars: int) -> int:
    """Krull dimension of the quotient by a monomial ideal.

    Equals the largest size of a variable subset containing no generator's
    full support; computed as nvars minus a minimum hitting set of the
    supports (exact branch and bound with memoization).
    """
    supports = set()
    for m in initial_gens:
        s = frozenset(v for v, e in enumerate(m) if e)
        if not s:
            raise ValueError("monomial ideal contains a unit")
        supports.add(s)
    if not supports:
        return nvars
    minimal = [s for s in supports if not any(t < s for t in supports)]
    minimal.sort(key=lambda s: (len(s), sorted(s)))

    best = len(minimal)  # one variable per support always hits
    seen: dict = {}

    def search(idx: int, removed: frozenset, size: int):
        nonlocal best
        if size >= best:
            return
        while idx < len(minimal) and minimal[idx] & removed:
            idx += 1
        if idx == len(minimal):
            best = size
            return
        state = (idx, removed)
        prior = seen.get(state)
        if prior is not None and prior <= size:
            return
        seen[state] = size
        for v in sorted(minimal[idx]):
            search(idx + 1, removed | {v}, size + 1)

    search(0, frozenset(), 0)
    return nvars - best
