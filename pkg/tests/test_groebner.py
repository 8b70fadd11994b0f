"""Division, Buchberger, saturation, initial ideals, quotient dimension."""

import random

import pytest

from polyomino_ideals import (
    IdealGens,
    MonomialOrder,
    Polynomial,
    StepLimitExceededError,
    buchberger,
    canonical_order,
    ideal_equal,
    initial_ideal,
    inner_minors,
    is_pure_difference,
    is_squarefree,
    normal_form,
    normal_form_with_quotients,
    order_sample,
    quotient_dimension,
    s_polynomial,
    saturate,
)
from conftest import brute_quotient_dimension

X_MINUS_Y = Polynomial({(1, 0): 1, (0, 1): -1})


def test_normal_form_single_step(P1):
    # the diagonal term of the unit square reduces to the antidiagonal
    order = canonical_order(4)
    minor = inner_minors(P1).generators[0]
    diagonal = Polynomial.monomial((1, 0, 0, 1))
    assert normal_form(diagonal, [minor], order) == Polynomial.monomial((0, 1, 1, 0))


def test_normal_form_empty_basis():
    order = canonical_order(2)
    f = Polynomial({(2, 1): 3, (0, 0): -1})
    assert normal_form(f, [], order) == f


def test_normal_form_of_generator_is_zero(P2):
    order = canonical_order(P2.num_vertices)
    gens = inner_minors(P2)
    gb = buchberger(gens, order)
    for g in gens:
        assert not normal_form(g, gb, order)


def test_division_contract():
    rng = random.Random(7)
    order = canonical_order(3)
    basis = [
        Polynomial({(1, 1, 0): 1, (0, 0, 1): -1}),
        Polynomial({(2, 0, 0): 1, (0, 1, 0): -1}),
    ]
    lead = [g.leading(order)[0] for g in basis]
    for _ in range(25):
        f = Polynomial(
            {
                tuple(rng.randrange(3) for _ in range(3)): rng.randint(-4, 4)
                for _ in range(4)
            }
        )
        r, quotients = normal_form_with_quotients(f, basis, order)
        recomposed = r
        for q, g in zip(quotients, basis):
            recomposed = recomposed + q * g
        assert recomposed == f
        for t in r.terms:
            assert not any(all(a <= b for a, b in zip(lm, t)) for lm in lead)
        assert r == normal_form(f, basis, order)


def test_buchberger_principal(P1):
    gens = inner_minors(P1)
    for order in order_sample(4, permutations=2, weight_orders=2, seed=2):
        assert buchberger(gens, order) == [gens.generators[0].monic(order)]


def test_buchberger_domino_gives_the_minors(P2):
    order = canonical_order(P2.num_vertices)
    gb = buchberger(inner_minors(P2), order)
    assert {g.key() for g in gb} == {g.key() for g in inner_minors(P2)}


def test_buchberger_block_gives_the_nine_minors(P4):
    order = canonical_order(P4.num_vertices)
    gb = buchberger(inner_minors(P4), order)
    assert len(gb) == 9
    assert {g.key() for g in gb} == {g.key() for g in inner_minors(P4)}


def test_buchberger_certificate(P2, P3, P4, P6):
    # every S-polynomial of the returned basis reduces to zero
    for P in (P2, P3, P4, P6):
        order = canonical_order(P.num_vertices)
        gb = buchberger(inner_minors(P), order)
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert not normal_form(s_polynomial(gb[i], gb[j], order), gb, order)


def test_ideal_equal_scalar_multiple():
    F = IdealGens((X_MINUS_Y,), 2)
    G = IdealGens((Polynomial({(1, 0): 2, (0, 1): -2}),), 2)
    assert ideal_equal(F, G)


def test_ideal_equal_with_own_gb(P2):
    gens = inner_minors(P2)
    gb = buchberger(gens, canonical_order(P2.num_vertices))
    assert ideal_equal(gens, IdealGens(tuple(gb), P2.num_vertices))


def test_saturate_strips_monomial_factor():
    F = IdealGens((Polynomial({(2, 0): 1, (1, 1): -1}),), 2)  # x^2 - x*y
    sat = saturate(F, [0, 1])
    assert ideal_equal(sat, IdealGens((X_MINUS_Y,), 2))


def test_saturate_fixed_point():
    F = IdealGens((X_MINUS_Y,), 2)
    assert ideal_equal(saturate(F, [0, 1]), F)


def test_saturate_unit_square_minor(P1):
    gens = inner_minors(P1)
    assert ideal_equal(saturate(gens, range(4)), gens)


def test_saturate_idempotent_and_extensive(P2):
    from polyomino_ideals import cell_lattice_basis, vector_binomial

    basis = cell_lattice_basis(P2)
    F = IdealGens(tuple(vector_binomial(v) for v in basis.vectors), P2.num_vertices)
    sat = saturate(F, range(P2.num_vertices))
    again = saturate(sat, range(P2.num_vertices))
    assert ideal_equal(sat, again)
    order = canonical_order(P2.num_vertices)
    gb = buchberger(sat, order)
    for g in F:
        assert not normal_form(g, gb, order)


def test_initial_ideal_squarefree(P1, P4):
    order1 = canonical_order(4)
    gb1 = buchberger(inner_minors(P1), order1)
    assert initial_ideal(gb1, order1) == [(1, 0, 0, 1)]
    assert is_squarefree(initial_ideal(gb1, order1))

    order4 = canonical_order(P4.num_vertices)
    gb4 = buchberger(inner_minors(P4), order4)
    init = initial_ideal(gb4, order4)
    assert len(init) == 9
    assert all(sum(m) == 2 for m in init)
    assert is_squarefree(init)


def test_initial_ideal_not_squarefree_control():
    # x^2 - y under lex(x > y)
    order = MonomialOrder("lex", 2)
    gb = buchberger([Polynomial({(2, 0): 1, (0, 1): -1})], order)
    init = initial_ideal(gb, order)
    assert init == [(2, 0)]
    assert not is_squarefree(init)


def test_quotient_dimension_examples(P1, P2):
    order = canonical_order(4)
    gb = buchberger(inner_minors(P1), order)
    assert quotient_dimension(initial_ideal(gb, order), 4) == 3

    order2 = canonical_order(P2.num_vertices)
    gb2 = buchberger(inner_minors(P2), order2)
    init2 = initial_ideal(gb2, order2)
    assert quotient_dimension(init2, 6) == 4
    assert quotient_dimension(init2, 6) == brute_quotient_dimension(init2, 6)

    assert quotient_dimension([], 7) == 7


def test_quotient_dimension_matches_brute_force():
    rng = random.Random(13)
    for _ in range(20):
        nvars = rng.randint(2, 7)
        monos = [
            tuple(rng.randrange(2) for _ in range(nvars)) for _ in range(rng.randint(1, 6))
        ]
        monos = [m for m in monos if any(m)]
        if not monos:
            continue
        assert quotient_dimension(monos, nvars) == brute_quotient_dimension(monos, nvars)


def test_pure_difference_closure(fixtures):
    for P in fixtures.values():
        order = canonical_order(P.num_vertices)
        for g in buchberger(inner_minors(P), order):
            assert is_pure_difference(g)


def test_membership_is_order_independent(P3):
    rng = random.Random(19)
    gens = inner_minors(P3)
    n = P3.num_vertices
    # random combination of generators lies in the ideal under every order
    f = Polynomial.zero()
    for g in gens:
        mono = tuple(rng.randrange(2) for _ in range(n))
        f = f + g.term_mul(mono, rng.randint(-2, 2))
    assert f
    for order in order_sample(n, seed=21):
        assert not normal_form(f, buchberger(gens, order), order)


def _naive_buchberger(gens, order):
    """Criteria-free reference: every pair processed, FIFO, then reduced."""
    from polyomino_ideals.groebner import reduce_groebner_basis

    basis = [g.monic(order) for g in gens if g]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.monic(order))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return reduce_groebner_basis(basis, order)


def test_buchberger_agrees_with_naive_reference(P2, P3):
    rng = random.Random(29)
    cases = [
        (list(inner_minors(P2)), P2.num_vertices),
        (list(inner_minors(P3)), P3.num_vertices),
    ]
    # random pure binomial ideals
    for _ in range(6):
        nvars = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(1, 3)):
            a = tuple(rng.randrange(3) for _ in range(nvars))
            b = tuple(rng.randrange(3) for _ in range(nvars))
            if a != b:
                gens.append(Polynomial({a: 1, b: -1}))
        if gens:
            cases.append((gens, nvars))
    # random dense ideals with honest rational coefficients
    from fractions import Fraction

    for _ in range(4):
        nvars = 2
        gens = []
        for _ in range(2):
            terms = {
                tuple(rng.randrange(3) for _ in range(nvars)): Fraction(
                    rng.randint(-3, 3), rng.randint(1, 3)
                )
                for _ in range(3)
            }
            g = Polynomial(terms)
            if g:
                gens.append(g)
        if gens:
            cases.append((gens, nvars))
    for gens, nvars in cases:
        for order in order_sample(nvars, permutations=1, weight_orders=1, seed=3):
            assert buchberger(gens, order) == _naive_buchberger(gens, order)


def test_step_limit_enforced(P4):
    with pytest.raises(StepLimitExceededError):
        buchberger(inner_minors(P4), canonical_order(P4.num_vertices), step_limit=3)


def test_step_limit_env(monkeypatch, P4):
    monkeypatch.setenv("POLYIDEAL_GB_STEP_LIMIT", "2")
    with pytest.raises(StepLimitExceededError):
        buchberger(inner_minors(P4), canonical_order(P4.num_vertices))
    monkeypatch.setenv("POLYIDEAL_GB_STEP_LIMIT", "100000")
    assert len(buchberger(inner_minors(P4), canonical_order(P4.num_vertices))) == 9
