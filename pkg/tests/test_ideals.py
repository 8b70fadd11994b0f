"""Polyomino ideals: minors, labelings, lattices, balanced, prime, dimension."""

import pytest

from polyomino_ideals import (
    NotBalancedError,
    Polynomial,
    ZeroLabelingError,
    admissible_lattice,
    admissible_matrix,
    binomial_to_labeling,
    buchberger,
    canonical_order,
    cell_lattice_basis,
    cell_vector,
    dimension,
    ideal_equal,
    inner_minors,
    is_admissible,
    is_balanced,
    is_prime,
    labeling_binomial,
    lattice_ideal,
    matrix_rank,
    normal_form,
    order_sample,
    universal_gb_check,
    vector_binomial,
    vector_labeling,
)

ALPHA_UNIT = {(0, 0): 1, (1, 1): 1, (1, 0): -1, (0, 1): -1}


@pytest.fixture(scope="session")
def labeling_ideal_P5(P5):
    """The (rank 9) admissible-lattice ideal of the frame; computed once."""
    return lattice_ideal(P5, admissible_lattice(P5))


def test_inner_minors_counts(P1, P2, P3, P5):
    assert len(inner_minors(P1)) == 1
    assert len(inner_minors(P2)) == 3
    assert len(inner_minors(P3)) == 5
    assert len(inner_minors(P5)) == 20


def test_inner_minor_unit_square(P1):
    # row-major variables: 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1)
    (g,) = inner_minors(P1).generators
    assert g == Polynomial({(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})


def test_cell_lattice_basis(P1, P2):
    assert cell_lattice_basis(P1).vectors == ((1, -1, -1, 1),)
    assert cell_lattice_basis(P2).rank == 2


def test_admissible_matrix_shapes_and_ranks(P1, P2, P5):
    m1 = admissible_matrix(P1)
    assert (len(m1), len(m1[0])) == (4, 4) and matrix_rank(m1) == 3
    m2 = admissible_matrix(P2)
    assert (len(m2), len(m2[0])) == (5, 6) and matrix_rank(m2) == 4
    m5 = admissible_matrix(P5)
    assert (len(m5), len(m5[0])) == (8, 16) and matrix_rank(m5) == 7


def test_is_admissible(P1, P2):
    assert is_admissible(P1, ALPHA_UNIT)
    assert not is_admissible(P1, {(0, 0): 1})
    combined = [a + b for a, b in zip(cell_vector(P2, (0, 0)), cell_vector(P2, (1, 0)))]
    assert is_admissible(P2, vector_labeling(P2, combined))


def test_labeling_binomial(P1, P2):
    assert labeling_binomial(P1, ALPHA_UNIT) == inner_minors(P1).generators[0]
    doubled = {pt: 2 * v for pt, v in ALPHA_UNIT.items()}
    assert labeling_binomial(P1, doubled) == Polynomial({(2, 0, 0, 2): 1, (0, 2, 2, 0): -1})
    combined = [a + b for a, b in zip(cell_vector(P2, (0, 0)), cell_vector(P2, (1, 0)))]
    f = vector_binomial(combined)
    idx = P2.vertex_index
    expected = [0] * 6
    expected[idx[(0, 0)]], expected[idx[(2, 1)]] = 1, 1
    pos = tuple(expected)
    expected = [0] * 6
    expected[idx[(0, 1)]], expected[idx[(2, 0)]] = 1, 1
    neg = tuple(expected)
    assert f == Polynomial({pos: 1, neg: -1})
    with pytest.raises(ZeroLabelingError):
        labeling_binomial(P1, {})


def test_binomial_to_labeling_round_trip(P2):
    combined = [a + b for a, b in zip(cell_vector(P2, (0, 0)), cell_vector(P2, (1, 0)))]
    alpha = vector_labeling(P2, combined)
    assert binomial_to_labeling(P2, labeling_binomial(P2, alpha)) == alpha
    with pytest.raises(ValueError):
        binomial_to_labeling(P2, Polynomial({(1, 0, 0, 0, 0, 0): 2, (0, 0, 0, 0, 0, 1): -2}))


def test_admissible_lattice_ranks(P1, P2, P5):
    assert admissible_lattice(P1).vectors == ((1, -1, -1, 1),)
    assert admissible_lattice(P2).rank == 2
    assert admissible_lattice(P5).rank == 9


def test_lattice_ideal_unit_square(P1):
    assert ideal_equal(lattice_ideal(P1, cell_lattice_basis(P1)), inner_minors(P1))


def test_lattice_ideal_domino_is_balanced_instance(P2):
    assert ideal_equal(lattice_ideal(P2, cell_lattice_basis(P2)), inner_minors(P2))


def test_is_balanced(P1, P4, P5):
    assert is_balanced(P1).balanced
    report4 = is_balanced(P4)
    assert report4.balanced and report4.shared_gb is not None
    report5 = is_balanced(P5)
    assert not report5.balanced
    assert (report5.adm_rank, report5.ncells) == (9, 8)


def test_is_prime(P1, P2, P4):
    assert is_prime(P1)
    assert is_prime(P2)
    assert is_prime(P4)


def test_frame_is_prime_but_not_balanced(P5):
    # regression for a computed fact: the frame's minor ideal equals its own
    # saturation (hence is prime) even though the frame is not balanced
    assert is_prime(P5)
    assert not is_balanced(P5).balanced


def test_dimension(P1, P2, P4):
    assert dimension(P1) == 3
    assert dimension(P2) == 4
    assert dimension(P4) == 5


def test_containment_chain(fixtures, labeling_ideal_P5):
    # inner minors lie in the cell-lattice ideal, which lies in the
    # admissible-labeling ideal
    for name, P in fixtures.items():
        order = canonical_order(P.num_vertices)
        cell_ideal = lattice_ideal(P, cell_lattice_basis(P))
        gb_cell = buchberger(cell_ideal, order)
        for g in inner_minors(P):
            assert not normal_form(g, gb_cell, order)
        if name == "P5":
            labeling_ideal = labeling_ideal_P5
        else:
            labeling_ideal = lattice_ideal(P, admissible_lattice(P))
        gb_lab = buchberger(labeling_ideal, order)
        for g in cell_ideal:
            assert not normal_form(g, gb_lab, order)


def test_frame_minor_ideal_differs_from_labeling_ideal(P5, labeling_ideal_P5):
    assert not ideal_equal(inner_minors(P5), labeling_ideal_P5)


def test_balanced_fixtures_satisfy_proposition_and_corollary(P1, P2, P3, P4, P6):
    for P in (P1, P2, P3, P4, P6):
        assert is_balanced(P).balanced
        assert ideal_equal(inner_minors(P), lattice_ideal(P, cell_lattice_basis(P)))
        assert is_prime(P)
        assert dimension(P) == P.num_vertices - len(P)


def test_universal_gb_check_unit_square(P1):
    orders = [canonical_order(4), __import__("polyomino_ideals").MonomialOrder("lex", 4)]
    report = universal_gb_check(P1, orders)
    assert report.passed and report.candidates == 1


def test_universal_gb_check_domino(P2):
    report = universal_gb_check(P2, order_sample(P2.num_vertices))
    assert report.passed
    assert report.candidates == 3
    assert all(o.gb_size == 3 for o in report.outcomes)


def test_universal_gb_check_block(P4):
    report = universal_gb_check(P4, [canonical_order(P4.num_vertices)])
    assert report.passed
    assert report.candidates == 15
    assert report.outcomes[0].gb_size == 9


def test_universal_gb_check_requires_balanced(P5):
    with pytest.raises(NotBalancedError):
        universal_gb_check(P5, [canonical_order(P5.num_vertices)])


def test_universal_gb_check_requires_orders(P1):
    with pytest.raises(ValueError):
        universal_gb_check(P1, [])
