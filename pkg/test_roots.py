from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagphase.errors import InadmissibleTypeError, WeightError
from flagphase.roots import (LieType, Root, Weight, build_root_system, cartan_matrix, pairing, rho_plus,
                             root_to_weight, symmetrizer)

ADMISSIBLE = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4), ("D", 5),
    ("E", 6), ("E", 7), ("E", 8),
    ("F", 4),
    ("G", 2),
]

COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 5): 15,
    ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
    ("C", 3): 9, ("C", 4): 16,
    ("D", 4): 12, ("D", 5): 20,
    ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
}


def a2():
    return build_root_system(LieType("A", 2))


def test_a2_data():
    rs = a2()
    assert rs.cartan == ((2, -1), (-1, 2))
    assert [beta.coeffs for beta in rs.positive_roots] == [(1, 0), (0, 1), (1, 1)]
    assert rs.symmetrizer == (1, 1)


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_positive_root_counts(family, rank):
    rs = build_root_system(LieType(family, rank))
    assert len(rs.positive_roots) == COUNTS[(family, rank)]
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_rho_is_sum_of_fundamental_weights(family, rank):
    rs = build_root_system(LieType(family, rank))
    assert rho_plus(rs).coords == (1,) * rank


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_simple_coroots_are_dual_to_fundamental_weights(family, rank):
    rs = build_root_system(LieType(family, rank))
    for i in range(rank):
        for j in range(rank):
            expected = 1 if i == j else 0
            assert pairing(Weight.fundamental(i, rank), Root.simple(j, rank), rs) == expected


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_root_pairings_reproduce_cartan_matrix(family, rank):
    rs = build_root_system(LieType(family, rank))
    for i in range(rank):
        alpha_i = root_to_weight(Root.simple(i, rank), rs)
        for j in range(rank):
            assert pairing(alpha_i, Root.simple(j, rank), rs) == rs.cartan[j][i]


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_every_root_pairs_to_two_with_its_coroot(family, rank):
    rs = build_root_system(LieType(family, rank))
    for beta in rs.positive_roots:
        assert pairing(root_to_weight(beta, rs), beta, rs) == 2


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_symmetrized_cartan_is_symmetric(family, rank):
    c = cartan_matrix(LieType(family, rank))
    d = symmetrizer(c)
    assert min(d) == 1
    for i in range(rank):
        for j in range(rank):
            assert d[i] * c[i][j] == d[j] * c[j][i]


def test_non_simply_laced_conventions():
    g2 = build_root_system(LieType("G", 2))
    assert g2.symmetrizer == (1, 3)
    assert g2.highest_root().coeffs == (3, 2)

    b2 = build_root_system(LieType("B", 2))
    assert b2.symmetrizer == (2, 1)
    assert b2.highest_root().coeffs == (1, 2)

    c3 = build_root_system(LieType("C", 3))
    assert c3.symmetrizer == (1, 1, 2)
    assert c3.highest_root().coeffs == (2, 2, 1)


def test_highest_roots_of_exceptional_types():
    assert build_root_system(LieType("E", 8)).highest_root().coeffs == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build_root_system(LieType("F", 4)).highest_root().coeffs == (2, 3, 4, 2)


def test_a2_pairing_example():
    rs = a2()
    assert pairing(Weight.of(2, 6), Root((1, 1)), rs) == 8
    assert pairing(Weight.of(Fraction(1, 2), 0), Root((1, 1)), rs) == Fraction(1, 2)


@pytest.mark.parametrize("family,rank", [("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("A", 0),
                                         ("H", 3)])
def test_inadmissible_types(family, rank):
    with pytest.raises(InadmissibleTypeError):
        LieType(family, rank)


def test_parse_lie_type():
    assert LieType.parse("e8") == LieType("E", 8)
    with pytest.raises(InadmissibleTypeError):
        LieType.parse("A")


def test_dimension_mismatch():
    with pytest.raises(WeightError):
        pairing(Weight.of(1, 2, 3), Root((1, 0)), a2())
    with pytest.raises(WeightError):
        Root((0, 0))


def test_weight_helpers():
    w = Weight.of(1, -2)
    assert (w + Weight.of(0, 2)).is_dominant()
    assert not w.is_dominant()
    assert (w * Fraction(1, 2)).coords == (Fraction(1, 2), -1)
    assert not (w * Fraction(1, 2)).is_integral()
    assert (-w).coords == (-1, 2)
    assert w.support() == {0, 1}


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@given(st.tuples(fractions, fractions), st.tuples(fractions, fractions), fractions)
def test_pairing_is_linear(lam, mu, t):
    rs = a2()
    for beta in rs.positive_roots:
        lhs = pairing(Weight(lam) * t + Weight(mu), beta, rs)
        assert lhs == t * pairing(Weight(lam), beta, rs) + pairing(Weight(mu), beta, rs)
