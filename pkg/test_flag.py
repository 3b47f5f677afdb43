from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from flagphase.errors import BundleError, KahlerConeError, WeightError
from flagphase.flag import (anticanonical_bundle, anticanonical_volume, contraction, degree, eigenvalues,
                            first_chern_weight, generator_contractions, hym_constant, kahler_class,
                            kahler_einstein_class, line_bundle, make_flag, omega_pairings, slope, volume)
from flagphase.bundles import sum_bundle
from flagphase.roots import LieType, Root, Weight, build_root_system

coeff = st.integers(min_value=-60, max_value=60)
positive = st.fractions(min_value=Fraction(1, 8), max_value=20, max_denominator=8)


@pytest.fixture(scope="module")
def full_a2():
    return make_flag(build_root_system(LieType("A", 2)))


@pytest.fixture(scope="module")
def omega0(full_a2):
    return kahler_class(full_a2, (2, 2))


def test_full_flag_data(full_a2):
    assert full_a2.dim_c == 3
    assert [beta.coeffs for beta in full_a2.phi_I_plus] == [(1, 0), (0, 1), (1, 1)]
    assert full_a2.delta_P == Weight.of(2, 2)
    assert full_a2.anticanonical_coeffs == (2, 2)
    assert full_a2.picard_indices == (0, 1)


def test_volume_of_omega0(omega0):
    assert volume(omega0) == 8
    assert list(omega_pairings(omega0).values()) == [2, 2, 4]


def test_kahler_einstein_class(full_a2, omega0):
    assert kahler_einstein_class(full_a2) == omega0
    assert anticanonical_volume(full_a2) == 8
    assert anticanonical_bundle(full_a2).coeffs == (2, 2)


def test_eigenvalues_example(full_a2, omega0):
    q = eigenvalues(omega0, Weight.of(2, 6))
    assert q == {Root((1, 0)): 1, Root((0, 1)): 3, Root((1, 1)): 2}
    assert contraction(omega0, Weight.of(2, 6)) == 6
    assert contraction(omega0, Weight.of(3, 4)) == Fraction(21, 4)
    assert contraction(omega0, Weight.of(2, -1)) == Fraction(3, 4)


@given(coeff, coeff)
def test_contraction_law(s1, s2):
    fv = make_flag(build_root_system(LieType("A", 2)))
    kc = kahler_class(fv, (2, 2))
    assert contraction(kc, Weight.of(s1, s2)) == Fraction(3, 4) * (s1 + s2)


def test_generator_contractions(omega0):
    assert generator_contractions(omega0) == (Fraction(3, 4), Fraction(3, 4))


def test_degrees_and_slopes(full_a2, omega0):
    a, b = line_bundle(full_a2, (2, -1)), line_bundle(full_a2, (3, -2))
    assert degree(omega0, a) == 12
    assert degree(omega0, b) == 12
    e = sum_bundle(full_a2, [a, b])
    assert degree(omega0, e) == 24
    assert slope(omega0, e) == 12
    assert first_chern_weight(e) == Weight.of(5, -3)


@given(coeff, coeff)
def test_hym_constant_from_degree(s1, s2):
    fv = make_flag(build_root_system(LieType("A", 2)))
    kc = kahler_class(fv, (2, 2))
    line = line_bundle(fv, (s1, s2))
    n = fv.dim_c
    assert hym_constant(kc, line) == n * degree(kc, line) / (factorial(n) * volume(kc) * line.rank)


@given(positive, positive, positive)
def test_volume_is_homogeneous(c1, c2, t):
    fv = make_flag(build_root_system(LieType("A", 2)))
    kc = kahler_class(fv, (c1, c2))
    assert volume(kc.scaled(t)) == t ** fv.dim_c * volume(kc)


@given(st.lists(st.tuples(coeff, coeff), min_size=1, max_size=6))
def test_degree_is_additive(summands):
    fv = make_flag(build_root_system(LieType("A", 2)))
    kc = kahler_class(fv, (2, 3))
    bundle = sum_bundle(fv, summands)
    assert degree(kc, bundle) == sum(degree(kc, line) for line in bundle.summands)


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
@given(data=st.data())
def test_eigenvalues_are_linear_in_xi(family, rank, data):
    fv = make_flag(build_root_system(LieType(family, rank)))
    kc = kahler_class(fv, data.draw(st.lists(positive, min_size=rank, max_size=rank)))
    rational = st.fractions(min_value=-50, max_value=50, max_denominator=6)
    x = fv.weight_from_coeffs(data.draw(st.lists(rational, min_size=rank, max_size=rank)))
    y = fv.weight_from_coeffs(data.draw(st.lists(rational, min_size=rank, max_size=rank)))
    t = data.draw(rational)
    combined = eigenvalues(kc, x * t + y)
    ex, ey = eigenvalues(kc, x), eigenvalues(kc, y)
    assert combined == {beta: t * ex[beta] + ey[beta] for beta in ex}


def test_projective_plane():
    # I = {alpha_2}: SL3/P = P^2
    fv = make_flag(build_root_system(LieType("A", 2)), {1})
    assert fv.dim_c == 2
    assert [beta.coeffs for beta in fv.phi_I_plus] == [(1, 0), (1, 1)]
    assert fv.anticanonical_coeffs == (3,)
    assert volume(kahler_class(fv, (1,))) == Fraction(1, 2)
    assert anticanonical_volume(fv) == Fraction(9, 2)
    hyperplane = line_bundle(fv, (1,))
    assert degree(kahler_class(fv, (1,)), hyperplane) == 1


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
def test_full_flag_anticanonical_class_is_twice_rho(family, rank):
    fv = make_flag(build_root_system(LieType(family, rank)))
    assert fv.anticanonical_coeffs == (2,) * rank
    assert fv.dim_c == len(fv.rs.positive_roots)


def test_point_variety(caplog):
    fv = make_flag(build_root_system(LieType("A", 1)), {0})
    assert fv.is_point
    assert "point" in caplog.text
    kc = kahler_class(fv, ())
    assert volume(kc) == 1
    assert degree(kc, line_bundle(fv, ())) == 0


def test_kahler_cone_is_enforced(full_a2):
    with pytest.raises(KahlerConeError):
        kahler_class(full_a2, (0, 2))
    with pytest.raises(KahlerConeError):
        kahler_class(full_a2, (-1, 2))
    with pytest.raises(WeightError):
        kahler_class(full_a2, (2, 2, 2))


def test_support_is_checked():
    fv = make_flag(build_root_system(LieType("A", 2)), {1})
    kc = kahler_class(fv, (1,))
    with pytest.raises(WeightError):
        contraction(kc, Weight.of(1, 1))
    with pytest.raises(WeightError):
        kahler_class(fv, {1: 2})
    assert kahler_class(fv, {0: 3}).coeffs == (3,)


def test_parabolic_out_of_range():
    with pytest.raises(WeightError):
        make_flag(build_root_system(LieType("A", 2)), {2})


def test_line_bundle_algebra(full_a2):
    a = line_bundle(full_a2, (2, 6))
    b = line_bundle(full_a2, (3, 4))
    assert (a * b).coeffs == (5, 10)
    assert (a * a.dual()).coeffs == (0, 0)
    with pytest.raises(WeightError):
        line_bundle(full_a2, (Fraction(1, 2), 0))


def test_mixed_varieties_are_rejected(full_a2, omega0):
    p2 = make_flag(build_root_system(LieType("A", 2)), {1})
    with pytest.raises(BundleError):
        degree(omega0, line_bundle(p2, (1,)))
