import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flagphase.bundles import (InstantonType, Stability, classify, enumerate_D_m, enumerate_L_target, h0_end,
                               h0_line, lattice, sum_bundle, sum_central_charge, sum_phase, sweep_charge_pairs,
                               unstable_family, weyl_dim, z_critical)
from flagphase.errors import BundleError, WeightError
from flagphase.flag import degree, kahler_class, line_bundle, make_flag
from flagphase.gaussian import GaussianRational
from flagphase.phase import ExactPhase, charges_aligned
from flagphase.roots import LieType, Weight, build_root_system

FV = make_flag(build_root_system(LieType("A", 2)))
OMEGA0 = kahler_class(FV, (2, 2))

E1 = [(1, -1), (2, -2)]
E2 = [(2, -1), (3, -2)]
E3 = [(2, 6), (3, 4)]


@pytest.mark.parametrize("summands,label,stability", [
    (E1, InstantonType.TYPE_I, Stability.POLYSTABLE),
    (E2, InstantonType.TYPE_II, Stability.POLYSTABLE),
    (E3, InstantonType.TYPE_III, Stability.UNSTABLE),
    ([(0, 0), (2, 6)], InstantonType.NEITHER, Stability.UNSTABLE),
    ([(5, -7)], InstantonType.TYPE_I, Stability.STABLE),
])
def test_classification(summands, label, stability):
    result = classify(OMEGA0, sum_bundle(FV, summands))
    assert result.type_label is label
    assert result.stability is stability


def test_classification_details():
    e2 = classify(OMEGA0, sum_bundle(FV, E2))
    assert e2.hym and not e2.dhym
    assert e2.contractions == (Fraction(3, 4), Fraction(3, 4))
    assert e2.slopes == (12, 12)

    e3 = classify(OMEGA0, sum_bundle(FV, E3))
    assert e3.dhym and not e3.hym
    assert e3.contractions == (6, Fraction(21, 4))
    assert e3.slopes == (96, 84)
    assert all(p == ExactPhase.pi() for p in e3.phases)


def test_sum_phase():
    assert sum_phase(OMEGA0, sum_bundle(FV, E1)) == GaussianRational(1)
    assert sum_phase(OMEGA0, sum_bundle(FV, E2)) == GaussianRational(15, 8)
    assert sum_phase(OMEGA0, sum_bundle(FV, E3)) == GaussianRational(-1)


def test_sum_phase_is_undefined_when_the_trace_vanishes(caplog):
    bundle = sum_bundle(FV, [(0, 0)] * 10 + [(2, 6)])
    assert sum_phase(OMEGA0, bundle) is None
    assert "undefined" in caplog.text
    assert z_critical(OMEGA0, bundle) is None


def test_sum_central_charge():
    z = sum_central_charge(OMEGA0, sum_bundle(FV, E3))
    assert z.value == GaussianRational(0, 145)


def test_z_critical():
    assert z_critical(OMEGA0, sum_bundle(FV, E1)) is True
    assert z_critical(OMEGA0, sum_bundle(FV, E2)) is False
    assert z_critical(OMEGA0, sum_bundle(FV, E3)) is True


def test_contraction_level_sets():
    assert [line.coeffs for line in enumerate_D_m(OMEGA0, Fraction(3, 4), 5)] == [(s, 1 - s) for s in range(-4, 6)]
    assert [line.coeffs for line in enumerate_D_m(OMEGA0, 0, 3)] == [(s, -s) for s in range(-3, 4)]
    assert enumerate_D_m(OMEGA0, Fraction(1, 3), 10) == []


def test_phase_level_sets():
    found = [line.coeffs for line in enumerate_L_target(OMEGA0, ExactPhase.pi(), 100)]
    assert found == [(1, 12), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)]
    assert all(s1 * s2 == 12 for s1, s2 in found)
    zero = [line.coeffs for line in enumerate_L_target(OMEGA0, ExactPhase.zero(), 3)]
    assert zero == [(s, -s) for s in range(-3, 4)]
    assert enumerate_L_target(OMEGA0, ExactPhase(5, GaussianRational(1)), 4) == []


def test_lattice_bound():
    assert len(list(lattice(FV, 2))) == 25
    with pytest.raises(WeightError):
        list(lattice(FV, 0))


def test_weyl_dimensions():
    rs = FV.rs
    assert weyl_dim(rs, Weight.of(1, 0)) == 3
    assert weyl_dim(rs, Weight.of(0, 1)) == 3
    assert weyl_dim(rs, Weight.of(1, 1)) == 8
    assert weyl_dim(rs, Weight.of(0, 0)) == 1
    g2 = build_root_system(LieType("G", 2))
    assert weyl_dim(g2, Weight.of(1, 0)) == 7
    assert weyl_dim(g2, Weight.of(0, 1)) == 14
    with pytest.raises(WeightError):
        weyl_dim(rs, Weight.of(-1, 0))
    assert h0_line(FV, Weight.of(-1, 2)) == 0


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_unstable_family(r):
    bundle = unstable_family(FV, r)
    assert bundle.rank == r
    result = classify(OMEGA0, bundle)
    assert result.stability is Stability.UNSTABLE
    assert result.dhym
    assert h0_end(bundle) == 1 + (r - 1) ** 2
    assert sum_phase(OMEGA0, bundle) == GaussianRational(-1)
    assert z_critical(OMEGA0, bundle) is True


def test_h0_end():
    assert h0_end(sum_bundle(FV, E1)) == 2
    assert h0_end(sum_bundle(FV, [(4, 4)])) == 1
    p2 = make_flag(build_root_system(LieType("A", 2)), {1})
    with pytest.raises(BundleError):
        h0_end(sum_bundle(p2, [(1,), (2,)]))


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=5))
def test_h0_end_is_at_least_the_rank(summands):
    bundle = sum_bundle(FV, summands)
    assert h0_end(bundle) >= bundle.rank


def test_unstable_family_errors():
    with pytest.raises(BundleError):
        unstable_family(FV, 1)
    with pytest.raises(BundleError):
        unstable_family(make_flag(build_root_system(LieType("A", 2)), {1}), 2)


def test_bad_sums():
    with pytest.raises(BundleError):
        sum_bundle(FV, [])
    p2 = make_flag(build_root_system(LieType("A", 2)), {1})
    with pytest.raises(BundleError):
        sum_bundle(FV, [line_bundle(p2, (1,))])


def test_charge_pair_sweep():
    result = sweep_charge_pairs(OMEGA0, 4)
    assert result.pairs == 81 ** 2
    assert result.consistent
    assert (line_bundle(FV, (0, 0)), line_bundle(FV, (3, 4))) in result.anti_aligned


def test_dhym_matches_aligned_charges():
    lines = [line_bundle(FV, c) for c in itertools.product(range(-3, 4), repeat=2)]
    for e, f in itertools.product(lines, repeat=2):
        assert classify(OMEGA0, sum_bundle(FV, [e, f])).dhym == charges_aligned(OMEGA0, e, f)


coeff = st.integers(min_value=-8, max_value=8)


@given(st.lists(st.tuples(coeff, coeff), min_size=2, max_size=4))
def test_polystable_iff_equal_degrees(summands):
    bundle = sum_bundle(FV, summands)
    degrees = {degree(OMEGA0, line) for line in bundle.summands}
    assert (classify(OMEGA0, bundle).stability is Stability.POLYSTABLE) == (len(degrees) == 1)
