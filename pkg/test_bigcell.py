import math
from fractions import Fraction

import numpy as np
import pytest

from flagphase.bigcell import (BigCellPotential, eigen_ratio_check, exact_ratios, fd_complex_hessian, potential,
                               sweep)
from flagphase.errors import NumericalError

ORIGIN = np.zeros(3, dtype=complex)


def test_potential_values():
    assert potential(3, 5, (0, 0, 0)) == 0.0
    assert potential(1, 0, (1, 1j, 0)) == pytest.approx(math.log(3))
    assert potential(0, 1, (1, 1, 1)) == pytest.approx(math.log(2))
    assert BigCellPotential(2, 6)((0.1, 0.2j, -0.3)) == potential(2, 6, (0.1, 0.2j, -0.3))


def test_hessian_of_a_quadratic_away_from_the_origin():
    z0 = np.array([0.3 + 0.2j, -0.1j, 0.5])
    hess = fd_complex_hessian(lambda z: abs(z[0]) ** 2, z0, h=1e-3)
    np.testing.assert_allclose(hess, np.diag([1, 0, 0]), atol=1e-8)


def test_hessian_keeps_complex_off_diagonal_terms():
    # |z1 + i z2|^2 has H_12 = -i
    hess = fd_complex_hessian(lambda z: abs(z[0] + 1j * z[1]) ** 2, np.zeros(2, dtype=complex), h=1e-3)
    np.testing.assert_allclose(hess, np.array([[1, -1j], [1j, 1]]), atol=1e-8)


def test_hessians_of_the_generating_potentials():
    np.testing.assert_allclose(fd_complex_hessian(BigCellPotential(1, 0), ORIGIN), np.diag([1, 1, 0]), atol=1e-6)
    np.testing.assert_allclose(fd_complex_hessian(BigCellPotential(0, 1), ORIGIN), np.diag([0, 1, 1]), atol=1e-6)


@pytest.mark.parametrize("s,expected,trace", [
    ((2, 6), [1, 2, 3], 6),
    ((2, 2), [1, 1, 1], 3),
    ((0, 0), [0, 0, 0], 0),
    ((3, 4), [1.5, 2, 1.75], 5.25),
])
def test_eigen_ratios(s, expected, trace):
    check = eigen_ratio_check(*s)
    assert check.passed
    np.testing.assert_allclose(check.numeric, sorted(expected), atol=1e-4)
    assert check.trace_exact == trace
    assert check.trace_numeric == pytest.approx(trace, abs=1e-4)


def test_exact_ratios_for_another_class():
    ratios, trace = exact_ratios(3, 4, omega=(1, 3))
    assert ratios == (Fraction(4, 3), Fraction(7, 4), 3)
    assert trace == Fraction(73, 12)
    assert eigen_ratio_check(3, 4, omega=(1, 3)).passed


def test_tolerance_is_respected():
    check = eigen_ratio_check(2, 6, tol=1e-30)
    assert not check.passed


def test_seeded_sweep():
    result = sweep(seed=0, count=50)
    assert len(result.checks) == 50
    assert result.passed
    assert result.worst_error < 1e-4
    again = sweep(seed=0, count=50)
    assert [c.s for c in again.checks] == [c.s for c in result.checks]


def test_bad_inputs():
    with pytest.raises(NumericalError):
        fd_complex_hessian(lambda z: float("nan"), ORIGIN)
    with pytest.raises(NumericalError):
        fd_complex_hessian(BigCellPotential(1, 1), ORIGIN, h=0)
    with pytest.raises(NumericalError):
        eigen_ratio_check(1, 1, omega=(0, 0))
