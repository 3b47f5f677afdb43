"""Numerical check of the invariant Kähler potentials on the A2 big cell.

On the opposite big cell of SL3/B, with coordinates ``z = (z1, z2, z3)`` of
the lower unipotent ``[[1,0,0],[z1,1,0],[z2,z3,1]]``, the invariant form of
``O(s1) (x) O(s2)`` has potential

    s1 log(1 + |z1|^2 + |z2|^2) + s2 log(1 + |z3|^2 + |z1 z3 - z2|^2)

(the 1/2pi of the curvature normalization is dropped; it cancels in every
ratio). The complex Hessians at the origin of two such potentials must have
generalized eigenvalues equal to the exact coroot-pairing quotients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
import scipy.linalg

from .errors import NumericalError
from .flag import contraction, eigenvalues, kahler_class, make_flag
from .logger import get_logger
from .roots import LieType, build_root_system

logger = get_logger()

DEFAULT_STEP = 1e-4
DEFAULT_TOL = 1e-4
HERMITIAN_TOL = 1e-6

Potential = Callable[[np.ndarray], float]


def potential(s1: int, s2: int, z: Sequence[complex]) -> float:
    z1, z2, z3 = (complex(v) for v in z)
    first = 1.0 + abs(z1) ** 2 + abs(z2) ** 2
    second = 1.0 + abs(z3) ** 2 + abs(z1 * z3 - z2) ** 2
    return float(s1 * np.log(first) + s2 * np.log(second))


@dataclass(frozen=True)
class BigCellPotential:
    """The potential of O(s1) (x) O(s2) as a closure over C^3; zero at the origin."""

    s1: int
    s2: int

    def __call__(self, z: Sequence[complex]) -> float:
        return potential(self.s1, self.s2, z)


def _second_differences(f: Callable[[np.ndarray], float], x0: np.ndarray, h: float) -> np.ndarray:
    """Central second differences of ``f`` over real coordinates, every entry computed independently."""
    dim = x0.size
    f0 = f(x0)
    hess = np.zeros((dim, dim))
    eye = np.eye(dim) * h
    for u in range(dim):
        for v in range(dim):
            if u == v:
                hess[u, v] = (f(x0 + eye[u]) - 2 * f0 + f(x0 - eye[u])) / (h * h)
            else:
                hess[u, v] = (f(x0 + eye[u] + eye[v]) - f(x0 + eye[u] - eye[v])
                              - f(x0 - eye[u] + eye[v]) + f(x0 - eye[u] - eye[v])) / (4 * h * h)
    return hess


def fd_complex_hessian(f: Potential, z0: Sequence[complex], h: float = DEFAULT_STEP) -> np.ndarray:
    """``H_jk = d^2 f / dz_j dzbar_k`` at ``z0`` by central differences.

    With ``z_j = x_j + i y_j``:
    ``H_jk = 1/4 [(D_xj D_xk + D_yj D_yk) f + i (D_xj D_yk - D_yj D_xk) f]``.
    """
    if not h > 0:
        raise NumericalError(f"finite-difference step must be positive, got {h}")
    z0 = np.asarray(z0, dtype=complex)
    n = z0.size
    # real coordinates interleaved as (x1, y1, x2, y2, ...)
    x0 = np.empty(2 * n)
    x0[0::2], x0[1::2] = z0.real, z0.imag

    def real_f(x: np.ndarray) -> float:
        return f(x[0::2] + 1j * x[1::2])

    r = _second_differences(real_f, x0, h)
    if not np.all(np.isfinite(r)):
        raise NumericalError("non-finite value in the finite-difference Hessian")
    xs, ys = slice(0, None, 2), slice(1, None, 2)
    hess = 0.25 * ((r[xs, xs] + r[ys, ys]) + 1j * (r[xs, ys] - r[ys, xs]))
    skew = np.max(np.abs(hess - hess.conj().T))
    if skew > HERMITIAN_TOL:
        raise NumericalError(f"finite-difference Hessian is not Hermitian (deviation {skew:.3e})")
    logger.debug(f"complex Hessian at {z0.tolist()} with step {h}: Hermitian deviation {skew:.3e}")
    return 0.5 * (hess + hess.conj().T)


@dataclass(frozen=True)
class EigenCheck:
    s: tuple[int, int]
    omega: tuple[int, int]
    numeric: tuple[float, ...]
    expected: tuple[Fraction, ...]
    max_error: float
    trace_numeric: float
    trace_exact: Fraction
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol and abs(self.trace_numeric - float(self.trace_exact)) <= self.tol


def exact_ratios(s1: int, s2: int, omega: tuple[int, int] = (2, 2)) -> tuple[tuple[Fraction, ...], Fraction]:
    """Sorted exact eigenvalues of omega^-1 o chi and their sum on the A2 full flag."""
    fv = make_flag(build_root_system(LieType("A", 2)))
    kc = kahler_class(fv, omega)
    xi = fv.weight_from_coeffs((s1, s2))
    return tuple(sorted(eigenvalues(kc, xi).values())), contraction(kc, xi)


def eigen_ratio_check(s1: int, s2: int, *, omega: tuple[int, int] = (2, 2), h: float = DEFAULT_STEP,
                      tol: float = DEFAULT_TOL) -> EigenCheck:
    """Generalized eigenvalues of ``(H_omega, H_chi)`` at the origin against the exact quotients."""
    origin = np.zeros(3, dtype=complex)
    h_omega = fd_complex_hessian(BigCellPotential(*omega), origin, h)
    h_chi = fd_complex_hessian(BigCellPotential(s1, s2), origin, h)
    try:
        numeric = scipy.linalg.eigh(h_chi, h_omega, eigvals_only=True)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"H_omega is numerically singular: {e}") from e
    numeric = np.sort(np.real(numeric))
    expected, trace_exact = exact_ratios(s1, s2, omega)
    max_error = float(np.max(np.abs(numeric - np.array([float(q) for q in expected]))))
    trace_numeric = float(np.real(np.trace(np.linalg.solve(h_omega, h_chi))))
    check = EigenCheck(s=(s1, s2), omega=tuple(omega), numeric=tuple(float(x) for x in numeric),
                       expected=expected, max_error=max_error, trace_numeric=trace_numeric,
                       trace_exact=trace_exact, tol=tol)
    logger.info(f"big-cell check {check.s}: max error {max_error:.2e}, passed={check.passed}")
    return check


@dataclass(frozen=True)
class SweepResult:
    checks: tuple[EigenCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst_error(self) -> float:
        return max((c.max_error for c in self.checks), default=0.0)


def sweep(*, seed: int = 0, count: int = 50, low: int = -10, high: int = 10, h: float = DEFAULT_STEP,
          tol: float = DEFAULT_TOL) -> SweepResult:
    """``eigen_ratio_check`` over ``count`` random integer pairs drawn with a seeded generator."""
    rng = np.random.default_rng(seed)
    pairs = rng.integers(low, high, size=(count, 2), endpoint=True)
    return SweepResult(tuple(eigen_ratio_check(int(a), int(b), h=h, tol=tol) for a, b in pairs))
