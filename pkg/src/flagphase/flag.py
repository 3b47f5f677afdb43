"""Flag varieties X_P = G/P_I and their invariant Kähler geometry.

Every invariant quantity here factors through coroot pairings: the
invariant (1,1)-forms are simultaneously diagonal at the base point with
eigen-directions indexed by ``phi_I_plus``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Mapping, Protocol, Sequence, Union

from .errors import KahlerConeError, WeightError, BundleError
from .logger import get_logger
from .roots import Root, RootSystem, Weight, pairing, rho_plus, sum_of_roots

logger = get_logger()

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FlagVariety:
    rs: RootSystem
    parabolic: frozenset[int]
    phi_I_plus: tuple[Root, ...]
    delta_P: Weight
    # Delta \ I, ascending, 0-based; these index the Picard lattice
    picard_indices: tuple[int, ...]
    anticanonical_coeffs: tuple[int, ...]

    @property
    def dim_c(self) -> int:
        return len(self.phi_I_plus)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def picard_rank(self) -> int:
        return len(self.picard_indices)

    @property
    def is_point(self) -> bool:
        return self.dim_c == 0

    @property
    def is_full_flag(self) -> bool:
        return not self.parabolic

    def anticanonical_map(self) -> dict[int, int]:
        return dict(zip(self.picard_indices, self.anticanonical_coeffs))

    def weight_from_coeffs(self, coeffs: Sequence[Scalar]) -> Weight:
        if len(coeffs) != self.picard_rank:
            raise WeightError(
                f"expected {self.picard_rank} coefficients (one per simple root outside I), got {len(coeffs)}")
        coords = [Fraction(0)] * self.rank
        for i, c in zip(self.picard_indices, coeffs):
            coords[i] = Fraction(c)
        return Weight(tuple(coords))

    def check_support(self, xi: Weight) -> None:
        if xi.rank != self.rank:
            raise WeightError(f"weight {xi} has rank {xi.rank}, flag variety has rank {self.rank}")
        bad = sorted(i + 1 for i in xi.support() & self.parabolic)
        if bad:
            raise WeightError(f"weight {xi} is not supported on Delta\\I: nonzero on simple roots {bad} in I")

    def __str__(self) -> str:
        parabolic = ",".join(str(i + 1) for i in sorted(self.parabolic))
        return f"X({self.rs.lie_type}; I={{{parabolic}}})"


def make_flag(rs: RootSystem, parabolic: Iterable[int] = ()) -> FlagVariety:
    """Build X_P from a 0-based subset ``parabolic`` of the simple roots."""
    I = frozenset(parabolic)
    if any(not 0 <= i < rs.rank for i in I):
        raise WeightError(f"parabolic set {sorted(i + 1 for i in I)} is not a subset of 1..{rs.rank}")
    phi = tuple(beta for beta in rs.positive_roots if any(beta.coeffs[j] for j in range(rs.rank) if j not in I))
    delta = sum_of_roots(phi, rs)
    picard = tuple(i for i in range(rs.rank) if i not in I)
    ell = []
    for i in picard:
        value = pairing(delta, Root.simple(i, rs.rank), rs)
        if value <= 0 or value.denominator != 1:
            raise WeightError(f"anticanonical coefficient at alpha_{i + 1} is {value}, expected a positive integer")
        ell.append(int(value))
    fv = FlagVariety(rs=rs, parabolic=I, phi_I_plus=phi, delta_P=delta, picard_indices=picard,
                     anticanonical_coeffs=tuple(ell))
    if fv.is_point:
        logger.warning(f"{fv} is a point: empty products are 1 and empty sums are 0")
    return fv


@dataclass(frozen=True)
class KahlerClass:
    fv: FlagVariety
    coeffs: tuple[Fraction, ...]

    @property
    def weight(self) -> Weight:
        return self.fv.weight_from_coeffs(self.coeffs)

    def scaled(self, t: Scalar) -> "KahlerClass":
        return kahler_class(self.fv, [c * t for c in self.coeffs])

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class LineBundle:
    fv: FlagVariety
    coeffs: tuple[int, ...]

    @property
    def weight(self) -> Weight:
        return self.fv.weight_from_coeffs(self.coeffs)

    @property
    def rank(self) -> int:
        return 1

    @property
    def chern_weight(self) -> Weight:
        return self.weight

    def dual(self) -> "LineBundle":
        return LineBundle(self.fv, tuple(-s for s in self.coeffs))

    def __mul__(self, other: "LineBundle") -> "LineBundle":
        """Tensor product."""
        if not isinstance(other, LineBundle):
            return NotImplemented
        if other.fv != self.fv:
            raise BundleError("tensor product of line bundles on different flag varieties")
        return LineBundle(self.fv, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.coeffs) + ")"


class Bundle(Protocol):
    """Anything with a first-Chern weight and a rank: line bundles and split sums."""

    fv: FlagVariety

    @property
    def rank(self) -> int: ...

    @property
    def chern_weight(self) -> Weight: ...


def _coeff_sequence(fv: FlagVariety, coeffs: Union[Sequence[Scalar], Mapping[int, Scalar]]) -> list[Scalar]:
    if isinstance(coeffs, Mapping):
        unknown = sorted(i + 1 for i in coeffs if i not in fv.picard_indices)
        if unknown:
            raise WeightError(f"coefficients given for simple roots {unknown} inside I")
        return [coeffs.get(i, 0) for i in fv.picard_indices]
    return list(coeffs)


def kahler_class(fv: FlagVariety, coeffs: Union[Sequence[Scalar], Mapping[int, Scalar]]) -> KahlerClass:
    """Validated Kähler class: one strictly positive coefficient per alpha in Delta\\I."""
    values = [Fraction(c) for c in _coeff_sequence(fv, coeffs)]
    if len(values) != fv.picard_rank:
        raise WeightError(f"expected {fv.picard_rank} Kahler coefficients, got {len(values)}")
    bad = [str(c) for c in values if c <= 0]
    if bad:
        raise KahlerConeError(f"Kahler coefficients must be strictly positive, got {', '.join(bad)}")
    return KahlerClass(fv, tuple(values))


def line_bundle(fv: FlagVariety, coeffs: Union[Sequence[Scalar], Mapping[int, Scalar]]) -> LineBundle:
    values = _coeff_sequence(fv, coeffs)
    if len(values) != fv.picard_rank:
        raise WeightError(f"expected {fv.picard_rank} line bundle coefficients, got {len(values)}")
    ints = []
    for s in values:
        if Fraction(s).denominator != 1:
            raise WeightError(f"line bundle coefficients must be integers, got {s}")
        ints.append(int(s))
    return LineBundle(fv, tuple(ints))


def anticanonical_bundle(fv: FlagVariety) -> LineBundle:
    return LineBundle(fv, fv.anticanonical_coeffs)


def kahler_einstein_class(fv: FlagVariety) -> KahlerClass:
    """The class c_1(X_P), represented by the invariant Kähler-Einstein metric."""
    return KahlerClass(fv, tuple(Fraction(l) for l in fv.anticanonical_coeffs))


def first_chern_weight(bundle: Bundle) -> Weight:
    return bundle.chern_weight


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------

def omega_pairings(kc: KahlerClass) -> dict[Root, Fraction]:
    """``a_beta = <lambda([omega]), beta^vee>`` for beta in Phi_I^+; all positive."""
    lam = kc.weight
    rs = kc.fv.rs
    return {beta: pairing(lam, beta, rs) for beta in kc.fv.phi_I_plus}


def eigenvalues(kc: KahlerClass, xi: Weight) -> dict[Root, Fraction]:
    """Eigenvalues ``q_beta`` of omega^-1 o chi for the invariant representative chi of xi."""
    kc.fv.check_support(xi)
    rs = kc.fv.rs
    return {beta: pairing(xi, beta, rs) / a for beta, a in omega_pairings(kc).items()}


def contraction(kc: KahlerClass, xi: Weight) -> Fraction:
    """``Lambda_omega(chi) = tr(omega^-1 o chi)``."""
    return sum(eigenvalues(kc, xi).values(), Fraction(0))


def generator_contractions(kc: KahlerClass) -> tuple[Fraction, ...]:
    """``Lambda_omega(Omega_alpha)`` for alpha in Delta\\I, in Picard order.

    Contraction is linear, so ``Lambda(chi_L) = sum_alpha s_alpha Lambda(Omega_alpha)``.
    """
    rank = kc.fv.rank
    return tuple(contraction(kc, Weight.fundamental(i, rank)) for i in kc.fv.picard_indices)


def volume(kc: KahlerClass) -> Fraction:
    rs = kc.fv.rs
    rho = rho_plus(rs)
    return prod((a / pairing(rho, beta, rs) for beta, a in omega_pairings(kc).items()), start=Fraction(1))


def anticanonical_volume(fv: FlagVariety) -> Fraction:
    return volume(kahler_einstein_class(fv))


def degree(kc: KahlerClass, bundle: Bundle) -> Fraction:
    """``deg_omega(E) = (n-1)! * Lambda_omega(c_1(E)) * Vol(X_P, omega)``."""
    if bundle.fv != kc.fv:
        raise BundleError("bundle and Kahler class live on different flag varieties")
    n = kc.fv.dim_c
    if n == 0:
        return Fraction(0)
    return factorial(n - 1) * contraction(kc, bundle.chern_weight) * volume(kc)


def slope(kc: KahlerClass, bundle: Bundle) -> Fraction:
    return degree(kc, bundle) / bundle.rank


def hym_constant(kc: KahlerClass, bundle: LineBundle) -> Fraction:
    """The constant ``sqrt(-1) Lambda_omega(F) / 2pi`` of the invariant Chern connection."""
    return contraction(kc, bundle.weight)
