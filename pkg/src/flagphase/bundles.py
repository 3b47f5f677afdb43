"""Split bundles, level sets of the Picard lattice and instanton labels.

A Whitney sum ``L_1 + ... + L_r`` of line bundles carries the diagonal
Chern connection built from the invariant Hermitian metrics on the
summands. Its curvature is ``diag(chi_1, ..., chi_r)``, so HYM / dHYM /
Z-critical conditions reduce to comparisons between summands.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import prod
from typing import Iterable, Optional, Sequence

from .errors import BundleError, WeightError
from .flag import (FlagVariety, KahlerClass, LineBundle, contraction, degree, generator_contractions,
                   line_bundle)
from .gaussian import GaussianRational
from .logger import get_logger
from .phase import (CentralCharge, ExactPhase, PhaseTable, central_charge, charge_factors, charge_integral,
                    charge_prefactor, line_phase, normalize_ray, phases_equal_mod_2pi)
from .roots import RootSystem, Weight, pairing, rho_plus

logger = get_logger()


class InstantonType(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    NEITHER = "Neither"


class Stability(str, Enum):
    STABLE = "Stable"
    POLYSTABLE = "Polystable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class SumBundle:
    fv: FlagVariety
    summands: tuple[LineBundle, ...]

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def chern_weight(self) -> Weight:
        total = Weight.zero(self.fv.rank)
        for line in self.summands:
            total = total + line.weight
        return total

    def __str__(self) -> str:
        return " + ".join(str(line) for line in self.summands)


def sum_bundle(fv: FlagVariety, summands: Iterable[LineBundle | Sequence[int]]) -> SumBundle:
    lines = []
    for item in summands:
        line = item if isinstance(item, LineBundle) else line_bundle(fv, item)
        if line.fv != fv:
            raise BundleError(f"summand {line} lives on a different flag variety")
        lines.append(line)
    if not lines:
        raise BundleError("a Whitney sum needs at least one summand")
    return SumBundle(fv, tuple(lines))


@dataclass(frozen=True)
class InstantonClassification:
    hym: bool
    dhym: bool
    type_label: InstantonType
    stability: Stability
    contractions: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]
    phases: tuple[ExactPhase, ...]


def _label(hym: bool, dhym: bool) -> InstantonType:
    if hym and dhym:
        return InstantonType.TYPE_I
    if hym:
        return InstantonType.TYPE_II
    if dhym:
        return InstantonType.TYPE_III
    return InstantonType.NEITHER


def classify(kc: KahlerClass, bundle: SumBundle) -> InstantonClassification:
    """HYM / dHYM behaviour and slope stability of the diagonal connection on ``bundle``.

    * hym: every summand has the same contraction ``Lambda_omega(chi_l)``, so
      ``sqrt(-1) Lambda(F) = c 1_E``.
    * dhym: every summand has the same Lagrangian phase mod 2pi, so
      ``Im(e^{-i Theta}(omega 1_E - F/2pi)^n)`` vanishes entry by entry.
    * stability: a split bundle is polystable iff all summand slopes agree;
      otherwise the summand of largest slope destabilizes it.
    """
    if bundle.fv != kc.fv:
        raise BundleError("bundle and Kahler class live on different flag varieties")
    if not bundle.summands:
        raise BundleError("cannot classify an empty sum")
    contractions = tuple(contraction(kc, line.weight) for line in bundle.summands)
    slopes = tuple(degree(kc, line) for line in bundle.summands)
    phases = tuple(line_phase(kc, line) for line in bundle.summands)
    hym = len(set(contractions)) == 1
    dhym = all(phases_equal_mod_2pi(phases[0], p) for p in phases[1:])
    if bundle.rank == 1:
        stability = Stability.STABLE
    elif len(set(slopes)) == 1:
        stability = Stability.POLYSTABLE
    else:
        stability = Stability.UNSTABLE
    label = _label(hym, dhym)
    logger.info(f"{bundle}: {label.value}, {stability.value}")
    return InstantonClassification(hym=hym, dhym=dhym, type_label=label, stability=stability,
                                   contractions=contractions, slopes=slopes, phases=phases)


def sum_integral(kc: KahlerClass, bundle: SumBundle) -> GaussianRational:
    """``(1/n!) int tr(omega 1_E - F/2pi)^n`` for the diagonal connection."""
    return sum((charge_integral(kc, line.weight) for line in bundle.summands), GaussianRational(0))


def sum_phase(kc: KahlerClass, bundle: SumBundle) -> Optional[GaussianRational]:
    """Ray of ``Theta_hat(E)`` mod 2pi; ``None`` when the trace integral vanishes."""
    total = sum_integral(kc, bundle)
    if total.is_zero():
        logger.warning(f"{bundle}: trace integral is zero, Theta_hat undefined")
        return None
    return normalize_ray(total)


def sum_central_charge(kc: KahlerClass, bundle: SumBundle) -> CentralCharge:
    """``Z(E) = sum_l Z(L_l)``."""
    charges = [central_charge(kc, line) for line in bundle.summands]
    total = charges[0]
    for z in charges[1:]:
        total = total + z
    return total


def z_critical(kc: KahlerClass, bundle: SumBundle) -> Optional[bool]:
    """Z-critical equation for the diagonal connection; ``None`` when ``Z(E) == 0``.

    By the binomial identity ``Z_omega(E, nabla) = -((-i)^n/n!)(omega 1_E - F/2pi)^n``
    and the l-th diagonal entry is a positive multiple of
    ``-(-i)^n prod_beta (a_beta + i b_beta^(l)) omega^n``. The equation holds iff
    every entry is real after rotating by ``conj Z(E)``.
    """
    z = sum_central_charge(kc, bundle).value
    if z.is_zero():
        return None
    prefactor = charge_prefactor(kc.fv.dim_c)
    for line in bundle.summands:
        entry = prefactor * prod(charge_factors(kc, line.weight), start=GaussianRational.one())
        if (z.conjugate() * entry).im != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Level sets of the Picard lattice
# ---------------------------------------------------------------------------

def lattice(fv: FlagVariety, bound: int) -> Iterable[tuple[int, ...]]:
    """All coefficient vectors with every ``|s_alpha| <= bound``, lexicographically."""
    if bound < 1:
        raise WeightError(f"enumeration bound must be at least 1, got {bound}")
    return itertools.product(range(-bound, bound + 1), repeat=fv.picard_rank)


def enumerate_D_m(kc: KahlerClass, m: Fraction | int, bound: int) -> list[LineBundle]:
    """``D_m = {L : Lambda_omega(chi_L) = m}`` inside the box ``|s| <= bound``."""
    m = Fraction(m)
    generators = generator_contractions(kc)
    found = [LineBundle(kc.fv, coeffs) for coeffs in lattice(kc.fv, bound)
             if sum((s * g for s, g in zip(coeffs, generators)), Fraction(0)) == m]
    logger.info(f"D_{m} with bound {bound}: {len(found)} line bundles")
    return found


def enumerate_L_target(kc: KahlerClass, target: ExactPhase, bound: int) -> list[LineBundle]:
    """``L_m = {L : Theta_omega(chi_L) = m}`` for an exactly representable lifted ``m``."""
    table = PhaseTable(kc)
    wanted = target.key()
    found = [LineBundle(kc.fv, coeffs) for coeffs in lattice(kc.fv, bound) if table.key(coeffs) == wanted]
    logger.info(f"L_{target.describe()} with bound {bound}: {len(found)} line bundles")
    return found


# ---------------------------------------------------------------------------
# Sections of End(E)
# ---------------------------------------------------------------------------

def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """``dim V(lambda) = prod_beta <lambda + rho, beta^vee> / <rho, beta^vee>``."""
    if lam.rank != rs.rank:
        raise WeightError(f"weight {lam} has rank {lam.rank}, root system {rs.lie_type} has rank {rs.rank}")
    if not lam.is_integral():
        raise WeightError(f"weight {lam} is not integral")
    if not lam.is_dominant():
        raise WeightError(f"weight {lam} is not dominant")
    rho = rho_plus(rs)
    shifted = lam + rho
    value = prod((pairing(shifted, beta, rs) / pairing(rho, beta, rs) for beta in rs.positive_roots),
                 start=Fraction(1))
    if value.denominator != 1:
        raise WeightError(f"Weyl dimension of {lam} came out non-integral: {value}")
    return int(value)


def h0_line(fv: FlagVariety, lam: Weight) -> int:
    """``h^0(X_B, L_lambda)``: ``dim V(lambda)`` when lambda is dominant, else 0."""
    return weyl_dim(fv.rs, lam) if lam.is_dominant() else 0


def h0_end(bundle: SumBundle) -> int:
    """``h^0(End E) = sum_{i,j} h^0(L_i (x) L_j^*)`` on a full flag variety."""
    fv = bundle.fv
    if not fv.is_full_flag:
        raise BundleError("h0_end is only available on full flag varieties (I empty)")
    return sum(h0_line(fv, a.weight - b.weight) for a in bundle.summands for b in bundle.summands)


# ---------------------------------------------------------------------------
# Pair sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairSweep:
    """Outcome of comparing charge and phase tests over all pairs in a box."""

    bound: int
    pairs: int
    aligned_mismatches: tuple[tuple[LineBundle, LineBundle], ...]
    collinear_mismatches: tuple[tuple[LineBundle, LineBundle], ...]
    anti_aligned: tuple[tuple[LineBundle, LineBundle], ...]

    @property
    def consistent(self) -> bool:
        return not self.aligned_mismatches and not self.collinear_mismatches


def sweep_charge_pairs(kc: KahlerClass, bound: int) -> PairSweep:
    """Exhaustively compare charge ratios with phase equality for all pairs of line bundles.

    ``Z(E)/Z(F) > 0`` must match equal phases mod 2pi, ``Im(Z(E)/Z(F)) = 0`` must
    match equal phases mod pi. Pairs with a negative real ratio are listed separately.
    """
    lines = [LineBundle(kc.fv, coeffs) for coeffs in lattice(kc.fv, bound)]
    charges = [central_charge(kc, line).value for line in lines]
    table = PhaseTable(kc)
    rays = [table.key(line.coeffs)[1:] for line in lines]
    aligned_bad, collinear_bad, anti = [], [], []
    for (e, ze, re), (f, zf, rf) in itertools.product(zip(lines, charges, rays), repeat=2):
        cross = ze * zf.conjugate()
        real_ratio = cross.im == 0
        aligned = real_ratio and cross.re > 0
        same_ray = re == rf
        opposite_ray = re[0] == -rf[0] and re[1] == -rf[1]
        if aligned != same_ray:
            aligned_bad.append((e, f))
        if real_ratio != (same_ray or opposite_ray):
            collinear_bad.append((e, f))
        if real_ratio and not aligned:
            anti.append((e, f))
    logger.info(f"pair sweep |s| <= {bound}: {len(lines) ** 2} pairs, {len(anti)} anti-aligned")
    return PairSweep(bound=bound, pairs=len(lines) ** 2, aligned_mismatches=tuple(aligned_bad),
                     collinear_mismatches=tuple(collinear_bad), anti_aligned=tuple(anti))


def unstable_family(fv: FlagVariety, r: int) -> SumBundle:
    """``(2,6) + (3,4)^{r-1}`` on the A2 full flag: all phases pi, slopes 16*6 vs 16*21/4."""
    if fv.picard_rank != 2:
        raise BundleError("the unstable family is defined on a flag variety with Picard rank 2")
    if r < 2:
        raise BundleError(f"the unstable family needs rank r >= 2, got {r}")
    return sum_bundle(fv, [(2, 6)] + [(3, 4)] * (r - 1))
