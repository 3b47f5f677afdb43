"""Lagrangian phases and central charges, decided exactly.

``sum_beta arctan(b_beta / a_beta)`` with ``a_beta > 0`` is the argument of
the Gaussian rational ``prod_beta (a_beta + i b_beta)``. Multiplying the
factors one at a time and counting crossings of the negative real axis
recovers the lifted real value, not just its class mod 2pi:

    Theta = principal_arg(ray) + 2 pi * winding,   principal_arg in (-pi, pi]

Positive rescaling changes neither arguments nor quadrants, so every factor
is first cleared to a coprime integer pair and the winding loop runs on
plain ints. Every quadrant decision is an exact sign test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .errors import NumericalError, WeightError
from .flag import KahlerClass, LineBundle, omega_pairings
from .gaussian import GaussianRational
from .logger import get_logger
from .roots import Weight, pairing, rho_plus

logger = get_logger()

_AXIS_NAMES = {
    (1, 0): "0",
    (0, 1): "pi/2",
    (-1, 0): "pi",
    (0, -1): "-pi/2",
}


def normalize_ray(z: GaussianRational) -> GaussianRational:
    """Canonical representative of the ray through ``z``: coprime integers, same direction."""
    if z.is_zero():
        raise WeightError("the zero Gaussian rational has no direction")
    return z.primitive()


def describe_ray(z: GaussianRational) -> str:
    """``pi``, ``pi/2``, ... for rays on the axes; ``atan2(im,re)`` otherwise."""
    ray = normalize_ray(z)
    key = (int(ray.re), int(ray.im))
    return _AXIS_NAMES.get(key, f"atan2({ray.im},{ray.re})")


def _closed_second_quadrant(re: int, im: int) -> bool:
    # includes the positive imaginary axis and the negative real axis
    return (re <= 0 and im > 0) or (re < 0 and im == 0)


def _open_third_quadrant(re: int, im: int) -> bool:
    return re < 0 and im < 0


def winding_bound(n: int) -> int:
    return -(-n // 4) + 1


def wind(pairs: Iterable[tuple[int, int]]) -> tuple[int, int, int]:
    """Lifted argument of ``prod (a + i b)`` over integer pairs with ``a > 0``.

    Returns ``(winding, re, im)`` with ``(re, im)`` coprime.
    """
    re, im, winding, count = 1, 0, 0, 0
    for a, b in pairs:
        if a <= 0:
            raise NumericalError(f"factor {a}{b:+d}i is not in the open right half-plane")
        nre, nim = re * a - im * b, re * b + im * a
        g = gcd(nre, nim)
        nre, nim = nre // g, nim // g
        if b > 0 and _closed_second_quadrant(re, im) and _open_third_quadrant(nre, nim):
            winding += 1
        elif b < 0 and _open_third_quadrant(re, im) and _closed_second_quadrant(nre, nim):
            winding -= 1
        re, im = nre, nim
        count += 1
    bound = winding_bound(count)
    if abs(winding) > bound:
        raise NumericalError(f"winding {winding} exceeds the bound {bound} for {count} factors")
    return winding, re, im


@dataclass(frozen=True)
class ExactPhase:
    winding: int
    ray: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "ray", normalize_ray(self.ray))

    @classmethod
    def zero(cls) -> "ExactPhase":
        return cls(0, GaussianRational.one())

    @classmethod
    def pi(cls) -> "ExactPhase":
        return cls(0, GaussianRational(-1, 0))

    def key(self) -> tuple[int, int, int]:
        return self.winding, int(self.ray.re), int(self.ray.im)

    def on_negative_real_axis(self) -> bool:
        return self.ray.im == 0 and self.ray.re < 0

    def __neg__(self) -> "ExactPhase":
        if self.on_negative_real_axis():
            # -(pi + 2 pi w) = pi + 2 pi (-w - 1)
            return ExactPhase(-self.winding - 1, self.ray)
        return ExactPhase(-self.winding, self.ray.conjugate())

    def describe(self) -> str:
        base = describe_ray(self.ray)
        if self.winding == 0:
            return base
        return f"{base} + {2 * self.winding}pi"

    def __float__(self) -> float:
        return phase_to_float(self)


def phase_to_float(p: ExactPhase) -> float:
    """Display value ``2 pi w + atan2(im, re)``; never used for decisions."""
    return 2 * math.pi * p.winding + math.atan2(float(p.ray.im), float(p.ray.re))


def phases_equal_mod_2pi(p: ExactPhase, q: ExactPhase) -> bool:
    cross = p.ray * q.ray.conjugate()
    return cross.im == 0 and cross.re > 0


def phases_equal_mod_pi(p: ExactPhase, q: ExactPhase) -> bool:
    return (p.ray * q.ray.conjugate()).im == 0


def lifted_equal(p: ExactPhase, q: ExactPhase) -> bool:
    """Equal as real numbers: same winding and same ray."""
    return p.winding == q.winding and phases_equal_mod_2pi(p, q)


def charge_factors(kc: KahlerClass, xi: Weight) -> list[GaussianRational]:
    """``a_beta + i b_beta`` for beta in Phi_I^+, in root order."""
    fv = kc.fv
    fv.check_support(xi)
    rs = fv.rs
    return [GaussianRational(a, pairing(xi, beta, rs)) for beta, a in omega_pairings(kc).items()]


def accumulate_phase(factors: Sequence[GaussianRational]) -> ExactPhase:
    """Lifted argument of a product of right-half-plane Gaussian rationals."""
    pairs = []
    for f in factors:
        p = f.primitive()
        pairs.append((int(p.re), int(p.im)))
    winding, re, im = wind(pairs)
    logger.debug(f"{len(pairs)} factors: winding {winding}, ray ({re},{im})")
    return ExactPhase(winding, GaussianRational(re, im))


def exact_phase(kc: KahlerClass, xi: Weight) -> ExactPhase:
    """Lagrangian phase ``Theta_omega(chi) = sum_beta arctan(q_beta)`` of the invariant chi in xi."""
    return accumulate_phase(charge_factors(kc, xi))


def line_phase(kc: KahlerClass, bundle: LineBundle) -> ExactPhase:
    return exact_phase(kc, bundle.weight)


class PhaseTable:
    """Integer factor data for fast phase evaluation over the Picard lattice.

    For each beta the factor ``a_beta + i <xi, beta^vee>`` is linear in the
    line bundle coefficients; scaling by the positive common denominator of
    its row turns it into ``A_beta + i sum_alpha s_alpha T_beta_alpha`` with
    integer entries.
    """

    def __init__(self, kc: KahlerClass):
        fv = kc.fv
        rs = fv.rs
        self.kc = kc
        self._rows: list[tuple[int, tuple[int, ...]]] = []
        for beta, a in omega_pairings(kc).items():
            row = rs.coroot_row(beta)
            entries = [row[i] for i in fv.picard_indices]
            scale = lcm(a.denominator, *(e.denominator for e in entries))
            self._rows.append((int(a * scale), tuple(int(e * scale) for e in entries)))

    def key(self, coeffs: Sequence[int]) -> tuple[int, int, int]:
        return wind((big_a, sum(s * t for s, t in zip(coeffs, ts))) for big_a, ts in self._rows)

    def phase(self, coeffs: Sequence[int]) -> ExactPhase:
        winding, re, im = self.key(coeffs)
        return ExactPhase(winding, GaussianRational(re, im))


@dataclass(frozen=True)
class CentralCharge:
    n: int
    value: GaussianRational

    @property
    def ray(self) -> GaussianRational:
        return normalize_ray(self.value)

    def __add__(self, other: "CentralCharge") -> "CentralCharge":
        if not isinstance(other, CentralCharge):
            return NotImplemented
        if other.n != self.n:
            raise WeightError(f"central charges in dimensions {self.n} and {other.n} cannot be added")
        return CentralCharge(self.n, self.value + other.value)


def charge_integral(kc: KahlerClass, xi: Weight) -> GaussianRational:
    """``(1/n!) int (omega + i chi)^n = prod_beta (a_beta + i b_beta) / <rho, beta^vee>``."""
    rs = kc.fv.rs
    rho = rho_plus(rs)
    factors = charge_factors(kc, xi)
    return prod(
        (f / pairing(rho, beta, rs) for f, beta in zip(factors, kc.fv.phi_I_plus)),
        start=GaussianRational.one(),
    )


def charge_prefactor(n: int) -> GaussianRational:
    """``-(-i)^n``."""
    return -(GaussianRational(0, -1) ** n)


def central_charge(kc: KahlerClass, bundle: LineBundle) -> CentralCharge:
    """``Z(L) = -((-i)^n / n!) int ([omega] + i c_1(L))^n``."""
    n = kc.fv.dim_c
    return CentralCharge(n, charge_prefactor(n) * charge_integral(kc, bundle.weight))


def charge_cross(z: CentralCharge, w: CentralCharge) -> GaussianRational:
    """``Z conj(W)``; its imaginary part has the sign of ``Im(Z/W)``."""
    return z.value * w.value.conjugate()


def im_charge_ratio_zero(kc: KahlerClass, e: LineBundle, f: LineBundle) -> bool:
    """``Im(Z(E)/Z(F)) == 0``, tested as ``Im(Z(E) conj Z(F)) == 0``.

    This holds exactly when the phases agree mod pi; ``charges_aligned``
    is the test for agreement mod 2pi.
    """
    return charge_cross(central_charge(kc, e), central_charge(kc, f)).im == 0


def charges_aligned(kc: KahlerClass, e: LineBundle, f: LineBundle) -> bool:
    """``Z(E)/Z(F)`` is a positive real number."""
    cross = charge_cross(central_charge(kc, e), central_charge(kc, f))
    return cross.im == 0 and cross.re > 0
