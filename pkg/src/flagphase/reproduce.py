"""The full set of claims for P(T_P2) = SL3/B with omega_0 <-> (2,2).

``reproduce_paper`` runs every claim group below into one report document;
``raise_for_failures`` turns the first failed claim into a ``ClaimFailure``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .bigcell import eigen_ratio_check, sweep
from .bundles import (InstantonType, Stability, classify, enumerate_D_m, enumerate_L_target, h0_end,
                      sum_bundle, sum_central_charge, sum_phase, sweep_charge_pairs, unstable_family,
                      weyl_dim, z_critical)
from .config import Settings
from .errors import ClaimFailure
from .flag import (FlagVariety, KahlerClass, contraction, hym_constant, kahler_class,
                   kahler_einstein_class, line_bundle, make_flag, omega_pairings, slope, volume)
from .gaussian import GaussianRational
from .logger import get_logger
from .phase import ExactPhase, charge_prefactor, describe_ray, exact_phase, normalize_ray, phase_to_float
from .report import ReportDocument
from .roots import LieType, Weight, build_root_system, pairing

logger = get_logger()

CONTRACTION_SAMPLES = 100
PHASE_SAMPLES = 10_000
SAMPLE_RANGE = 50
PHASE_RANGE = 100
PHASE_DENOMINATOR = 12
PI_LEVEL_SET = [(1, 12), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)]

E1 = [(1, -1), (2, -2)]
E2 = [(2, -1), (3, -2)]
E3 = [(2, 6), (3, 4)]


class Context:
    """Shared inputs of every claim group."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.fv: FlagVariety = make_flag(build_root_system(LieType("A", 2)))
        self.kc: KahlerClass = kahler_class(self.fv, (2, 2))
        self.rng = np.random.default_rng(settings.bigcell.seed)


ClaimGroup = Callable[[ReportDocument, Context], None]


def check_volume(doc: ReportDocument, ctx: Context) -> None:
    vol = volume(ctx.kc)
    doc.put("Vol", vol)
    doc.check("Vol = 8", vol == 8, 8, vol)


def check_anticanonical(doc: ReportDocument, ctx: Context) -> None:
    fv = ctx.fv
    doc.put("delta_B", fv.delta_P)
    doc.check("delta_B = (2,2)", fv.anticanonical_coeffs == (2, 2), "(2,2)", fv.delta_P)
    pairings = tuple(omega_pairings(kahler_einstein_class(fv)).values())
    doc.put("<delta_B, beta^vee>", pairings)
    doc.check("<delta_B, beta^vee> = 2, 2, 4", pairings == (2, 2, 4), [2, 2, 4], pairings)
    doc.check("c_1(X) is the class of omega_0", kahler_einstein_class(fv) == ctx.kc,
              ctx.kc, kahler_einstein_class(fv))


def check_contraction_law(doc: ReportDocument, ctx: Context) -> None:
    samples = ctx.rng.integers(-SAMPLE_RANGE, SAMPLE_RANGE, size=(CONTRACTION_SAMPLES, 2), endpoint=True)
    bad = []
    for s1, s2 in samples:
        xi = ctx.fv.weight_from_coeffs((int(s1), int(s2)))
        if contraction(ctx.kc, xi) != Fraction(3, 4) * int(s1 + s2):
            bad.append((int(s1), int(s2)))
    doc.check(f"Lambda(chi_L) = 3/4 (s1+s2) on {CONTRACTION_SAMPLES} random classes", not bad, [], bad)
    for coeffs, expected in (((2, 6), Fraction(6)), ((3, 4), Fraction(21, 4)), ((2, -1), Fraction(3, 4))):
        value = hym_constant(ctx.kc, line_bundle(ctx.fv, coeffs))
        doc.put(f"Lambda{coeffs}", value)
        doc.check(f"Lambda{coeffs} = {expected}", value == expected, expected, value)


def check_slopes(doc: ReportDocument, ctx: Context) -> None:
    a, b = (line_bundle(ctx.fv, c) for c in E2)
    e2 = sum_bundle(ctx.fv, [a, b])
    for name, bundle in (("mu(2,-1)", a), ("mu(3,-2)", b), ("mu(E2)", e2)):
        value = slope(ctx.kc, bundle)
        doc.put(name, value)
        doc.check(f"{name} = 12", value == 12, 12, value)


def check_pi_level_set(doc: ReportDocument, ctx: Context) -> None:
    bound = ctx.settings.reproduce.level_bound
    found = [line.coeffs for line in enumerate_L_target(ctx.kc, ExactPhase.pi(), bound)]
    doc.put(f"L_pi(|s| <= {bound})", found)
    doc.check("L_pi = {s1 s2 = 12, s1 > 0}", found == PI_LEVEL_SET, PI_LEVEL_SET, found)


def check_pic0(doc: ReportDocument, ctx: Context) -> None:
    top = ctx.settings.reproduce.pic0_bound
    mismatched = []
    for bound in range(1, top + 1):
        d0 = [line.coeffs for line in enumerate_D_m(ctx.kc, 0, bound)]
        l0 = [line.coeffs for line in enumerate_L_target(ctx.kc, ExactPhase.zero(), bound)]
        expected = [(s, -s) for s in range(-bound, bound + 1)]
        if not d0 == l0 == expected:
            mismatched.append(bound)
    doc.check(f"D_0 = L_0 = Pic^0 for bounds 1..{top}", not mismatched, [], mismatched)


def _classify_example(doc: ReportDocument, ctx: Context, name: str, summands, label: InstantonType,
                      stability: Stability, ray: Optional[GaussianRational]) -> None:
    bundle = sum_bundle(ctx.fv, summands)
    result = classify(ctx.kc, bundle)
    theta_hat = sum_phase(ctx.kc, bundle)
    doc.put(f"{name}.type", result.type_label)
    doc.put(f"{name}.stability", result.stability)
    doc.put(f"{name}.contractions", result.contractions)
    doc.put(f"{name}.slopes", result.slopes)
    doc.put(f"{name}.phases", result.phases)
    doc.put(f"{name}.Theta_hat", describe_ray(theta_hat) if theta_hat is not None else "undefined")
    doc.check(f"{name}: {label.value}", result.type_label is label, label, result.type_label)
    doc.check(f"{name}: {stability.value}", result.stability is stability, stability, result.stability)
    if ray is not None:
        doc.check(f"{name}: Theta_hat = {describe_ray(ray)}", theta_hat == ray, ray, theta_hat)


def check_instanton_types(doc: ReportDocument, ctx: Context) -> None:
    _classify_example(doc, ctx, "E1", E1, InstantonType.TYPE_I, Stability.POLYSTABLE, GaussianRational(1))
    _classify_example(doc, ctx, "E2", E2, InstantonType.TYPE_II, Stability.POLYSTABLE, None)
    _classify_example(doc, ctx, "E3", E3, InstantonType.TYPE_III, Stability.UNSTABLE, GaussianRational(-1))

    e2 = sum_bundle(ctx.fv, E2)
    hym = {hym_constant(ctx.kc, line) for line in e2.summands}
    doc.check("E2: Lambda(chi) = 3/4 on every summand", hym == {Fraction(3, 4)}, ["3/4"], sorted(hym))
    # sqrt(-1) Lambda(F) = 2pi Lambda(chi) = (pi/8) mu
    c_over_pi = 2 * hym_constant(ctx.kc, e2.summands[0])
    doc.put("E2.c/pi", c_over_pi)
    doc.check("E2: c = 3pi/2 = (pi/8) mu", c_over_pi == Fraction(3, 2) == slope(ctx.kc, e2) / 8,
              "3/2", c_over_pi)

    contractions = {hym_constant(ctx.kc, line) for line in sum_bundle(ctx.fv, E3).summands}
    doc.check("E3: contractions {6, 21/4}", contractions == {Fraction(6), Fraction(21, 4)},
              ["6", "21/4"], sorted(contractions))


def check_charge_pairs(doc: ReportDocument, ctx: Context) -> None:
    bound = ctx.settings.reproduce.pair_bound
    result = sweep_charge_pairs(ctx.kc, bound)
    doc.put("pairs", result.pairs)
    doc.put("anti_aligned_pairs", len(result.anti_aligned))
    if result.anti_aligned:
        e, f = result.anti_aligned[0]
        doc.put("anti_aligned_example", [e, f])
    doc.check(f"Z(E)/Z(F) > 0 <=> Theta(E) = Theta(F) mod 2pi (|s| <= {bound})",
              not result.aligned_mismatches, 0, len(result.aligned_mismatches))
    doc.check(f"Im(Z(E)/Z(F)) = 0 <=> Theta(E) = Theta(F) mod pi (|s| <= {bound})",
              not result.collinear_mismatches, 0, len(result.collinear_mismatches))


def check_unstable_family(doc: ReportDocument, ctx: Context) -> None:
    n = ctx.fv.dim_c
    for r in ctx.settings.reproduce.ranks:
        name = f"C{r}"
        bundle = unstable_family(ctx.fv, r)
        result = classify(ctx.kc, bundle)
        h0 = h0_end(bundle)
        theta_hat = sum_phase(ctx.kc, bundle)
        z = sum_central_charge(ctx.kc, bundle)
        doc.put(f"{name}.bundle", str(bundle))
        doc.put(f"{name}.h0_end", h0)
        doc.put(f"{name}.Z", z)
        doc.check(f"{name}: Unstable", result.stability is Stability.UNSTABLE, Stability.UNSTABLE,
                  result.stability)
        doc.check(f"{name}: dHYM", result.dhym, True, result.dhym)
        doc.check(f"{name}: h0(End E) = {1 + (r - 1) ** 2}", h0 == 1 + (r - 1) ** 2, 1 + (r - 1) ** 2, h0)
        doc.check(f"{name}: Theta_hat = pi", theta_hat == GaussianRational(-1), "-1", theta_hat)
        expected = normalize_ray(charge_prefactor(n) * theta_hat) if theta_hat is not None else None
        doc.check(f"{name}: Arg Z(E) = Theta_hat + 3pi/2", expected is not None and z.ray == expected,
                  expected, z.ray)
        doc.check(f"{name}: Z-critical", z_critical(ctx.kc, bundle) is True, True, z_critical(ctx.kc, bundle))


def check_bigcell(doc: ReportDocument, ctx: Context) -> None:
    cfg = ctx.settings.bigcell
    single = eigen_ratio_check(2, 6, h=cfg.step, tol=cfg.tol)
    doc.put("bigcell(2,6)", list(single.numeric))
    doc.check("bigcell(2,6) eigenvalues = {1, 2, 3}", single.passed, ["1", "2", "3"], list(single.numeric))
    if cfg.sweeps:
        result = sweep(seed=cfg.seed, count=cfg.sweeps, h=cfg.step, tol=cfg.tol)
        doc.put("bigcell_sweep_worst_error", result.worst_error)
        doc.check(f"bigcell sweep of {cfg.sweeps} random classes", result.passed, f"<= {cfg.tol}",
                  result.worst_error)


def check_float_consistency(doc: ReportDocument, ctx: Context) -> None:
    pairings = omega_pairings(ctx.kc)
    rs = ctx.fv.rs
    denominators = ctx.rng.integers(1, PHASE_DENOMINATOR, size=(PHASE_SAMPLES, 2), endpoint=True)
    bounds = PHASE_RANGE * denominators
    numerators = ctx.rng.integers(-bounds, bounds, endpoint=True)
    worst = 0.0
    for (p1, p2), (q1, q2) in zip(numerators, denominators):
        xi = ctx.fv.weight_from_coeffs((Fraction(int(p1), int(q1)), Fraction(int(p2), int(q2))))
        exact = phase_to_float(exact_phase(ctx.kc, xi))
        approx = sum(math.atan(float(pairing(xi, beta, rs)) / float(a)) for beta, a in pairings.items())
        worst = max(worst, abs(exact - approx))
    doc.put("phase_float_worst_error", worst, samples=PHASE_SAMPLES, range=PHASE_RANGE)
    doc.check(f"|Theta_exact - sum atan| < 1e-9 on {PHASE_SAMPLES} random rational classes", worst < 1e-9,
              "< 1e-9", worst)


def check_weyl_dimensions(doc: ReportDocument, ctx: Context) -> None:
    rs = ctx.fv.rs
    for name, weight, expected in (("dim V(w1)", Weight.of(1, 0), 3), ("dim V(w2)", Weight.of(0, 1), 3),
                                   ("dim V(w1+w2)", Weight.of(1, 1), 8)):
        value = weyl_dim(rs, weight)
        doc.put(name, value)
        doc.check(f"{name} = {expected}", value == expected, expected, value)


CLAIM_GROUPS: list[ClaimGroup] = [
    check_volume,
    check_anticanonical,
    check_contraction_law,
    check_slopes,
    check_pi_level_set,
    check_pic0,
    check_instanton_types,
    check_charge_pairs,
    check_unstable_family,
    check_bigcell,
    check_float_consistency,
    check_weyl_dimensions,
]


def reproduce_paper(settings: Optional[Settings] = None, doc: Optional[ReportDocument] = None) -> ReportDocument:
    settings = settings or Settings()
    doc = doc or ReportDocument(command="reproduce-paper")
    ctx = Context(settings)
    doc.echo(lie_type=str(ctx.fv.rs.lie_type), parabolic=[], omega=ctx.kc.coeffs)
    for group in CLAIM_GROUPS:
        logger.info(f"running {group.__name__}")
        group(doc, ctx)
    logger.info(f"{len(doc.checks)} claims, {len(doc.failed_claims())} failed")
    return doc


def raise_for_failures(doc: ReportDocument) -> None:
    for check in doc.checks:
        if not check.passed:
            raise ClaimFailure(check.claim, f"expected {check.expected}, got {check.actual}")
