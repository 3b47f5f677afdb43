from dataclasses import dataclass
from typing import Optional

from simple_parsing import field as simple_field

from flagphase.bundles import (classify, enumerate_D_m, enumerate_L_target, h0_end, sum_bundle, sum_central_charge,
                               sum_phase, z_critical)
from flagphase.command_loader import BaseCommand, VarietyArgs, kahler_from_text, variety_from_args
from flagphase.config import Settings
from flagphase.errors import UsageError
from flagphase.flag import slope
from flagphase.literals import parse_phase_target, parse_sum
from flagphase.logger import get_logger
from flagphase.phase import describe_ray
from flagphase.report import ReportDocument, parse_rational

logger = get_logger()


@dataclass
class ClassifyArgs(VarietyArgs):
    omega: Optional[str] = simple_field(default=None, help="Kahler coefficients, e.g. 2,2")
    sum: Optional[str] = simple_field(default=None, help="Whitney sum, e.g. \"2,6;3,4\"")


class ClassifyCommand(BaseCommand):
    name = "classify"
    arguments = ClassifyArgs

    def run(self, args: ClassifyArgs, settings: Settings) -> ReportDocument:
        if args.sum is None:
            raise UsageError("classify needs --sum")
        doc = self.document(args)
        fv = variety_from_args(args)
        kc = kahler_from_text(fv, args.omega if args.omega is not None else settings.omega)
        bundle = sum_bundle(fv, parse_sum(args.sum))
        doc.echo(lie_type=str(fv.rs.lie_type), parabolic=[i + 1 for i in sorted(fv.parabolic)],
                 omega=kc.coeffs, sum=[line.coeffs for line in bundle.summands])

        result = classify(kc, bundle)
        doc.put("type", result.type_label)
        doc.put("hym", result.hym)
        doc.put("dhym", result.dhym)
        doc.put("stability", result.stability)
        doc.put("contractions", result.contractions)
        doc.put("slopes", result.slopes)
        doc.put("slope", slope(kc, bundle))
        doc.put("phases", result.phases)

        theta_hat = sum_phase(kc, bundle)
        if theta_hat is None:
            doc.warn("trace integral vanishes, Theta_hat is undefined")
            doc.put("Theta_hat", "undefined")
        else:
            doc.put("Theta_hat", describe_ray(theta_hat))
            doc.put("Theta_hat_ray", theta_hat)
        doc.put("Z", sum_central_charge(kc, bundle))
        critical = z_critical(kc, bundle)
        if critical is None:
            doc.warn("Z(E) = 0, the Z-critical equation is not defined")
        doc.put("z_critical", critical)
        if fv.is_full_flag:
            doc.put("h0_end", h0_end(bundle))
        return doc


@dataclass
class EnumerateArgs(VarietyArgs):
    omega: Optional[str] = simple_field(default=None, help="Kahler coefficients, e.g. 2,2")
    dm: Optional[str] = simple_field(default=None, help="contraction level m of D_m, e.g. 3/4")
    ltarget: Optional[str] = simple_field(default=None, help="phase target of L_m: 0, pi or w:re:im")
    bound: Optional[int] = simple_field(default=None, help="scan |s| <= bound")


class EnumerateCommand(BaseCommand):
    name = "enumerate"
    arguments = EnumerateArgs

    def run(self, args: EnumerateArgs, settings: Settings) -> ReportDocument:
        if (args.dm is None) == (args.ltarget is None):
            raise UsageError("enumerate needs exactly one of --dm and --ltarget")
        doc = self.document(args)
        fv = variety_from_args(args)
        kc = kahler_from_text(fv, args.omega if args.omega is not None else settings.omega)
        bound = args.bound if args.bound is not None else settings.bound
        doc.echo(lie_type=str(fv.rs.lie_type), parabolic=[i + 1 for i in sorted(fv.parabolic)],
                 omega=kc.coeffs, bound=bound)
        if args.dm is not None:
            m = parse_rational(args.dm)
            doc.echo(dm=m)
            found = enumerate_D_m(kc, m, bound)
        else:
            target = parse_phase_target(args.ltarget)
            doc.echo(ltarget=target)
            found = enumerate_L_target(kc, target, bound)
        doc.put("count", len(found))
        doc.put("entries", [list(line.coeffs) for line in found])
        if not found:
            doc.warn("level set is empty inside the bound")
        return doc


AVAILABLE_COMMANDS = [ClassifyCommand, EnumerateCommand]
