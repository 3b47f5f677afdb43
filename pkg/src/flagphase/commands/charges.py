from dataclasses import dataclass
from typing import Optional

from simple_parsing import field as simple_field

from flagphase.bundles import sum_bundle, sum_central_charge, sum_phase, z_critical
from flagphase.command_loader import BaseCommand, VarietyArgs, kahler_from_text, variety_from_args
from flagphase.config import Settings
from flagphase.errors import UsageError
from flagphase.flag import contraction, eigenvalues, line_bundle
from flagphase.literals import parse_coeffs, parse_int_coeffs, parse_sum
from flagphase.phase import central_charge, describe_ray, exact_phase
from flagphase.report import ReportDocument


@dataclass
class PhaseArgs(VarietyArgs):
    omega: Optional[str] = simple_field(default=None, help="Kahler coefficients, e.g. 2,2")
    xi: Optional[str] = simple_field(default=None, help="class coefficients, e.g. 2,6 or 1/2,0")


class PhaseCommand(BaseCommand):
    name = "phase"
    arguments = PhaseArgs

    def run(self, args: PhaseArgs, settings: Settings) -> ReportDocument:
        if args.xi is None:
            raise UsageError("phase needs --xi")
        doc = self.document(args)
        fv = variety_from_args(args)
        kc = kahler_from_text(fv, args.omega if args.omega is not None else settings.omega)
        xi = fv.weight_from_coeffs(parse_coeffs(args.xi))
        doc.echo(lie_type=str(fv.rs.lie_type), parabolic=[i + 1 for i in sorted(fv.parabolic)],
                 omega=kc.coeffs, xi=xi.coords)
        phase = exact_phase(kc, xi)
        doc.put("phase", phase)
        doc.put("phase_text", phase.describe())
        doc.put("eigenvalues", {str(beta): q for beta, q in eigenvalues(kc, xi).items()})
        doc.put("contraction", contraction(kc, xi))
        return doc


@dataclass
class ChargeArgs(VarietyArgs):
    omega: Optional[str] = simple_field(default=None, help="Kahler coefficients, e.g. 2,2")
    line: Optional[str] = simple_field(default=None, help="line bundle coefficients, e.g. 2,6")
    sum: Optional[str] = simple_field(default=None, help="Whitney sum, e.g. \"2,6;3,4\"")


class ChargeCommand(BaseCommand):
    name = "charge"
    arguments = ChargeArgs

    def run(self, args: ChargeArgs, settings: Settings) -> ReportDocument:
        if (args.line is None) == (args.sum is None):
            raise UsageError("charge needs exactly one of --line and --sum")
        doc = self.document(args)
        fv = variety_from_args(args)
        kc = kahler_from_text(fv, args.omega if args.omega is not None else settings.omega)
        doc.echo(lie_type=str(fv.rs.lie_type), parabolic=[i + 1 for i in sorted(fv.parabolic)],
                 omega=kc.coeffs)
        if args.line is not None:
            line = line_bundle(fv, parse_int_coeffs(args.line))
            doc.echo(line=line.coeffs)
            z = central_charge(kc, line)
        else:
            bundle = sum_bundle(fv, parse_sum(args.sum))
            doc.echo(sum=[line.coeffs for line in bundle.summands])
            z = sum_central_charge(kc, bundle)
            theta_hat = sum_phase(kc, bundle)
            doc.put("Theta_hat", describe_ray(theta_hat) if theta_hat is not None else "undefined")
            critical = z_critical(kc, bundle)
            if critical is None:
                doc.warn("Z(E) = 0, the Z-critical equation is not defined")
            doc.put("z_critical", critical)
        doc.put("Z", z.value)
        if z.value.is_zero():
            doc.warn("central charge vanishes")
        else:
            doc.put("Z_ray", z.ray)
            doc.put("Arg_Z", describe_ray(z.value))
        doc.put("n", z.n)
        return doc


AVAILABLE_COMMANDS = [PhaseCommand, ChargeCommand]
