from dataclasses import dataclass

from simple_parsing import field as simple_field

from flagphase.bigcell import eigen_ratio_check, sweep
from flagphase.command_loader import BaseCommand, CommonArgs
from flagphase.config import Settings
from flagphase.errors import UsageError
from flagphase.literals import parse_int_coeffs
from flagphase.report import ReportDocument


@dataclass
class BigcellArgs(CommonArgs):
    s: str = simple_field(default="2,6", alias="--s", help="line bundle coefficients s1,s2 on the A2 full flag")
    sweep: int = simple_field(default=0, help="also check this many random pairs (seed from settings)")


class BigcellCheckCommand(BaseCommand):
    name = "bigcell-check"
    arguments = BigcellArgs

    def run(self, args: BigcellArgs, settings: Settings) -> ReportDocument:
        coeffs = parse_int_coeffs(args.s)
        if len(coeffs) != 2:
            raise UsageError(f"--s takes two coefficients, got {args.s!r}")
        cfg = settings.bigcell
        doc = self.document(args)
        doc.echo(lie_type="A2", parabolic=[], omega=[2, 2], s=coeffs, step=cfg.step, tol=cfg.tol)

        check = eigen_ratio_check(*coeffs, h=cfg.step, tol=cfg.tol)
        doc.put("eigenvalues", list(check.numeric))
        doc.put("expected", check.expected)
        doc.put("max_error", check.max_error, step=cfg.step, tol=cfg.tol)
        doc.put("trace", check.trace_numeric)
        doc.put("contraction", check.trace_exact)
        doc.check("generalized eigenvalues match the coroot quotients", check.max_error <= cfg.tol,
                  f"<= {cfg.tol}", check.max_error)
        doc.check("trace(H_omega^-1 H_chi) = contraction",
                  abs(check.trace_numeric - float(check.trace_exact)) <= cfg.tol,
                  check.trace_exact, check.trace_numeric)

        if args.sweep:
            result = sweep(seed=cfg.seed, count=args.sweep, h=cfg.step, tol=cfg.tol)
            doc.put("sweep_worst_error", result.worst_error)
            doc.check(f"random sweep of {args.sweep} pairs", result.passed, f"<= {cfg.tol}", result.worst_error)
        return doc


AVAILABLE_COMMANDS = [BigcellCheckCommand]
