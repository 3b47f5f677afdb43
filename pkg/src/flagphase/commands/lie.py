from dataclasses import dataclass

from simple_parsing import field as simple_field

from flagphase.command_loader import BaseCommand, CommonArgs, VarietyArgs, variety_from_args
from flagphase.config import Settings
from flagphase.flag import anticanonical_volume, kahler_einstein_class
from flagphase.literals import parse_lie_type
from flagphase.logger import get_logger
from flagphase.report import ReportDocument
from flagphase.roots import build_root_system, rho_plus

logger = get_logger()


@dataclass
class RootsArgs(CommonArgs):
    type: str = simple_field(default="A", help="Lie algebra family, one of A-G")
    rank: int = simple_field(default=2, help="rank of the Lie algebra")


class RootsCommand(BaseCommand):
    name = "roots"
    arguments = RootsArgs

    def run(self, args: RootsArgs, settings: Settings) -> ReportDocument:
        doc = self.document(args)
        lie_type = parse_lie_type(args.type, args.rank)
        rs = build_root_system(lie_type)
        doc.echo(lie_type=str(lie_type))
        doc.put("cartan", [list(row) for row in rs.cartan])
        doc.put("symmetrizer", rs.symmetrizer)
        doc.put("positive_roots", [list(beta.coeffs) for beta in rs.positive_roots])
        doc.put("positive_root_count", len(rs.positive_roots))
        doc.put("highest_root", list(rs.highest_root().coeffs))
        doc.put("rho", rho_plus(rs).coords)
        logger.info(f"{lie_type}: {len(rs.positive_roots)} positive roots")
        return doc


class FlagCommand(BaseCommand):
    name = "flag"
    arguments = VarietyArgs

    def run(self, args: VarietyArgs, settings: Settings) -> ReportDocument:
        doc = self.document(args)
        fv = variety_from_args(args)
        doc.echo(lie_type=str(fv.rs.lie_type), parabolic=[i + 1 for i in sorted(fv.parabolic)])
        doc.put("phi_I_plus", [list(beta.coeffs) for beta in fv.phi_I_plus])
        doc.put("dim", fv.dim_c)
        doc.put("delta_P", fv.delta_P.coords)
        doc.put("picard_indices", [i + 1 for i in fv.picard_indices])
        doc.put("anticanonical_coeffs", fv.anticanonical_coeffs)
        doc.put("kahler_einstein_class", kahler_einstein_class(fv).coeffs)
        doc.put("anticanonical_volume", anticanonical_volume(fv))
        if fv.is_point:
            doc.warn(f"{fv} is a point")
        return doc


AVAILABLE_COMMANDS = [RootsCommand, FlagCommand]
