from dataclasses import dataclass

from flagphase.command_loader import BaseCommand, CommonArgs
from flagphase.config import Settings
from flagphase.report import ReportDocument
from flagphase.reproduce import reproduce_paper


@dataclass
class ReproduceArgs(CommonArgs):
    pass


class ReproducePaperCommand(BaseCommand):
    name = "reproduce-paper"
    arguments = ReproduceArgs

    def run(self, args: ReproduceArgs, settings: Settings) -> ReportDocument:
        return reproduce_paper(settings, self.document(args))


AVAILABLE_COMMANDS = [ReproducePaperCommand]
