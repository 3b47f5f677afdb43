from dataclasses import dataclass
from importlib import import_module
from typing import Any, Callable, Optional

from simple_parsing import field as simple_field

from .config import Settings
from .errors import UsageError
from .flag import FlagVariety, KahlerClass, kahler_class, make_flag
from .literals import parse_coeffs, parse_lie_type, parse_parabolic
from .logger import get_logger
from .report import ReportDocument
from .result import Result, Ok, Err, is_err
from .roots import build_root_system

logger = get_logger()


@dataclass
class CommonArgs:
    json: bool = simple_field(default=False, help="write the report as JSON instead of a table")
    config: Optional[str] = simple_field(default=None, help="YAML settings file")
    verbose: int = simple_field(default=0, alias="-v", help="0: warnings, 1: info, 2: debug")


@dataclass
class VarietyArgs(CommonArgs):
    type: str = simple_field(default="A", help="Lie algebra family, one of A-G")
    rank: int = simple_field(default=2, help="rank of the Lie algebra")
    parabolic: str = simple_field(default="", help="simple roots in I, 1-based; empty for the full flag")


class BaseCommand:
    name: str
    arguments: type = CommonArgs

    def hooks(self) -> dict[str, Callable]:
        return {
            "run": self.execute,
        }

    def run(self, args: Any, settings: Settings) -> ReportDocument:
        raise NotImplementedError

    def execute(self, args: Any, settings: Settings) -> Result[ReportDocument]:
        return Result.resultify(self.run)(args, settings)

    def document(self, args: Any) -> ReportDocument:
        return ReportDocument(command=self.name)


def variety_from_args(args: VarietyArgs) -> FlagVariety:
    lie_type = parse_lie_type(args.type, args.rank)
    return make_flag(build_root_system(lie_type), parse_parabolic(args.parabolic, lie_type.rank))


def kahler_from_text(fv: FlagVariety, text: str) -> KahlerClass:
    return kahler_class(fv, parse_coeffs(text))


def import_command(name: str) -> Result[Any]:
    try:
        try:
            module = import_module(f"flagphase.commands.{name}")
        except ModuleNotFoundError:
            module = import_module(name)
        logger.debug(f"imported command module `{name}`")
        return Ok(module)
    except ImportError as e:
        logger.error(f"could not find built-in or external command module `{name}`")
        return Err(UsageError(f"unknown command module {name!r}: {e}"))


def load_commands(modules: list[str]) -> Result[dict[str, BaseCommand]]:
    commands: dict[str, BaseCommand] = {}
    for module_name in modules:
        module_result = import_command(module_name)
        if is_err(module_result):
            return Err(module_result.unwrap_err())
        for CommandClass in getattr(module_result.unwrap(), "AVAILABLE_COMMANDS", []):
            command = CommandClass()
            if command.name in commands:
                return Err(UsageError(f"command {command.name!r} is provided twice"))
            commands[command.name] = command
    return Ok(commands)
