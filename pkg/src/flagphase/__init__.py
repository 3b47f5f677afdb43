import sys
from dataclasses import make_dataclass
from typing import Optional, TextIO, Union

from simple_parsing import parse as simple_parse, subparsers

from .command_loader import BaseCommand, load_commands
from .config import load_settings
from .errors import EXIT_CLAIM, EXIT_OK, EXIT_USAGE
from .logger import get_logger, level_for_verbosity, setup_root
from .report import ReportDocument, SinkRegistry, sink_for
from .result import Result, Err, is_err
from .__constants__ import __version__, __motd__

logger = get_logger()

DEFAULT_COMMAND_MODULES = ["lie", "charges", "instantons", "numerics", "reproduction"]

# the A2 root system
art = """
    *   *
  *   o   *
    *   *   """.split("\n") + [f"version {__version__}", __motd__]

text = """
  __ _                   _
 / _| |__ _ __ _ _ __| |_  __ _ ___ ___
|  _| / _` / _` | '_ \\ ' \\/ _` (_-</ -_)
|_| |_\\__,_\\__, | .__/_||_\\__,_/__/\\___|
           |___/|_|""".split("\n")


def print_banner(stream: TextIO) -> None:
    for idx, text_line in enumerate(text):
        print(text_line.ljust(42), end=" ", file=stream)
        if dict(enumerate(art)).get(idx, None):
            print(art[idx], end="", file=stream)
        print("", file=stream)
    for line in art[len(text):]:
        print(" " * 43 + line, file=stream)


def build_program(commands: dict[str, BaseCommand]) -> type:
    """A dataclass with one subparser per loaded command."""
    choices = {name: command.arguments for name, command in commands.items()}
    return make_dataclass("Program", [("command", Union[tuple(choices.values())], subparsers(choices))])


def main(program, commands: dict[str, BaseCommand], log_stream: Optional[TextIO] = None) -> Result[ReportDocument]:
    args = program.command
    command = next((c for c in commands.values() if type(args) is c.arguments), None)
    if command is None:
        return Err(LookupError(f"no command takes {type(args).__name__}"))

    settings_result = Result.resultify(load_settings)(args.config)
    if is_err(settings_result):
        return settings_result
    settings = settings_result.unwrap()

    pinned = settings.logging.level if args.verbose == 0 else None
    setup_root(level=level_for_verbosity(args.verbose, pinned), stream=log_stream, colour=settings.logging.colour)
    logger.info(f"running `{command.name}`")

    result = command.hooks()["run"](args, settings)
    if is_err(result):
        return result
    logger.info(f"`{command.name}` finished")
    return result


def run(argv: Optional[list[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse ``argv``, run the command, write its report; returns the exit status."""
    stderr = stderr if stderr is not None else sys.stderr
    setup_root(stream=stderr)
    commands_result = load_commands(DEFAULT_COMMAND_MODULES)
    if is_err(commands_result):
        logger.error(str(commands_result.unwrap_err()))
        return commands_result.exit_code()
    commands = commands_result.unwrap()

    try:
        program = simple_parse(build_program(commands), args=argv, dest="program")
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
        # argparse reports usage errors with 2, which is reserved for failed claims
        return EXIT_USAGE if code == 2 else code

    result = main(program, commands, log_stream=stderr)
    if is_err(result):
        error = result.unwrap_err()
        logger.error(f"{type(error).__name__}: {error}")
        logger.debug("traceback", exc_info=error)
        return result.exit_code()

    doc = result.unwrap()
    args = program.command
    if not args.json:
        print_banner(stderr)
    registry = SinkRegistry()
    registry.register(sink_for(args.json, stdout))
    registry.emit(doc)
    if not doc.passed:
        logger.error(f"failed claims: {', '.join(doc.failed_claims())}")
        return EXIT_CLAIM
    return EXIT_OK


def real_main() -> None:
    sys.exit(run(sys.argv[1:]))
