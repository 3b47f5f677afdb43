"""Logging setup for flagphase.

A thin layer over the stdlib *logging* module: one coloured
``StreamHandler`` on the root logger, pointed at **stderr** so that the
report document on stdout stays machine readable, and loggers that name
themselves after the calling module.

>>> from flagphase.logger import setup_root, get_logger, level_for_verbosity
>>> setup_root(level=level_for_verbosity(1))
>>> logger = get_logger()            # "flagphase.phase" inside phase.py
>>> logger.info("winding sweep finished")
[flagphase.phase] INFO: winding sweep finished
"""

from __future__ import annotations

import inspect
import logging
import os
import sys
from typing import Dict, Optional, TextIO

try:
    # Enables ANSI codes on Windows terminals when installed. Safe on *nix.
    import colorama

    colorama.init()  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover – colour is optional
    colorama = None  # noqa: N816

__all__ = [
    "setup_root",
    "get_logger",
    "level_for_verbosity",
    "logging",
]

_DEFAULT_FMT = "[%(name)s] %(levelname)s: %(message)s"
_DEFAULT_DATEFMT = "%Y-%m-%d %H:%M:%S"

_DEFAULT_COLOUR_MAP: Dict[int, str] = {
    logging.DEBUG: "\x1b[36m",  # cyan
    logging.INFO: "\x1b[32m",  # green
    logging.WARNING: "\x1b[33m",  # yellow
    logging.ERROR: "\x1b[31m",  # red
    logging.CRITICAL: "\x1b[1;41m",  # bold white on red bg
}
_RESET = "\x1b[0m"

_LEVEL_NAMES = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


class _ColourFormatter(logging.Formatter):
    """Colour the level name by severity."""

    def __init__(self, fmt: str, datefmt: str, colour_map: Dict[int, str]):
        super().__init__(fmt=fmt, datefmt=datefmt)
        self._colour_map = colour_map

    def format(self, record: logging.LogRecord) -> str:
        colour = self._colour_map.get(record.levelno, "")
        original = record.levelname
        if colour:
            record.levelname = f"{colour}{original}{_RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def _stream_supports_colour(stream: TextIO) -> bool:
    if not hasattr(stream, "isatty") or not stream.isatty():
        return False
    if os.name == "nt" and colorama is None:
        return False
    return True


def _make_stream_handler(*, stream: TextIO, fmt: str, datefmt: str, colour: bool,
                         colour_map: Dict[int, str]) -> logging.Handler:
    handler = logging.StreamHandler(stream)
    if colour and _stream_supports_colour(stream):
        handler.setFormatter(_ColourFormatter(fmt=fmt, datefmt=datefmt, colour_map=colour_map))
    else:
        handler.setFormatter(logging.Formatter(fmt=fmt, datefmt=datefmt))
    return handler


def level_for_verbosity(verbose: int, pinned: Optional[str] = None) -> int:
    """Map a ``-v`` count (or a level name pinned in the config file) to a level."""
    if pinned:
        try:
            return _LEVEL_NAMES[pinned.lower()]
        except KeyError:
            raise ValueError(f"unknown logging level {pinned!r}; expected one of {sorted(_LEVEL_NAMES)}")
    if verbose <= 0:
        return logging.WARNING
    if verbose == 1:
        return logging.INFO
    return logging.DEBUG


def setup_root(
    *,
    level: int = logging.WARNING,
    stream: Optional[TextIO] = None,
    fmt: str = _DEFAULT_FMT,
    datefmt: str = _DEFAULT_DATEFMT,
    clear: bool = True,
    colour: bool = True,
    colour_map: Optional[Dict[int, str]] = None,
) -> None:
    """Configure the root logger.

    Parameters
    ----------
    level
        Minimum level accepted by the root handler.
    stream
        Output stream, stderr by default. Reports own stdout.
    clear
        Remove existing root handlers first (default). Repeated CLI
        invocations inside one process therefore never stack handlers.
    colour
        ANSI colours by level; switched off automatically for non-TTYs.
    """

    root = logging.getLogger()
    root.setLevel(level)

    if clear:
        root.handlers.clear()

    root.addHandler(_make_stream_handler(
        stream=stream if stream is not None else sys.stderr,
        fmt=fmt,
        datefmt=datefmt,
        colour=colour,
        colour_map=colour_map or _DEFAULT_COLOUR_MAP,
    ))


def get_logger(name: Optional[str] = None, *, level: Optional[int] = None) -> logging.Logger:
    """Return a logger named after *name* or, by default, the calling module."""

    logger = logging.getLogger(name if name is not None else _guess_caller_module())
    if level is not None:
        logger.setLevel(level)
    return logger


def _guess_caller_module() -> str:
    frame = inspect.currentframe()
    if frame is None or frame.f_back is None or frame.f_back.f_back is None:
        return "__main__"
    module = inspect.getmodule(frame.f_back.f_back)
    return module.__name__ if module is not None else "__main__"
