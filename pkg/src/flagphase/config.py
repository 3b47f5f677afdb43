"""YAML settings file, validated into msgspec structs.

Every field has a default, so an empty file (or no file) is valid. Values
given on the command line win over the file.

    omega: "2,2"
    bound: 100
    bigcell: {step: 1.0e-4, tol: 1.0e-4, sweeps: 50, seed: 0}
    logging: {level: info, colour: false}
    reproduce: {ranks: [2, 3, 4], pic0_bound: 20, pair_bound: 6, level_bound: 100}
"""

from __future__ import annotations

from typing import Optional

import msgspec
from msgspec import Struct
from yaml import SafeLoader, YAMLError, load

from .errors import UsageError
from .logger import get_logger

logger = get_logger()

_LEVELS = ("debug", "info", "warning", "error", "critical")


class BigCellSettings(Struct, forbid_unknown_fields=True, frozen=True):
    step: float = 1e-4
    tol: float = 1e-4
    sweeps: int = 50
    seed: int = 0

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"bigcell.step must be positive, got {self.step}")
        if not self.tol > 0:
            raise ValueError(f"bigcell.tol must be positive, got {self.tol}")
        if self.sweeps < 0:
            raise ValueError(f"bigcell.sweeps must be non-negative, got {self.sweeps}")


class LoggingSettings(Struct, forbid_unknown_fields=True, frozen=True):
    level: Optional[str] = None
    colour: bool = True

    def __post_init__(self):
        if self.level is not None and self.level.lower() not in _LEVELS:
            raise ValueError(f"logging.level must be one of {', '.join(_LEVELS)}, got {self.level!r}")


class ReproduceSettings(Struct, forbid_unknown_fields=True, frozen=True):
    ranks: tuple[int, ...] = (2, 3, 4)
    pic0_bound: int = 20
    pair_bound: int = 6
    level_bound: int = 100

    def __post_init__(self):
        if any(r < 2 for r in self.ranks):
            raise ValueError(f"reproduce.ranks must all be at least 2, got {list(self.ranks)}")
        for name in ("pic0_bound", "pair_bound", "level_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"reproduce.{name} must be at least 1")


class Settings(Struct, forbid_unknown_fields=True, frozen=True):
    omega: str = "2,2"
    bound: int = 100
    bigcell: BigCellSettings = msgspec.field(default_factory=BigCellSettings)
    logging: LoggingSettings = msgspec.field(default_factory=LoggingSettings)
    reproduce: ReproduceSettings = msgspec.field(default_factory=ReproduceSettings)

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"bound must be at least 1, got {self.bound}")


def settings_from_mapping(raw: object, source: str = "<mapping>") -> Settings:
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise UsageError(f"{source}: top level of the settings file must be a mapping")
    try:
        return msgspec.convert(raw, Settings)
    except msgspec.ValidationError as e:
        raise UsageError(f"{source}: {e}") from e


def load_settings(path: Optional[str] = None) -> Settings:
    """Read ``path`` (YAML) into ``Settings``; the defaults when ``path`` is None."""
    if path is None:
        return Settings()
    try:
        with open(path) as fh:
            raw = load(fh, Loader=SafeLoader)
    except OSError as e:
        raise UsageError(f"cannot read settings file {path}: {e.strerror}") from e
    except YAMLError as e:
        raise UsageError(f"settings file {path} is not valid YAML: {e}") from e
    settings = settings_from_mapping(raw, path)
    logger.debug(f"loaded settings from {path}: {settings}")
    return settings
