"""Report documents and the sinks that print them.

A command builds one ``ReportDocument`` and hands it to the sink registry.
Exact values are flattened to JSON-ready data as they are recorded:
rationals become ``"p/q"`` strings (integers print without ``/1``),
Gaussian rationals ``{"re", "im"}`` and exact phases
``{"winding", "ray_re", "ray_im", "float"}``. Floats only ever appear as
advisory duplicates.
"""

from __future__ import annotations

import re
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, TextIO

import msgspec
from jinja2 import Environment, StrictUndefined
from msgspec import Struct

from .__constants__ import __version__
from .errors import UsageError
from .flag import KahlerClass, LineBundle
from .gaussian import GaussianRational
from .logger import get_logger
from .phase import CentralCharge, ExactPhase, describe_ray, phase_to_float
from .roots import Root, Weight

logger = get_logger()

TOOL = "flagphase"

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Inverse of the ``"p/q"`` encoding. Decimal and exponent forms are rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise UsageError(f"{text!r} is not a rational literal of the form p or p/q")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise UsageError(f"{text!r} has a zero denominator") from None


def to_plain(value: Any) -> Any:
    """Flatten exact values into JSON-ready builtins."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (str, int, float)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, GaussianRational):
        return {"re": str(value.re), "im": str(value.im)}
    if isinstance(value, ExactPhase):
        return {"winding": value.winding, "ray_re": str(value.ray.re), "ray_im": str(value.ray.im),
                "float": phase_to_float(value)}
    if isinstance(value, CentralCharge):
        if value.value.is_zero():
            return {"n": value.n, "value": to_plain(value.value), "ray": None, "arg": "undefined"}
        return {"n": value.n, "value": to_plain(value.value), "ray": to_plain(value.ray),
                "arg": describe_ray(value.value)}
    if isinstance(value, (Root, Weight, LineBundle, KahlerClass)):
        return str(value)
    if isinstance(value, dict):
        return {str(to_plain(k)): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_plain(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "item"):
        # numpy scalars
        return to_plain(value.item())
    return str(value)


@dataclass
class ReportEntry:
    """A single named result."""

    name: str
    value: Any
    tags: dict[str, Any] = field(default_factory=dict)


class Check(Struct, frozen=True):
    claim: str
    passed: bool
    expected: str = ""
    actual: str = ""


class ReportDocument(Struct):
    command: str
    tool: str = TOOL
    version: str = __version__
    inputs: dict[str, Any] = {}
    results: dict[str, Any] = {}
    checks: list[Check] = []
    warnings: list[str] = []

    def record(self, entry: ReportEntry) -> None:
        value = to_plain(entry.value)
        if entry.tags:
            value = {"value": value, **{k: to_plain(v) for k, v in entry.tags.items()}}
        self.results[entry.name] = value

    def put(self, name: str, value: Any, **tags: Any) -> None:
        self.record(ReportEntry(name, value, tags))

    def echo(self, **inputs: Any) -> None:
        self.inputs.update({k: to_plain(v) for k, v in inputs.items()})

    def check(self, claim: str, passed: bool, expected: Any = "", actual: Any = "") -> Check:
        c = Check(claim=claim, passed=bool(passed), expected=_text(expected), actual=_text(actual))
        if not c.passed:
            logger.error(f"check failed: {claim} (expected {c.expected}, got {c.actual})")
        self.checks.append(c)
        return c

    def warn(self, message: str) -> None:
        logger.warning(message)
        self.warnings.append(message)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_claims(self) -> list[str]:
        return [c.claim for c in self.checks if not c.passed]


def _text(value: Any) -> str:
    plain = to_plain(value)
    if isinstance(plain, str):
        return plain
    return msgspec.json.encode(plain, order="sorted").decode()


# ---------------------------------------------------------------------------
# Sinks
# ---------------------------------------------------------------------------

def render_value(value: Any) -> str:
    """Human-readable form of an already flattened value."""
    if isinstance(value, dict):
        if {"winding", "ray_re", "ray_im"} <= value.keys():
            ray = GaussianRational(Fraction(value["ray_re"]), Fraction(value["ray_im"]))
            base = describe_ray(ray)
            return base if value["winding"] == 0 else f"{base} + {2 * value['winding']}pi"
        if value.keys() == {"re", "im"}:
            return str(GaussianRational(Fraction(value["re"]), Fraction(value["im"])))
        return "{" + ", ".join(f"{k}: {render_value(v)}" for k, v in sorted(value.items())) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


TABLE_TEMPLATE = """\
{{ doc.tool }} {{ doc.version }} :: {{ doc.command }}
{% if doc.inputs %}
inputs
{% for key, value in doc.inputs | dictsort %}
  {{ key }} = {{ value | show }}
{% endfor %}
{% endif %}
{% if doc.results %}
results
{% for key, value in doc.results.items() %}
  {{ key }} = {{ value | show }}
{% endfor %}
{% endif %}
{% if doc.checks %}
checks
{% for check in doc.checks %}
  [{{ "PASS" if check.passed else "FAIL" }}] {{ check.claim }}{% if not check.passed %} (expected {{ check.expected }}, got {{ check.actual }}){% endif %}

{% endfor %}
{% endif %}
{% for message in doc.warnings %}
warning: {{ message }}
{% endfor %}
"""


class ReportSink(ABC):
    """Somewhere a finished report document goes."""

    def __init__(self, stream: Optional[TextIO] = None):
        self._stream = stream

    @property
    def stream(self) -> TextIO:
        return self._stream if self._stream is not None else sys.stdout

    @abstractmethod
    def render(self, doc: ReportDocument) -> str:
        ...

    def emit(self, doc: ReportDocument) -> None:
        self.stream.write(self.render(doc))
        self.stream.flush()


class TableSink(ReportSink):
    def __init__(self, stream: Optional[TextIO] = None, template: str = TABLE_TEMPLATE):
        super().__init__(stream)
        env = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True,
                          undefined=StrictUndefined)
        env.filters["show"] = render_value
        self.template = env.from_string(template)

    def render(self, doc: ReportDocument) -> str:
        return self.template.render(doc=doc)


class JsonSink(ReportSink):
    def render(self, doc: ReportDocument) -> str:
        raw = msgspec.json.encode(doc, order="sorted")
        return msgspec.json.format(raw, indent=2).decode() + "\n"


class SinkRegistry:
    """Fans a document out to every registered sink."""

    def __init__(self):
        self._sinks: list[ReportSink] = []

    def register(self, sink: ReportSink) -> None:
        logger.debug(f"registered {type(sink).__name__}")
        self._sinks.append(sink)

    def emit(self, doc: ReportDocument) -> None:
        for sink in self._sinks:
            try:
                sink.emit(doc)
            except Exception as e:
                logger.error(f"{type(sink).__name__} failed to write the report: {e}")


def sink_for(json: bool, stream: Optional[TextIO] = None) -> ReportSink:
    return JsonSink(stream) if json else TableSink(stream)


def decode_document(raw: bytes | str) -> ReportDocument:
    """Read back a document written by ``JsonSink``."""
    return msgspec.json.decode(raw, type=ReportDocument)
