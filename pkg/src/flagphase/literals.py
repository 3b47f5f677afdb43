"""Parsers for the command-line literals.

    coefficients   "2,2"   "3/2,1"   ""  (empty for a point)
    sums           "2,6;3,4"
    parabolic      ""  (Borel)   "1,3"  (1-based simple-root indices)
    phase targets  "0"   "pi"   "w:re:im"  e.g. "1:-1:0" is 3pi
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError
from .gaussian import GaussianRational
from .phase import ExactPhase
from .report import parse_rational
from .roots import LieType


def parse_coeffs(text: str, *, integral: bool = False) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    values = tuple(parse_rational(part) for part in text.split(","))
    if integral and any(v.denominator != 1 for v in values):
        raise UsageError(f"expected integer coefficients, got {text!r}")
    return values


def parse_int_coeffs(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in parse_coeffs(text, integral=True))


def parse_sum(text: str) -> list[tuple[int, ...]]:
    parts = text.split(";")
    if not text.strip() or any(not p.strip() for p in parts):
        raise UsageError(f"cannot read a Whitney sum from {text!r}; expected e.g. \"2,6;3,4\"")
    return [parse_int_coeffs(p) for p in parts]


def parse_parabolic(text: str, rank: int) -> frozenset[int]:
    """1-based comma-separated indices to a 0-based set."""
    text = text.strip()
    if not text:
        return frozenset()
    indices = set()
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise UsageError(f"parabolic index {part!r} is not a positive integer")
        i = int(part)
        if not 1 <= i <= rank:
            raise UsageError(f"parabolic index {i} is outside 1..{rank}")
        indices.add(i - 1)
    return frozenset(indices)


def parse_lie_type(family: str, rank: int) -> LieType:
    return LieType(family, rank)


def parse_phase_target(text: str) -> ExactPhase:
    text = text.strip().lower()
    if text == "0":
        return ExactPhase.zero()
    if text == "pi":
        return ExactPhase.pi()
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"phase target {text!r} must be 0, pi or w:re:im")
    try:
        winding = int(parts[0])
    except ValueError:
        raise UsageError(f"winding {parts[0]!r} is not an integer") from None
    ray = GaussianRational(parse_rational(parts[1]), parse_rational(parts[2]))
    if ray.is_zero():
        raise UsageError("phase target ray must be nonzero")
    return ExactPhase(winding, ray)
