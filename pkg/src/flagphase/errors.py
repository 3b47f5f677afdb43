"""Exception types raised by the flagphase library.

Library code raises these; the command layer turns them into ``Err``
results and ``real_main`` maps them onto process exit codes.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM = 2
EXIT_NUMERICAL = 3


class FlagPhaseError(Exception):
    """Base class for every error raised on purpose by flagphase."""

    exit_code: int = EXIT_USAGE


class InadmissibleTypeError(FlagPhaseError, ValueError):
    """A (family, rank) pair that does not name a simple Lie algebra."""


class WeightError(FlagPhaseError, ValueError):
    """Wrong dimension, wrong support, or a weight outside the allowed cone."""


class KahlerConeError(FlagPhaseError, ValueError):
    """Kähler coefficients that are not strictly positive."""


class BundleError(FlagPhaseError, ValueError):
    """Malformed bundle data (empty sums, summands on different flags, ...)."""


class UsageError(FlagPhaseError, ValueError):
    """Malformed command-line literal or configuration value."""


class NumericalError(FlagPhaseError, ArithmeticError):
    exit_code = EXIT_NUMERICAL


class ClaimFailure(FlagPhaseError, AssertionError):
    """A reproduced claim did not hold."""

    exit_code = EXIT_CLAIM

    def __init__(self, claim: str, detail: str = ""):
        self.claim = claim
        self.detail = detail
        super().__init__(f"claim failed: {claim}" + (f" ({detail})" if detail else ""))


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, FlagPhaseError):
        return error.exit_code
    return EXIT_NUMERICAL
