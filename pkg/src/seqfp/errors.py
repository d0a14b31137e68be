"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class SeqfpError(Exception):
    """Base class for errors raised by this package."""


class ParseError(SeqfpError, ValueError):
    """Malformed OEIS input. Carries the offending line number when known."""

    def __init__(self, message: str, line_no: int | None = None, line: str | None = None):
        self.line_no = line_no
        self.line = line
        where = f"line {line_no}: " if line_no is not None else ""
        ctx = f" [{line.strip()[:80]}]" if line else ""
        super().__init__(f"{where}{message}{ctx}")


class FetchError(SeqfpError):
    """Base for remote-entry failures; every subclass is safe to retry."""


class NetworkError(FetchError):
    pass


class NotFoundError(FetchError):
    pass


class MalformedRecordError(FetchError):
    pass


class DegenerateFitError(SeqfpError, ValueError):
    pass


class ConsensusError(SeqfpError, ValueError):
    pass


class UndefinedDistanceError(SeqfpError, ValueError):
    """Digit distribution has no mass on digits 1..9."""


class ShapeMismatchError(SeqfpError, ValueError):
    pass


class PcaError(SeqfpError, ValueError):
    pass


class ModelError(SeqfpError, ValueError):
    pass


class StageError(SeqfpError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")
