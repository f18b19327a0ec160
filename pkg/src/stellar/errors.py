"""Exception types raised by the engine."""

from __future__ import annotations


class StellarError(ValueError):
    """Base class for every error raised by :mod:`stellar`."""


class ParseError(StellarError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SharedVertexError(StellarError):
    pass


class AbsentSimplexError(StellarError):
    pass


class VertexCollisionError(StellarError):
    pass


class AbsentVertexError(StellarError):
    pass


class SimplexPresentError(StellarError):
    pass


class NotFactorableError(StellarError):
    pass


class NotInjectiveError(StellarError):
    pass


class NotUniformError(StellarError):
    pass


class InvalidAtError(StellarError):
    """A move in a trace failed; ``index`` is 1-based."""

    def __init__(self, index: int, cause: StellarError):
        self.index = index
        self.cause = cause
        super().__init__(f"move {index} invalid: {type(cause).__name__}: {cause}")


class NotRegularError(StellarError):
    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class NormalizeError(StellarError):
    """Precondition or loop failure in :func:`stellar.normalize.normalize`."""


class NotUniform3Error(NormalizeError):
    pass


class DisconnectedError(NormalizeError):
    pass


class EmptyComplexError(NormalizeError):
    pass


class StalledNoSharedFacetError(NormalizeError):
    def __init__(self, step: int, state: str):
        self.step = step
        self.state = state
        super().__init__(f"step {step}: no residual generator shares a 2-simplex with the apex link\n{state}")


class RegularityBrokenError(NormalizeError):
    def __init__(self, step: int, report, state: str = ""):
        self.step = step
        self.report = report
        self.state = state
        super().__init__(f"step {step}: vertex equivalence is no longer regular\n{state}")


class NotClosedError(StellarError):
    pass
