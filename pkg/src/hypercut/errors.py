"""Exception hierarchy shared by every hypercut module."""


class HypercutError(Exception):
    """Base class for all library errors."""


class TerminalPlacementError(HypercutError):
    """A candidate cut puts s on the t side or t on the s side."""


class InvalidInstanceError(HypercutError, ValueError):
    """A hypergraph, splitting vector or VCSP instance violates its invariants."""


class EmbeddingError(HypercutError):
    """Pairwise edges cannot be rewritten as hyperedges (w_1 = 0)."""


class RegimeError(HypercutError):
    """An operation was called on a splitting vector from the wrong regime."""


class InfiniteRatioError(HypercutError):
    """No submodular cover with a finite approximation ratio exists."""


class DominationError(HypercutError):
    """A projected vector is smaller than the original in some coordinate."""


class SizeLimitError(HypercutError):
    """An exhaustive routine was asked to enumerate more than it allows."""


class ArityError(HypercutError, ValueError):
    """A cost function received a tuple of the wrong length."""


class UnsupportedLanguageError(HypercutError):
    """A VCSP constraint uses a cost function outside the supported language."""


class ParameterError(HypercutError, ValueError):
    """A numeric parameter lies outside the range an operation accepts."""


class LPError(HypercutError):
    """The simplex routine found the program infeasible or unbounded."""


class ParseError(HypercutError):
    """A text document could not be parsed.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
