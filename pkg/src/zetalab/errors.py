"""Exception types shared across the laboratory."""


class ZetalabError(Exception):
    """Base class for all package errors."""


class DomainError(ZetalabError):
    """Input outside an operation's domain (e.g. rs_theta below t = 1)."""


class PoleError(ZetalabError):
    """Evaluation requested at a pole (zeta at s = 1)."""


class CoverageError(ZetalabError):
    """A grid or series does not span the requested interval."""


class BudgetError(ZetalabError):
    """A certified error budget or panel budget cannot be met."""


class IllConditionedError(ZetalabError):
    """Normal equations of a fit exceed the configured condition limit."""


class SpectralParseError(ZetalabError):
    """Spectral CSV rejected; carries the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
