"""Exception hierarchy shared by all modules."""


class KnotoidError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class InvalidDiagramError(KnotoidError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid diagram: " + "; ".join(v.message for v in report.violations))


class CrossingKindError(KnotoidError):
    """An operation received a crossing (or diagram) of the wrong kind."""


class InapplicableMoveError(KnotoidError):
    """A move site does not apply to the given diagram."""


class HeightNotOneError(KnotoidError):
    """Singular closure requested for a diagram whose height is not 1."""


class StateSumLimitError(KnotoidError):
    """Too many crossings for an exhaustive state sum."""


class KtdSyntaxError(Exception):
    """Malformed KTD text (CLI exit code 2)."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
