"""Exception hierarchy shared by every module of the package."""


class WreathSigmaError(Exception):
    """Base class for all errors raised by wreathsigma."""


class GroupExprError(WreathSigmaError, ValueError):
    """A group expression or G-set description is malformed."""


class CharacterError(WreathSigmaError, ValueError):
    """A character is zero, irrational, or does not match its group."""


class NotFinitelyPresentedError(WreathSigmaError):
    """A Sigma^2 query was made for a group not known to be finitely presented."""

    def __init__(self, reasons):
        self.reasons = tuple(reasons)
        super().__init__("group is not finitely presented: " + "; ".join(self.reasons))


class MissingPairDataError(WreathSigmaError):
    """A wreath node lacks the pair-orbit data needed for a Sigma^2 query."""


class LabError(WreathSigmaError):
    """Errors from the brute-force laboratory (unknown letters, unsupported groups)."""


class ResourceCapError(LabError):
    """An exploration exceeded its configured budget.

    ``stats`` carries the partial statistics gathered before stopping.
    """

    def __init__(self, message, stats=None):
        self.stats = dict(stats or {})
        super().__init__(message)


class DslError(WreathSigmaError):
    """Syntax or semantic error in a workspace file, with a source position."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(where + message)
