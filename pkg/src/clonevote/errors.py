"""Exception hierarchy shared by every module of the package."""


class CloningError(Exception):
    """Base class for all errors raised by clonevote."""


class InvalidElection(CloningError, ValueError):
    pass


class UnknownCandidate(CloningError, ValueError):
    pass


class SameCandidate(CloningError, ValueError):
    pass


class NotScoreBased(CloningError, ValueError):
    pass


class UnrealizableParity(CloningError, ValueError):
    pass


class InvalidSize(CloningError, ValueError):
    pass


class MalformedAssignment(CloningError, ValueError):
    pass


class InvalidThreshold(CloningError, ValueError):
    pass


class Unsupported(CloningError, ValueError):
    pass


class SearchSpaceTooLarge(CloningError):
    """The requested exhaustive check would exceed its work cap."""

    def __init__(self, size, limit):
        super().__init__(f"search space of size {size} exceeds the cap of {limit}")
        self.size = size
        self.limit = limit


class ParseError(CloningError, ValueError):
    """A text document could not be parsed; carries the 1-based line number."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.message = message
