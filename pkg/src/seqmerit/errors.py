"""Exception hierarchy shared across the package."""


class SeqMeritError(Exception):
    """Base class for every error raised by seqmerit."""


class ParseError(SeqMeritError, ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DomainError(SeqMeritError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedAlphabetError(SeqMeritError, TypeError):
    pass


class UndefinedSidelobeError(DomainError):
    pass


class NoKnownBarkerError(DomainError):
    pass


class RouteFailureError(SeqMeritError, ArithmeticError):
    """A numerical route produced an unusable value (e.g. a nonpositive denominator)."""


class ConsistencyError(SeqMeritError, AssertionError):
    """Two independent computation routes disagree; indicates a bug."""


class GuardError(SeqMeritError):
    """A requested computation exceeds the configured size guard."""


class DifferenceSetRejection(SeqMeritError, ValueError):
    def __init__(self, message, residues=(), counts=()):
        super().__init__(message)
        self.residues = tuple(residues)
        self.counts = tuple(counts)


class NotTwoLevelError(SeqMeritError, ValueError):
    def __init__(self, message, lags=(), values=()):
        super().__init__(message)
        self.lags = tuple(lags)
        self.values = tuple(values)
