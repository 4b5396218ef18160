"""Exception hierarchy shared by every module of the package."""


class TournamentError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(TournamentError, ValueError):
    pass


class NotATournament(TournamentError, ValueError):
    pass


class OutOfRange(TournamentError, ValueError):
    pass


class NotABijection(TournamentError, ValueError):
    pass


class DegeneratePair(TournamentError, ValueError):
    pass


class TooLarge(TournamentError, ValueError):
    pass


class BadParams(TournamentError, ValueError):
    pass


class ParseError(TournamentError, ValueError):
    pass


class PreconditionViolated(TournamentError, ValueError):
    pass


class NotIndecomposable(PreconditionViolated):
    pass


class NotFound(TournamentError, LookupError):
    """A search that is guaranteed to succeed came back empty."""


class InvariantViolation(TournamentError, AssertionError):
    """A classification that should be exclusive/exhaustive was not."""


class VerificationFailed(TournamentError):
    """A verification pipeline found a counterexample.

    ``report`` holds the full report so callers can print what passed.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
