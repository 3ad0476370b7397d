"""Exception types raised across the package.

Every error the CLI can report derives from :class:`AfipError`, so the
command layer can map them to exit status 1 with the class name as the
diagnostic tag.
"""


class AfipError(Exception):
    """Base class for all data/computation errors."""


# ingestion
class MalformedInnings(AfipError, ValueError):
    pass


class SchemaError(AfipError, ValueError):
    """A required CSV column is missing. ``column`` names it."""

    def __init__(self, column, path=None):
        self.column = column
        self.path = path
        where = f" in {path}" if path else ""
        super().__init__(f"missing column {column!r}{where}")


class ParseError(AfipError, ValueError):
    """A cell could not be parsed. ``line`` is the 1-based file line."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        loc = ""
        if path is not None:
            loc += f"{path}"
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)


class UnmatchedGame(AfipError, LookupError):
    def __init__(self, date, opponent, team=None):
        self.date = date
        self.opponent = opponent
        self.team = team
        super().__init__(f"no pitching lines for {opponent} vs {team} on {date}")


class AmbiguousMatch(AfipError, LookupError):
    pass


# FIP
class UndefinedFip(AfipError, ZeroDivisionError):
    pass


# distributions
class EmptySample(AfipError, ValueError):
    pass


class InvalidPercentile(AfipError, ValueError):
    pass


class InvalidBinWidth(AfipError, ValueError):
    pass


class DegenerateCorrelation(AfipError, ValueError):
    pass


# equating / tampering / synthesis
class UnknownOpponent(AfipError, LookupError):
    def __init__(self, pitcher, date, opponent=None):
        self.pitcher = pitcher
        self.date = date
        self.opponent = opponent
        super().__init__(f"{pitcher} on {date}: no opponent sample for {opponent}")


class OneSidedSeason(AfipError, ValueError):
    pass


class InvalidTransform(AfipError, ValueError):
    pass


class IoError(AfipError, OSError):
    """Output could not be written."""


class MissingFipConstant(AfipError, LookupError):
    pass
