"""Exception hierarchy shared by the library and the CLI exit codes."""


class CremonaError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CremonaError, ValueError):
    """A type, map or point literal could not be parsed."""


class PreconditionError(CremonaError, ValueError):
    """An operation was called outside its domain."""


class NotHomaloidalError(PreconditionError):
    """The Noether equalities fail, or a multiplicity is negative."""


class ImproperTypeError(PreconditionError):
    """The operation needs a proper type but Hudson's test fails."""


class HorizonError(PreconditionError):
    """A degree lies beyond what the enumeration is willing to scan."""
