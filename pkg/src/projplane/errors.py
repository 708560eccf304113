"""Exception hierarchy shared by every layer of the package."""


class ProjPlaneError(Exception):
    """Base class for all errors raised by projplane."""


class InversionOfZero(ProjPlaneError, ZeroDivisionError):
    pass


class NotPrime(ProjPlaneError, ValueError):
    pass


class FieldMismatch(ProjPlaneError, TypeError):
    pass


class ZeroVector(ProjPlaneError, ValueError):
    pass


class CoincidentPoints(ProjPlaneError, ValueError):
    pass


class CoincidentLines(ProjPlaneError, ValueError):
    pass


class DegenerateConfiguration(ProjPlaneError, ValueError):
    pass


class UnknownIdentity(ProjPlaneError, KeyError):
    pass


class CapExceeded(ProjPlaneError, ValueError):
    pass


class ParseError(ProjPlaneError, ValueError):
    pass
