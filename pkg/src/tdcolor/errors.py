"""Exception hierarchy shared by the library and the CLI."""


class TDColorError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(TDColorError, ValueError):
    """A family size or option is below its minimum."""


class InvalidVertexError(TDColorError, ValueError):
    pass


class InvalidEdgeError(TDColorError, ValueError):
    pass


class IsolatedVertexError(TDColorError, ValueError):
    """TD-colorings and total dominating sets need every vertex to have a neighbor."""


class ResourceGuardError(TDColorError):
    """An input exceeds an explicit size cap."""


class CertificateError(TDColorError):
    """A certificate failed independent re-validation."""


class FormatError(TDColorError, ValueError):
    """Malformed graph or certificate text."""
