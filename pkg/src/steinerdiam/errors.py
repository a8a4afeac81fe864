"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract, so raising the right class
matters: decode problems are parse errors (exit 2), bad arguments to an
otherwise well-formed request are domain errors (exit 3), and refusing work
that would exceed the supported instance size is a capacity error (also 3).
"""


class SteinerdiamError(Exception):
    """Base class for every error this package raises deliberately."""


class GraphDecodeError(SteinerdiamError):
    """Malformed graph6 input.

    ``offset`` is the 0-based byte offset within the record where decoding
    failed; ``line`` is the 1-based line number when reading a file.
    """

    def __init__(self, message: str, *, offset: int | None = None,
                 line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ParameterError(SteinerdiamError):
    """Invalid parameters for a generator, corpus, or claim selection."""


class DomainError(SteinerdiamError):
    """Arguments outside an operation's domain (bad vertex, k out of range, ...)."""


class CapacityError(SteinerdiamError):
    """Instance too large for an exact desk-scale computation."""
