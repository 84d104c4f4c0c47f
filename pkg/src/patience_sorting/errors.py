"""Exception hierarchy shared by the whole package.

The split matters to the CLI and the service: ParseError means the input
text could not be understood (exit 1 / HTTP 400), DomainError means the
input was understood but names an invalid object or an out-of-bounds
request (exit 2 / HTTP 409).
"""


class PatienceError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(PatienceError):
    """Malformed input text: permutation strings, pattern strings, JSON shape."""


class DomainError(PatienceError):
    """Structurally invalid object: bad pile config, unstable pair, bad partition."""


class GuardError(DomainError):
    """A desk-scale size guard was exceeded (see PATIENCE_MAX_N)."""
